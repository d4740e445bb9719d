// Copyright (c) 2026 The dfsurf Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "dfsurf/equivalence.hpp"
#include "dfsurf/error.hpp"
#include "dfsurf/surface.hpp"
#include "dfsurf/tree_io.hpp"
#include "support/fixtures.hpp"

using namespace dfsurf;
using namespace dfsurf::testing;

namespace {

CombFactor factor(std::vector<Rational> roots, std::size_t dist) { return {std::move(roots), dist}; }

bool relationsVanish(const EquationSystem& s) { return verifyRelations(s).empty(); }

}  // namespace

TEST_SUITE("surface") {
  TEST_CASE("descriptor examples") {
    for (int j = 1; j <= 4; ++j) {
      const auto d = descriptor(broom(j, {1, -1}));
      CHECK(d.n == 2);
      CHECK(d.h == j);
      CHECK(d.mu == std::vector<int>{0, 0});
      CHECK(d.transition[0][1] == LaurentPoly(-j, {Rational(-2)}));
      CHECK(d.transition[1][0] == LaurentPoly(-j, {Rational(2)}));
      CHECK(d.transition[0][0].isZero());
    }
    const auto single = descriptor(parseTreeFile("format cochain\nroot r\nleaf r sigma 0\n"));
    CHECK(single.n == 1);
    CHECK(isAffine(single));

    const auto g = descriptor(gammaT(3));
    REQUIRE(g.leaves == std::vector<NodeId>{"a", "b"});
    CHECK(g.m == std::vector<int>{2, 1});
    CHECK(g.mu == std::vector<int>{0, 1});
    CHECK(g.transition[0][1].minExponent() == -2);
    CHECK(g.transition[1][0].minExponent() == -1);
  }

  TEST_CASE("affineness") {
    TreeGen gen(61);
    for (const auto& t : gen.corpus(100)) CHECK(isAffine(descriptor(t)));
    auto d = descriptor(broom(1, {1, -1}));
    d.transition[0][1] = LaurentPoly(0, {Rational(1)});
    CHECK_FALSE(isAffine(d));
    d.transition[0][1] = LaurentPoly();
    CHECK_FALSE(isAffine(d));
  }

  TEST_CASE("canonical morphism charts agree") {
    const auto data = canonicalMorphismData(broom(2, {1, -1}));
    CHECK(chartExpression(data, 0) == MultiPoly::parse("1 + x^2*T"));
    CHECK(chartExpression(data, 1, "U") == MultiPoly::parse("-1 + x^2*U"));
    const auto one = canonicalMorphismData(parseTreeFile("format cochain\nroot r\nleaf r sigma 0\n"));
    CHECK(chartExpression(one, 0) == MultiPoly::parse("T"));
    TreeGen gen(62);
    for (const auto& t : gen.corpus(80)) CHECK(chartConsistencyFailures(t).empty());
  }

  TEST_CASE("morphism gluing data") {
    const auto t = sampleComb();
    const auto id = morphismGluingData(identityMorphism(t));
    for (const auto& p : id.sigmaDoublePrime) CHECK(p.isZero());
    CHECK(id.nu == descriptor(t).mu);

    const auto bd = morphismGluingData(blowDown(bmlTree(), "e").morphism);
    REQUIRE(bd.sourceLeaves == std::vector<NodeId>{"a", "b", "c", "d"});
    CHECK(bd.leafMap.at("b") == "e");
    CHECK(bd.sigmaDoublePrime[1] == Poly(1));
    CHECK(bd.sigmaDoublePrime[2] == Poly(-1));
    CHECK(bd.sigmaDoublePrime[0] == Poly());

    auto bad = identityMorphism(bmlTree());
    bad.nodeMap["b"] = "c";
    CHECK_THROWS_AS(morphismGluingData(bad), Error);
  }

  TEST_CASE("gluing data composes") {
    TreeGen gen(63);
    for (int k = 0; k < 60; ++k) {
      const auto phi = randomMorphism(gen, 3);
      const auto f = factorMorphism(phi);
      if (f.blowDowns.empty()) continue;
      const auto& first = f.blowDowns.front().morphism;
      const auto rest = compose(f.embedding, [&] {
        TreeMorphism acc = identityMorphism(first.target);
        for (std::size_t i = 1; i < f.blowDowns.size(); ++i) acc = compose(f.blowDowns[i].morphism, acc);
        return acc;
      }());
      const auto whole = morphismGluingData(phi);
      const auto a = morphismGluingData(first);
      const auto b = morphismGluingData(rest);
      const auto& tgt = phi.target.shape();
      const auto& mid = first.target.shape();
      for (std::size_t i = 0; i < whole.sourceLeaves.size(); ++i) {
        const auto& leaf = whole.sourceLeaves[i];
        const auto& j = a.leafMap.at(leaf);
        CHECK(whole.leafMap.at(leaf) == b.leafMap.at(j));
        // sigma' - sigma_k = (sigma' - sigma_j) + (sigma_j - sigma_k).
        const std::size_t bi = static_cast<std::size_t>(
            std::find(b.sourceLeaves.begin(), b.sourceLeaves.end(), j) - b.sourceLeaves.begin());
        const int mk = tgt.level(whole.leafMap.at(leaf));
        const int mj = mid.level(j);
        CHECK(whole.sigmaDoublePrime[i].shifted(mk) ==
              a.sigmaDoublePrime[i].shifted(mj) + b.sigmaDoublePrime[bi].shifted(mk));
      }
    }
  }

  TEST_CASE("predicates") {
    CHECK(canonicalSheafTrivial(broom(3, {1, -1, 0})));
    CHECK_FALSE(canonicalSheafTrivial(gammaT(1)));
    const auto single = parseTreeFile("format cochain\nroot r\nleaf r sigma 0\n");
    CHECK(canonicalSheafTrivial(single));
    CHECK(mlTrivial(sampleComb()));
    CHECK_FALSE(mlTrivial(forkTree()));
    CHECK(mlTrivial(parseTreeFile("format cochain\nroot r\nedge r a\nedge a b\nleaf b sigma 1\n")));
    CHECK(odsCharacterization(broom(1, {1, 0, -1})));
    CHECK_FALSE(odsCharacterization(broom(2, {1, -1})));
    CHECK(odsCharacterization(single));
    TreeGen gen(64);
    for (const auto& t : gen.corpus(200)) {
      CHECK(odsCharacterization(t) == (mlTrivial(t) && canonicalSheafTrivial(t)));
    }
  }

  TEST_CASE("broom equations") {
    for (int j = 1; j <= 3; ++j) {
      const auto s = emitBroomEquations(broom(j, {1, -1}));
      CHECK(s.variables == std::vector<std::string>{"x", "y", "z"});
      REQUIRE(s.relations.size() == 1);
      CHECK(s.relations[0] == MultiPoly::parse("x^" + std::to_string(j) + "*z - y^2 + 1"));
      CHECK(s.charts.size() == 2);
      CHECK(relationsVanish(s));
    }
    const auto lin = emitBroomEquations(broom(1, {0}));
    CHECK(lin.relations[0] == MultiPoly::parse("x*z - y"));
    CHECK(relationsVanish(lin));
    const auto chain = emitBroomEquations(parseTreeFile("format cochain\nroot r\nedge r a\nedge a b\nleaf b sigma 3\n"));
    CHECK(chain.relations[0] == MultiPoly::parse("x^2*z - y + 3"));
    CHECK(*chain.canonicalMorphism == MultiPoly::parse("y"));
    const auto point = emitBroomEquations(parseTreeFile("format cochain\nroot r\nleaf r sigma 0\n"));
    CHECK(point.relations[0] == MultiPoly::parse("z - y"));
    CHECK(relationsVanish(point));

    // Essentialization supplies x^r y + c.
    const auto shifted = parseTreeFile(
        "format cochain\nroot r\nedge r s\nedge s a\nedge s b\nleaf a sigma 2 + x\nleaf b sigma 2 - x\n");
    const auto es = emitBroomEquations(shifted);
    REQUIRE(es.canonicalMorphism);
    CHECK(*es.canonicalMorphism == MultiPoly::parse("x*y + 2"));

    CHECK_THROWS_AS(emitBroomEquations(gammaT(1)), Error);
    CHECK_THROWS_AS(emitBroomEquations(sampleComb()), Error);
  }

  TEST_CASE("broom relations vanish on random brooms") {
    TreeGen gen(65);
    for (int k = 0; k < 40; ++k) {
      const int m = gen.uniform(1, 3);
      std::vector<Rational> roots;
      const int n = gen.uniform(1, 4);
      for (int i = 0; i < n; ++i) roots.push_back(Rational(3 * i - 4));
      const auto t = broom(m, roots);
      const auto u = transformTree(t, gen.coin() ? Rational(1) : Rational(2, 3), gen.poly(1, 2), gen);
      CHECK(relationsVanish(emitBroomEquations(u)));
    }
  }

  TEST_CASE("comb equations") {
    const auto one = emitCombEquations({{factor({1, 0, -1}, 1)}});
    REQUIRE(one.system.relations.size() == 1);
    CHECK(one.system.relations[0] == MultiPoly::parse("X0*X2 - X1^3 + X1"));
    CHECK(relationsVanish(one.system));
    CHECK(one.tree.leafCount() == 3);

    const auto two = emitCombEquations({{factor({1, 0, -1}, 1), factor({1, 0, -1}, 1)}});
    REQUIRE(two.system.relations.size() == 3);
    CHECK(two.system.relations[0] == MultiPoly::parse("X0*X2 - X1*(X1^2 - 1)"));
    CHECK(two.system.relations[1] == MultiPoly::parse("X0*X3 - (X1^2 - 1)*X2*(X2^2 - 1)"));
    CHECK(two.system.relations[2] == MultiPoly::parse("X1*X3 - X2*X2*(X2^2 - 1)"));
    CHECK(relationsVanish(two.system));
    CHECK(validate(two.tree).empty());
    CHECK(isComb(two.tree.shape()));
    CHECK(mlTrivial(two.tree));

    CHECK_THROWS_AS(emitCombEquations({}), Error);
    CHECK_THROWS_AS(emitCombEquations({{factor({1, 1}, 0)}}), Error);
    CHECK_THROWS_AS(emitCombEquations({{factor({}, 0)}}), Error);
    CHECK_THROWS_AS(emitCombEquations({{factor({1, 2}, 2)}}), Error);
  }

  TEST_CASE("random comb specs") {
    TreeGen gen(66);
    for (int k = 0; k < 30; ++k) {
      CombSpec spec;
      const int n = gen.uniform(1, 3);
      std::size_t expected = 0;
      for (int i = 0; i < n; ++i) {
        const int r = gen.uniform(1, 3);
        std::vector<Rational> roots;
        for (int j = 0; j < r; ++j) roots.push_back(Rational(2 * j - 1 + gen.uniform(0, 1) * 7));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        expected += i + 1 < n ? roots.size() - 1 : roots.size();
        spec.polys.push_back(factor(roots, static_cast<std::size_t>(gen.uniform(0, static_cast<int>(roots.size()) - 1))));
      }
      const auto res = emitCombEquations(spec);
      CHECK(relationsVanish(res.system));
      CHECK(validate(res.tree).empty());
      CHECK(isComb(res.tree.shape()));
      CHECK(fiberComponents(res.tree).size() == expected);
    }
  }

  TEST_CASE("fiber components and JSON") {
    const auto fc = fiberComponents(broom(2, {1, -1}));
    REQUIRE(fc.size() == 2);
    CHECK(fc[0].value == Rational(1));
    CHECK(fc[1].value == Rational(-1));
    CHECK(fiberComponents(parseTreeFile("format cochain\nroot r\nleaf r sigma 0\n")).size() == 1);

    const auto s = emitBroomEquations(broom(1, {1, -1}));
    const auto j = nlohmann::json::parse(toJson(s));
    CHECK(j["variables"].size() == 3);
    CHECK(j["relations"][0] == "x*z - y^2 + 1");
    CHECK(j["charts"].size() == 2);
    CHECK(j.contains("canonical_morphism"));
    CHECK(toText(s).find("relation: x*z - y^2 + 1 = 0") != std::string::npos);
  }

  TEST_CASE("equivalent trees have matching descriptors") {
    TreeGen gen(67);
    for (int k = 0; k < 60; ++k) {
      const auto t = gen.tree();
      const auto u = transformTree(t, -1, gen.poly(1, 2), gen);
      const auto w = decideEquivalence(t, u);
      REQUIRE(w);
      const auto et = essentialize(t).tree;
      const auto eu = essentialize(u).tree;
      const auto dt = descriptor(et);
      const auto du = descriptor(eu);
      CHECK(dt.n == du.n);
      auto mt = dt.m, mu = du.m;
      std::sort(mt.begin(), mt.end());
      std::sort(mu.begin(), mu.end());
      CHECK(mt == mu);
      const auto& su = eu.shape();
      const auto& st = et.shape();
      const auto leavesU = eu.leaves();
      for (std::size_t i = 0; i < leavesU.size(); ++i) {
        for (std::size_t j = i + 1; j < leavesU.size(); ++j) {
          CHECK(su.level(firstCommonAncestor(su, leavesU[i], leavesU[j])) ==
                st.level(firstCommonAncestor(st, w->treeIso.at(leavesU[i]), w->treeIso.at(leavesU[j]))));
        }
      }
    }
  }
}
