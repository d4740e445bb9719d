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

#include "dfsurf/error.hpp"
#include "dfsurf/labelled_tree.hpp"
#include "dfsurf/tree_io.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace dfsurf;
using namespace dfsurf::testing;

namespace {

LabelledTree relabel(const LabelledTree& t, std::map<NodeId, Poly> sigma) {
  return LabelledTree(t.shape(), std::move(sigma));
}

}  // namespace

TEST_SUITE("labelled") {
  TEST_CASE("validate") {
    const auto b = broom(2, {1, -1});
    CHECK(validate(b).empty());
    const auto bad = relabel(b, {{"l1", Poly(1)}, {"l2", Poly(1) + Poly::monomial(1, 2)}});
    const auto v = validate(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::WrongValuation);
    CHECK(v[0].expectedLevel == 0);
    CHECK(v[0].observed == 2);
    // Simple roots of P = y^3 - y as labels of a level-m broom.
    CHECK(validate(broom(4, {0, 1, -1})).empty());
    CHECK(validate(relabel(b, {{"l1", Poly(1)}})).front().kind == Violation::Kind::MissingLabel);
    CHECK(validate(relabel(b, {{"l1", Poly(1)}, {"l2", Poly(2)}, {"r", Poly(0)}})).front().kind ==
          Violation::Kind::StrayLabel);
    CHECK_THROWS_AS(LabelledTree::checked(bad.shape(), bad.sigmaMap()), Error);
  }

  TEST_CASE("weights and cochains") {
    const auto chain = parseTreeFile("format cochain\nroot r\nedge r a\nedge a b\nleaf b sigma 1 + 2*x\n");
    const auto w = toWeighted(chain);
    CHECK(w.weight("a") == Rational(1));
    CHECK(w.weight("b") == Rational(2));
    const auto g = gammaT(5);
    const auto gw = toWeighted(g);
    CHECK(gw.weight("u") == Rational(1));
    CHECK(gw.weight("a") == Rational(5));
    CHECK(gw.weight("b") == Rational(0));

    RootedTree::Builder sb("r");
    sb.addChild("r", "a").addChild("r", "b");
    const WeightedTree clash(sb.build(), {{"a", 3}, {"b", 3}});
    CHECK(clash.fineViolations().size() == 1);
    try {
      fromWeighted(clash);
      FAIL("expected FineConditionViolated");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FineConditionViolated);
    }
    const auto unreduced = relabel(chain, {{"b", Poly::parse("1 + 2*x + x^2")}});
    try {
      toWeighted(unreduced);
      FAIL("expected CochainNotReduced");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CochainNotReduced);
    }
    CHECK(fromWeighted(toWeighted(reduce(unreduced))) == chain);
  }

  TEST_CASE("compatibility matches the fine condition on random trees") {
    TreeGen gen(31);
    for (int k = 0; k < 150; ++k) {
      const auto t = reduce(gen.tree());
      CHECK(validate(t).empty());
      const auto w = toWeighted(t);
      CHECK(w.fineViolations().empty());
      CHECK(fromWeighted(w) == t);
      // Breaking one sibling pair breaks both views together.
      for (const auto& id : t.shape().nodes()) {
        const auto& ch = t.shape().children(id);
        if (ch.size() < 2) continue;
        auto weights = w.weights();
        weights[ch[1]] = weights.at(ch[0]);
        const WeightedTree broken(t.shape(), weights);
        CHECK_FALSE(broken.fineViolations().empty());
        std::map<NodeId, Poly> sigma;
        for (const auto& leaf : t.leaves()) {
          const auto path = t.shape().pathFromRoot(leaf);
          std::vector<Rational> c;
          for (std::size_t i = 1; i < path.size(); ++i) c.push_back(weights.at(path[i]));
          sigma.emplace(leaf, Poly(c));
        }
        CHECK_FALSE(validate(relabel(t, sigma)).empty());
        break;
      }
    }
  }

  TEST_CASE("d-matrix law") {
    TreeGen gen(32);
    for (int k = 0; k < 100; ++k) {
      const auto t = gen.tree();
      const auto leaves = t.leaves();
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        for (std::size_t j = i + 1; j < leaves.size(); ++j) {
          const int d = t.shape().level(firstCommonAncestor(t.shape(), leaves[i], leaves[j]));
          CHECK(ordAtX(t.sigma(leaves[j]) - t.sigma(leaves[i])) == d);
        }
      }
    }
  }

  TEST_CASE("buildFromUltrametric examples") {
    UltrametricData u{2, {2, 1}, {{0, 0}, {0, 0}}, {Poly(1), Poly(0)}};
    const auto two = buildFromUltrametric(u);
    CHECK(two.tree.shape().children(two.tree.shape().root()).size() == 2);
    CHECK(two.tree.shape().level(two.leafOf[0]) == 2);
    CHECK(two.tree.shape().level(two.leafOf[1]) == 1);
    CHECK(two.tree.shape().nodes() == std::vector<NodeId>{"n0", "n1", "n2", "n3"});

    UltrametricData b{3, {1, 1, 1}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {Poly(0), Poly(1), Poly(2)}};
    const auto broom3 = buildFromUltrametric(b).tree;
    CHECK(broom3.shape().height() == 1);
    CHECK(broom3.leafCount() == 3);
  }

  TEST_CASE("buildFromUltrametric reports the failing condition") {
    auto conditionOf = [](const UltrametricData& u) {
      try {
        buildFromUltrametric(u);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConditionViolated);
        return e.detail();
      }
      return 0;
    };
    // d_12 must be below min(m_1, m_2).
    CHECK(conditionOf({2, {1, 2}, {{0, 1}, {1, 0}}, {Poly(0), Poly::x()}}) == 1);
    // Asymmetric d.
    CHECK(conditionOf({2, {2, 2}, {{0, 1}, {0, 0}}, {Poly(0), Poly(1)}}) == 1);
    // min(d_12, d_13) = 1 but min(d_21, d_23) = 0.
    CHECK(conditionOf({3, {3, 3, 3}, {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}},
                       {Poly(0), Poly::x(), Poly::monomial(2, 1)}}) == 2);
    // ord(sigma_2 - sigma_1) = 0, not 1.
    CHECK(conditionOf({2, {2, 2}, {{0, 1}, {1, 0}}, {Poly(0), Poly(1)}}) == 3);
    CHECK_THROWS_AS(buildFromUltrametric({2, {1}, {}, {}}), Error);
  }

  TEST_CASE("ultrametric round trip") {
    TreeGen gen(33);
    for (int k = 0; k < 200; ++k) {
      RandomTreeOptions opt;
      opt.maxNodes = 16;
      auto t = gen.tree(opt);
      if (t.shape().size() == 1) continue;
      auto order = t.leaves();
      std::shuffle(order.begin(), order.end(), gen.engine());
      const auto u = extractByPaths(t, order);
      REQUIRE(checkUltrametric(u).message.empty());
      const auto built = buildFromUltrametric(u);
      CHECK(validate(built.tree).empty());
      const auto back = extractByPaths(built.tree, built.leafOf);
      CHECK(back.m == u.m);
      CHECK(back.d == u.d);
      CHECK(back.sigma == u.sigma);
      CHECK(extractUltrametric(built.tree, built.leafOf).d == u.d);
    }
  }

  TEST_CASE("reduce keeps compatibility") {
    TreeGen gen(34);
    for (int k = 0; k < 50; ++k) {
      const auto t = gen.tree();
      const auto r = reduce(t);
      CHECK(validate(r).empty());
      for (const auto& leaf : t.leaves()) {
        CHECK(r.sigma(leaf).degree() < t.shape().level(leaf));
        CHECK(congruentMod(r.sigma(leaf), t.sigma(leaf), t.shape().level(leaf)));
      }
    }
  }
}
