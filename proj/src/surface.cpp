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

#include "dfsurf/surface.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

#include "dfsurf/equivalence.hpp"
#include "dfsurf/error.hpp"

namespace dfsurf {

namespace {

MultiPoly xPow(int k) { return MultiPoly::variable("x").pow(k); }

}  // namespace

SurfaceDescriptor descriptor(const LabelledTree& t) {
  SurfaceDescriptor d;
  const auto& shape = t.shape();
  d.leaves = shape.leaves();
  d.n = static_cast<int>(d.leaves.size());
  d.h = shape.height();
  for (const auto& leaf : d.leaves) {
    d.m.push_back(shape.level(leaf));
    d.mu.push_back(d.h - d.m.back());
    d.sigma.push_back(t.sigma(leaf));
  }
  const auto n = d.leaves.size();
  d.transition.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) d.transition[i][j] = LaurentPoly::fromPoly(d.sigma[j] - d.sigma[i], -d.m[i]);
    }
  }
  return d;
}

bool isAffine(const SurfaceDescriptor& d) {
  if (d.n == 1) return true;
  for (std::size_t i = 0; i < d.transition.size(); ++i) {
    for (std::size_t j = 0; j < d.transition[i].size(); ++j) {
      if (i == j) continue;
      const auto& g = d.transition[i][j];
      if (g.isZero() || g.minExponent() >= 0) return false;
    }
  }
  return true;
}

CanonicalMorphismData canonicalMorphismData(const LabelledTree& t) {
  const SurfaceDescriptor d = descriptor(t);
  return {d.h, d.mu, d.sigma, d.m};
}

MultiPoly chartExpression(const CanonicalMorphismData& data, std::size_t i,
                          const std::string& chartVariable) {
  return MultiPoly::fromPoly(data.sigma[i], "x") + xPow(data.m[i]) * MultiPoly::variable(chartVariable);
}

std::vector<std::pair<std::size_t, std::size_t>> chartConsistencyFailures(const LabelledTree& t) {
  const SurfaceDescriptor d = descriptor(t);
  const CanonicalMorphismData data{d.h, d.mu, d.sigma, d.m};
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  const auto n = d.leaves.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const RatFunc ti = RatFunc::fromLaurent(d.transition[i][j]) +
                         RatFunc::fromLaurent(LaurentPoly::fromPoly(Poly(1), d.m[j] - d.m[i])) *
                             RatFunc(MultiPoly::variable("T"));
      const RatFunc yi = substitute(chartExpression(data, i), {{"x", MultiPoly::variable("x")}, {"T", ti}});
      if (!(yi == RatFunc(chartExpression(data, j)))) bad.emplace_back(i, j);
    }
  }
  return bad;
}

MorphismGluingData morphismGluingData(const TreeMorphism& phi) {
  const auto violations = validateMorphism(phi);
  if (!violations.empty()) throw Error(ErrorCode::InvalidMorphism, violations.front(), 0, violations);
  MorphismGluingData g;
  const auto& target = phi.target.shape();
  const int h = target.height();
  g.sourceLeaves = phi.source.leaves();
  for (const auto& leaf : g.sourceLeaves) {
    const NodeId& j = phi(leaf);
    const int m = target.level(j);
    g.leafMap.emplace(leaf, j);
    g.nu.push_back(h - m);
    g.sigmaDoublePrime.push_back(divExactByXPow(phi.source.sigma(leaf) - phi.target.sigma(j), m));
  }
  return g;
}

bool canonicalSheafTrivial(const LabelledTree& t) {
  const auto es = essentialize(t).tree;
  const auto leaves = es.leaves();
  const int level = es.shape().level(leaves.front());
  return std::all_of(leaves.begin(), leaves.end(),
                     [&](const NodeId& l) { return es.shape().level(l) == level; });
}

bool mlTrivial(const LabelledTree& t) { return isComb(essentialize(t).tree.shape()); }

bool odsCharacterization(const LabelledTree& t) {
  const auto es = essentialize(t).tree;
  return isComb(es.shape()) && es.height() <= 1;
}

std::vector<std::pair<std::size_t, std::size_t>> verifyRelations(const EquationSystem& s) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t c = 0; c < s.charts.size(); ++c) {
    const Bindings b = s.charts[c].asBindings();
    for (std::size_t r = 0; r < s.relations.size(); ++r) {
      if (!ratFuncIsZero(substitute(s.relations[r], b))) bad.emplace_back(r, c);
    }
  }
  return bad;
}

EquationSystem emitBroomEquations(const LabelledTree& t) {
  Essentialization es = essentialize(t);
  // A chain of length m is read as the one-leaf broom of height m.
  if (es.tree.shape().size() == 1 && es.m > 0) es = {t, Poly(), 0};
  const auto& shape = es.tree.shape();
  const auto leaves = shape.leaves();
  const int m = shape.level(leaves.front());
  for (const auto& id : shape.nodes()) {
    if (id != shape.root() && shape.children(id).size() > 1) {
      throw Error(ErrorCode::NotABroom, "node '" + id + "' branches below the essential root");
    }
  }
  for (const auto& leaf : leaves) {
    if (shape.level(leaf) != m) {
      throw Error(ErrorCode::NotABroom, "leaves of the essential subtree lie at different levels");
    }
  }
  const MultiPoly x = MultiPoly::variable("x");
  const MultiPoly y = MultiPoly::variable("y");
  const MultiPoly z = MultiPoly::variable("z");
  const MultiPoly T = MultiPoly::variable("T");

  EquationSystem s;
  s.variables = {"x", "y", "z"};
  MultiPoly p = MultiPoly::constant(1);
  for (const auto& leaf : leaves) p *= y - MultiPoly::fromPoly(es.tree.sigma(leaf), "x");
  s.relations.push_back((xPow(m) * z - p).withVariables(s.variables));

  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const MultiPoly si = MultiPoly::fromPoly(es.tree.sigma(leaves[i]), "x");
    const MultiPoly yi = si + xPow(m) * T;
    MultiPoly py = MultiPoly::constant(1);
    for (const auto& leaf : leaves) py *= yi - MultiPoly::fromPoly(es.tree.sigma(leaf), "x");
    s.charts.push_back({leaves[i],
                        {{"x", RatFunc(x)},
                         {"y", RatFunc(yi)},
                         {"z", RatFunc(py.divideByVariablePower("x", m))}}});
  }
  s.canonicalMorphism = xPow(es.m) * y + MultiPoly::fromPoly(es.c, "x");
  return s;
}

CombResult emitCombEquations(const CombSpec& spec) {
  const std::size_t n = spec.polys.size();
  if (n == 0) throw Error(ErrorCode::InvalidSpec, "a comb needs at least one polynomial");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = spec.polys[i];
    const std::string which = "P" + std::to_string(i + 1);
    if (f.roots.empty()) throw Error(ErrorCode::InvalidSpec, which + " has no roots");
    if (f.distinguished >= f.roots.size()) {
      throw Error(ErrorCode::InvalidSpec, which + ": distinguished root index out of range");
    }
    if (std::set<Rational>(f.roots.begin(), f.roots.end()).size() != f.roots.size()) {
      throw Error(ErrorCode::InvalidSpec, which + " has a repeated root");
    }
  }
  auto var = [](std::size_t k) { return MultiPoly::variable("X" + std::to_string(k)); };
  auto lambda = [&](std::size_t i) { return spec.polys[i - 1].roots[spec.polys[i - 1].distinguished]; };
  // P_i and R_i = P_i / (X - lambda_i1), 1-based, as polynomials in `v`.
  auto P = [&](std::size_t i, const MultiPoly& v) {
    MultiPoly out = MultiPoly::constant(1);
    for (const auto& r : spec.polys[i - 1].roots) out *= v - MultiPoly::constant(r);
    return out;
  };
  auto R = [&](std::size_t i, const MultiPoly& v) {
    MultiPoly out = MultiPoly::constant(1);
    const auto& f = spec.polys[i - 1];
    for (std::size_t k = 0; k < f.roots.size(); ++k) {
      if (k != f.distinguished) out *= v - MultiPoly::constant(f.roots[k]);
    }
    return out;
  };

  EquationSystem s;
  for (std::size_t k = 0; k <= n + 1; ++k) s.variables.push_back("X" + std::to_string(k));
  for (std::size_t j = 1; j <= n; ++j) {
    MultiPoly rhs = P(j, var(j));
    for (std::size_t i = 1; i < j; ++i) rhs *= R(i, var(i));
    s.relations.push_back((var(0) * var(j + 1) - rhs).withVariables(s.variables));
  }
  for (std::size_t j = 2; j <= n; ++j) {
    for (std::size_t l = j; l <= n; ++l) {
      MultiPoly rhs = var(j) * P(l, var(l));
      for (std::size_t i = j; i < l; ++i) rhs *= R(i, var(i));
      const MultiPoly lhs = (var(j - 1) - MultiPoly::constant(lambda(j - 1))) * var(l + 1);
      s.relations.push_back((lhs - rhs).withVariables(s.variables));
    }
  }

  // Chart on the locus X0 != 0.
  const RatFunc x(MultiPoly::variable("x"));
  std::vector<RatFunc> X{x, RatFunc(MultiPoly::variable("y"))};
  for (std::size_t j = 1; j <= n; ++j) {
    // Substituting into P and R, written over X_j's placeholder variable.
    RatFunc value = substitute(P(j, MultiPoly::variable("v")), {{"v", X[j]}});
    for (std::size_t i = 1; i < j; ++i) value *= substitute(R(i, MultiPoly::variable("v")), {{"v", X[i]}});
    X.push_back(value / x);
  }
  Chart chart{"X0", {}};
  chart.bindings.emplace_back("X0", X[0]);
  for (std::size_t k = 1; k <= n + 1; ++k) chart.bindings.emplace_back("X" + std::to_string(k), X[k]);
  s.charts.push_back(std::move(chart));

  // The comb: the distinguished root continues, the others end at their depth.
  RootedTree::Builder b("r");
  std::map<NodeId, Poly> sigma;
  NodeId spine = "r";
  Poly prefix;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& f = spec.polys[i - 1];
    const int t = static_cast<int>(i) - 1;
    for (std::size_t k = 0; k < f.roots.size(); ++k) {
      if (i < n && k == f.distinguished) continue;
      const NodeId leaf = "l" + std::to_string(i) + "_" + std::to_string(k + 1);
      b.addChild(spine, leaf);
      sigma.emplace(leaf, prefix + Poly::monomial(f.roots[k], t));
    }
    if (i < n) {
      const NodeId next = "c" + std::to_string(i);
      b.addChild(spine, next);
      spine = next;
      prefix += Poly::monomial(f.roots[f.distinguished], t);
    }
  }
  return {std::move(s), LabelledTree(b.build(), std::move(sigma))};
}

std::vector<FiberComponent> fiberComponents(const LabelledTree& t) {
  std::vector<FiberComponent> out;
  for (const auto& leaf : t.leaves()) out.push_back({leaf, t.sigma(leaf).coeff(0)});
  return out;
}

std::string toJson(const EquationSystem& s, int indent) {
  nlohmann::ordered_json j;
  j["variables"] = s.variables;
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : s.relations) j["relations"].push_back(r.toString());
  j["charts"] = nlohmann::ordered_json::object();
  for (const auto& c : s.charts) {
    nlohmann::ordered_json sub = nlohmann::ordered_json::object();
    for (const auto& [v, f] : c.bindings) sub[v] = f.toString();
    j["charts"][c.name] = std::move(sub);
  }
  if (s.canonicalMorphism) j["canonical_morphism"] = s.canonicalMorphism->toString();
  return j.dump(indent);
}

std::string toText(const EquationSystem& s) {
  std::ostringstream out;
  out << "variables:";
  for (const auto& v : s.variables) out << ' ' << v;
  out << '\n';
  for (const auto& r : s.relations) out << "relation: " << r.toString() << " = 0\n";
  for (const auto& c : s.charts) {
    out << "chart " << c.name << ":\n";
    for (const auto& [v, f] : c.bindings) out << "  " << v << " = " << f.toString() << '\n';
  }
  if (s.canonicalMorphism) out << "canonical morphism: " << s.canonicalMorphism->toString() << '\n';
  return out.str();
}

}  // namespace dfsurf
