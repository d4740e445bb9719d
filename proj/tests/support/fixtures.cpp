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

#include "support/fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "dfsurf/tree_io.hpp"

namespace dfsurf::testing {

LabelledTree broom(int m, const std::vector<Rational>& sigmas) {
  RootedTree::Builder b("r");
  std::map<NodeId, Rational> w;
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    NodeId prev = "r";
    for (int k = 1; k <= m; ++k) {
      const NodeId id = k == m ? "l" + std::to_string(i + 1)
                               : "c" + std::to_string(i + 1) + "_" + std::to_string(k);
      b.addChild(prev, id);
      w.emplace(id, k == 1 ? sigmas[i] : Rational(0));
      prev = id;
    }
  }
  return fromWeighted(WeightedTree(b.build(), std::move(w)));
}

LabelledTree gammaT(const Rational& t) {
  RootedTree::Builder b("r");
  b.addChild("r", "u").addChild("u", "a").addChild("r", "b");
  return LabelledTree::checked(b.build(), {{"a", Poly({Rational(1), t})}, {"b", Poly()}});
}

LabelledTree bmlTree() {
  return parseTreeFile(
      "format cochain\nroot r\nedge r a\nedge r e\nedge e b\nedge e c\nedge r d\n"
      "leaf a sigma 1\nleaf b sigma x\nleaf c sigma -x\nleaf d sigma -1\n");
}

LabelledTree bmlBase() {
  return parseTreeFile(
      "format cochain\nroot r\nedge r a\nedge r e\nedge r d\n"
      "leaf a sigma 1\nleaf e sigma 0\nleaf d sigma -1\n");
}

LabelledTree sampleComb() {
  return parseTreeFile(
      "format weighted\nroot e0\nedge e0 f 0\nedge f e 0\nedge e g 0\n"
      "edge g e24 1\nedge g e34 0\nedge g e44 -1\nedge e e13 1\n");
}

LabelledTree forkTree() {
  return parseTreeFile(
      "format cochain\nroot r\nedge r p\nedge p a\nedge r b\nedge r q\nedge q c\n"
      "leaf a sigma 1\nleaf b sigma 0\nleaf c sigma -1\n");
}

Rational TreeGen::rational(int range) {
  const int num = uniform(-range, range);
  return coin() ? Rational(num) : Rational(num, uniform(1, 3));
}

Poly TreeGen::poly(int maxDegree, int range) {
  std::vector<Rational> c;
  const int deg = uniform(0, maxDegree);
  for (int i = 0; i <= deg; ++i) c.push_back(rational(range));
  return Poly(std::move(c));
}

LabelledTree TreeGen::tree(const RandomTreeOptions& opt, const std::string& prefix) {
  std::vector<int> parent{-1};
  std::vector<int> level{0};
  std::vector<int> childCount{0};
  const int target = uniform(1, opt.maxNodes);
  for (int attempt = 0; static_cast<int>(parent.size()) < target && attempt < 10 * opt.maxNodes; ++attempt) {
    const int p = uniform(0, static_cast<int>(parent.size()) - 1);
    if (level[static_cast<std::size_t>(p)] >= opt.maxHeight) continue;
    const int leaves = static_cast<int>(std::count(childCount.begin(), childCount.end(), 0));
    if (childCount[static_cast<std::size_t>(p)] > 0 && leaves + 1 > opt.maxLeaves) continue;
    parent.push_back(p);
    level.push_back(level[static_cast<std::size_t>(p)] + 1);
    childCount.push_back(0);
    ++childCount[static_cast<std::size_t>(p)];
  }
  auto id = [&](std::size_t i) { return prefix + std::to_string(i); };
  RootedTree::Builder b(id(0));
  std::map<NodeId, Rational> w;
  std::vector<std::vector<std::size_t>> children(parent.size());
  for (std::size_t i = 1; i < parent.size(); ++i) {
    children[static_cast<std::size_t>(parent[i])].push_back(i);
    b.addChild(id(static_cast<std::size_t>(parent[i])), id(i));
  }
  for (const auto& ch : children) {
    if (ch.empty()) continue;
    const int range = std::max(opt.weightRange, static_cast<int>(ch.size()));
    std::vector<int> values(static_cast<std::size_t>(2 * range + 1));
    std::iota(values.begin(), values.end(), -range);
    std::shuffle(values.begin(), values.end(), rng_);
    const bool halve = opt.rationalWeights && coin();
    for (std::size_t k = 0; k < ch.size(); ++k) {
      w.emplace(id(ch[k]), halve ? Rational(values[k], 2) : Rational(values[k]));
    }
  }
  const LabelledTree plain = fromWeighted(WeightedTree(b.build(), std::move(w)));
  if (!opt.perturbLabels) return plain;
  std::map<NodeId, Poly> sigma;
  for (const auto& leaf : plain.leaves()) {
    Poly s = plain.sigma(leaf);
    if (coin()) s += poly(2, 3).shifted(plain.shape().level(leaf));
    sigma.emplace(leaf, s);
  }
  return LabelledTree(plain.shape(), std::move(sigma));
}

std::vector<LabelledTree> TreeGen::corpus(std::size_t count, const RandomTreeOptions& opt) {
  std::vector<LabelledTree> out{
      broom(1, {1, -1}),
      broom(2, {1, -1}),
      broom(3, {1, 0, -1}),
      gammaT(0),
      gammaT(1),
      gammaT(2),
      bmlTree(),
      bmlBase(),
      sampleComb(),
      forkTree(),
      LabelledTree(RootedTree("r"), {{"r", Poly()}}),
      parseTreeFile("root r; edge r a 1; edge a b 2; edge b c 0"),
  };
  while (out.size() < count) out.push_back(tree(opt));
  return out;
}

LabelledTree transformTree(const LabelledTree& t, const Rational& a, const Poly& b, TreeGen& gen,
                           const std::string& prefix) {
  const auto& shape = t.shape();
  RootedTree::Builder builder(prefix + shape.root());
  for (const auto& id : shape.nodes()) {
    const auto& ch = shape.children(id);
    for (auto c = ch.rbegin(); c != ch.rend(); ++c) builder.addChild(prefix + id, prefix + *c);
  }
  std::map<NodeId, Poly> sigma;
  for (const auto& leaf : shape.leaves()) {
    const Poly r = gen.poly(2, 3).shifted(shape.level(leaf));
    sigma.emplace(prefix + leaf, Poly(a) * t.sigma(leaf) + b + r);
  }
  return LabelledTree(builder.build(), std::move(sigma));
}

TreeMorphism randomMorphism(TreeGen& gen, int maxBlowUps) {
  RandomTreeOptions opt;
  opt.maxLeaves = 6;
  opt.maxHeight = 4;
  opt.maxNodes = 10;
  opt.perturbLabels = false;
  const LabelledTree base = gen.tree(opt, "t");

  // Embedding target: extra leaves hung off internal nodes of the base.
  const WeightedTree bw = toWeighted(base);
  RootedTree::Builder big(base.shape().root());
  std::map<NodeId, Rational> weights = bw.weights();
  int extra = 0;
  for (const auto& id : base.shape().nodes()) {
    const auto& ch = base.shape().children(id);
    for (const auto& c : ch) big.addChild(id, c);
    if (ch.empty() || !gen.coin()) continue;
    Rational w = 100;
    for (const auto& c : ch) w = std::max(w, weights.at(c) + 1);
    const NodeId fresh = "x" + std::to_string(extra++);
    big.addChild(id, fresh);
    weights.emplace(fresh, w);
  }
  const LabelledTree target = fromWeighted(WeightedTree(big.build(), std::move(weights)));

  // Source: blow-ups of base leaves, tracking where each node goes.
  std::map<NodeId, NodeId> map;
  for (const auto& id : base.shape().nodes()) map.emplace(id, id);
  LabelledTree current = base;
  const int steps = gen.uniform(0, maxBlowUps);
  for (int k = 0; k < steps; ++k) {
    const auto leaves = current.leaves();
    const NodeId e = leaves[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(leaves.size()) - 1))];
    const int m = current.shape().level(e);
    const Poly head = truncMod(current.sigma(e), m);
    RootedTree::Builder b(current.shape().root());
    for (const auto& id : current.shape().nodes()) {
      for (const auto& c : current.shape().children(id)) b.addChild(id, c);
    }
    std::map<NodeId, Poly> sigma = current.sigmaMap();
    sigma.erase(e);
    const int count = gen.uniform(1, 3);
    for (int i = 0; i < count; ++i) {
      const NodeId c = "s" + std::to_string(k) + "_" + std::to_string(i);
      b.addChild(e, c);
      Poly label = head + Poly::monomial(Rational(i), m);
      if (gen.coin()) label += gen.poly(1, 2).shifted(m + 1);
      sigma.emplace(c, label);
      map.emplace(c, map.at(e));
    }
    current = LabelledTree(b.build(), std::move(sigma));
  }
  return TreeMorphism{current, target, std::move(map)};
}

}  // namespace dfsurf::testing
