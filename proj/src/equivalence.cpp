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

#include "dfsurf/equivalence.hpp"

#include <functional>
#include <set>
#include <vector>

#include "dfsurf/linsolve.hpp"

namespace dfsurf {

Essentialization essentialize(const LabelledTree& t) {
  const auto& shape = t.shape();
  const EssentialRoot er = essentialSubtree(shape);
  RootedTree es = maximalSubtree(shape, er.root);
  std::map<NodeId, Poly> sigma;
  if (shape.isLeaf(er.root)) {
    sigma.emplace(er.root, Poly());
    return {LabelledTree(std::move(es), std::move(sigma)), t.sigma(er.root), er.level};
  }
  const Poly c = truncMod(t.sigma(shape.leaves().front()), er.level);
  for (const auto& leaf : es.leaves()) sigma.emplace(leaf, divExactByXPow(t.sigma(leaf) - c, er.level));
  return {LabelledTree(std::move(es), std::move(sigma)), c, er.level};
}

namespace {

std::map<NodeId, std::string> shapeKeys(const RootedTree& t) {
  std::map<NodeId, std::string> keys;
  for (const auto& id : t.nodes()) keys.emplace(id, canonicalShape(t, id));
  return keys;
}

class Search {
 public:
  Search(const LabelledTree& target, const LabelledTree& source, bool strict)
      : target_(target), source_(source),
        keysT_(shapeKeys(target.shape())), keysS_(shapeKeys(source.shape())) {
    const int height = target.shape().height() - target.shape().level(target.shape().root());
    bCount_ = strict ? 1 : std::max(height, 1);
  }

  std::optional<EquivalenceWitness> run() {
    const auto& rs = source_.shape().root();
    const auto& rt = target_.shape().root();
    if (keysS_.at(rs) != keysT_.at(rt)) return std::nullopt;
    system_ = LinearSystem(1 + bCount_);
    std::vector<std::pair<NodeId, NodeId>> todo{{rs, rt}};
    if (!extend(todo)) return std::nullopt;
    return witness_;
  }

 private:
  bool extend(std::vector<std::pair<NodeId, NodeId>>& todo) {
    if (todo.empty()) return finish();
    const auto [u, v] = todo.back();
    todo.pop_back();
    bool found = false;
    if (source_.shape().isLeaf(u)) {
      found = pairLeaves(u, v, todo);
    } else {
      const auto& cu = source_.shape().children(u);
      std::vector<bool> used(cu.size(), false);
      std::vector<std::size_t> choice(cu.size());
      found = assign(u, v, 0, used, choice, todo);
    }
    if (!found) todo.emplace_back(u, v);
    return found;
  }

  bool assign(const NodeId& u, const NodeId& v, std::size_t k, std::vector<bool>& used,
              std::vector<std::size_t>& choice, std::vector<std::pair<NodeId, NodeId>>& todo) {
    const auto& cu = source_.shape().children(u);
    const auto& cv = target_.shape().children(v);
    if (k == cu.size()) {
      const std::size_t mark = todo.size();
      for (std::size_t i = cu.size(); i-- > 0;) todo.emplace_back(cu[i], cv[choice[i]]);
      if (extend(todo)) return true;
      todo.resize(mark);
      return false;
    }
    for (std::size_t j = 0; j < cv.size(); ++j) {
      if (used[j] || keysS_.at(cu[k]) != keysT_.at(cv[j])) continue;
      used[j] = true;
      choice[k] = j;
      if (assign(u, v, k + 1, used, choice, todo)) return true;
      used[j] = false;
    }
    return false;
  }

  bool pairLeaves(const NodeId& u, const NodeId& v, std::vector<std::pair<NodeId, NodeId>>& todo) {
    const int m = target_.shape().level(v) - target_.shape().level(target_.shape().root());
    const Poly& p = source_.sigma(u);
    const Poly& q = target_.sigma(v);
    const std::size_t mark = system_.rowCount();
    for (int t = 0; t < m; ++t) {
      std::vector<Rational> row(static_cast<std::size_t>(bCount_) + 2);
      row[0] = p.coeff(t);
      if (t < bCount_) row[static_cast<std::size_t>(t) + 1] = 1;
      row.back() = q.coeff(t);
      system_.addRow(std::move(row));
    }
    leafMap_.emplace(u, v);
    if (feasible() && extend(todo)) return true;
    leafMap_.erase(u);
    while (system_.rowCount() > mark) system_.popRow();
    return false;
  }

  // Consistent, and a is not forced to 0.
  bool feasible() const {
    const EchelonForm f = rowReduce(system_);
    if (!f.consistent) return false;
    const auto forced = f.forcedValue(0);
    return !(forced && forced->isZero());
  }

  bool finish() {
    const EchelonForm f = rowReduce(system_);
    std::vector<std::optional<Rational>> freeValues(static_cast<std::size_t>(f.unknowns));
    if (f.isFree(0)) {
      freeValues[0] = Rational(1);
    }
    auto u = particularSolution(f, freeValues);
    if (u && u->front().isZero()) {
      const auto& row = f.rows[static_cast<std::size_t>(f.pivotOf[0])];
      for (int c = 1; c < f.unknowns; ++c) {
        if (f.isFree(c) && !row[static_cast<std::size_t>(c)].isZero()) {
          freeValues[static_cast<std::size_t>(c)] = Rational(1);
          break;
        }
      }
      u = particularSolution(f, freeValues);
    }
    if (!u || u->front().isZero()) return false;
    witness_.treeIso = leafMap_;
    witness_.a = u->front();
    witness_.b = Poly(std::vector<Rational>(u->begin() + 1, u->end()));
    return true;
  }

  const LabelledTree& target_;
  const LabelledTree& source_;
  std::map<NodeId, std::string> keysT_;
  std::map<NodeId, std::string> keysS_;
  int bCount_ = 1;
  LinearSystem system_{1};
  std::map<NodeId, NodeId> leafMap_;
  EquivalenceWitness witness_;
};

}  // namespace

std::optional<EquivalenceWitness> decideEquivalence(const LabelledTree& gamma,
                                                    const LabelledTree& gammaPrime,
                                                    bool strictConstantB) {
  const Essentialization es = essentialize(gamma);
  const Essentialization esPrime = essentialize(gammaPrime);
  return Search(es.tree, esPrime.tree, strictConstantB).run();
}

std::string checkWitness(const LabelledTree& gamma, const LabelledTree& gammaPrime,
                         const EquivalenceWitness& w, bool strictConstantB) {
  if (w.a.isZero()) return "a is zero";
  if (strictConstantB && w.b.degree() > 0) return "b is not constant";
  const LabelledTree es = essentialize(gamma).tree;
  const LabelledTree esPrime = essentialize(gammaPrime).tree;
  const auto& s = esPrime.shape();
  const auto& t = es.shape();
  const auto leavesS = s.leaves();
  if (w.treeIso.size() != leavesS.size() || t.leaves().size() != leavesS.size()) {
    return "leaf map is not a bijection";
  }
  std::set<NodeId> images;
  for (const auto& leaf : leavesS) {
    const auto it = w.treeIso.find(leaf);
    if (it == w.treeIso.end() || !t.contains(it->second) || !t.isLeaf(it->second)) {
      return "leaf '" + leaf + "' has no image leaf";
    }
    images.insert(it->second);
  }
  if (images.size() != leavesS.size()) return "leaf map is not injective";
  const int baseS = s.level(s.root());
  const int baseT = t.level(t.root());
  for (const auto& i : leavesS) {
    const NodeId& j = w.treeIso.at(i);
    const int m = t.level(j) - baseT;
    if (s.level(i) - baseS != m) return "leaf levels differ at '" + i + "'";
    for (const auto& k : leavesS) {
      if (k == i) continue;
      if (s.level(firstCommonAncestor(s, i, k)) - baseS !=
          t.level(firstCommonAncestor(t, j, w.treeIso.at(k))) - baseT) {
        return "leaf map does not preserve branching between '" + i + "' and '" + k + "'";
      }
    }
    const Poly lhs = Poly(w.a) * esPrime.sigma(i) + w.b - es.sigma(j);
    if (!congruentMod(lhs, Poly(), m)) {
      return "a*sigma'(" + i + ") + b - sigma(" + j + ") is not divisible by x^" + std::to_string(m);
    }
  }
  return {};
}

}  // namespace dfsurf
