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

#include "dfsurf/labelled_tree.hpp"

#include <algorithm>
#include <sstream>

#include "dfsurf/error.hpp"

namespace dfsurf {

LabelledTree::LabelledTree(RootedTree shape, std::map<NodeId, Poly> sigma)
    : shape_(std::move(shape)), sigma_(std::move(sigma)) {}

LabelledTree LabelledTree::checked(RootedTree shape, std::map<NodeId, Poly> sigma) {
  LabelledTree t(std::move(shape), std::move(sigma));
  const auto violations = validate(t);
  if (!violations.empty()) {
    std::vector<std::string> items;
    for (const auto& v : violations) items.push_back(v.message);
    std::string msg = "labelled tree is not compatible: " + items.front();
    if (items.size() > 1) msg += " (and " + std::to_string(items.size() - 1) + " more)";
    throw Error(ErrorCode::ValidationError, msg, 0, std::move(items));
  }
  return t;
}

const Poly& LabelledTree::sigma(const NodeId& leaf) const {
  const auto it = sigma_.find(leaf);
  if (it == sigma_.end()) throw Error(ErrorCode::UnknownNode, "no label for node '" + leaf + "'");
  return it->second;
}

std::vector<Violation> validate(const LabelledTree& t) {
  std::vector<Violation> out;
  const auto& shape = t.shape();
  const auto leaves = shape.leaves();
  for (const auto& leaf : leaves) {
    if (!t.sigmaMap().count(leaf)) {
      out.push_back({Violation::Kind::MissingLabel, leaf, {}, 0, Valuation::infinity(),
                     "leaf '" + leaf + "' has no label"});
    }
  }
  for (const auto& [id, p] : t.sigmaMap()) {
    if (!shape.contains(id) || !shape.isLeaf(id)) {
      out.push_back({Violation::Kind::StrayLabel, id, {}, 0, Valuation::infinity(),
                     "label given for '" + id + "', which is not a leaf"});
    }
  }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const int d = shape.level(firstCommonAncestor(shape, leaves[i], leaves[j]));
      // d < min(m_i, m_j) holds for every pair of distinct leaves.
      const Valuation v = ordAtX(t.sigma(leaves[j]) - t.sigma(leaves[i]));
      if (v != d) {
        std::ostringstream msg;
        msg << "leaves '" << leaves[i] << "' and '" << leaves[j] << "' meet at level " << d
            << " but ord_x(sigma_j - sigma_i) = " << v.toString();
        out.push_back({Violation::Kind::WrongValuation, leaves[i], leaves[j], d, v, msg.str()});
      }
    }
  }
  return out;
}

LabelledTree reduce(const LabelledTree& t) {
  std::map<NodeId, Poly> sigma;
  for (const auto& [leaf, p] : t.sigmaMap()) sigma.emplace(leaf, truncMod(p, t.shape().level(leaf)));
  return LabelledTree(t.shape(), std::move(sigma));
}

WeightedTree::WeightedTree(RootedTree shape, std::map<NodeId, Rational> weight)
    : shape_(std::move(shape)), weight_(std::move(weight)) {}

const Rational& WeightedTree::weight(const NodeId& child) const {
  const auto it = weight_.find(child);
  if (it == weight_.end()) {
    throw Error(ErrorCode::MalformedTree, "edge into '" + child + "' has no weight");
  }
  return it->second;
}

std::vector<std::pair<NodeId, NodeId>> WeightedTree::fineViolations() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const auto& id : shape_.nodes()) {
    const auto& ch = shape_.children(id);
    for (std::size_t a = 0; a < ch.size(); ++a) {
      for (std::size_t b = a + 1; b < ch.size(); ++b) {
        if (weight(ch[a]) == weight(ch[b])) out.emplace_back(ch[a], ch[b]);
      }
    }
  }
  return out;
}

WeightedTree toWeighted(const LabelledTree& t) {
  const auto& shape = t.shape();
  std::map<NodeId, Rational> weight;
  for (const auto& leaf : shape.leaves()) {
    const Poly& s = t.sigma(leaf);
    const int m = shape.level(leaf);
    if (s.degree() >= m) {
      throw Error(ErrorCode::CochainNotReduced,
                  "label of '" + leaf + "' has degree " + std::to_string(s.degree()) +
                      " >= level " + std::to_string(m) + "; reduce the cochain first");
    }
    const auto path = shape.pathFromRoot(leaf);
    for (std::size_t k = 1; k < path.size(); ++k) {
      // Shared edges receive the same coefficient from every leaf below them
      // on compatible trees; the first writer wins otherwise.
      weight.emplace(path[k], s.coeff(static_cast<int>(k) - 1));
    }
  }
  return WeightedTree(shape, std::move(weight));
}

LabelledTree fromWeighted(const WeightedTree& w) {
  const auto& shape = w.shape();
  const auto bad = w.fineViolations();
  if (!bad.empty()) {
    throw Error(ErrorCode::FineConditionViolated,
                "siblings '" + bad.front().first + "' and '" + bad.front().second +
                    "' carry the same weight " + w.weight(bad.front().first).toString());
  }
  std::map<NodeId, Poly> sigma;
  for (const auto& leaf : shape.leaves()) {
    const auto path = shape.pathFromRoot(leaf);
    std::vector<Rational> coeffs;
    for (std::size_t k = 1; k < path.size(); ++k) coeffs.push_back(w.weight(path[k]));
    sigma.emplace(leaf, Poly(std::move(coeffs)));
  }
  return LabelledTree(shape, std::move(sigma));
}

UltrametricCheck checkUltrametric(const UltrametricData& u) {
  const auto n = static_cast<std::size_t>(u.n);
  if (u.n < 1 || u.m.size() != n || u.d.size() != n || u.sigma.size() != n ||
      std::any_of(u.d.begin(), u.d.end(), [&](const auto& row) { return row.size() != n; })) {
    return {0, "data sizes do not match n = " + std::to_string(u.n)};
  }
  auto at = [&](std::size_t i, std::size_t j) { return u.d[i][j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (u.m[i] < 1) return {1, "m_" + std::to_string(i + 1) + " must be positive"};
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (at(i, j) != at(j, i) || at(i, j) < 0 || at(i, j) >= std::min(u.m[i], u.m[j])) {
        return {1, "d_" + std::to_string(i + 1) + std::to_string(j + 1) +
                       " must be symmetric, non-negative and below min(m_i, m_j)"};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (std::min(at(i, j), at(i, k)) != std::min(at(j, i), at(j, k))) {
          return {2, "min(d_ij, d_ik) != min(d_ji, d_jk) for (i, j, k) = (" +
                         std::to_string(i + 1) + ", " + std::to_string(j + 1) + ", " +
                         std::to_string(k + 1) + ")"};
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Valuation v = ordAtX(u.sigma[j] - u.sigma[i]);
      if (v != at(i, j)) {
        return {3, "ord_x(sigma_" + std::to_string(j + 1) + " - sigma_" + std::to_string(i + 1) +
                       ") = " + v.toString() + " but d = " + std::to_string(at(i, j))};
      }
    }
  }
  return {};
}

UltrametricTree buildFromUltrametric(const UltrametricData& u) {
  const auto check = checkUltrametric(u);
  if (!check.message.empty()) {
    if (check.condition == 0) throw Error(ErrorCode::MalformedTree, check.message);
    throw Error(ErrorCode::ConditionViolated,
                "condition " + std::to_string(check.condition) + " violated: " + check.message,
                check.condition);
  }
  int counter = 0;
  auto fresh = [&] { return "n" + std::to_string(counter++); };
  const auto n = static_cast<std::size_t>(u.n);
  std::vector<std::vector<NodeId>> chain(n);
  const NodeId root = fresh();
  RootedTree::Builder b(root);
  for (std::size_t i = 0; i < n; ++i) {
    // Attach below the deepest node shared with an earlier chain.
    std::size_t partner = i;
    int shared = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (partner == i || u.d[i][j] > shared) {
        partner = j;
        shared = u.d[i][j];
      }
    }
    if (partner == i) {
      chain[i].push_back(root);
    } else {
      chain[i].assign(chain[partner].begin(), chain[partner].begin() + shared + 1);
    }
    for (int k = static_cast<int>(chain[i].size()); k <= u.m[i]; ++k) {
      const NodeId id = fresh();
      b.addChild(chain[i].back(), id);
      chain[i].push_back(id);
    }
  }
  std::map<NodeId, Poly> sigma;
  std::vector<NodeId> leafOf;
  for (std::size_t i = 0; i < n; ++i) {
    leafOf.push_back(chain[i].back());
    sigma.emplace(chain[i].back(), u.sigma[i]);
  }
  return {LabelledTree(b.build(), std::move(sigma)), std::move(leafOf)};
}

UltrametricData extractUltrametric(const LabelledTree& t, const std::vector<NodeId>& leafOrder) {
  const auto& shape = t.shape();
  UltrametricData u;
  u.n = static_cast<int>(leafOrder.size());
  u.d.assign(leafOrder.size(), std::vector<int>(leafOrder.size(), 0));
  for (std::size_t i = 0; i < leafOrder.size(); ++i) {
    u.m.push_back(shape.level(leafOrder[i]));
    u.sigma.push_back(t.sigma(leafOrder[i]));
    for (std::size_t j = 0; j < leafOrder.size(); ++j) {
      if (i != j) u.d[i][j] = shape.level(firstCommonAncestor(shape, leafOrder[i], leafOrder[j]));
    }
  }
  return u;
}

}  // namespace dfsurf
