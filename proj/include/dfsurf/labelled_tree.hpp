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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "dfsurf/poly.hpp"
#include "dfsurf/rooted_tree.hpp"

namespace dfsurf {

/// A rooted tree together with one polynomial label per leaf.
///
/// Construction does not check compatibility; call validate() or
/// LabelledTree::checked() for that. Labels are stored as given, and every
/// congruence test works modulo the relevant power of x.
class LabelledTree {
 public:
  LabelledTree(RootedTree shape, std::map<NodeId, Poly> sigma);

  /// Throws Error(ValidationError) listing every violation.
  static LabelledTree checked(RootedTree shape, std::map<NodeId, Poly> sigma);

  const RootedTree& shape() const { return shape_; }
  const std::map<NodeId, Poly>& sigmaMap() const { return sigma_; }
  /// Label of a leaf; throws Error(UnknownNode) when absent.
  const Poly& sigma(const NodeId& leaf) const;

  /// Shape leaves in depth-first order.
  std::vector<NodeId> leaves() const { return shape_.leaves(); }
  std::size_t leafCount() const { return leaves().size(); }
  int height() const { return shape_.height(); }

  friend bool operator==(const LabelledTree& a, const LabelledTree& b) {
    return a.shape_ == b.shape_ && a.sigma_ == b.sigma_;
  }

 private:
  RootedTree shape_;
  std::map<NodeId, Poly> sigma_;
};

struct Violation {
  enum class Kind { MissingLabel, StrayLabel, WrongValuation };
  Kind kind;
  NodeId leafI;
  NodeId leafJ;        // empty unless kind == WrongValuation
  int expectedLevel;   // first common ancestor level d_ij
  Valuation observed;  // ordAtX(sigma_j - sigma_i)
  std::string message;
};

/// Empty iff every leaf is labelled and the labels are compatible with the
/// shape: ordAtX(sigma_j - sigma_i) equals the first-common-ancestor level
/// d_ij whenever d_ij < min(m_i, m_j).
std::vector<Violation> validate(const LabelledTree& t);

/// Replaces every label by its truncation below the leaf's level, the
/// canonical representative with deg(sigma_i) < m_i.
LabelledTree reduce(const LabelledTree& t);

/// Edge weights keyed by child node: the weight of the edge parent(c) -> c.
class WeightedTree {
 public:
  WeightedTree(RootedTree shape, std::map<NodeId, Rational> weight);

  const RootedTree& shape() const { return shape_; }
  const std::map<NodeId, Rational>& weights() const { return weight_; }
  /// Weight of the edge ending at `child`.
  const Rational& weight(const NodeId& child) const;

  /// Pairs of siblings sharing a weight; empty iff the tree is fine.
  std::vector<std::pair<NodeId, NodeId>> fineViolations() const;

 private:
  RootedTree shape_;
  std::map<NodeId, Rational> weight_;
};

/// Edge weights from coefficients: the edge from level j to j+1 on leaf i's
/// path carries coeff_j(sigma_i). Throws Error(CochainNotReduced) unless
/// deg(sigma_i) < m_i for each leaf.
WeightedTree toWeighted(const LabelledTree& t);

/// sigma_i = sum of w_j x^j along the path to leaf i. Throws
/// Error(FineConditionViolated) when two siblings carry equal weights and
/// Error(MalformedTree) when an edge has no weight.
LabelledTree fromWeighted(const WeightedTree& w);

/// Leaf levels, pairwise ancestor levels and labels of n leaves.
struct UltrametricData {
  int n = 0;
  std::vector<int> m;
  std::vector<std::vector<int>> d;  // n x n, diagonal ignored
  std::vector<Poly> sigma;
};

/// Result of gluing chains: the tree plus the node id of input leaf i.
struct UltrametricTree {
  LabelledTree tree;
  std::vector<NodeId> leafOf;
};

/// Failing condition (1, 2 or 3) with a message, or 0 when the data is valid.
/// Condition 0 with a message signals malformed sizes.
struct UltrametricCheck {
  int condition = 0;
  std::string message;
};
UltrametricCheck checkUltrametric(const UltrametricData& u);

/// Glues the chains of lengths m_i along their first d_ij + 1 nodes. Nodes
/// are named "n0", "n1", ... in creation order. Throws
/// Error(ConditionViolated) with detail() = failing condition number.
UltrametricTree buildFromUltrametric(const UltrametricData& u);

/// Reads (n, m, d, sigma) back off a labelled tree, leaves in the given order.
UltrametricData extractUltrametric(const LabelledTree& t, const std::vector<NodeId>& leafOrder);

}  // namespace dfsurf
