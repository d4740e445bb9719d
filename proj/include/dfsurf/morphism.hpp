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

#include "dfsurf/labelled_tree.hpp"

namespace dfsurf {

using NodeMap = std::map<NodeId, NodeId>;

struct TreeMorphism {
  LabelledTree source;
  LabelledTree target;
  NodeMap nodeMap;

  /// Image of a source node; throws Error(UnknownNode) when unmapped.
  const NodeId& operator()(const NodeId& id) const;
};

/// The identity morphism of t.
TreeMorphism identityMorphism(const LabelledTree& t);

/// Composite second ∘ first. Requires first.target and second.source to
/// share node ids.
TreeMorphism compose(const TreeMorphism& second, const TreeMorphism& first);

/// Empty iff the map is total, order preserving, sends maximal chains onto
/// maximal chains, has single-node or maximal-subtree fibers, and satisfies
/// sigma'_i ≡ sigma_j(i) mod x^(m_j(i)) on leaves.
std::vector<std::string> validateMorphism(const TreeMorphism& phi);

/// Glues the chain morphisms k ↦ min(k, m_j(i)) defined by a leaf assignment.
/// Throws Error(OverlapConflict) when two chains disagree on a shared node,
/// Error(CongruenceFailure) when a leaf label or level is incompatible with
/// its image, and Error(InvalidMorphism) if the glued map still fails
/// validation.
TreeMorphism glueMorphisms(const LabelledTree& source, const LabelledTree& target,
                           const std::map<NodeId, NodeId>& perLeafImages);

struct BlowDown {
  NodeId node;
  TreeMorphism morphism;  // source -> blown-down tree
};

/// Collapses the children of e, all of which must be leaves, onto e. The new
/// label of e is the truncation of a former child's label below level(e).
/// Throws Error(NotCollapsible) otherwise and Error(UnknownNode) for a
/// missing e.
BlowDown blowDown(const LabelledTree& t, const NodeId& e);

struct Factorization {
  std::vector<BlowDown> blowDowns;
  TreeMorphism embedding;
};

/// Greedy factorization into blow-downs followed by an embedding: repeatedly
/// collapse, in preorder, the first node whose children are leaves that all
/// share its image. Throws Error(InvalidMorphism) for an invalid input.
Factorization factorMorphism(const TreeMorphism& phi);

/// Composite of a factorization, for checking it against the input.
TreeMorphism recompose(const Factorization& f);

}  // namespace dfsurf
