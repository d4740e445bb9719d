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
#include <optional>
#include <string>

#include "dfsurf/labelled_tree.hpp"

namespace dfsurf {

/// sigma_i = c + x^m * Es(sigma)_i on the essential subtree.
struct Essentialization {
  LabelledTree tree;  // node ids kept from the input
  Poly c;
  int m = 0;
};

/// Restricts to the essential subtree and strips the common part of the
/// labels. For a chain the result is the single leaf with label 0, c the
/// full leaf label and m the chain length.
Essentialization essentialize(const LabelledTree& t);

/// a * Es(sigma')_i + b == Es(sigma)_j(i) mod x^(m_j(i)) for each leaf i of
/// the second tree, with treeIso[i] = j(i) and levels measured inside the
/// essential subtrees.
struct EquivalenceWitness {
  std::map<NodeId, NodeId> treeIso;  // leaf of Es(gamma') -> leaf of Es(gamma)
  Rational a;
  Poly b;
};

/// Searches the shape isomorphisms Es(gammaPrime) -> Es(gamma) with pruning
/// by an exact solve for (a, b_0, ..., b_(H-1)). With strictConstantB only
/// constant b is allowed.
std::optional<EquivalenceWitness> decideEquivalence(const LabelledTree& gamma,
                                                    const LabelledTree& gammaPrime,
                                                    bool strictConstantB = false);

/// Empty when w is a witness for gamma ~ gammaPrime, else the first failure.
std::string checkWitness(const LabelledTree& gamma, const LabelledTree& gammaPrime,
                         const EquivalenceWitness& w, bool strictConstantB = false);

}  // namespace dfsurf
