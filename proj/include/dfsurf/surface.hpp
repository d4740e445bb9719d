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
#include <utility>
#include <vector>

#include "dfsurf/labelled_tree.hpp"
#include "dfsurf/morphism.hpp"
#include "dfsurf/multipoly.hpp"

namespace dfsurf {

/// Gluing data of S(gamma), indexed by the tree's depth-first leaf order.
struct SurfaceDescriptor {
  int n = 0;
  int h = 0;
  std::vector<NodeId> leaves;
  std::vector<int> m;
  std::vector<int> mu;  // h - m_i
  std::vector<Poly> sigma;
  /// transition[i][j] = x^(-m_i) (sigma_j - sigma_i); the diagonal is zero.
  std::vector<std::vector<LaurentPoly>> transition;
};

SurfaceDescriptor descriptor(const LabelledTree& t);

/// n == 1, or every off-diagonal transition function has a pole at x = 0.
bool isAffine(const SurfaceDescriptor& d);

/// The canonical morphism is y = sigma_i + x^(m_i) T in chart i.
struct CanonicalMorphismData {
  int h = 0;
  std::vector<int> mu;
  std::vector<Poly> sigma;
  std::vector<int> m;
};

CanonicalMorphismData canonicalMorphismData(const LabelledTree& t);

/// sigma_i + x^(m_i) * T as a polynomial in x and `chartVariable`.
MultiPoly chartExpression(const CanonicalMorphismData& data, std::size_t i,
                          const std::string& chartVariable = "T");

/// Checks, for every ordered pair of charts, that substituting
/// T_i = g_ij + x^(m_j - m_i) T_j into chart i's expression gives chart j's.
/// Returns the failing pairs (empty when consistent).
std::vector<std::pair<std::size_t, std::size_t>> chartConsistencyFailures(const LabelledTree& t);

/// Data of the surface morphism attached to a tree morphism, indexed by the
/// source tree's leaf order.
struct MorphismGluingData {
  std::vector<NodeId> sourceLeaves;
  std::map<NodeId, NodeId> leafMap;
  std::vector<int> nu;                 // mu of the image leaf
  std::vector<Poly> sigmaDoublePrime;  // (sigma'_i - sigma_j(i)) / x^(m_j(i))
};

/// Throws Error(InvalidMorphism) when phi fails validation.
MorphismGluingData morphismGluingData(const TreeMorphism& phi);

/// All leaves of the essential subtree lie at one level.
bool canonicalSheafTrivial(const LabelledTree& t);
/// The essential subtree is a comb.
bool mlTrivial(const LabelledTree& t);
/// The essential subtree is a comb of height at most 1.
bool odsCharacterization(const LabelledTree& t);

struct Chart {
  std::string name;
  std::vector<std::pair<std::string, RatFunc>> bindings;

  Bindings asBindings() const { return {bindings.begin(), bindings.end()}; }
};

struct EquationSystem {
  std::vector<std::string> variables;
  std::vector<MultiPoly> relations;
  std::vector<Chart> charts;
  /// Expression of the canonical morphism to the line, when known.
  std::optional<MultiPoly> canonicalMorphism;
};

/// Relations that do not vanish under a chart, as (relation, chart) pairs.
std::vector<std::pair<std::size_t, std::size_t>> verifyRelations(const EquationSystem& s);

/// x^m z - prod (y - Es(sigma)_i) for a tree whose essential subtree is a
/// root with n equal-length chains, with one chart per leaf. A chain counts
/// as a one-leaf broom; a single node gives z - y. Throws Error(NotABroom)
/// otherwise.
EquationSystem emitBroomEquations(const LabelledTree& t);

struct CombFactor {
  std::vector<Rational> roots;
  std::size_t distinguished = 0;  // index into roots
};

struct CombSpec {
  std::vector<CombFactor> polys;
};

struct CombResult {
  EquationSystem system;
  LabelledTree tree;
};

/// Equations in X0, ..., X(n+1) of the surface attached to the comb given by
/// the root lists, with the chart X0 = x, X1 = y, and the associated labelled
/// comb. Throws Error(InvalidSpec) on empty or repeated roots.
CombResult emitCombEquations(const CombSpec& spec);

struct FiberComponent {
  NodeId leaf;
  Rational value;  // constant term of sigma
};

std::vector<FiberComponent> fiberComponents(const LabelledTree& t);

/// {"variables": [...], "relations": [...], "charts": {...}} with an optional
/// "canonical_morphism" entry; keys in insertion order.
std::string toJson(const EquationSystem& s, int indent = 2);
std::string toText(const EquationSystem& s);

}  // namespace dfsurf
