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

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfsurf/labelled_tree.hpp"

namespace dfsurf {

struct Curve {
  std::string name;
  int selfIntersection = 0;
  bool isBoundary = true;
  int initialSelfIntersection = 0;
  int pointsBlown = 0;
};

/// Curves of an SNC configuration and their transversal intersections.
class CurveConfig {
 public:
  std::size_t size() const { return curves_.size(); }
  const std::vector<Curve>& curves() const { return curves_; }
  const Curve& curve(std::size_t i) const { return curves_.at(i); }
  Curve& curve(std::size_t i) { return curves_.at(i); }
  std::optional<std::size_t> find(const std::string& name) const;

  std::size_t addCurve(std::string name, int selfIntersection, bool isBoundary = true);
  bool adjacent(std::size_t i, std::size_t j) const { return adj_.at(i).at(j) != 0; }
  void setAdjacent(std::size_t i, std::size_t j, bool on);
  std::size_t degree(std::size_t i) const;

  /// Boundary curves only, with the adjacency between them.
  CurveConfig boundary() const;

 private:
  std::vector<Curve> curves_;
  std::vector<std::vector<int>> adj_;
};

/// Same curve names, self-intersections, boundary flags and intersections,
/// irrespective of curve order.
bool sameConfiguration(const CurveConfig& a, const CurveConfig& b);

/// Blow-up center: a free point of one curve or the meeting point of two.
struct BlowUpStep {
  std::vector<std::size_t> centerCurves;
};

/// Adds a (-1)-curve over the center and lowers each center curve by one.
/// Throws Error(InvalidCenter) for an empty, oversized, unknown, repeated or
/// non-adjacent center.
std::pair<CurveConfig, std::size_t> blowUpPoint(const CurveConfig& cfg, const BlowUpStep& step,
                                                std::string newName = {});

inline constexpr const char* kFiberZero = "F'0";
inline constexpr const char* kSection = "C'";
inline constexpr const char* kFiberInfinity = "F'inf";

/// Replays the blow-ups producing the canonical completion of S(gamma) from
/// F'0 + C' + F'inf, on the essential subtree. Curves created for tree nodes
/// carry the node id; leaf curves are not boundary.
CurveConfig simulateCompletion(const LabelledTree& t);

/// Closed form of the boundary: F'inf (0), C' (0), F'0 (-|Ch(root)|) and one
/// curve per internal non-root node e with -1 - |Ch(e)|, on the essential
/// subtree, ordered F'inf, C', F'0, then depth-first.
CurveConfig boundaryDualGraph(const LabelledTree& t);

/// No boundary (-1)-curve meets at most two other boundary curves.
bool isMinimalCompletion(const CurveConfig& cfg);

/// The intersection graph is a path (connected, acyclic, degrees <= 2).
bool isPathGraph(const CurveConfig& cfg);

bool mlViaBoundary(const LabelledTree& t);

/// Graphviz text with node labels "name (s=k)" in curve order.
std::string toDot(const CurveConfig& cfg, const std::string& graphName = "boundary");

}  // namespace dfsurf
