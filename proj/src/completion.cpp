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

#include "dfsurf/completion.hpp"

#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dfsurf/equivalence.hpp"
#include "dfsurf/error.hpp"

namespace dfsurf {

std::optional<std::size_t> CurveConfig::find(const std::string& name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t CurveConfig::addCurve(std::string name, int selfIntersection, bool isBoundary) {
  curves_.push_back({std::move(name), selfIntersection, isBoundary, selfIntersection, 0});
  for (auto& row : adj_) row.push_back(0);
  adj_.emplace_back(curves_.size(), 0);
  return curves_.size() - 1;
}

void CurveConfig::setAdjacent(std::size_t i, std::size_t j, bool on) {
  if (i == j) throw std::invalid_argument("a curve cannot meet itself");
  adj_.at(i).at(j) = adj_.at(j).at(i) = on ? 1 : 0;
}

std::size_t CurveConfig::degree(std::size_t i) const {
  std::size_t d = 0;
  for (const int v : adj_.at(i)) d += static_cast<std::size_t>(v);
  return d;
}

CurveConfig CurveConfig::boundary() const {
  CurveConfig out;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (!curves_[i].isBoundary) continue;
    out.addCurve(curves_[i].name, curves_[i].selfIntersection, true);
    out.curves_.back() = curves_[i];
    keep.push_back(i);
  }
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (adjacent(keep[a], keep[b])) out.setAdjacent(a, b, true);
    }
  }
  return out;
}

bool sameConfiguration(const CurveConfig& a, const CurveConfig& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> toB;
  for (const auto& c : a.curves()) {
    const auto j = b.find(c.name);
    if (!j) return false;
    const auto& d = b.curve(*j);
    if (d.selfIntersection != c.selfIntersection || d.isBoundary != c.isBoundary) return false;
    toB.push_back(*j);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (i != k && a.adjacent(i, k) != b.adjacent(toB[i], toB[k])) return false;
    }
  }
  return true;
}

std::pair<CurveConfig, std::size_t> blowUpPoint(const CurveConfig& cfg, const BlowUpStep& step,
                                                std::string newName) {
  const auto& c = step.centerCurves;
  if (c.empty() || c.size() > 2) throw Error(ErrorCode::InvalidCenter, "a center names one or two curves");
  for (const auto i : c) {
    if (i >= cfg.size()) throw Error(ErrorCode::InvalidCenter, "unknown curve " + std::to_string(i));
  }
  if (c.size() == 2) {
    if (c[0] == c[1]) throw Error(ErrorCode::InvalidCenter, "repeated center curve");
    if (!cfg.adjacent(c[0], c[1])) {
      throw Error(ErrorCode::InvalidCenter, "curves '" + cfg.curve(c[0]).name + "' and '" +
                                                cfg.curve(c[1]).name + "' do not meet");
    }
  }
  CurveConfig out = cfg;
  if (newName.empty()) newName = "E" + std::to_string(cfg.size());
  const std::size_t e = out.addCurve(std::move(newName), -1, true);
  for (const auto i : c) {
    out.curve(i).selfIntersection -= 1;
    out.curve(i).pointsBlown += 1;
    out.setAdjacent(i, e, true);
  }
  if (c.size() == 2) out.setAdjacent(c[0], c[1], false);
  return {std::move(out), e};
}

CurveConfig simulateCompletion(const LabelledTree& t) {
  const LabelledTree es = essentialize(t).tree;
  const auto& shape = es.shape();
  CurveConfig cfg;
  const std::size_t f0 = cfg.addCurve(kFiberZero, 0);
  const std::size_t section = cfg.addCurve(kSection, 0);
  const std::size_t finf = cfg.addCurve(kFiberInfinity, 0);
  cfg.setAdjacent(section, f0, true);
  cfg.setAdjacent(section, finf, true);

  std::map<NodeId, std::size_t> curveOf{{shape.root(), f0}};
  std::deque<NodeId> queue{shape.root()};
  while (!queue.empty()) {
    const NodeId e = queue.front();
    queue.pop_front();
    for (const auto& child : shape.children(e)) {
      const std::size_t center = curveOf.at(e);
      if (center == section) throw std::logic_error("the section must never be blown up");
      auto [next, created] = blowUpPoint(cfg, {{center}}, child);
      cfg = std::move(next);
      curveOf.emplace(child, created);
      queue.push_back(child);
    }
  }
  for (const auto& leaf : shape.leaves()) cfg.curve(curveOf.at(leaf)).isBoundary = false;

  // The dual graph must be the tree with F'0 at the root, hung off C'.
  for (const auto& id : shape.nodes()) {
    for (const auto& other : shape.nodes()) {
      if (id == other) continue;
      const bool edge = shape.parent(other) == std::optional<NodeId>(id) ||
                        shape.parent(id) == std::optional<NodeId>(other);
      if (cfg.adjacent(curveOf.at(id), curveOf.at(other)) != edge) {
        throw std::logic_error("completion dual graph does not follow the tree");
      }
    }
  }
  if (cfg.degree(section) != 2 || cfg.degree(finf) != 1) {
    throw std::logic_error("completion dual graph does not follow the tree");
  }
  return cfg;
}

CurveConfig boundaryDualGraph(const LabelledTree& t) {
  const LabelledTree es = essentialize(t).tree;
  const auto& shape = es.shape();
  CurveConfig cfg;
  const std::size_t finf = cfg.addCurve(kFiberInfinity, 0);
  const std::size_t section = cfg.addCurve(kSection, 0);
  cfg.setAdjacent(finf, section, true);
  if (shape.isLeaf(shape.root())) return cfg;

  std::map<NodeId, std::size_t> curveOf;
  curveOf[shape.root()] = cfg.addCurve(kFiberZero, -static_cast<int>(shape.children(shape.root()).size()));
  cfg.setAdjacent(section, curveOf[shape.root()], true);
  for (const auto& id : shape.nodes()) {
    if (id == shape.root() || shape.isLeaf(id)) continue;
    const std::size_t k = cfg.addCurve(id, -1 - static_cast<int>(shape.children(id).size()));
    curveOf[id] = k;
    cfg.setAdjacent(k, curveOf.at(*shape.parent(id)), true);
  }
  return cfg;
}

bool isMinimalCompletion(const CurveConfig& cfg) {
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const auto& c = cfg.curve(i);
    if (!c.isBoundary || c.selfIntersection != -1) continue;
    std::size_t meets = 0;
    for (std::size_t j = 0; j < cfg.size(); ++j) {
      if (j != i && cfg.curve(j).isBoundary && cfg.adjacent(i, j)) ++meets;
    }
    if (meets <= 2) return false;
  }
  return true;
}

bool isPathGraph(const CurveConfig& cfg) {
  const std::size_t n = cfg.size();
  if (n == 0) return true;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t d = cfg.degree(i);
    if (d > 2) return false;
    edges += d;
  }
  if (edges / 2 != n - 1) return false;
  // n - 1 edges and connected means a tree; degrees <= 2 make it a path.
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (!seen[j] && cfg.adjacent(i, j)) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == n;
}

bool mlViaBoundary(const LabelledTree& t) { return isPathGraph(boundaryDualGraph(t)); }

std::string toDot(const CurveConfig& cfg, const std::string& graphName) {
  std::ostringstream out;
  out << "graph " << graphName << " {\n";
  for (const auto& c : cfg.curves()) {
    out << "  \"" << c.name << "\" [label=\"" << c.name << " (s=" << c.selfIntersection << ")\"];\n";
  }
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.size(); ++j) {
      if (cfg.adjacent(i, j)) {
        out << "  \"" << cfg.curve(i).name << "\" -- \"" << cfg.curve(j).name << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dfsurf
