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

#include "dfsurf/morphism.hpp"

#include <algorithm>
#include <set>

#include "dfsurf/error.hpp"

namespace dfsurf {

const NodeId& TreeMorphism::operator()(const NodeId& id) const {
  const auto it = nodeMap.find(id);
  if (it == nodeMap.end()) throw Error(ErrorCode::UnknownNode, "morphism does not map '" + id + "'");
  return it->second;
}

TreeMorphism identityMorphism(const LabelledTree& t) {
  NodeMap map;
  for (const auto& id : t.shape().nodes()) map.emplace(id, id);
  return {t, t, std::move(map)};
}

TreeMorphism compose(const TreeMorphism& second, const TreeMorphism& first) {
  NodeMap map;
  for (const auto& [from, mid] : first.nodeMap) map.emplace(from, second(mid));
  return {first.source, second.target, std::move(map)};
}

std::vector<std::string> validateMorphism(const TreeMorphism& phi) {
  std::vector<std::string> out;
  const auto& src = phi.source.shape();
  const auto& dst = phi.target.shape();
  for (const auto& id : src.nodes()) {
    const auto it = phi.nodeMap.find(id);
    if (it == phi.nodeMap.end()) {
      out.push_back("node '" + id + "' is not mapped");
    } else if (!dst.contains(it->second)) {
      out.push_back("node '" + id + "' maps to unknown node '" + it->second + "'");
    }
  }
  for (const auto& [from, to] : phi.nodeMap) {
    if (!src.contains(from)) out.push_back("map entry for unknown source node '" + from + "'");
  }
  if (!out.empty()) return out;

  for (const auto& id : src.nodes()) {
    const auto p = src.parent(id);
    if (p && !dst.isAncestorOrSelf(phi(*p), phi(id))) {
      out.push_back("order not preserved on edge '" + *p + "' -> '" + id + "'");
    }
  }

  for (const auto& leaf : src.leaves()) {
    const NodeId& image = phi(leaf);
    if (!dst.isLeaf(image)) {
      out.push_back("leaf '" + leaf + "' maps to non-leaf '" + image + "'");
      continue;
    }
    std::set<NodeId> imageOfChain;
    for (const auto& id : src.pathFromRoot(leaf)) imageOfChain.insert(phi(id));
    const auto targetChain = dst.pathFromRoot(image);
    if (imageOfChain != std::set<NodeId>(targetChain.begin(), targetChain.end())) {
      out.push_back("maximal chain to '" + leaf + "' is not mapped onto the maximal chain to '" +
                    image + "'");
    }
    const int m = dst.level(image);
    if (src.level(leaf) < m) {
      out.push_back("leaf '" + leaf + "' lies below the level of its image '" + image + "'");
    }
    if (!congruentMod(phi.source.sigma(leaf), phi.target.sigma(image), m)) {
      out.push_back("label of '" + leaf + "' is not congruent to the label of '" + image +
                    "' modulo x^" + std::to_string(m));
    }
  }

  std::map<NodeId, std::set<NodeId>> fibers;
  for (const auto& id : src.nodes()) fibers[phi(id)].insert(id);
  for (const auto& [image, fiber] : fibers) {
    if (fiber.size() == 1) continue;
    const NodeId lowest = *std::min_element(fiber.begin(), fiber.end(), [&](const auto& a, const auto& b) {
      return src.level(a) < src.level(b);
    });
    const auto sub = src.descendants(lowest);
    if (fiber != std::set<NodeId>(sub.begin(), sub.end())) {
      out.push_back("fiber over '" + image + "' is neither a point nor a maximal subtree");
    }
  }
  return out;
}

TreeMorphism glueMorphisms(const LabelledTree& source, const LabelledTree& target,
                           const std::map<NodeId, NodeId>& perLeafImages) {
  const auto& src = source.shape();
  const auto& dst = target.shape();
  NodeMap map;
  for (const auto& leaf : src.leaves()) {
    const auto it = perLeafImages.find(leaf);
    if (it == perLeafImages.end()) {
      throw Error(ErrorCode::InvalidMorphism, "no image given for leaf '" + leaf + "'");
    }
    const NodeId& image = it->second;
    if (!dst.contains(image)) throw Error(ErrorCode::UnknownNode, "unknown target node '" + image + "'");
    if (!dst.isLeaf(image)) {
      throw Error(ErrorCode::InvalidMorphism, "leaf '" + leaf + "' assigned to non-leaf '" + image + "'");
    }
    const int m = dst.level(image);
    if (src.level(leaf) < m) {
      throw Error(ErrorCode::CongruenceFailure,
                  "leaf '" + leaf + "' at level " + std::to_string(src.level(leaf)) +
                      " cannot map onto '" + image + "' at level " + std::to_string(m));
    }
    if (!congruentMod(source.sigma(leaf), target.sigma(image), m)) {
      throw Error(ErrorCode::CongruenceFailure,
                  "sigma('" + leaf + "') - sigma('" + image + "') is not divisible by x^" +
                      std::to_string(m));
    }
    const auto from = src.pathFromRoot(leaf);
    const auto to = dst.pathFromRoot(image);
    for (std::size_t k = 0; k < from.size(); ++k) {
      const NodeId& want = to[std::min<std::size_t>(k, static_cast<std::size_t>(m))];
      const auto [pos, inserted] = map.emplace(from[k], want);
      if (!inserted && pos->second != want) {
        throw Error(ErrorCode::OverlapConflict, "node '" + from[k] + "' forced to both '" +
                                                    pos->second + "' and '" + want + "'");
      }
    }
  }
  TreeMorphism phi{source, target, std::move(map)};
  const auto violations = validateMorphism(phi);
  if (!violations.empty()) throw Error(ErrorCode::InvalidMorphism, violations.front(), 0, violations);
  return phi;
}

BlowDown blowDown(const LabelledTree& t, const NodeId& e) {
  const auto& shape = t.shape();
  if (!shape.contains(e)) throw Error(ErrorCode::UnknownNode, "unknown node '" + e + "'");
  const auto& children = shape.children(e);
  if (children.empty()) throw Error(ErrorCode::NotCollapsible, "'" + e + "' is a leaf");
  for (const auto& c : children) {
    if (!shape.isLeaf(c)) {
      throw Error(ErrorCode::NotCollapsible, "child '" + c + "' of '" + e + "' is not a leaf");
    }
  }
  const std::set<NodeId> removed(children.begin(), children.end());
  RootedTree::Builder b(shape.root());
  for (const auto& id : shape.nodes()) {
    if (id == e) continue;
    for (const auto& c : shape.children(id)) b.addChild(id, c);
  }
  std::map<NodeId, Poly> sigma;
  for (const auto& [leaf, p] : t.sigmaMap()) {
    if (!removed.count(leaf)) sigma.emplace(leaf, p);
  }
  sigma.emplace(e, truncMod(t.sigma(children.front()), shape.level(e)));
  LabelledTree down(b.build(), std::move(sigma));

  NodeMap map;
  for (const auto& id : shape.nodes()) map.emplace(id, removed.count(id) ? e : id);
  return {e, TreeMorphism{t, std::move(down), std::move(map)}};
}

Factorization factorMorphism(const TreeMorphism& phi) {
  const auto violations = validateMorphism(phi);
  if (!violations.empty()) throw Error(ErrorCode::InvalidMorphism, violations.front(), 0, violations);

  Factorization out{{}, phi};
  LabelledTree current = phi.source;
  NodeMap map = phi.nodeMap;
  for (;;) {
    const auto& shape = current.shape();
    std::optional<NodeId> next;
    for (const auto& id : shape.nodes()) {
      const auto& ch = shape.children(id);
      if (ch.empty()) continue;
      const bool collapsed = std::all_of(ch.begin(), ch.end(), [&](const NodeId& c) {
        return shape.isLeaf(c) && map.at(c) == map.at(id);
      });
      if (collapsed) {
        next = id;
        break;
      }
    }
    if (!next) break;
    BlowDown step = blowDown(current, *next);
    for (const auto& c : shape.children(*next)) map.erase(c);
    current = step.morphism.target;
    out.blowDowns.push_back(std::move(step));
  }
  out.embedding = TreeMorphism{current, phi.target, std::move(map)};
  return out;
}

TreeMorphism recompose(const Factorization& f) {
  if (f.blowDowns.empty()) return f.embedding;
  TreeMorphism acc = f.blowDowns.front().morphism;
  for (std::size_t i = 1; i < f.blowDowns.size(); ++i) acc = compose(f.blowDowns[i].morphism, acc);
  return compose(f.embedding, acc);
}

}  // namespace dfsurf
