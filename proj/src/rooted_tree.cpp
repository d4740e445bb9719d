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

#include "dfsurf/rooted_tree.hpp"

#include <algorithm>

#include "dfsurf/error.hpp"

namespace dfsurf {

RootedTree::Builder::Builder(NodeId root) : root_(std::move(root)) {
  parent_.emplace(root_, std::nullopt);
}

RootedTree::Builder& RootedTree::Builder::addChild(const NodeId& parent, const NodeId& child) {
  if (!contains(parent)) throw Error(ErrorCode::MalformedTree, "unknown parent node '" + parent + "'");
  if (contains(child)) throw Error(ErrorCode::MalformedTree, "duplicate node '" + child + "'");
  parent_.emplace(child, parent);
  children_[parent].push_back(child);
  return *this;
}

RootedTree RootedTree::Builder::build() const {
  RootedTree t;
  // Iterative preorder; children pushed in reverse so the first child pops first.
  std::vector<std::pair<NodeId, long>> stack{{root_, -1}};
  while (!stack.empty()) {
    auto [id, parentIndex] = stack.back();
    stack.pop_back();
    const std::size_t i = t.ids_.size();
    t.ids_.push_back(id);
    t.index_.emplace(id, i);
    t.parent_.push_back(parentIndex);
    t.level_.push_back(parentIndex < 0 ? 0 : t.level_[static_cast<std::size_t>(parentIndex)] + 1);
    const auto it = children_.find(id);
    t.children_.push_back(it == children_.end() ? std::vector<NodeId>{} : it->second);
    for (auto c = t.children_.back().rbegin(); c != t.children_.back().rend(); ++c) {
      stack.emplace_back(*c, static_cast<long>(i));
    }
  }
  t.subtreeEnd_.assign(t.ids_.size(), 0);
  for (std::size_t i = t.ids_.size(); i-- > 0;) {
    std::size_t end = i + 1;
    for (const auto& c : t.children_[i]) end = std::max(end, t.subtreeEnd_[t.index_.at(c)]);
    t.subtreeEnd_[i] = end;
  }
  return t;
}

RootedTree::RootedTree(NodeId root) { *this = Builder(std::move(root)).build(); }

std::size_t RootedTree::indexOf(const NodeId& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownNode, "unknown node '" + id + "'");
  return it->second;
}

std::optional<NodeId> RootedTree::parent(const NodeId& id) const {
  const long p = parent_[indexOf(id)];
  if (p < 0) return std::nullopt;
  return ids_[static_cast<std::size_t>(p)];
}

const std::vector<NodeId>& RootedTree::children(const NodeId& id) const {
  return children_[indexOf(id)];
}

int RootedTree::level(const NodeId& id) const { return level_[indexOf(id)]; }

std::vector<NodeId> RootedTree::leaves() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (children_[i].empty()) out.push_back(ids_[i]);
  }
  return out;
}

int RootedTree::height() const { return *std::max_element(level_.begin(), level_.end()); }

std::vector<NodeId> RootedTree::pathFromRoot(const NodeId& id) const {
  std::vector<NodeId> path;
  for (long i = static_cast<long>(indexOf(id)); i >= 0; i = parent_[static_cast<std::size_t>(i)]) {
    path.push_back(ids_[static_cast<std::size_t>(i)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<NodeId> RootedTree::descendants(const NodeId& id) const {
  const std::size_t i = indexOf(id);
  return {ids_.begin() + static_cast<std::ptrdiff_t>(i),
          ids_.begin() + static_cast<std::ptrdiff_t>(subtreeEnd_[i])};
}

bool RootedTree::isAncestorOrSelf(const NodeId& ancestor, const NodeId& id) const {
  const std::size_t a = indexOf(ancestor);
  const std::size_t i = indexOf(id);
  return a <= i && i < subtreeEnd_[a];
}

bool operator==(const RootedTree& a, const RootedTree& b) {
  return a.ids_ == b.ids_ && a.parent_ == b.parent_;
}

NodeId firstCommonAncestor(const RootedTree& t, const NodeId& e, const NodeId& f) {
  if (!t.contains(e)) throw Error(ErrorCode::UnknownNode, "unknown node '" + e + "'");
  if (!t.contains(f)) throw Error(ErrorCode::UnknownNode, "unknown node '" + f + "'");
  if (e == t.root() || f == t.root()) {
    throw Error(ErrorCode::RootArgument, "first common ancestor is undefined for the root");
  }
  if (e == f) throw Error(ErrorCode::RootArgument, "first common ancestor needs two distinct nodes");
  const auto pe = t.pathFromRoot(e);
  const auto pf = t.pathFromRoot(f);
  // Common prefix of both paths with their endpoints dropped; it always
  // contains the root.
  const std::size_t limit = std::min(pe.size(), pf.size()) - 1;
  std::size_t k = 0;
  while (k < limit && pe[k] == pf[k]) ++k;
  return pe[k - 1];
}

RootedTree maximalSubtree(const RootedTree& t, const NodeId& e) {
  RootedTree::Builder b(e);
  for (const auto& id : t.descendants(e)) {
    for (const auto& c : t.children(id)) b.addChild(id, c);
  }
  return b.build();
}

bool isChain(const RootedTree& t) {
  return std::all_of(t.nodes().begin(), t.nodes().end(),
                     [&](const NodeId& id) { return t.children(id).size() <= 1; });
}

bool isComb(const RootedTree& t) {
  for (const auto& id : t.nodes()) {
    const auto& ch = t.children(id);
    const auto internal = std::count_if(ch.begin(), ch.end(),
                                        [&](const NodeId& c) { return !t.isLeaf(c); });
    if (internal > 1) return false;
  }
  return true;
}

EssentialRoot essentialSubtree(const RootedTree& t) {
  NodeId at = t.root();
  while (t.children(at).size() == 1) at = t.children(at).front();
  return {at, t.level(at)};
}

bool isEssential(const RootedTree& t) { return t.children(t.root()).size() != 1; }

std::string canonicalShape(const RootedTree& t, const NodeId& at) {
  std::vector<std::string> parts;
  for (const auto& c : t.children(at)) parts.push_back(canonicalShape(t, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

}  // namespace dfsurf
