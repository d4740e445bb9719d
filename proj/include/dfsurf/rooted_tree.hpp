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
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dfsurf {

using NodeId = std::string;

/// Finite rooted tree with ordered children and string node identifiers.
///
/// Nodes are stored in preorder (depth-first, children in childOrder), so
/// `nodes()` and `leaves()` enumerate deterministically. The tree is immutable
/// once built; use RootedTree::Builder to construct one.
class RootedTree {
 public:
  class Builder {
   public:
    explicit Builder(NodeId root);
    /// Appends `child` as the last child of `parent`. Throws
    /// Error(MalformedTree) on duplicate ids or an unknown parent.
    Builder& addChild(const NodeId& parent, const NodeId& child);
    bool contains(const NodeId& id) const { return parent_.count(id) != 0; }
    RootedTree build() const;

   private:
    NodeId root_;
    std::map<NodeId, std::optional<NodeId>> parent_;
    std::map<NodeId, std::vector<NodeId>> children_;
  };

  /// Single-node tree.
  explicit RootedTree(NodeId root);

  const NodeId& root() const { return ids_.front(); }
  std::size_t size() const { return ids_.size(); }
  bool contains(const NodeId& id) const { return index_.count(id) != 0; }

  /// All nodes in preorder.
  const std::vector<NodeId>& nodes() const { return ids_; }
  /// Parent of a non-root node; nullopt for the root. Throws UnknownNode.
  std::optional<NodeId> parent(const NodeId& id) const;
  const std::vector<NodeId>& children(const NodeId& id) const;
  int level(const NodeId& id) const;
  bool isLeaf(const NodeId& id) const { return children(id).empty(); }
  /// Leaves in depth-first childOrder.
  std::vector<NodeId> leaves() const;
  /// Maximum leaf level.
  int height() const;

  /// Root-to-node path, root first, node last.
  std::vector<NodeId> pathFromRoot(const NodeId& id) const;
  /// The subtree (↑e): e and all its descendants, in preorder.
  std::vector<NodeId> descendants(const NodeId& id) const;
  /// True when `ancestor` lies on the root path of `id` (inclusive).
  bool isAncestorOrSelf(const NodeId& ancestor, const NodeId& id) const;

  friend bool operator==(const RootedTree& a, const RootedTree& b);

 private:
  RootedTree() = default;
  std::size_t indexOf(const NodeId& id) const;

  std::vector<NodeId> ids_;
  std::map<NodeId, std::size_t> index_;
  std::vector<long> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<int> level_;
  std::vector<std::size_t> subtreeEnd_;  // preorder index one past the subtree
};

/// Deepest node on both root paths, excluding e and f themselves. Throws
/// Error(UnknownNode) or Error(RootArgument) when either argument is the root
/// or e == f.
NodeId firstCommonAncestor(const RootedTree& t, const NodeId& e, const NodeId& f);

/// The maximal subtree (↑e) re-rooted at e.
RootedTree maximalSubtree(const RootedTree& t, const NodeId& e);

/// Every node has at most one child.
bool isChain(const RootedTree& t);

/// Deleting the leaves leaves a chain (empty and single-node results count).
bool isComb(const RootedTree& t);

struct EssentialRoot {
  NodeId root;
  int level = 0;
};

/// Root of the essential subtree: the unique leaf of a chain, otherwise the
/// first common ancestor of all leaves.
EssentialRoot essentialSubtree(const RootedTree& t);

/// Root has a number of children other than one.
bool isEssential(const RootedTree& t);

/// Structural fingerprint invariant under child reordering; equal
/// fingerprints mean isomorphic rooted trees.
std::string canonicalShape(const RootedTree& t, const NodeId& at);

}  // namespace dfsurf
