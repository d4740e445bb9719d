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
#include <string_view>
#include <vector>

#include "dfsurf/labelled_tree.hpp"
#include "dfsurf/surface.hpp"

namespace dfsurf {

enum class TreeFormat { Weighted, Cochain };

/// A tree file after syntax checking, before any compatibility check.
struct TreeFile {
  TreeFormat format = TreeFormat::Cochain;
  RootedTree shape{"root"};
  std::map<NodeId, Rational> weights;  // Weighted only
  std::map<NodeId, Poly> sigma;        // Cochain only
};

/// Line-based grammar with '#' comments; ';' also ends a line. Without a
/// `format` line the presence of `leaf` lines selects the cochain format.
/// Throws Error(SyntaxError) with detail() = line number.
TreeFile parseTreeSyntax(std::string_view text);

/// Compatibility problems of a parsed file: sibling weight clashes for the
/// weighted format, cochain violations otherwise. Empty when valid.
std::vector<std::string> treeFileViolations(const TreeFile& f);

/// Throws Error(ValidationError) listing treeFileViolations().
LabelledTree toLabelledTree(const TreeFile& f);

/// parseTreeSyntax followed by toLabelledTree.
LabelledTree parseTreeFile(std::string_view text);

/// Canonical cochain text: edges in preorder, then leaf labels depth-first.
std::string toCochainText(const LabelledTree& t);

/// `poly <root> ... [distinguished <root>]`, one line per P_i; the first root
/// is distinguished by default.
CombSpec parseCombSpec(std::string_view text);

/// `map <source leaf> <target leaf>` lines.
std::map<NodeId, NodeId> parseLeafMap(std::string_view text);

/// `n <count>`, `m <m_1> ... <m_n>`, `d <i> <j> <value>` (1-based; sets d_ji
/// too unless it is given separately) and `sigma <i> <polynomial>`. Missing
/// d entries are 0 and missing labels are 0.
UltrametricData parseMetricFile(std::string_view text);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string readFile(const std::string& path);

}  // namespace dfsurf
