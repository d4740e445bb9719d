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
#include <utility>
#include <vector>

#include "dfsurf/labelled_tree.hpp"
#include "dfsurf/surface.hpp"

namespace dfsurf {

/// Per-tree agreement between independent routes to the same answer.
struct TreeCheck {
  bool comb = false;               // mlTrivial
  bool mlAgrees = false;           // mlTrivial == mlViaBoundary
  bool odsAgrees = false;          // ods == mlTrivial && canonicalSheafTrivial
  bool simulatorAgrees = false;    // closed form == simulated boundary
  bool minimal = false;            // isMinimalCompletion on the closed form
  bool affine = false;             // isAffine(descriptor)
};

TreeCheck checkTree(const LabelledTree& t);

struct CorpusReport {
  std::size_t trees = 0;
  std::size_t combs = 0;
  std::size_t mlDisagreements = 0;
  std::size_t odsDisagreements = 0;
  std::size_t simulatorDisagreements = 0;
  std::size_t nonMinimal = 0;
  std::size_t nonAffine = 0;

  friend bool operator==(const CorpusReport&, const CorpusReport&) = default;
};

/// Reference implementation, one tree after another.
CorpusReport crossCheckCorpusSerial(const std::vector<LabelledTree>& corpus);
/// OpenMP version; the report is independent of the schedule.
CorpusReport crossCheckCorpusParallel(const std::vector<LabelledTree>& corpus);

/// OpenMP counterpart of verifyRelations, same result in the same order.
std::vector<std::pair<std::size_t, std::size_t>> verifyRelationsParallel(const EquationSystem& s);

}  // namespace dfsurf
