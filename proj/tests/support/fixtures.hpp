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

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "dfsurf/labelled_tree.hpp"
#include "dfsurf/morphism.hpp"

namespace dfsurf::testing {

/// Root with `sigmas.size()` chains of length m; leaf i is "l<i+1>" and the
/// first edge of chain i carries sigmas[i], later edges 0.
LabelledTree broom(int m, const std::vector<Rational>& sigmas);

/// Root r; r -> u -> a (label 1 + t x); r -> b (label 0).
LabelledTree gammaT(const Rational& t);

/// Root with leaves 1, -1 at level 1 and a node e carrying x, -x at level 2.
LabelledTree bmlTree();
/// The blow-down of bmlTree() at e: leaves 1, 0, -1 at level 1.
LabelledTree bmlBase();

/// Non-essential comb: e0 - f - e, e -> g -> three level-4 leaves, e -> a
/// level-3 leaf.
LabelledTree sampleComb();

/// Root with two level-2 branches (labels 1 and -1) and a level-1 leaf (0).
LabelledTree forkTree();

struct RandomTreeOptions {
  int maxLeaves = 12;
  int maxHeight = 6;
  int maxNodes = 20;
  int weightRange = 3;       // integer weights in [-range, range]
  bool rationalWeights = true;
  bool perturbLabels = true;  // add x^(m_i) r_i to labels
};

/// Deterministic random source for generated fixtures.
class TreeGen {
 public:
  explicit TreeGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  Rational rational(int range);
  Poly poly(int maxDegree, int range);

  /// A valid labelled tree with node ids "<prefix>0", "<prefix>1", ...
  LabelledTree tree(const RandomTreeOptions& opt = {}, const std::string& prefix = "v");

  /// Corpus of `count` trees mixing random trees with every named fixture.
  std::vector<LabelledTree> corpus(std::size_t count, const RandomTreeOptions& opt = {});

 private:
  std::mt19937_64 rng_;
};

/// Same tree with ids prefixed, children in reverse order, and labels
/// sigma -> a sigma + b + x^(m_i) r_i with random r_i.
LabelledTree transformTree(const LabelledTree& t, const Rational& a, const Poly& b, TreeGen& gen,
                           const std::string& prefix = "p");

/// A morphism built as up to `maxBlowUps` blow-ups of a random tree followed
/// by an embedding into a tree with extra branches, with the expected node map.
TreeMorphism randomMorphism(TreeGen& gen, int maxBlowUps = 3);

}  // namespace dfsurf::testing
