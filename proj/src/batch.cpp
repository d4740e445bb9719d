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

#include "dfsurf/batch.hpp"

#include "dfsurf/completion.hpp"

namespace dfsurf {

TreeCheck checkTree(const LabelledTree& t) {
  TreeCheck c;
  c.comb = mlTrivial(t);
  c.mlAgrees = c.comb == mlViaBoundary(t);
  c.odsAgrees = odsCharacterization(t) == (c.comb && canonicalSheafTrivial(t));
  const CurveConfig closed = boundaryDualGraph(t);
  c.simulatorAgrees = sameConfiguration(closed, simulateCompletion(t).boundary());
  c.minimal = isMinimalCompletion(closed);
  c.affine = isAffine(descriptor(t));
  return c;
}

namespace {

CorpusReport summarize(const std::vector<TreeCheck>& checks) {
  CorpusReport r;
  r.trees = checks.size();
  for (const auto& c : checks) {
    r.combs += c.comb;
    r.mlDisagreements += !c.mlAgrees;
    r.odsDisagreements += !c.odsAgrees;
    r.simulatorDisagreements += !c.simulatorAgrees;
    r.nonMinimal += !c.minimal;
    r.nonAffine += !c.affine;
  }
  return r;
}

}  // namespace

CorpusReport crossCheckCorpusSerial(const std::vector<LabelledTree>& corpus) {
  std::vector<TreeCheck> checks;
  checks.reserve(corpus.size());
  for (const auto& t : corpus) checks.push_back(checkTree(t));
  return summarize(checks);
}

CorpusReport crossCheckCorpusParallel(const std::vector<LabelledTree>& corpus) {
  std::vector<TreeCheck> checks(corpus.size());
  const auto n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) checks[static_cast<std::size_t>(i)] = checkTree(corpus[static_cast<std::size_t>(i)]);
  return summarize(checks);
}

std::vector<std::pair<std::size_t, std::size_t>> verifyRelationsParallel(const EquationSystem& s) {
  const std::size_t nr = s.relations.size();
  const auto total = static_cast<long>(nr * s.charts.size());
  std::vector<Bindings> bindings;
  for (const auto& c : s.charts) bindings.push_back(c.asBindings());
  std::vector<char> bad(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    bad[idx] = !ratFuncIsZero(substitute(s.relations[idx % nr], bindings[idx / nr]));
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t c = 0; c < s.charts.size(); ++c) {
    for (std::size_t r = 0; r < nr; ++r) {
      if (bad[c * nr + r]) out.emplace_back(r, c);
    }
  }
  return out;
}

}  // namespace dfsurf
