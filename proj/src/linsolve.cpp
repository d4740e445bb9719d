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

#include "dfsurf/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace dfsurf {

void LinearSystem::addRow(std::vector<Rational> row) {
  if (row.size() != static_cast<std::size_t>(unknowns_) + 1) {
    throw std::invalid_argument("row length does not match the number of unknowns");
  }
  rows_.push_back(std::move(row));
}

std::optional<Rational> EchelonForm::forcedValue(int column) const {
  const int r = pivotOf[static_cast<std::size_t>(column)];
  if (r < 0) return std::nullopt;
  const auto& row = rows[static_cast<std::size_t>(r)];
  for (int c = 0; c < unknowns; ++c) {
    if (c != column && isFree(c) && !row[static_cast<std::size_t>(c)].isZero()) return std::nullopt;
  }
  return row.back();
}

EchelonForm rowReduce(const LinearSystem& system) {
  EchelonForm f;
  f.unknowns = system.unknowns();
  f.rows = system.rows();
  f.pivotOf.assign(static_cast<std::size_t>(f.unknowns), -1);
  std::size_t rank = 0;
  for (int c = 0; c < f.unknowns && rank < f.rows.size(); ++c) {
    const auto col = static_cast<std::size_t>(c);
    std::size_t p = rank;
    while (p < f.rows.size() && f.rows[p][col].isZero()) ++p;
    if (p == f.rows.size()) continue;
    std::swap(f.rows[p], f.rows[rank]);
    const Rational inv = Rational(1) / f.rows[rank][col];
    for (auto& v : f.rows[rank]) v *= inv;
    for (std::size_t r = 0; r < f.rows.size(); ++r) {
      if (r == rank || f.rows[r][col].isZero()) continue;
      const Rational factor = f.rows[r][col];
      for (std::size_t k = col; k < f.rows[r].size(); ++k) f.rows[r][k] -= factor * f.rows[rank][k];
    }
    f.pivotOf[col] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < f.rows.size(); ++r) {
    if (!f.rows[r].back().isZero()) f.consistent = false;
  }
  f.rows.resize(rank);
  return f;
}

std::optional<std::vector<Rational>> particularSolution(
    const EchelonForm& form, const std::vector<std::optional<Rational>>& freeValues) {
  if (!form.consistent) return std::nullopt;
  const auto n = static_cast<std::size_t>(form.unknowns);
  std::vector<Rational> u(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (form.isFree(static_cast<int>(c)) && c < freeValues.size() && freeValues[c]) u[c] = *freeValues[c];
  }
  for (std::size_t c = 0; c < n; ++c) {
    const int r = form.pivotOf[c];
    if (r < 0) continue;
    const auto& row = form.rows[static_cast<std::size_t>(r)];
    Rational v = row.back();
    for (std::size_t k = 0; k < n; ++k) {
      if (k != c && form.isFree(static_cast<int>(k))) v -= row[k] * u[k];
    }
    u[c] = v;
  }
  return u;
}

}  // namespace dfsurf
