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

#include <optional>
#include <vector>

#include "dfsurf/rational.hpp"

namespace dfsurf {

/// Dense system A u = r over Q. Each row holds the coefficients of the
/// unknowns followed by the right-hand side.
class LinearSystem {
 public:
  explicit LinearSystem(int unknowns) : unknowns_(unknowns) {}

  int unknowns() const { return unknowns_; }
  std::size_t rowCount() const { return rows_.size(); }

  /// Row of length unknowns() + 1.
  void addRow(std::vector<Rational> row);
  void popRow() { rows_.pop_back(); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  int unknowns_;
  std::vector<std::vector<Rational>> rows_;
};

/// Reduced row echelon form. pivotOf[c] is the row owning column c as a pivot,
/// or -1 for a free column.
struct EchelonForm {
  int unknowns = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<int> pivotOf;
  bool consistent = true;

  bool isFree(int column) const { return pivotOf[static_cast<std::size_t>(column)] < 0; }
  /// The value of `column` when it is determined by the system, i.e. it is a
  /// pivot whose row mentions no free column.
  std::optional<Rational> forcedValue(int column) const;
};

EchelonForm rowReduce(const LinearSystem& system);

/// One solution with every free unknown set to the matching entry of
/// `freeValues` (missing entries mean 0); nullopt when inconsistent.
std::optional<std::vector<Rational>> particularSolution(
    const EchelonForm& form, const std::vector<std::optional<Rational>>& freeValues = {});

}  // namespace dfsurf
