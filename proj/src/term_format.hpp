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

// Shared printing of signed term sums in the polynomial text syntax.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dfsurf/rational.hpp"

namespace dfsurf::detail {

struct Term {
  Rational coeff;
  std::string monomial;  // empty for the constant monomial
};

/// "x^2*z", "y", "" (constant). Zero exponents are skipped; negative
/// exponents print as "x^-2".
inline std::string monomialText(const std::vector<std::pair<std::string, int>>& powers) {
  std::string out;
  for (const auto& [name, e] : powers) {
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

inline std::string joinTerms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? -t.coeff : t.coeff;
    if (t.monomial.empty()) {
      out += mag.toString();
    } else if (mag.isOne()) {
      out += t.monomial;
    } else {
      out += mag.toString() + '*' + t.monomial;
    }
  }
  return out;
}

}  // namespace dfsurf::detail
