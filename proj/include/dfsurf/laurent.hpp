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

#include <iosfwd>
#include <string>
#include <vector>

#include "dfsurf/poly.hpp"

namespace dfsurf {

/// Element of Q[x, 1/x]: coefficients[k] multiplies x^(minExponent + k).
/// First and last stored coefficients are nonzero; zero stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int minExponent, std::vector<Rational> coefficients);
  /// x^shift * p.
  static LaurentPoly fromPoly(const Poly& p, int shift = 0);

  bool isZero() const { return coeffs_.empty(); }
  /// Least exponent with nonzero coefficient; meaningless for zero.
  int minExponent() const { return minExp_; }
  int maxExponent() const { return minExp_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// True when no negative exponent occurs.
  bool isPolynomial() const { return isZero() || minExp_ >= 0; }
  /// Precondition: isPolynomial().
  Poly toPoly() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a += -b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Multiplies by x^k for any integer k.
  LaurentPoly shifted(int k) const;

  /// Ascending exponents, e.g. "-2*x^-2 + 1".
  std::string toString() const;

 private:
  void normalize();
  int minExp_ = 0;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace dfsurf
