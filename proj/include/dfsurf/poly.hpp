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

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfsurf/rational.hpp"

namespace dfsurf {

/// x-adic valuation: a non-negative integer, or infinity for the zero
/// polynomial. Infinity compares greater than every finite value and has no
/// integer representation.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(int v) { return Valuation(v); }

  bool isInfinite() const { return !value_.has_value(); }
  bool isFinite() const { return value_.has_value(); }
  /// Precondition: isFinite().
  int value() const { return value_.value(); }

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, int b) { return a.value_ == b; }
  friend std::strong_ordering operator<=>(const Valuation& a, int b) {
    return a <=> Valuation(b);
  }

  std::string toString() const;

 private:
  Valuation() = default;
  explicit Valuation(int v) : value_(v) {}
  std::optional<int> value_;
};

/// Dense univariate polynomial in x over Q. Coefficient i multiplies x^i;
/// trailing zeros are never stored, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients)
      : Poly(std::vector<Rational>(coefficients)) {}

  static Poly monomial(const Rational& c, int exponent);
  static Poly x() { return monomial(1, 1); }

  /// Parses the polynomial text syntax; the only variable allowed is `x`.
  static Poly parse(std::string_view text);

  bool isZero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Zero for exponents outside the stored range.
  Rational coeff(int exponent) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& at) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Multiplies by x^k, k >= 0.
  Poly shifted(int k) const;

  /// Ascending-degree text, e.g. "1 + 2*x - x^2"; "0" for zero.
  std::string toString() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Least exponent with a nonzero coefficient; infinity for zero.
Valuation ordAtX(const Poly& p);

/// Drops every term of degree >= m, i.e. the canonical representative of p
/// modulo x^m.
Poly truncMod(const Poly& p, int m);

/// q with q * x^m == p. Throws Error(NotDivisible) when ordAtX(p) < m.
Poly divExactByXPow(const Poly& p, int m);

/// True when p - q lies in x^m Q[x].
bool congruentMod(const Poly& p, const Poly& q, int m);

}  // namespace dfsurf
