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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dfsurf/laurent.hpp"
#include "dfsurf/poly.hpp"

namespace dfsurf {

using Exponents = std::vector<int>;

/// Orders exponent vectors by total degree first, then lexicographically,
/// largest first. Variable 0 is the most significant.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over Q in an explicit, ordered list of named variables.
/// Arithmetic between polynomials over different variable lists works over
/// the union of the lists: the left operand's variables first, then the new
/// ones in the order the right operand lists them.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GrlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);
  MultiPoly(std::vector<std::string> variables, Terms terms);

  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(const std::string& name);
  /// p(name), the univariate polynomial re-expressed in variable `name`.
  static MultiPoly fromPoly(const Poly& p, const std::string& name = "x");

  /// Parses the polynomial text syntax. Variables are listed in order of first
  /// appearance. Throws Error(ParseError).
  static MultiPoly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  int totalDegree() const;
  /// Largest exponent of `name`; 0 when absent or for the zero polynomial.
  int degreeIn(const std::string& name) const;
  /// Smallest exponent of `name` over all terms; 0 when absent or zero.
  int minDegreeIn(const std::string& name) const;
  /// True when no term mentions the variable.
  bool isFreeOf(const std::string& name) const;
  /// Names of variables that occur with a nonzero exponent, in list order.
  std::vector<std::string> usedVariables() const;

  /// Same polynomial over the given variable list, which must contain every
  /// variable in use.
  MultiPoly withVariables(const std::vector<std::string>& variables) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly pow(int exponent) const;

  /// Equality of the underlying polynomial, independent of variable lists.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Dividing every term by name^k; requires minDegreeIn(name) >= k.
  /// Throws Error(NotDivisible).
  MultiPoly divideByVariablePower(const std::string& name, int k) const;

  /// Graded-lex text, e.g. "x^2*z - y^2 + 1"; "0" for zero.
  std::string toString() const;

 private:
  void addTerm(Exponents e, const Rational& c);
  std::vector<std::string> vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Quotient of two MultiPoly values. Never reduced; equality and zero tests
/// expand numerators.
class RatFunc {
 public:
  RatFunc() : num_(), den_(MultiPoly::constant(1)) {}
  RatFunc(MultiPoly numerator);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  RatFunc(MultiPoly numerator, MultiPoly denominator);

  /// x^k * p in variable `name`, possibly with negative k.
  static RatFunc fromLaurent(const LaurentPoly& p, const std::string& name = "x");

  const MultiPoly& numerator() const { return num_; }
  const MultiPoly& denominator() const { return den_; }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  /// Throws std::domain_error when rhs is zero.
  RatFunc& operator/=(const RatFunc& rhs);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc pow(int exponent) const;

  /// Cross-multiplication test.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  /// True when the denominator is a single term c * monomial that divides
  /// every numerator term. Conservative: other denominators answer false.
  bool isPolynomial() const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string toString() const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// True iff the expanded numerator is the zero polynomial.
bool ratFuncIsZero(const RatFunc& f);

using Bindings = std::map<std::string, RatFunc>;

/// Exact substitution of every variable of p. Throws Error(UnboundVariable)
/// when a variable used by p has no binding.
RatFunc substitute(const MultiPoly& p, const Bindings& bindings);

}  // namespace dfsurf
