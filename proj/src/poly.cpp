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

#include "dfsurf/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dfsurf/error.hpp"
#include "dfsurf/multipoly.hpp"
#include "term_format.hpp"

namespace dfsurf {

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.isInfinite() || b.isInfinite()) return Valuation::infinity();
  return Valuation::finite(a.value() + b.value());
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.isInfinite()) return b.isInfinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.isInfinite()) return std::strong_ordering::less;
  return a.value() <=> b.value();
}

std::string Valuation::toString() const {
  return isInfinite() ? std::string("inf") : std::to_string(value());
}

Poly::Poly(const Rational& constant) {
  if (!constant.isZero()) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Poly Poly::monomial(const Rational& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in Poly::monomial");
  if (c.isZero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::parse(std::string_view text) {
  const MultiPoly mp = MultiPoly::parse(text);
  for (const auto& v : mp.usedVariables()) {
    if (v != "x") {
      throw Error(ErrorCode::ParseError,
                  "univariate polynomial expected in x, found variable '" + v + "'");
    }
  }
  const std::string var = "x";
  Poly out;
  const auto& vars = mp.variables();
  const auto it = std::find(vars.begin(), vars.end(), var);
  for (const auto& [exps, c] : mp.terms()) {
    const int e = it == vars.end() ? 0 : exps[static_cast<std::size_t>(it - vars.begin())];
    out += monomial(c, e);
  }
  return out;
}

Rational Poly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return Rational();
  return coeffs_[static_cast<std::size_t>(exponent)];
}

Rational Poly::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) { return *this += -rhs; }

Poly& Poly::operator*=(const Poly& rhs) {
  if (isZero() || rhs.isZero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].isZero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shifted expects k >= 0");
  if (isZero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

std::string Poly::toString() const {
  std::vector<detail::Term> terms;
  for (int e = 0; e <= degree(); ++e) {
    const Rational& c = coeffs_[static_cast<std::size_t>(e)];
    if (c.isZero()) continue;
    terms.push_back({c, detail::monomialText({{"x", e}})});
  }
  return detail::joinTerms(terms);
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.toString(); }

Valuation ordAtX(const Poly& p) {
  for (int e = 0; e <= p.degree(); ++e) {
    if (!p.coefficients()[static_cast<std::size_t>(e)].isZero()) return Valuation::finite(e);
  }
  return Valuation::infinity();
}

Poly truncMod(const Poly& p, int m) {
  if (m < 0) throw std::invalid_argument("truncMod expects m >= 0");
  const auto& c = p.coefficients();
  const auto keep = std::min<std::size_t>(c.size(), static_cast<std::size_t>(m));
  return Poly(std::vector<Rational>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(keep)));
}

Poly divExactByXPow(const Poly& p, int m) {
  if (m < 0) throw std::invalid_argument("divExactByXPow expects m >= 0");
  if (p.isZero()) return {};
  const Valuation v = ordAtX(p);
  if (v < m) {
    std::ostringstream msg;
    msg << "x^" << m << " does not divide " << p << " (valuation " << v.toString() << ")";
    throw Error(ErrorCode::NotDivisible, msg.str());
  }
  const auto& c = p.coefficients();
  return Poly(std::vector<Rational>(c.begin() + m, c.end()));
}

bool congruentMod(const Poly& p, const Poly& q, int m) { return ordAtX(p - q) >= m; }

}  // namespace dfsurf
