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

#include "dfsurf/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "term_format.hpp"

namespace dfsurf {

LaurentPoly::LaurentPoly(int minExponent, std::vector<Rational> coefficients)
    : minExp_(minExponent), coeffs_(std::move(coefficients)) {
  normalize();
}

LaurentPoly LaurentPoly::fromPoly(const Poly& p, int shift) {
  return LaurentPoly(shift, p.coefficients());
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].isZero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    minExp_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) minExp_ = 0;
}

Rational LaurentPoly::coeff(int exponent) const {
  if (isZero() || exponent < minExp_ || exponent > maxExponent()) return Rational();
  return coeffs_[static_cast<std::size_t>(exponent - minExp_)];
}

Poly LaurentPoly::toPoly() const {
  if (!isPolynomial()) throw std::logic_error("LaurentPoly::toPoly on a polynomial with poles");
  if (isZero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(minExp_));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(std::move(v));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.isZero()) return *this;
  if (isZero()) return *this = rhs;
  const int lo = std::min(minExp_, rhs.minExp_);
  const int hi = std::max(maxExponent(), rhs.maxExponent());
  std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) v[static_cast<std::size_t>(e - lo)] = coeff(e) + rhs.coeff(e);
  minExp_ = lo;
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  if (isZero() || rhs.isZero()) return *this = LaurentPoly();
  std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  minExp_ += rhs.minExp_;
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.coeffs_ == b.coeffs_ && (a.isZero() || a.minExp_ == b.minExp_);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (isZero()) return {};
  return LaurentPoly(minExp_ + k, coeffs_);
}

std::string LaurentPoly::toString() const {
  std::vector<detail::Term> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].isZero()) continue;
    terms.push_back({coeffs_[i], detail::monomialText({{"x", minExp_ + static_cast<int>(i)}})});
  }
  return detail::joinTerms(terms);
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.toString(); }

}  // namespace dfsurf
