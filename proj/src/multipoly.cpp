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

#include "dfsurf/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "dfsurf/error.hpp"
#include "term_format.hpp"

namespace dfsurf {

namespace {

int degreeOf(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<std::string> unionOf(const std::vector<std::string>& a,
                                 const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

long indexOf(const std::vector<std::string>& vars, const std::string& name) {
  const auto it = std::find(vars.begin(), vars.end(), name);
  return it == vars.end() ? -1 : static_cast<long>(it - vars.begin());
}

}  // namespace

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degreeOf(a);
  const int db = degreeOf(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly::MultiPoly(std::vector<std::string> variables, Terms terms)
    : vars_(std::move(variables)) {
  for (auto& [e, c] : terms) addTerm(e, c);
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.addTerm({}, c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p({name});
  p.addTerm({1}, 1);
  return p;
}

MultiPoly MultiPoly::fromPoly(const Poly& p, const std::string& name) {
  MultiPoly out({name});
  for (int e = 0; e <= p.degree(); ++e) out.addTerm({e}, p.coeff(e));
  return out;
}

void MultiPoly::addTerm(Exponents e, const Rational& c) {
  if (c.isZero()) return;
  if (e.size() != vars_.size()) throw std::logic_error("exponent vector length mismatch");
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

int MultiPoly::totalDegree() const {
  return terms_.empty() ? 0 : degreeOf(terms_.begin()->first);
}

int MultiPoly::degreeIn(const std::string& name) const {
  const long i = indexOf(vars_, name);
  if (i < 0) return 0;
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

int MultiPoly::minDegreeIn(const std::string& name) const {
  const long i = indexOf(vars_, name);
  if (i < 0 || terms_.empty()) return 0;
  int d = terms_.begin()->first[static_cast<std::size_t>(i)];
  for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<std::size_t>(i)]);
  return d;
}

bool MultiPoly::isFreeOf(const std::string& name) const { return degreeIn(name) == 0; }

std::vector<std::string> MultiPoly::usedVariables() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) {
    if (!isFreeOf(v)) out.push_back(v);
  }
  return out;
}

MultiPoly MultiPoly::withVariables(const std::vector<std::string>& variables) const {
  std::vector<long> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    target[i] = indexOf(variables, vars_[i]);
    if (target[i] < 0 && !isFreeOf(vars_[i])) {
      throw std::invalid_argument("variable '" + vars_[i] + "' missing from target list");
    }
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (target[i] >= 0) ne[static_cast<std::size_t>(target[i])] = e[i];
    }
    out.addTerm(std::move(ne), c);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.vars_ != vars_) {
    const auto vars = unionOf(vars_, rhs.vars_);
    if (vars != vars_) *this = withVariables(vars);
    const MultiPoly aligned = rhs.withVariables(vars);
    for (const auto& [e, c] : aligned.terms_) addTerm(e, c);
    return *this;
  }
  for (const auto& [e, c] : rhs.terms_) addTerm(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) { return *this += -rhs; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  const auto vars = unionOf(vars_, rhs.vars_);
  const MultiPoly a = vars == vars_ ? *this : withVariables(vars);
  const MultiPoly b = vars == rhs.vars_ ? rhs : rhs.withVariables(vars);
  MultiPoly out(vars);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.addTerm(std::move(e), ca * cb);
    }
  }
  return *this = std::move(out);
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power of a polynomial");
  MultiPoly result = constant(1);
  MultiPoly base = *this;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) { return (a - b).isZero(); }

MultiPoly MultiPoly::divideByVariablePower(const std::string& name, int k) const {
  if (k == 0 || isZero()) return *this;
  const long i = indexOf(vars_, name);
  if (i < 0 || minDegreeIn(name) < k) {
    throw Error(ErrorCode::NotDivisible, name + "^" + std::to_string(k) + " does not divide " + toString());
  }
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[static_cast<std::size_t>(i)] -= k;
    out.addTerm(std::move(ne), c);
  }
  return out;
}

std::string MultiPoly::toString() const {
  std::vector<detail::Term> terms;
  for (const auto& [e, c] : terms_) {
    std::vector<std::pair<std::string, int>> powers;
    for (std::size_t i = 0; i < e.size(); ++i) powers.emplace_back(vars_[i], e[i]);
    terms.push_back({c, detail::monomialText(powers)});
  }
  return detail::joinTerms(terms);
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.toString(); }

RatFunc::RatFunc(MultiPoly numerator) : num_(std::move(numerator)), den_(MultiPoly::constant(1)) {}

RatFunc::RatFunc(MultiPoly numerator, MultiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.isZero()) throw std::domain_error("rational function with zero denominator");
}

RatFunc RatFunc::fromLaurent(const LaurentPoly& p, const std::string& name) {
  if (p.isZero()) return {};
  if (p.minExponent() >= 0) return RatFunc(MultiPoly::fromPoly(p.toPoly(), name));
  const int k = -p.minExponent();
  return RatFunc(MultiPoly::fromPoly(p.shifted(k).toPoly(), name),
                 MultiPoly::variable(name).pow(k));
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.num_.isZero()) throw std::domain_error("division by a zero rational function");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  return *this;
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) return RatFunc(den_.pow(-exponent), num_.pow(-exponent));
  return RatFunc(num_.pow(exponent), den_.pow(exponent));
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool RatFunc::isPolynomial() const {
  if (den_.terms().size() != 1) return false;
  const auto vars = unionOf(num_.variables(), den_.variables());
  const MultiPoly n = num_.withVariables(vars);
  const MultiPoly d = den_.withVariables(vars);
  const Exponents& de = d.terms().begin()->first;
  for (const auto& [e, c] : n.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < de[i]) return false;
    }
  }
  return true;
}

std::string RatFunc::toString() const {
  if (den_ == MultiPoly::constant(1)) return num_.toString();
  return "(" + num_.toString() + ")/(" + den_.toString() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.toString(); }

bool ratFuncIsZero(const RatFunc& f) { return f.numerator().isZero(); }

RatFunc substitute(const MultiPoly& p, const Bindings& bindings) {
  const auto& vars = p.variables();
  // Powers of each binding up to the degree needed; a single common
  // denominator prod(den_v^maxdeg_v) keeps the result free of cross terms.
  std::vector<int> maxDeg(vars.size(), 0);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) maxDeg[i] = std::max(maxDeg[i], e[i]);
  }
  std::vector<std::vector<MultiPoly>> numPow(vars.size());
  std::vector<std::vector<MultiPoly>> denPow(vars.size());
  MultiPoly commonDen = MultiPoly::constant(1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (maxDeg[i] == 0) continue;
    const auto it = bindings.find(vars[i]);
    if (it == bindings.end()) {
      throw Error(ErrorCode::UnboundVariable, "no binding for variable '" + vars[i] + "'");
    }
    numPow[i].push_back(MultiPoly::constant(1));
    denPow[i].push_back(MultiPoly::constant(1));
    for (int k = 1; k <= maxDeg[i]; ++k) {
      numPow[i].push_back(numPow[i].back() * it->second.numerator());
      denPow[i].push_back(denPow[i].back() * it->second.denominator());
    }
    commonDen *= denPow[i].back();
  }
  MultiPoly num;
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (maxDeg[i] == 0) continue;
      term *= numPow[i][static_cast<std::size_t>(e[i])];
      term *= denPow[i][static_cast<std::size_t>(maxDeg[i] - e[i])];
    }
    num += term;
  }
  return RatFunc(std::move(num), std::move(commonDen));
}

}  // namespace dfsurf
