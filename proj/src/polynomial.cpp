// Copyright 2026 The matchcf Authors
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

#include "matchcf/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "matchcf/errors.hpp"

namespace matchcf {

namespace {

std::uint64_t total_deg(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint64_t{0});
}

void require_same_vars(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::variable_count_mismatch,
                "operands have " + std::to_string(a) + " and " + std::to_string(b) +
                    " variables");
  }
}

}  // namespace

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = total_deg(a), db = total_deg(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void UnivariatePoly::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational UnivariatePoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& other) const {
  if (is_zero() || other.is_zero()) return {};
  UnivariatePoly out;
  out.coeffs.assign(coeffs.size() + other.coeffs.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs.size(); ++j)
      out.coeffs[i + j] += coeffs[i] * other.coeffs[j];
  out.normalize();
  return out;
}

std::string UnivariatePoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    if (coeffs[d] == 0) continue;
    if (!out.empty()) out += coeffs[d] > 0 ? " + " : " - ";
    else if (coeffs[d] < 0) out += "-";
    Rational a = abs(coeffs[d]);
    out += rational_string(a);
    if (d >= 1) out += "*x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

SparsePolynomial SparsePolynomial::constant(int var_count, const Rational& c) {
  SparsePolynomial p(var_count);
  if (c != 0) p.terms_.emplace(Monomial(var_count, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(int var_count, int i) {
  if (i < 0 || i >= var_count) {
    throw Error(ErrorCode::index_out_of_range,
                "variable " + std::to_string(i) + " out of range");
  }
  SparsePolynomial p(var_count);
  Monomial m(var_count, 0);
  m[i] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

int SparsePolynomial::total_degree() const {
  if (terms_.empty()) return 0;
  // Graded ordering puts a maximal-degree term first.
  return static_cast<int>(total_deg(terms_.begin()->first));
}

Rational SparsePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
  require_same_vars(n_, other.n_);
  SparsePolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  require_same_vars(n_, other.n_);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
  require_same_vars(n_, other.n_);
  SparsePolynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
  require_same_vars(n_, other.n_);
  SparsePolynomial out(n_);
  Monomial prod(n_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      for (int i = 0; i < n_; ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::operator*(const Rational& c) const {
  SparsePolynomial out(n_);
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const { return *this * Rational(-1); }

namespace {

template <typename Value>
Value evaluate_terms(const SparsePolynomial::TermMap& terms, int n,
                     const std::vector<Value>& a, std::size_t arity) {
  if (static_cast<std::size_t>(n) != arity) {
    throw Error(ErrorCode::arity_mismatch,
                "expected " + std::to_string(n) + " values, got " + std::to_string(arity));
  }
  Value total{};
  for (const auto& [m, c] : terms) {
    Value prod{c};
    for (int i = 0; i < n; ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) prod *= a[i];
    total += prod;
  }
  return total;
}

}  // namespace

ComplexRational SparsePolynomial::evaluate(const std::vector<ComplexRational>& a) const {
  return evaluate_terms<ComplexRational>(terms_, n_, a, a.size());
}

Rational SparsePolynomial::evaluate(const std::vector<Rational>& a) const {
  return evaluate_terms<Rational>(terms_, n_, a, a.size());
}

UnivariatePoly SparsePolynomial::specialize_univariate() const {
  UnivariatePoly out;
  out.coeffs.assign(static_cast<std::size_t>(total_degree()) + 1, Rational(0));
  for (const auto& [m, c] : terms_) out.coeffs[total_deg(m)] += c;
  out.normalize();
  return out;
}

SparsePolynomial SparsePolynomial::rename_variables(const std::vector<int>& to,
                                                    int new_var_count) const {
  if (static_cast<int>(to.size()) != n_) {
    throw Error(ErrorCode::arity_mismatch,
                "rename map has " + std::to_string(to.size()) + " entries for " +
                    std::to_string(n_) + " variables");
  }
  for (int t : to) {
    if (t < 0 || t >= new_var_count) {
      throw Error(ErrorCode::index_out_of_range,
                  "rename target " + std::to_string(t) + " out of range");
    }
  }
  SparsePolynomial out(new_var_count);
  for (const auto& [m, c] : terms_) {
    Monomial nm(new_var_count, 0);
    for (int i = 0; i < n_; ++i) nm[to[i]] += m[i];
    out.add_term(nm, c);
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    std::string part = rational_string(a);
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      part += "*x" + std::to_string(i);
      if (m[i] > 1) part += "^" + std::to_string(m[i]);
    }
    out += part;
  }
  return out;
}

}  // namespace matchcf
