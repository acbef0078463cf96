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

#ifndef MATCHCF_POLYNOMIAL_HPP_
#define MATCHCF_POLYNOMIAL_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matchcf/rational.hpp"

namespace matchcf {

// Exponent vector; entry i is the power of x_i.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic, descending: higher total degree first, ties broken by
// the lexicographically larger exponent vector. Map iteration order is then
// the canonical display order.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Dense-degree univariate polynomial; coeffs[d] is the coefficient of x^d.
// The zero polynomial is an empty vector; otherwise the leading entry is
// nonzero.
struct UnivariatePoly {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  // Drops trailing zero coefficients.
  void normalize();

  Rational evaluate(const Rational& x) const;
  UnivariatePoly operator*(const UnivariatePoly& other) const;
  bool operator==(const UnivariatePoly& other) const { return coeffs == other.coeffs; }

  std::string to_string() const;
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed variable count. Stored coefficients are never zero.
class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  explicit SparsePolynomial(int var_count) : n_(var_count) {}

  static SparsePolynomial zero(int var_count) { return SparsePolynomial(var_count); }
  static SparsePolynomial constant(int var_count, const Rational& c);
  static SparsePolynomial variable(int var_count, int i);

  int var_count() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;  // 0 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  // Adds c times the monomial m, erasing the term if the sum cancels.
  void add_term(const Monomial& m, const Rational& c);

  SparsePolynomial operator+(const SparsePolynomial& other) const;
  SparsePolynomial operator-(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const SparsePolynomial& other) const;
  SparsePolynomial operator*(const Rational& c) const;
  SparsePolynomial operator-() const;
  SparsePolynomial& operator+=(const SparsePolynomial& other);
  bool operator==(const SparsePolynomial& other) const {
    return n_ == other.n_ && terms_ == other.terms_;
  }

  ComplexRational evaluate(const std::vector<ComplexRational>& a) const;
  Rational evaluate(const std::vector<Rational>& a) const;

  // Sets every variable to a single x; the coefficient of x^d collects all
  // terms of total degree d.
  UnivariatePoly specialize_univariate() const;

  // Substitutes x_i := x_{to[i]} over a new variable count; exponents of
  // variables mapped to the same target add up.
  SparsePolynomial rename_variables(const std::vector<int>& to, int new_var_count) const;

  // Canonical text: graded-lex order, explicit coefficients, "*" separators,
  // "^" powers, e.g. "1*x0*x1*x2 + 1*x0 + 1*x1 + 1*x2". Zero renders as "0".
  std::string to_string() const;

 private:
  int n_;
  TermMap terms_;
};

}  // namespace matchcf

#endif  // MATCHCF_POLYNOMIAL_HPP_
