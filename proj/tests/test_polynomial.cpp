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

#include <doctest.h>

#include <vector>

#include "matchcf/errors.hpp"
#include "matchcf/polynomial.hpp"

using matchcf::ComplexRational;
using matchcf::Error;
using matchcf::Rational;
using matchcf::SparsePolynomial;
using matchcf::UnivariatePoly;

namespace {

SparsePolynomial x(int i, int n) { return SparsePolynomial::variable(n, i); }

}  // namespace

TEST_CASE("constant and zero polynomials") {
  const SparsePolynomial z = SparsePolynomial::zero(3);
  CHECK(z.is_zero());
  CHECK(z.term_count() == 0);
  CHECK(z.total_degree() == 0);
  CHECK(z.to_string() == "0");
  const SparsePolynomial c = SparsePolynomial::constant(3, Rational(5, 2));
  CHECK(c.to_string() == "5/2");
  CHECK(c.total_degree() == 0);
}

TEST_CASE("display order is graded then lexicographic") {
  const int n = 3;
  const SparsePolynomial p =
      x(0, n) * x(1, n) * x(2, n) + x(0, n) + x(1, n) + x(2, n);
  CHECK(p.to_string() == "1*x0*x1*x2 + 1*x0 + 1*x1 + 1*x2");
  const SparsePolynomial q = x(2, n) + x(0, n) * x(0, n) + SparsePolynomial::constant(n, Rational(1));
  CHECK(q.to_string() == "1*x0^2 + 1*x2 + 1");
}

TEST_CASE("negative coefficients print with a minus joiner") {
  const int n = 2;
  const SparsePolynomial p = x(0, n) - x(1, n) * SparsePolynomial::constant(n, Rational(3, 4));
  CHECK(p.to_string() == "1*x0 - 3/4*x1");
  CHECK((-p).to_string() == "-1*x0 + 3/4*x1");
}

TEST_CASE("arithmetic cancels exactly") {
  const int n = 2;
  const SparsePolynomial p = x(0, n) + x(1, n);
  const SparsePolynomial q = x(0, n) - x(1, n);
  CHECK((p + q).to_string() == "2*x0");
  CHECK((p * q).to_string() == "1*x0^2 - 1*x1^2");
  CHECK((p - p).is_zero());
  CHECK((p * SparsePolynomial::zero(n)).is_zero());
}

TEST_CASE("mixing variable counts throws") {
  CHECK_THROWS_AS(x(0, 2) + x(0, 3), Error);
  CHECK_THROWS_AS(x(0, 2) * x(0, 3), Error);
}

TEST_CASE("evaluation matches by-hand values") {
  const int n = 2;
  const SparsePolynomial p = x(0, n) * x(1, n) + SparsePolynomial::constant(n, Rational(1));
  CHECK(p.evaluate(std::vector<Rational>{Rational(2), Rational(2)}) == Rational(5));
  const ComplexRational i{Rational(0), Rational(1)};
  const ComplexRational v = p.evaluate(std::vector<ComplexRational>{i, i});
  CHECK(v == ComplexRational{Rational(0), Rational(0)});
  CHECK_THROWS_AS(p.evaluate(std::vector<Rational>{Rational(1)}), Error);
}

TEST_CASE("specialize_univariate folds all variables into one") {
  const int n = 3;
  // x0*x1*x2 + x0 + x1 + x2 becomes x^3 + 3x.
  const SparsePolynomial p =
      x(0, n) * x(1, n) * x(2, n) + x(0, n) + x(1, n) + x(2, n);
  const UnivariatePoly u = p.specialize_univariate();
  CHECK(u.coeffs == std::vector<Rational>{Rational(0), Rational(3), Rational(0), Rational(1)});
  CHECK(u.degree() == 3);
  CHECK(u.evaluate(Rational(2)) == Rational(14));
}

TEST_CASE("univariate multiplication and normalization") {
  UnivariatePoly a{{Rational(1), Rational(1)}};        // 1 + x
  UnivariatePoly b{{Rational(-1), Rational(1)}};       // -1 + x
  const UnivariatePoly prod = a * b;
  CHECK(prod.coeffs == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
  UnivariatePoly c{{Rational(2), Rational(0), Rational(0)}};
  c.normalize();
  CHECK(c.coeffs.size() == 1);
  CHECK_FALSE(c.is_zero());
}

TEST_CASE("rename_variables maps into a wider ring") {
  const int n = 2;
  const SparsePolynomial p = x(0, n) * x(1, n) + x(0, n);
  const SparsePolynomial q = p.rename_variables({2, 0}, 3);
  const SparsePolynomial want = x(2, 3) * x(0, 3) + x(2, 3);
  CHECK(q == want);
  // Colliding targets add exponents: x0*x1 with both mapped to 0 gives x0^2.
  const SparsePolynomial collide = (x(0, n) * x(1, n)).rename_variables({0, 0}, 1);
  CHECK(collide.to_string() == "1*x0^2");
  CHECK_THROWS_AS(p.rename_variables({0}, 3), Error);
  CHECK_THROWS_AS(p.rename_variables({0, 5}, 3), Error);
}

TEST_CASE("coefficient lookup") {
  const int n = 2;
  const SparsePolynomial p = x(0, n) * x(1, n) * SparsePolynomial::constant(n, Rational(7));
  CHECK(p.coefficient({1, 1}) == Rational(7));
  CHECK(p.coefficient({0, 0}) == Rational(0));
}
