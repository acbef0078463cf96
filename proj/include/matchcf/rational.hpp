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

#ifndef MATCHCF_RATIONAL_HPP
#define MATCHCF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace matchcf {

// All coefficient and weight arithmetic is exact rational arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" (integers, q > 0), a plain integer, or a finite decimal
// string ("0.25", "-1.5") into an exact rational.
Rational parse_rational(std::string_view text);

// Lowest-terms "p/q" with an explicit denominator, e.g. "1/1", "-3/4".
std::string fraction_string(const Rational& q);

// Lowest-terms string without a forced denominator: "2", "-3/4".
std::string rational_string(const Rational& q);

// Smallest non-negative integer s with s*s >= q. Requires q >= 0.
Integer isqrt_ceil(const Rational& q);

// Exact complex numbers with rational real and imaginary parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT(runtime/explicit)
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  // re^2 + im^2, the squared modulus.
  Rational norm2() const { return re * re + im * im; }

  ComplexRational conj() const { return {re, -im}; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator*(const ComplexRational& a, const Rational& s) {
    return {a.re * s, a.im * s};
  }
  ComplexRational& operator+=(const ComplexRational& b) {
    re += b.re;
    im += b.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& b) {
    *this = *this * b;
    return *this;
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  // 1/z; the caller guarantees z != 0.
  ComplexRational inverse() const;
};

// "2", "-1/2", "2+1/2i", "-i", ... for diagnostics and reports.
std::string complex_string(const ComplexRational& z);

// Inverse of complex_string: accepts "a", "bi", "a+bi", "a-bi" with rational
// a and b, plus bare "i" and "-i".
ComplexRational parse_complex_rational(std::string_view text);

}  // namespace matchcf

#endif  // MATCHCF_RATIONAL_HPP
