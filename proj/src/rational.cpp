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

#include "matchcf/rational.hpp"

#include <cctype>

#include "matchcf/errors.hpp"

namespace matchcf {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::invalid_argument, "empty rational literal");
  }
  std::string s(text);
  bool negative = false;
  std::string_view body = s;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorCode::invalid_argument, "malformed rational '" + s + "'");
    }
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) {
      throw Error(ErrorCode::invalid_argument, "zero denominator in '" + s + "'");
    }
    value = Rational(p, q);
  } else if (dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw Error(ErrorCode::invalid_argument, "malformed decimal '" + s + "'");
    }
    Integer digits((ip.empty() ? std::string("0") : std::string(ip)) + std::string(fp), 10);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) {
      throw Error(ErrorCode::invalid_argument, "malformed number '" + s + "'");
    }
    value = Rational(Integer(std::string(body), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string rational_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Integer isqrt_ceil(const Rational& q) {
  if (q < 0) {
    throw Error(ErrorCode::invalid_argument, "isqrt_ceil of a negative value");
  }
  // Smallest integer m >= q, then integer square root rounded up.
  Integer m;
  mpz_cdiv_q(m.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  Integer r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  if (r * r < m) r += 1;
  return r;
}

ComplexRational ComplexRational::inverse() const {
  Rational n2 = norm2();
  if (n2 == 0) {
    throw Error(ErrorCode::division_by_zero, "complex division by zero");
  }
  return {re / n2, -im / n2};
}

ComplexRational parse_complex_rational(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorCode::invalid_argument, "empty complex literal");
  }
  if (text.back() != 'i') {
    return ComplexRational(parse_rational(text));
  }
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the sign that separates the real part from the imaginary part;
  // a leading sign belongs to the real (or lone imaginary) part.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto parse_im = [](std::string_view im) {
    if (im.empty() || im == "+") return Rational(1);
    if (im == "-") return Rational(-1);
    return parse_rational(im);
  };
  if (split == std::string_view::npos) {
    return ComplexRational(Rational(0), parse_im(body));
  }
  return ComplexRational(parse_rational(body.substr(0, split)),
                         parse_im(body.substr(split)));
}

std::string complex_string(const ComplexRational& z) {
  if (z.im == 0) return rational_string(z.re);
  std::string im_part;
  Rational a = abs(z.im);
  if (a == 1) {
    im_part = "i";
  } else {
    im_part = rational_string(a) + "i";
  }
  if (z.re == 0) {
    return (z.im < 0 ? "-" : "") + im_part;
  }
  return rational_string(z.re) + (z.im < 0 ? "-" : "+") + im_part;
}

}  // namespace matchcf
