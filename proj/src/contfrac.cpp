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

#include "matchcf/contfrac.hpp"

#include <array>
#include <cstdint>

#include "matchcf/errors.hpp"
#include "matchcf/matching.hpp"

namespace matchcf {

namespace {

struct ComplexOps {
  const std::vector<ComplexRational>* assignment;

  ComplexRational leaf(int label) const { return (*assignment)[label]; }
  ComplexRational weight(const Rational& w) const { return ComplexRational(w); }
  ComplexRational mul(const ComplexRational& a, const ComplexRational& b) const {
    return a * b;
  }
  ComplexRational add(const ComplexRational& a, const ComplexRational& b) const {
    return a + b;
  }
  ComplexRational one() const { return ComplexRational(Rational(1)); }
};

struct RationalOps {
  const std::vector<Rational>* assignment;

  Rational leaf(int label) const { return (*assignment)[label]; }
  Rational weight(const Rational& w) const { return w; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational one() const { return Rational(1); }
};

struct CountOps {
  Integer leaf(int) const { return Integer(1); }
  Integer weight(const Rational&) const { return Integer(1); }
  Integer mul(const Integer& a, const Integer& b) const { return a * b; }
  Integer add(const Integer& a, const Integer& b) const { return a + b; }
  Integer one() const { return Integer(1); }
};

struct PolyOps {
  int vars;

  SparsePolynomial leaf(int label) const { return SparsePolynomial::variable(vars, label); }
  SparsePolynomial weight(const Rational& w) const {
    return SparsePolynomial::constant(vars, w);
  }
  SparsePolynomial mul(const SparsePolynomial& a, const SparsePolynomial& b) const {
    return a * b;
  }
  SparsePolynomial add(const SparsePolynomial& a, const SparsePolynomial& b) const {
    return a + b;
  }
  SparsePolynomial one() const { return SparsePolynomial::constant(vars, Rational(1)); }
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p)) {
    if (e & 1) r = mulmod(r, a, p);
  }
  return r;
}

// Residue of a rational with denominator coprime to the prime p (weights and
// sample points here have tiny denominators, far below any 62-bit prime).
std::uint64_t residue(const Rational& q, std::uint64_t p) {
  Integer num = q.get_num() % Integer(p);
  if (num < 0) num += Integer(p);
  Integer den = q.get_den() % Integer(p);
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return mulmod(n, powmod(d, p - 2, p), p);
}

struct ModOps {
  const std::vector<std::uint64_t>* assignment;
  std::uint64_t p;

  std::uint64_t leaf(int label) const { return (*assignment)[label]; }
  std::uint64_t weight(const Rational& w) const { return residue(w, p); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, p); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t one() const { return 1; }
};

std::uint64_t poly_eval_mod(const SparsePolynomial& poly,
                            const std::vector<std::uint64_t>& point, std::uint64_t p) {
  std::uint64_t total = 0;
  for (const auto& [m, c] : poly.terms()) {
    std::uint64_t v = residue(c, p);
    for (int i = 0; i < poly.var_count(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) v = mulmod(v, point[i], p);
    total += v;
    if (total >= p) total -= p;
  }
  return total;
}

void check_labels_assigned(const RootedTree& t, std::size_t assigned) {
  for (int id = 0; id < t.node_count(); ++id) {
    const int label = t.node(id).label;
    if (label < 0 || static_cast<std::size_t>(label) >= assigned) {
      throw Error(ErrorCode::missing_assignment,
                  "no value for vertex " + std::to_string(label));
    }
  }
}

// Deterministic evaluation points: structured, pairwise different across the
// point index, and free of small symmetries.
constexpr std::array<int, 12> kPointPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

Rational point_coordinate(int point_index, int vertex) {
  const int base = kPointPrimes[(vertex + 2 * point_index) % kPointPrimes.size()];
  return Rational(base + point_index * point_index);
}

constexpr std::uint64_t kPrimes[2] = {2305843009213693951ULL,   // 2^61 - 1
                                      4611686018427387847ULL};  // 2^62 - 57

}  // namespace

CFPair tree_cf_eval(const RootedTree& t, const std::vector<ComplexRational>& assignment) {
  check_labels_assigned(t, assignment.size());
  auto [num, den] = tree_fold<ComplexRational>(t, ComplexOps{&assignment});
  return CFPair{std::move(num), std::move(den)};
}

CFPair graph_cf_eval(const WeightedGraph& g, int i, const std::vector<ComplexRational>& a) {
  if (i < 0 || i >= g.var_count() || !g.vertices().contains(i)) {
    throw Error(ErrorCode::index_out_of_range,
                "vertex " + std::to_string(i) + " is not in the graph");
  }
  ComplexRational num = matching_poly(g).evaluate(a);
  ComplexRational den = matching_poly(g.without(VertexSet::single(i))).evaluate(a);
  return CFPair{std::move(num), std::move(den)};
}

Integer count_matchings(const RootedTree& t) {
  return tree_fold<Integer>(t, CountOps{}).first;
}

const char* godsil_method_name(GodsilMethod m) {
  switch (m) {
    case GodsilMethod::symbolic:
      return "symbolic";
    case GodsilMethod::points_rational:
      return "points-rational";
    case GodsilMethod::points_modular:
      return "points-modular";
  }
  return "unknown";
}

GodsilResult verify_godsil(const WeightedGraph& g, int i, const GodsilOptions& options) {
  const RootedTree t = path_tree(g, i, options.node_cap);
  const int n = g.var_count();
  GodsilResult result;
  result.tree_nodes = t.node_count();

  const SparsePolynomial mu_g = matching_poly(g);
  const SparsePolynomial mu_gi = matching_poly(g.without(VertexSet::single(i)));

  if (t.node_count() <= kMaxVertices &&
      count_matchings(t) <= options.symbolic_matching_cap) {
    // Exact polynomial identity. The fold yields mu of the tree (and of the
    // tree minus its root) directly in the shared graph variables, where
    // nodes with equal labels share one variable.
    auto [mu_t, mu_troot] = tree_fold<SparsePolynomial>(t, PolyOps{n});
    result.method = GodsilMethod::symbolic;
    result.ok = mu_g * mu_troot == mu_gi * mu_t;
    return result;
  }

  const int points = 3 * n;
  if (options.modular_points) {
    result.method = GodsilMethod::points_modular;
    for (std::uint64_t p : kPrimes) {
      for (int pt = 0; pt < points; ++pt) {
        std::vector<std::uint64_t> a(n);
        for (int v = 0; v < n; ++v) a[v] = residue(point_coordinate(pt, v), p);
        auto [num, den] = tree_fold<std::uint64_t>(t, ModOps{&a, p});
        const std::uint64_t lhs = mulmod(poly_eval_mod(mu_g, a, p), den, p);
        const std::uint64_t rhs = mulmod(poly_eval_mod(mu_gi, a, p), num, p);
        if (lhs != rhs) return result;
      }
    }
    result.ok = true;
    return result;
  }

  result.method = GodsilMethod::points_rational;
  for (int pt = 0; pt < points; ++pt) {
    std::vector<Rational> a(n);
    for (int v = 0; v < n; ++v) a[v] = point_coordinate(pt, v);
    auto [num, den] = tree_fold<Rational>(t, RationalOps{&a});
    if (mu_g.evaluate(a) * den != mu_gi.evaluate(a) * num) return result;
  }
  result.ok = true;
  return result;
}

}  // namespace matchcf
