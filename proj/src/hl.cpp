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

#include "matchcf/hl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <utility>

#include <nlohmann/json.hpp>

#include "matchcf/errors.hpp"
#include "matchcf/matching.hpp"

namespace matchcf {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<int> alive_list(const WeightedGraph& g) {
  std::vector<int> vs;
  g.vertices().for_each([&](int v) { vs.push_back(v); });
  return vs;
}

std::string point_string(const std::vector<ComplexRational>& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += complex_string(x[i]);
  }
  out += ")";
  return out;
}

std::string set_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  });
  out += "}";
  return out;
}

// Failures tagged by sample index so parallel collection can be merged into
// the order the serial loop would have produced.
struct IndexedFailure {
  std::uint64_t index;
  Failure failure;
};

// Runs body(sample index, failure sink) over [0, samples), serially or under
// OpenMP, and returns all failures in index order either way.
template <class Body>
std::vector<Failure> run_sweep(std::uint64_t samples, Exec exec, const Body& body) {
  std::vector<IndexedFailure> collected;
  if (exec == Exec::serial) {
    for (std::uint64_t s = 0; s < samples; ++s) body(s, collected);
  } else {
    const std::int64_t count = static_cast<std::int64_t>(samples);
#pragma omp parallel
    {
      std::vector<IndexedFailure> local;
#pragma omp for schedule(dynamic, 64)
      for (std::int64_t s = 0; s < count; ++s) {
        body(static_cast<std::uint64_t>(s), local);
      }
#pragma omp critical(matchcf_sweep_merge)
      collected.insert(collected.end(), std::make_move_iterator(local.begin()),
                       std::make_move_iterator(local.end()));
    }
    std::stable_sort(collected.begin(), collected.end(),
                     [](const IndexedFailure& a, const IndexedFailure& b) {
                       return a.index < b.index;
                     });
  }
  std::vector<Failure> failures;
  failures.reserve(collected.size());
  for (IndexedFailure& f : collected) failures.push_back(std::move(f.failure));
  return failures;
}

}  // namespace

Rational bound_B(const WeightedGraph& g) {
  const std::vector<int> vs = alive_list(g);
  const int m = static_cast<int>(vs.size());
  if (m <= 1) return Rational(0);
  if (m == 2) return g.weight(vs[0], vs[1]) / 4;
  Rational best(0);
  for (int j : vs) {
    Rational row_sum(0);
    const Rational* smallest = nullptr;
    for (int k : vs) {
      if (k == j) continue;
      const Rational& w = g.weight(j, k);
      row_sum += w;
      if (smallest == nullptr || w < *smallest) smallest = &w;
    }
    Rational value = row_sum - *smallest;
    if (value > best) best = std::move(value);
  }
  return best;
}

Region Region::outside_disk_for(const WeightedGraph& g) {
  return outside_disk(bound_B(g) * 4);
}

ComplexRational sample_point(const Region& region, SampleRng& rng) {
  if (region.kind == Region::Kind::right_half_plane) {
    const std::uint64_t k = rng.below(10);
    Rational re(std::uint64_t{1} << k, 8);
    re.canonicalize();
    const std::uint64_t t = rng.below(21);
    Rational im(0);
    if (t > 0) {
      im = Rational(std::uint64_t{1} << ((t - 1) / 2), 8);
      im.canonicalize();
      if ((t & 1) == 0) im = -im;
    }
    return {std::move(re), std::move(im)};
  }
  // Grid of spacing R0/8 spanning [-2*R0, 2*R0] in both coordinates, with
  // radius-R0 chosen so plenty of grid points clear the disk.
  const Integer r0 = 2 * (1 + isqrt_ceil(region.four_B / 4));
  while (true) {
    const int ka = static_cast<int>(rng.below(33)) - 16;
    const int kb = static_cast<int>(rng.below(33)) - 16;
    Rational a(r0 * ka, 8);
    Rational b(r0 * kb, 8);
    a.canonicalize();
    b.canonicalize();
    if (a * a + b * b > region.four_B) return {std::move(a), std::move(b)};
  }
}

ComplexRational f_eval(const WeightedGraph& g, int j, VertexSet a,
                       const std::vector<ComplexRational>& x) {
  if (x.size() != static_cast<std::size_t>(g.var_count())) {
    throw Error(ErrorCode::arity_mismatch,
                "expected " + std::to_string(g.var_count()) + " coordinates, got " +
                    std::to_string(x.size()));
  }
  if (j < 0 || j >= g.var_count() || !g.vertices().contains(j)) {
    throw Error(ErrorCode::index_out_of_range,
                "vertex " + std::to_string(j) + " is not in the graph");
  }
  if (a.contains(j)) {
    throw Error(ErrorCode::invalid_argument,
                "index set contains the pivot vertex " + std::to_string(j));
  }
  if (!a.subset_of(g.vertices())) {
    throw Error(ErrorCode::invalid_mask, "index set is not a subset of the vertices");
  }
  ComplexRational result = x[j];
  a.for_each([&](int k) {
    const Rational& w = g.weight(j, k);
    if (w == 0) return;
    if (x[k].is_zero()) {
      throw Error(ErrorCode::division_by_zero,
                  "x_" + std::to_string(k) + " is zero with a positive weight to " +
                      std::to_string(j));
    }
    result += x[k].inverse() * w;
  });
  return result;
}

VerificationReport verify_zero_free(const WeightedGraph& g, const Region& region,
                                    std::uint64_t samples, std::uint64_t seed,
                                    Exec exec) {
  const auto start = Clock::now();
  const SparsePolynomial mu = matching_poly(g);
  const int n = g.var_count();

  VerificationReport report;
  report.property = "zerofree";
  report.graph_hash = graph_hash(g);
  report.region = region.name();
  report.samples = samples;
  report.seed = seed;
  report.failures =
      run_sweep(samples, exec, [&](std::uint64_t s, std::vector<IndexedFailure>& out) {
        SampleRng rng(seed, s);
        std::vector<ComplexRational> x(n);
        for (int v = 0; v < n; ++v) x[v] = sample_point(region, rng);
        if (mu.evaluate(x).is_zero()) {
          out.push_back({s, Failure{point_string(x), "0"}});
        }
      });
  report.elapsed_ms = ms_since(start);
  return report;
}

VerificationReport check_mapping_lemma(const WeightedGraph& g, const Region& region,
                                       std::uint64_t samples, std::uint64_t seed,
                                       Exec exec) {
  const auto start = Clock::now();
  const std::vector<int> vs = alive_list(g);
  const int m = static_cast<int>(vs.size());
  const int n = g.var_count();

  VerificationReport report;
  report.property = "mapping";
  report.graph_hash = graph_hash(g);
  report.region = region.name();
  report.samples = samples;
  report.seed = seed;
  report.failures =
      run_sweep(samples, exec, [&](std::uint64_t s, std::vector<IndexedFailure>& out) {
        SampleRng rng(seed, s);
        const int j = vs[rng.below(m)];
        // Uniform over the subsets of the other m-1 vertices of size at most
        // m-2: all masks except the full one. A single vertex only has the
        // empty set.
        VertexSet a;
        if (m >= 2) {
          std::uint64_t bits = rng.below((std::uint64_t{1} << (m - 1)) - 1);
          int t = 0;
          for (int v : vs) {
            if (v == j) continue;
            if ((bits >> t) & 1) a = a.with(v);
            ++t;
          }
        }
        std::vector<ComplexRational> x(n);
        for (int v = 0; v < n; ++v) x[v] = sample_point(region, rng);

        const ComplexRational f = f_eval(g, j, a, x);
        const bool inside = region.kind == Region::Kind::right_half_plane
                                ? f.re > 0
                                : f.norm2() * 4 > region.four_B;
        if (!inside) {
          out.push_back({s, Failure{"j=" + std::to_string(j) + " A=" + set_string(a) +
                                        " x=" + point_string(x),
                                    complex_string(f)}});
        }
        // Full index sets never map to zero; check every pivot at this x.
        for (int j2 : vs) {
          const VertexSet full = VertexSet{g.vertices().bits}.without(j2);
          const ComplexRational f2 = f_eval(g, j2, full, x);
          if (f2.is_zero()) {
            out.push_back({s, Failure{"j=" + std::to_string(j2) + " A=" +
                                          set_string(full) + " x=" + point_string(x),
                                      "0"}});
          }
        }
      });
  report.elapsed_ms = ms_since(start);
  return report;
}

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& coeffs,
                            std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string double_string(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string root_string(const Root& r) {
  return double_string(r.re) + (r.im < 0 ? "" : "+") + double_string(r.im) + "i";
}

}  // namespace

std::vector<Root> univariate_roots(const UnivariatePoly& p, int max_iter, double tol) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::invalid_argument, "root finding needs degree >= 1");
  }
  // Zero roots split off exactly.
  std::size_t zeros = 0;
  while (zeros < p.coeffs.size() && p.coeffs[zeros] == 0) ++zeros;
  std::vector<Root> roots(zeros, Root{0.0, 0.0});

  const std::size_t deg = p.coeffs.size() - 1 - zeros;
  if (deg == 0) return roots;

  std::vector<std::complex<double>> c(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) c[i] = p.coeffs[zeros + i].get_d();
  const std::complex<double> lead = c[deg];

  double radius = 0.0;
  for (std::size_t i = 0; i < deg; ++i)
    radius = std::max(radius, std::abs(c[i] / lead));
  radius += 1.0;

  // Simultaneous iteration from a circle with an angular offset, so symmetric
  // root sets do not start in a deadlocked configuration.
  std::vector<std::complex<double>> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    const double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(deg) + 0.4;
    z[i] = radius * std::complex<double>(std::cos(angle), std::sin(angle));
  }

  for (int iter = 0; iter < max_iter; ++iter) {
    double max_step = 0.0;
    double max_abs = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      std::complex<double> denom = lead;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      if (denom == 0.0) {
        // Two iterates collided; nudge and continue.
        z[i] += std::complex<double>(1e-12 * (1.0 + std::abs(z[i])), 1e-12);
        max_step = 1.0;
        continue;
      }
      const std::complex<double> delta = horner(c, z[i]) / denom;
      z[i] -= delta;
      max_step = std::max(max_step, std::abs(delta));
      max_abs = std::max(max_abs, std::abs(z[i]));
    }
    if (max_step <= 1e-14 * (1.0 + max_abs)) break;
  }

  // Residuals certify every root against the requested tolerance; the
  // iteration count alone proves nothing.
  std::vector<std::complex<double>> full(p.coeffs.size());
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) full[i] = p.coeffs[i].get_d();
  for (std::size_t i = 0; i < deg; ++i) {
    const double residual = std::abs(horner(full, z[i])) / std::abs(lead);
    const double scale = std::pow(std::max(1.0, std::abs(z[i])),
                                  static_cast<double>(p.degree()));
    if (!(residual <= tol * scale)) {
      throw Error(ErrorCode::no_convergence,
                  "root iteration failed to certify a root after " +
                      std::to_string(max_iter) + " iterations");
    }
    roots.push_back(Root{z[i].real(), z[i].imag()});
  }
  return roots;
}

VerificationReport check_root_bound(const WeightedGraph& g, double tol) {
  const auto start = Clock::now();
  VerificationReport report;
  report.property = "roots";
  report.graph_hash = graph_hash(g);

  const UnivariatePoly uni = matching_poly(g).specialize_univariate();
  const double four_b = 4.0 * bound_B(g).get_d();

  if (uni.degree() >= 1) {
    const std::vector<Root> roots = univariate_roots(uni, 1000, tol);
    report.samples = roots.size();
    for (const Root& r : roots) {
      if (std::abs(r.re) > tol) {
        report.failures.push_back(
            Failure{root_string(r), "re=" + double_string(r.re)});
      } else if (r.re * r.re + r.im * r.im > four_b + tol) {
        report.failures.push_back(
            Failure{root_string(r), "norm2=" + double_string(r.re * r.re + r.im * r.im) +
                                        " limit=" + double_string(four_b)});
      }
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

std::string VerificationReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["property"] = property;
  j["graph_hash"] = graph_hash;
  j["region"] = region;
  j["samples"] = samples;
  j["seed"] = seed;
  j["failures"] = nlohmann::ordered_json::array();
  for (const Failure& f : failures) {
    j["failures"].push_back({{"point", f.point}, {"value", f.value}});
  }
  if (include_timing) j["elapsed_ms"] = elapsed_ms;
  return j.dump(2);
}

}  // namespace matchcf
