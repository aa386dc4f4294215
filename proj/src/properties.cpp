#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sspread/harness.hpp"

namespace sspread {

namespace {

constexpr double rel_tol = 1e-9;

struct Outcome {
  double margin = std::numeric_limits<double>::infinity();
  bool ok = true;

  // Records bound - value and whether it clears -tolerance.
  Outcome& le(double value, double bound, double tolerance) {
    const double m = bound - value;
    margin = std::min(margin, m);
    ok = ok && m >= -tolerance;
    return *this;
  }
  Outcome& close(double a, double b, double tolerance) {
    const double m = -std::abs(a - b);
    margin = std::min(margin, m);
    ok = ok && -m <= tolerance;
    return *this;
  }
  Outcome& report(const MajorizationReport& r) {
    margin = std::min(margin, r.worst_margin);
    ok = ok && r.holds;
    return *this;
  }
  Outcome& require(bool condition) {
    ok = ok && condition;
    return *this;
  }
};

using Property = std::function<Outcome(CounterRng&)>;

double scale_of(const CMatrix& m) { return std::max(1.0, m.norm()); }

std::vector<double> normals(CounterRng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.normal();
  return v;
}

std::vector<double> uniforms(CounterRng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform01();
  return v;
}

std::vector<std::size_t> permutation(CounterRng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.index(i)]);
  return p;
}

// D y for a doubly stochastic D: a convex combination of three permutations.
std::vector<double> doubly_stochastic(CounterRng& rng, const std::vector<double>& y) {
  std::vector<double> x(y.size(), 0.0);
  auto w = uniforms(rng, 3);
  const double total = w[0] + w[1] + w[2];
  for (double& v : w) v /= total;
  for (double wj : w) {
    const auto p = permutation(rng, y.size());
    for (std::size_t i = 0; i < y.size(); ++i) x[i] += wj * y[p[i]];
  }
  return x;
}

// Non-negative x with x ≺_w y for non-negative y.
std::vector<double> weakly_below(CounterRng& rng, const std::vector<double>& y) {
  auto x = doubly_stochastic(rng, y);
  for (double& v : x) v *= rng.uniform01();
  return x;
}

std::vector<double> abs_of(std::vector<double> v) {
  for (double& x : v) x = std::abs(x);
  return v;
}

std::vector<double> plus(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<double> times(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

std::vector<double> ascending(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

SpreadSeq seq(std::vector<double> v) {
  SpreadSeq s;
  s.values = std::move(v);
  return s;
}

std::size_t small_n(CounterRng& rng) { return 1 + rng.index(8); }
Index small_d(CounterRng& rng) { return 1 + Index(rng.index(8)); }

void compare(Outcome& o, const SpreadSeq& a, const SpreadSeq& b, double tolerance) {
  const std::size_t k = std::max(a.horizon(), b.horizon());
  for (std::size_t i = 0; i < k; ++i) o.close(a.at(i), b.at(i), tolerance);
}

struct Entry {
  std::string name;
  std::size_t trials;
  Property run;
};

std::vector<Entry> properties(std::size_t base) {
  const std::size_t eig_trials = base == 500 ? 1000 : base;
  std::vector<Entry> p;

  p.push_back({"eigh_residual", eig_trials, [](CounterRng& rng) {
                 const Index d = 1 + Index(rng.index(16));
                 const HermMatrix a = random_hermitian(rng, d);
                 const auto r = eigen_residual(a, eigh(a));
                 const double bound = 1e-10 * scale_of(a.matrix());
                 Outcome o;
                 return o.le(r.residual, bound, 0.0).le(r.orthogonality, bound, 0.0);
               }});

  p.push_back({"hat_trick", base, [](CounterRng& rng) {
                 const Index r = small_d(rng), c = small_d(rng);
                 const CMatrix b = gaussian_matrix(rng, r, c);
                 const SpreadSeq s = svd_values(b);
                 const TwoSidedSeq lam = compact_scale(offdiag_embed(b));
                 const double tolerance = rel_tol * std::max(1.0, s.at(0));
                 Outcome o;
                 for (std::size_t i = 0; i < lam.horizon(); ++i) {
                   o.close(lam.pos[i], s.at(i), tolerance);
                   o.close(lam.neg[i], -s.at(i), tolerance);
                 }
                 // Sorted moduli of the dilation spectrum: each s_i twice, then zeros.
                 const auto e = eigh(offdiag_embed(b));
                 std::vector<double> mods(std::size_t(e.values.size()));
                 for (Index i = 0; i < e.values.size(); ++i) mods[std::size_t(i)] = std::abs(e.values(i));
                 const auto sorted = dec_rearrange(mods);
                 for (std::size_t i = 0; i < sorted.size(); ++i) o.close(sorted[i], s.at(i / 2), tolerance);
                 return o;
               }});

  p.push_back({"weyl_singular", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const CMatrix a = gaussian_matrix(rng, d, d), b = gaussian_matrix(rng, d, d);
                 Outcome o;
                 return o.report(submajorizes(svd_values(a + b), seq_sum(svd_values(a), svd_values(b))));
               }});

  p.push_back({"weyl_scale", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix a = random_hermitian(rng, d), b = random_hermitian(rng, d);
                 Outcome o;
                 o.report(majorizes(matrix_scale(a + b), seq_sum(matrix_scale(a), matrix_scale(b))));
                 return o.report(majorizes(compact_scale(a + b), seq_sum(compact_scale(a), compact_scale(b))));
               }});

  p.push_back({"ky_fan_extremality", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const Index k = 1 + Index(rng.index(std::size_t(d)));
                 const HermMatrix a = random_hermitian(rng, d);
                 const auto e = eigh(a);
                 const double top = e.values.head(k).sum();
                 const CMatrix q = e.vectors.leftCols(k);
                 const double tolerance = rel_tol * scale_of(a.matrix());
                 Outcome o;
                 o.close((q.adjoint() * a.matrix() * q).trace().real(), top, tolerance);
                 const HermMatrix pr = random_projection(rng, d, k);
                 return o.le((pr.matrix() * a.matrix() * pr.matrix()).trace().real(), top, tolerance);
               }});

  p.push_back({"interlacing", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const Index r = 1 + Index(rng.index(std::size_t(d)));
                 const HermMatrix a = random_hermitian(rng, d);
                 const auto mu = eigh(a).values;
                 const auto nu = eigh(compress(a, random_projection(rng, d, r)).restricted).values;
                 const double tolerance = rel_tol * scale_of(a.matrix());
                 Outcome o;
                 for (Index i = 0; i < r; ++i) {
                   o.le(nu(i), mu(i), tolerance);
                   o.le(mu(i + d - r), nu(i), tolerance);
                 }
                 return o;
               }});

  p.push_back({"sequence_sum_rearranged", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 const auto x = normals(rng, n), y = normals(rng, n);
                 const auto xs = dec_rearrange(x), ys = dec_rearrange(y);
                 Outcome o;
                 return o.report(majorizes(plus(x, y), plus(xs, ys)));
               }});

  p.push_back({"sequence_abs_monotone", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 const auto y = normals(rng, n);
                 const auto x = doubly_stochastic(rng, y);
                 Outcome o;
                 o.report(majorizes(x, y));
                 return o.report(submajorizes(abs_of(x), abs_of(y)));
               }});

  p.push_back({"sequence_sum_majorized", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 const auto z = dec_rearrange(normals(rng, n)), w = dec_rearrange(normals(rng, n));
                 const auto x = doubly_stochastic(rng, z), y = doubly_stochastic(rng, w);
                 Outcome o;
                 return o.report(majorizes(plus(x, y), plus(z, w)));
               }});

  p.push_back({"sequence_concatenation", base, [](CounterRng& rng) {
                 const std::size_t n1 = small_n(rng), n2 = small_n(rng);
                 const auto y = abs_of(normals(rng, n1)), w = abs_of(normals(rng, n2));
                 auto x = weakly_below(rng, y), z = weakly_below(rng, w);
                 Outcome o;
                 o.report(submajorizes(seq(x), seq(y))).report(submajorizes(seq(z), seq(w)));
                 auto xz = x, yw = y;
                 xz.insert(xz.end(), z.begin(), z.end());
                 yw.insert(yw.end(), w.begin(), w.end());
                 return o.report(submajorizes(seq(xz), seq(yw)));
               }});

  p.push_back({"sequence_product_rearranged", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 const auto x = abs_of(normals(rng, n)), y = abs_of(normals(rng, n));
                 Outcome o;
                 return o.report(submajorizes(seq(times(x, y)), seq(times(dec_rearrange(x), dec_rearrange(y)))));
               }});

  p.push_back({"sequence_product_monotone", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 const auto y = dec_rearrange(abs_of(normals(rng, n)));
                 const auto z = dec_rearrange(abs_of(normals(rng, n)));
                 const auto x = weakly_below(rng, y);
                 Outcome o;
                 o.report(submajorizes(seq(x), seq(y)));
                 return o.report(submajorizes(seq(times(x, z)), seq(times(y, z))));
               }});

  // Only the weak form holds: the three products have different sums in general.
  p.push_back({"product_rearrangement_bounds", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 const auto x = abs_of(normals(rng, n)), y = abs_of(normals(rng, n));
                 const auto low = times(dec_rearrange(x), ascending(y));
                 const auto high = times(dec_rearrange(x), dec_rearrange(y));
                 Outcome o;
                 return o.report(submajorizes(low, times(x, y))).report(submajorizes(times(x, y), high));
               }});

  p.push_back({"weighted_sum_monotone", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 const auto y = dec_rearrange(normals(rng, n));
                 auto x = doubly_stochastic(rng, y);
                 for (double& v : x) v -= rng.uniform01();
                 x = dec_rearrange(x);
                 const auto z = dec_rearrange(abs_of(normals(rng, n)));
                 Outcome o;
                 o.report(submajorizes(x, y));
                 double lhs = 0.0, rhs = 0.0, mass = 0.0;
                 for (std::size_t i = 0; i < n; ++i) {
                   lhs += x[i] * z[i];
                   rhs += y[i] * z[i];
                   mass += std::abs(y[i] * z[i]);
                 }
                 return o.le(lhs, rhs, rel_tol * std::max(1.0, mass));
               }});

  p.push_back({"scale_ordering", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix a = random_hermitian(rng, d);
                 DiagSpec spec;
                 spec.head = normals(rng, std::size_t(d));
                 if (rng.uniform01() < 0.5) {
                   spec.liminf = -rng.uniform01();
                   spec.limsup = rng.uniform01();
                 } else {
                   spec.liminf = spec.limsup = rng.normal();
                   spec.generator = DiagGenerator{DiagGenerator::Rule::harmonic, {spec.limsup, rng.normal()}};
                 }
                 Outcome o;
                 try {
                   validate(compact_scale(a));
                   validate(matrix_scale(a));
                   validate(diag_scale(spec, 2 * std::size_t(d)));
                   validate(compact_spread(a));
                 } catch (const Error&) {
                   o.require(false);
                 }
                 o.margin = 0.0;
                 return o;
               }});

  p.push_back({"submajorization_preorder", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 std::vector<double> c(n), b(n), a(n);
                 for (std::size_t i = 0; i < n; ++i) {
                   c[i] = double(int(rng.index(21)) - 10);
                   b[i] = c[i] - double(rng.index(4));
                 }
                 const auto perm = permutation(rng, n);
                 for (std::size_t i = 0; i < n; ++i) a[i] = b[perm[i]] - double(rng.index(3));
                 const auto exact = [](const MajorizationReport& r) {
                   return *std::min_element(r.margins_upper.begin(), r.margins_upper.end()) >= 0.0;
                 };
                 const auto self = submajorizes(a, a);
                 Outcome o;
                 o.require(std::all_of(self.margins_upper.begin(), self.margins_upper.end(),
                                       [](double m) { return m == 0.0; }));
                 const auto ab = submajorizes(a, b), bc = submajorizes(b, c), ac = submajorizes(a, c);
                 o.require(exact(ab) && exact(bc) && exact(ac));
                 o.margin = ac.worst_margin;
                 return o;
               }});

  p.push_back({"translation_invariance", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix a = random_hermitian(rng, d);
                 const double c = 3.0 * rng.normal();
                 const HermMatrix shifted = a + c * HermMatrix::identity(d);
                 Outcome o;
                 compare(o, matrix_spread(shifted), matrix_spread(a), rel_tol * (scale_of(a.matrix()) + std::abs(c)));
                 return o;
               }});

  p.push_back({"scaling", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix a = random_hermitian(rng, d);
                 const double c = 3.0 * rng.normal();
                 const double tolerance = rel_tol * scale_of(a.matrix()) * std::max(1.0, std::abs(c));
                 Outcome o;
                 compare(o, compact_spread(c * a), seq_scale(compact_spread(a), std::abs(c)), tolerance);
                 compare(o, compact_spread(-a), compact_spread(a), tolerance);
                 return o;
               }});

  p.push_back({"oplus_zero_compact", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix a = random_hermitian(rng, d);
                 const std::size_t k = 4 * std::size_t(d);
                 Outcome o;
                 compare(o, compact_spread(pad_zero(a, d), k), compact_spread(a, k), rel_tol * scale_of(a.matrix()));
                 return o;
               }});

  // In matrix mode the zero block moves the bottom of the spectrum.
  p.push_back({"oplus_zero_matrix_mode", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix a = random_positive(rng, d) + HermMatrix::identity(d);
                 const double gap = matrix_spread(pad_zero(a, d)).at(0) - matrix_spread(a).at(0);
                 const double lowest = eigh(a).values(d - 1);
                 Outcome o;
                 o.close(gap, lowest, rel_tol * scale_of(a.matrix()));
                 return o.require(gap > 0.5);
               }});

  p.push_back({"spread_vs_singular", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const bool positive = rng.uniform01() < 0.5;
                 const HermMatrix a = positive ? random_positive(rng, d) : random_hermitian(rng, d);
                 const TwoSidedSeq lam = compact_scale(a);
                 const SpreadSeq spr = spread_plus(lam);
                 const SpreadSeq s = svd_values(a.matrix(), lam.horizon());
                 const double tolerance = rel_tol * scale_of(a.matrix());
                 Outcome o;
                 for (std::size_t i = 0; i < lam.horizon(); ++i) {
                   o.le(0.0, spr.at(i), 0.0);
                   const double mods = std::abs(lam.pos[i]) + std::abs(lam.neg[i]);
                   o.le(spr.at(i), mods, tolerance);
                   o.le(mods, 2.0 * s.at(i), tolerance);
                   if (positive) o.le(spr.at(i), s.at(i), tolerance);
                 }
                 return o;
               }});

  p.push_back({"spread_doubling", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix a = random_hermitian(rng, d);
                 const std::size_t k = 2 * std::size_t(d);
                 const SpreadSeq spr = compact_spread(a, k);
                 const SpreadSeq doubled = compact_spread(direct_sum(a, a), 2 * k);
                 Outcome o;
                 compare(o, doubled, decreasing(interleave(spr, spr)), rel_tol * scale_of(a.matrix()));
                 return o.report(submajorizes(seq_scale(doubled, 0.5), svd_values(a.matrix(), k)));
               }});

  p.push_back({"spread_majorization_monotone", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix b = random_hermitian(rng, d);
                 CMatrix mix = CMatrix::Zero(d, d);
                 auto w = uniforms(rng, 3);
                 const double total = w[0] + w[1] + w[2];
                 for (double wj : w) {
                   const CMatrix u = random_unitary(rng, d);
                   mix += (wj / total) * (u * b.matrix() * u.adjoint());
                 }
                 const HermMatrix a = hermitian_part(mix);
                 Outcome o;
                 o.report(majorizes(compact_scale(a), compact_scale(b)));
                 return o.report(submajorizes(compact_spread(a), compact_spread(b)));
               }});

  p.push_back({"additive_spread", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const HermMatrix a = random_hermitian(rng, d), b = random_hermitian(rng, d);
                 Outcome o;
                 return o.report(majorizes(spread_full(matrix_scale(a + b)),
                                           seq_sum(spread_full(matrix_scale(a)), spread_full(matrix_scale(b)))));
               }});

  p.push_back({"gauge_monotone", base, [](CounterRng& rng) {
                 const std::size_t n = small_n(rng);
                 const auto y = abs_of(normals(rng, n));
                 const auto x = weakly_below(rng, y);
                 Outcome o;
                 o.report(submajorizes(seq(x), seq(y)));
                 for (const auto& norm : standard_norms()) {
                   const double gy = gauge(seq(y), norm);
                   o.le(gauge(seq(x), norm), gy, rel_tol * std::max(1.0, gy));
                 }
                 return o;
               }});

  p.push_back({"unitary_invariance", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const CMatrix a = gaussian_matrix(rng, d, d);
                 const CMatrix u = random_unitary(rng, d), v = random_unitary(rng, d);
                 const SpreadSeq s = svd_values(a);
                 Outcome o;
                 compare(o, svd_values(u * a * v), s, rel_tol * std::max(1.0, s.at(0)));
                 return o;
               }});

  p.push_back({"singular_value_contraction", base, [](CounterRng& rng) {
                 const Index d = small_d(rng);
                 const CMatrix a = gaussian_matrix(rng, d, d);
                 const CMatrix x = gaussian_matrix(rng, d, d), y = gaussian_matrix(rng, d, d);
                 const double factor = operator_norm(x) * operator_norm(y);
                 const SpreadSeq lhs = svd_values(x * a * y);
                 const SpreadSeq s = svd_values(a);
                 Outcome o;
                 for (std::size_t i = 0; i < lhs.horizon(); ++i) {
                   o.le(lhs.at(i), factor * s.at(i), rel_tol * std::max(1.0, factor * s.at(0)));
                 }
                 return o;
               }});

  return p;
}

}  // namespace

PropertyReport property_suite(std::uint64_t seed, std::size_t trials) {
  PropertyReport out;
  out.seed = seed;
  out.pass = true;
  for (const auto& entry : properties(trials == 0 ? 500 : trials)) {
    PropertyResult r;
    r.name = entry.name;
    r.trials = entry.trials;
    r.worst_margin = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < entry.trials; ++t) {
      CounterRng rng(derive_seed(seed, entry.name, t));
      Outcome o;
      try {
        o = entry.run(rng);
      } catch (const Error&) {
        o.ok = false;
      }
      if (!o.ok) ++r.failures;
      r.worst_margin = std::min(r.worst_margin, o.margin);
    }
    if (entry.trials == 0 || !std::isfinite(r.worst_margin)) r.worst_margin = 0.0;
    r.pass = r.failures == 0;
    out.pass = out.pass && r.pass;
    out.results.push_back(std::move(r));
  }
  return out;
}

}  // namespace sspread
