#include "sspread/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace sspread {

Index trial_dim(std::uint64_t trial_seed, DimRange range) {
  if (range.lo < 1 || range.hi < range.lo) throw Error(ErrorCode::invalid_argument, "bad dimension range");
  CounterRng rng(trial_seed ^ 0xD1B54A32D192ED03ULL);
  return range.lo + Index(rng.index(std::size_t(range.hi - range.lo + 1)));
}

namespace {

using Trial = std::function<Verdict(CounterRng&, Index)>;

Index random_rank(CounterRng& rng, Index d) { return Index(rng.index(std::size_t(d) + 1)); }

// Hermitian of rank r with Gaussian eigenvalues.
HermMatrix random_low_rank(CounterRng& rng, Index d, Index r) {
  const CMatrix q = random_unitary(rng, d).leftCols(r);
  RVector lam(r);
  for (Index k = 0; k < r; ++k) lam(k) = rng.normal();
  return hermitian_part(CMatrix(q * lam.asDiagonal() * q.adjoint()));
}

HermMatrix maybe_positive(CounterRng& rng, Index d) {
  return rng.uniform01() < 0.5 ? random_hermitian(rng, d) : random_positive(rng, d);
}

// Indefinite by construction: one eigenvalue above +0.05, one below -0.05.
HermMatrix random_indefinite(CounterRng& rng, Index d) {
  const CMatrix u = random_unitary(rng, d);
  RVector lam(d);
  for (Index k = 0; k < d; ++k) lam(k) = rng.normal();
  lam(0) = std::abs(lam(0)) + 0.05;
  lam(1) = -std::abs(lam(1)) - 0.05;
  return hermitian_part(CMatrix(u * lam.asDiagonal() * u.adjoint()));
}

const std::map<std::string, Trial>& registry() {
  static const std::map<std::string, Trial> r = [] {
    std::map<std::string, Trial> m;
    m["tao_positive"] = [](CounterRng& rng, Index d) {
      const HermMatrix f = random_positive(rng, d);
      return check_tao_positive(f, d > 1 ? 1 + Index(rng.index(std::size_t(d - 1))) : 0);
    };
    m["key"] = [](CounterRng& rng, Index d) {
      const HermMatrix a = random_hermitian(rng, d);
      return check_key(a, Index(rng.index(std::size_t(d) + 1)));
    };
    m["trace_pairing"] = [](CounterRng& rng, Index d) {
      const HermMatrix a = random_low_rank(rng, d, 1 + Index(rng.index(std::size_t(d))));
      const HermMatrix b = random_hermitian(rng, d);
      if (rng.uniform01() < 0.5) return check_trace_pairing(a, b);
      return check_trace_pairing(a, TailedMatrix{b.matrix(), rng.normal()});
    };
    m["commutator_scale"] = [](CounterRng& rng, Index d) {
      const HermMatrix a = random_hermitian(rng, d);
      return check_commutator_scale(a, random_hermitian(rng, d));
    };
    m["commutator_sv"] = [](CounterRng& rng, Index d) {
      const HermMatrix a = random_hermitian(rng, d);
      return check_commutator_sv(a, random_hermitian(rng, d));
    };
    m["mixed_commutator"] = [](CounterRng& rng, Index d) {
      const Index d2 = 1 + Index(rng.index(std::size_t(d)));
      const HermMatrix a = maybe_positive(rng, d);
      const HermMatrix b = maybe_positive(rng, d2);
      return check_mixed_commutator(a, b, gaussian_matrix(rng, d, d2));
    };
    m["general_commutator"] = [](CounterRng& rng, Index d) {
      const Index d2 = 1 + Index(rng.index(std::size_t(d)));
      const CMatrix a = gaussian_matrix(rng, d, d);
      const CMatrix b = gaussian_matrix(rng, d2, d2);
      return check_general_commutator(a, b, gaussian_matrix(rng, d, d2));
    };
    m["unitary_conj"] = [](CounterRng& rng, Index d) {
      const HermMatrix a = random_hermitian(rng, d);
      const HermMatrix x = random_hermitian(rng, d);
      const double target = rng.uniform(0.0, std::numbers::pi);
      const double norm = operator_norm(x.matrix());
      return check_unitary_conj(a, (norm > 0.0 ? target / norm : 0.0) * x);
    };
    m["agm_projection"] = [](CounterRng& rng, Index d) {
      const auto part = random_partition_isometry(rng, d, random_rank(rng, d));
      return check_agm_projection(part.s, part.c, random_hermitian(rng, d));
    };
    m["agm_pair"] = [](CounterRng& rng, Index d) {
      const auto pair = random_agm_pair(rng, d, random_rank(rng, d));
      const HermMatrix e1 = random_hermitian(rng, d);
      const HermMatrix e2 = rng.uniform01() < 0.5 ? e1 : random_hermitian(rng, d);
      return check_agm_pair(pair.s, pair.c, e1, e2);
    };
    m["agm_compact"] = [](CounterRng& rng, Index d) {
      const auto part = random_partition_isometry(rng, d, random_rank(rng, d));
      return check_agm_compact(part.s, part.c, maybe_positive(rng, d));
    };
    m["agm_general"] = [](CounterRng& rng, Index d) {
      const Index rows = 1 + Index(rng.index(std::size_t(d) + 2));
      const CMatrix a = gaussian_matrix(rng, rows, d);
      const CMatrix b = gaussian_matrix(rng, rows, d);
      return check_agm_general(a, b, maybe_positive(rng, d));
    };
    m["zhan"] = [](CounterRng& rng, Index d) {
      const HermMatrix e = random_hermitian(rng, d);
      return check_zhan(e, random_hermitian(rng, d));
    };
    for (const auto& item : equivalence_items()) {
      m[item] = [item](CounterRng& rng, Index d) { return equivalence_trial(item, rng.next_u64(), d); };
    }
    m["control_kittaneh"] = [](CounterRng& rng, Index d) {
      const Index d2 = 1 + Index(rng.index(std::size_t(d)));
      const HermMatrix c = random_positive(rng, d);
      const HermMatrix e = random_positive(rng, d2);
      return check_kittaneh_positive(c, e, gaussian_matrix(rng, d, d2));
    };
    m["control_bhatia_kittaneh"] = [](CounterRng& rng, Index d) {
      const Index rows = 1 + Index(rng.index(std::size_t(d) + 2));
      const CMatrix a = gaussian_matrix(rng, rows, d);
      return check_bhatia_kittaneh(a, gaussian_matrix(rng, rows, d));
    };
    m["strict_gap"] = [](CounterRng& rng, Index d) { return check_strict_gap(random_indefinite(rng, std::max<Index>(d, 2))); };
    return m;
  }();
  return r;
}

}  // namespace

const std::vector<std::string>& fuzz_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = {"tao_positive",   "key",          "trace_pairing", "commutator_scale",
                                  "commutator_sv",  "mixed_commutator", "general_commutator", "unitary_conj",
                                  "agm_projection", "agm_pair",     "agm_compact",   "agm_general",
                                  "zhan"};
    for (const auto& item : equivalence_items()) v.push_back(item);
    v.insert(v.end(), {"control_bhatia_kittaneh", "control_kittaneh", "strict_gap"});
    return v;
  }();
  return ids;
}

bool is_fuzz_id(const std::string& id) { return registry().count(id) != 0; }

Verdict fuzz_trial(const std::string& id, std::uint64_t trial_seed, Index dim) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw Error(ErrorCode::unknown_inequality, "unknown inequality '" + id + "'");
  CounterRng rng(trial_seed);
  return it->second(rng, dim);
}

FuzzSummary fuzz(const std::string& id, std::size_t trials, DimRange dims, std::uint64_t seed) {
  if (!is_fuzz_id(id)) throw Error(ErrorCode::unknown_inequality, "unknown inequality '" + id + "'");
  const auto start = std::chrono::steady_clock::now();
  FuzzSummary out;
  out.ineq_id = id;
  out.trials = trials;
  bool first = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = derive_seed(seed, id, t);
    const Verdict v = fuzz_trial(id, s, trial_dim(s, dims));
    if (!v.holds) ++out.failures;
    const double m = v.worst_margin();
    if (first || m < out.worst_margin) {
      out.worst_margin = m;
      out.worst_seed = s;
      first = false;
    }
  }
  out.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

KittanehExample kittaneh_example() {
  CMatrix b(2, 2), x(2, 2);
  b << 1, 2, 2, 1;
  x << 2, 1, 1, 2;
  return {HermMatrix::identity(2), HermMatrix(b), x};
}

Agm2x2Example agm_2x2_example() {
  using std::numbers::pi;
  CMatrix s = CMatrix::Zero(2, 2), c = CMatrix::Zero(2, 2), e(2, 2);
  s.diagonal() << std::sin(pi / 3), std::sin(pi / 5);
  c.diagonal() << std::cos(pi / 3), std::cos(pi / 5);
  e << 0, 1, 1, 0;
  return {s, c, HermMatrix(e)};
}

Agm3x3Example agm_3x3_example() {
  CMatrix a(3, 3), b(3, 3), e(3, 3);
  a << 1, 0, -1, 0, 1, 0, 1, 0, 1;
  b << -1, 0, 0.5, 0, 1, 0, 0.5, 0, 1;
  e << 1, 0, 2, 0, 1, 0, 2, 0, 1;
  return {a, b, HermMatrix(e)};
}

DiagSpec diag_scale_example() {
  DiagSpec spec;
  spec.liminf = -1.0;
  spec.limsup = 1.0;
  spec.generator = DiagGenerator{DiagGenerator::Rule::interleaved_harmonic, {1.0, -1.0, 1.0}};
  return spec;
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {"diag-scale", "kittaneh-fail", "agm-fail-2x2", "agm-fail-3x3"};
  return ids;
}

namespace {

constexpr double exact_tol = 1e-9;

class ReproBuilder {
 public:
  explicit ReproBuilder(std::string id) { r_.example_id = std::move(id); }

  void value(std::string name, double computed, double expected, double tolerance) {
    r_.items.push_back({std::move(name), computed, expected, tolerance, std::abs(computed - expected) <= tolerance});
  }
  void flag(std::string name, bool computed, bool expected = true) {
    r_.items.push_back({std::move(name), computed ? 1.0 : 0.0, expected ? 1.0 : 0.0, 0.0, computed == expected});
  }
  void sequence(const std::string& name, const std::vector<double>& computed, const std::vector<double>& expected,
                double tolerance) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const double c = i < computed.size() ? computed[i] : std::nan("");
      value(name + "[" + std::to_string(i + 1) + "]", c, expected[i], tolerance);
    }
  }
  void verdict(Verdict v) { r_.verdicts.push_back(std::move(v)); }

  ReproReport finish() {
    r_.pass = std::all_of(r_.items.begin(), r_.items.end(), [](const ReproItem& i) { return i.pass; });
    return std::move(r_);
  }

 private:
  ReproReport r_;
};

ReproReport repro_diag_scale() {
  ReproBuilder b("diag-scale");
  constexpr std::size_t k = 50;
  const TwoSidedSeq lam = diag_scale(diag_scale_example(), k);
  std::vector<double> pos(k), neg(k, -1.0);
  for (std::size_t i = 0; i < k; ++i) pos[i] = 1.0 + 1.0 / double(i + 1);
  b.sequence("lambda", lam.pos, pos, 1e-12);
  b.sequence("lambda_neg", lam.neg, neg, 1e-12);
  b.value("pos_tail", lam.pos_tail.value_or(std::nan("")), 1.0, 1e-12);
  b.value("neg_tail", lam.neg_tail.value_or(std::nan("")), -1.0, 1e-12);
  return b.finish();
}

ReproReport repro_kittaneh() {
  const auto start = std::chrono::steady_clock::now();
  ReproBuilder b("kittaneh-fail");
  const auto ex = kittaneh_example();
  const CMatrix diff = ex.a.matrix() * ex.x - ex.x * ex.b.matrix();
  const SpreadSeq s = svd_values(diff);
  b.sequence("s(AX-XB)", s.values, {6.0, 2.0}, exact_tol);
  const TwoSidedSeq lam = compact_scale(direct_sum(ex.a, ex.b));
  b.sequence("lambda(A+B)_pos", lam.pos, {3.0, 1.0, 1.0, 0.0}, exact_tol);
  b.sequence("lambda(A+B)_neg", lam.neg, {-1.0, 0.0, 0.0, 0.0}, exact_tol);
  const SpreadSeq sx = svd_values(ex.x);
  b.sequence("s(X)", sx.values, {3.0, 1.0}, exact_tol);
  const SpreadSeq spr = spread_plus(lam);
  b.sequence("Spr+(A+B)", spr.values, {4.0, 1.0, 1.0, 0.0}, exact_tol);
  b.value("Spr+_2*s_2(X)", spr.at(1) * sx.at(1), 1.0, exact_tol);

  Verdict v = check_mixed_commutator(ex.a, ex.b, ex.x);
  b.sequence("margins", v.report.margins_upper, {6.0, 5.0, 5.0}, exact_tol);
  b.flag("submajorization_holds", v.report.holds);
  b.flag("entrywise_fails", v.entrywise_fails());
  b.value("first_entrywise_violation", v.entrywise && v.entrywise->first_violation ? double(*v.entrywise->first_violation) : 0.0,
          2.0, 0.0);
  b.verdict(std::move(v));
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  b.flag("runtime_under_1s", ms < 1000.0);
  return b.finish();
}

ReproReport repro_agm_2x2() {
  ReproBuilder b("agm-fail-2x2");
  const auto ex = agm_2x2_example();
  const CMatrix sec = ex.s * ex.e.matrix() * ex.c.adjoint();
  const double frob = sec.norm();
  b.value("|SEC*|_2", frob, 0.7598, 5e-4);
  b.value("|E|_2/2", 0.5 * ex.e.matrix().norm(), std::numbers::sqrt2 / 2, exact_tol);
  b.flag("|SEC*|_2>|E|_2/2", frob > std::numbers::sqrt2 / 2);
  b.sequence("Spr+(E)", compact_spread(ex.e).values, {2.0, 0.0}, exact_tol);

  Verdict compact = check_agm_compact(ex.s, ex.c, ex.e);
  b.flag("spread_bound_holds", compact.holds);
  const auto frob_check = std::find_if(compact.checks.begin(), compact.checks.end(),
                                       [](const SubCheck& c) { return c.name == "half_norm:schatten:2"; });
  b.flag("half_norm_frobenius_fails", frob_check != compact.checks.end() && !frob_check->holds);
  b.verdict(std::move(compact));

  Verdict projection = check_agm_projection(ex.s, ex.c, ex.e);
  b.flag("projection_bound_holds", projection.holds);
  b.verdict(std::move(projection));

  // The identity treated as a non-compact operator has zero spread.
  const CMatrix id = CMatrix::Identity(2, 2);
  Verdict identity = check_agm_compact(ex.s, ex.c, TailedMatrix{id, 1.0});
  b.flag("identity_model_fails", !identity.holds);
  b.verdict(std::move(identity));
  return b.finish();
}

ReproReport repro_agm_3x3() {
  ReproBuilder b("agm-fail-3x3");
  const auto ex = agm_3x3_example();
  const CMatrix f = ex.a.adjoint() * ex.a + ex.b.adjoint() * ex.b;
  const double expected_f[3][3] = {{13.0 / 4, 0, 0}, {0, 2, 0}, {0, 0, 13.0 / 4}};
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      b.value("F(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", f(i, j).real(), expected_f[i][j],
              exact_tol);
    }
  }
  const HermMatrix g = sqrt_psd(hermitian_part(f));
  const HermMatrix geg = hermitian_part(CMatrix(g.matrix() * ex.e.matrix() * g.matrix()));
  b.sequence("Spr+(GEG)", compact_spread(geg).values, {13.0, 2.0, 0.0}, exact_tol);
  const SpreadSeq s = svd_values(ex.a * ex.e.matrix() * ex.b.adjoint());
  b.sequence("s(AEB*)", s.values, {4.74, 1.58, 1.0}, 5e-2);

  Verdict v = check_agm_general(ex.a, ex.b, ex.e);
  b.flag("submajorization_holds", v.report.holds);
  b.flag("entrywise_fails", v.entrywise_fails());
  b.flag("2s_2>2", 2.0 * s.at(1) > 2.0);
  b.verdict(std::move(v));
  return b.finish();
}

}  // namespace

ReproReport repro(const std::string& example_id) {
  if (example_id == "diag-scale") return repro_diag_scale();
  if (example_id == "kittaneh-fail") return repro_kittaneh();
  if (example_id == "agm-fail-2x2") return repro_agm_2x2();
  if (example_id == "agm-fail-3x3") return repro_agm_3x3();
  throw Error(ErrorCode::unknown_example, "unknown example '" + example_id + "'");
}

}  // namespace sspread
