#include "sspread/ineq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sspread/digest.hpp"
#include "sspread/random.hpp"

namespace sspread {

namespace {

constexpr double scalar_rel_tol = 1e-9;
constexpr double projection_sum_tol = 1e-8;

SpreadSeq padded(const SpreadSeq& a, std::size_t k) {
  SpreadSeq out = a;
  if (out.values.size() < k) out.values.resize(k, a.tail);
  return out;
}

// Product of two non-increasing sequences on their common horizon.
SpreadSeq product(const SpreadSeq& a, const SpreadSeq& b) {
  const std::size_t k = std::max(a.horizon(), b.horizon());
  return seq_product(padded(a, k), padded(b, k));
}

SpreadSeq sum(const SpreadSeq& a, const SpreadSeq& b) {
  const std::size_t k = std::max(a.horizon(), b.horizon());
  return seq_sum(padded(a, k), padded(b, k));
}

SpreadSeq as_matrix_model(SpreadSeq s, std::size_t n) {
  s.values.resize(n, 0.0);
  s.model = Model::matrix;
  s.tail = 0.0;
  return s;
}

// Singular values of a positive semidefinite matrix read off its spectrum.
SpreadSeq psd_singular_values(const HermMatrix& a, std::size_t horizon) {
  const auto e = eigh(a);
  const double scale = std::max(1.0, e.values.size() ? std::abs(e.values(0)) : 0.0);
  const RVector v = clamp_psd_spectrum(e.values, scale);
  SpreadSeq out;
  out.values.assign(std::max<std::size_t>(horizon, std::size_t(v.size())), 0.0);
  for (Index i = 0; i < v.size(); ++i) out.values[std::size_t(i)] = v(i);
  return out;
}

bool is_psd(const HermMatrix& a) {
  if (a.dim() == 0) return true;
  const auto e = eigh(a);
  return e.values(e.values.size() - 1) >= -tol::psd_clamp * std::max(1.0, std::abs(e.values(0)));
}

double min_eigenvalue(const HermMatrix& a) {
  const auto e = eigh(a);
  return e.values(e.values.size() - 1);
}

double max_eigenvalue(const HermMatrix& a) { return eigh(a).values(0); }

void require_square_same(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw Error(ErrorCode::dimension_mismatch, what);
  }
}

Model combined_model(const SpreadSeq& a, const SpreadSeq& b) {
  if (a.model == Model::matrix) return Model::matrix;
  if (a.model == Model::diagonal || b.model == Model::diagonal) return Model::diagonal;
  return Model::compact;
}

Verdict submajorization_verdict(std::string id, SpreadSeq lhs, SpreadSeq rhs, Digest d) {
  Verdict v;
  v.report = submajorizes(lhs, rhs);
  v.mode = combined_model(lhs, rhs);
  v.witness = d.add(std::string_view(id)).value();
  v.ineq_id = std::move(id);
  v.claim = ClaimKind::submajorization;
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

Verdict entrywise_verdict(std::string id, SpreadSeq lhs, SpreadSeq rhs, Digest d) {
  Verdict v = submajorization_verdict(std::move(id), std::move(lhs), std::move(rhs), d);
  v.claim = ClaimKind::entrywise;
  v.entrywise = entrywise_le(v.lhs, v.rhs);
  return v;
}

MajorizationReport scalar_report(double lhs, double rhs, double tolerance) {
  MajorizationReport r;
  r.margins_upper = {rhs - lhs};
  r.tolerance = tolerance;
  r.worst_k = 1;
  r.worst_margin = rhs - lhs;
  r.holds = r.worst_margin >= -tolerance;
  return r;
}

Verdict scalar_verdict(std::string id, double lhs, double rhs, double tolerance, Digest d) {
  Verdict v;
  v.claim = ClaimKind::scalar;
  v.report = scalar_report(lhs, rhs, tolerance);
  v.lhs.values = {lhs};
  v.rhs.values = {rhs};
  v.witness = d.add(std::string_view(id)).value();
  v.ineq_id = std::move(id);
  return v;
}

void finalize(Verdict& v) {
  bool ok = v.claim == ClaimKind::entrywise ? v.entrywise->holds : v.report.holds;
  for (const auto& c : v.checks) ok = ok && (!c.implied || c.holds);
  v.holds = ok;
}

SubCheck from_report(std::string name, bool implied, const MajorizationReport& r) {
  return {std::move(name), implied, r.holds, r.worst_margin};
}

SubCheck from_entrywise(std::string name, bool implied, const EntrywiseReport& r) {
  return {std::move(name), implied, r.holds, r.worst_margin};
}

SubCheck scalar_check(std::string name, bool implied, double lhs, double rhs) {
  const double margin = rhs - lhs;
  const double tolerance = scalar_rel_tol * std::max(1.0, std::abs(rhs));
  return {std::move(name), implied, margin >= -tolerance, margin};
}

// N(lhs) <= N(bound) for every standard gauge norm.
void add_norm_forms(Verdict& v, const std::string& prefix, const SpreadSeq& lhs, const SpreadSeq& bound,
                    bool implied) {
  for (const auto& n : standard_norms()) {
    v.checks.push_back(scalar_check(prefix + n.name(), implied, gauge(lhs, n), gauge(bound, n)));
  }
}

void require_projection_sum(const CMatrix& p) {
  const double defect = (p * p - p).norm();
  if (defect > projection_sum_tol * std::max(1.0, p.norm())) {
    throw Error(ErrorCode::not_projection_sum, "C*C + S*S is not a projection");
  }
}

void require_projection(const HermMatrix& p) {
  if (projection_defect(p.matrix()) > tol::projection * entry_scale(p.matrix())) {
    throw Error(ErrorCode::not_projection, "P is not an orthogonal projection");
  }
}

// Tail of a scalar part that must be 0 or 1.
double projection_tail(Complex t, ErrorCode code) {
  if (std::abs(t.imag()) > projection_sum_tol) throw Error(code, "projection tail must be real");
  const double r = t.real();
  if (std::abs(r) > projection_sum_tol && std::abs(r - 1.0) > projection_sum_tol) {
    throw Error(code, "projection tail must be 0 or 1");
  }
  return std::abs(r) <= projection_sum_tol ? 0.0 : 1.0;
}

TailedMatrix minus(const TailedMatrix& a, const TailedMatrix& b) {
  if (a.head.rows() != b.head.rows() || a.head.cols() != b.head.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "tailed difference");
  }
  return {a.head - b.head, a.tail - b.tail};
}

Digest digest_of(const TailedMatrix& a) {
  Digest d;
  d.add(a.head).add(a.tail.real()).add(a.tail.imag());
  return d;
}

std::vector<double> eigen_list(const HermMatrix& a) {
  const auto e = eigh(a);
  return {e.values.data(), e.values.data() + e.values.size()};
}

}  // namespace

std::string_view to_string(ClaimKind k) noexcept {
  switch (k) {
    case ClaimKind::submajorization: return "submajorization";
    case ClaimKind::entrywise: return "entrywise";
    case ClaimKind::scalar: return "scalar";
  }
  return "unknown";
}

double Verdict::worst_margin() const {
  if (claim == ClaimKind::entrywise && entrywise) return entrywise->worst_margin;
  return report.worst_margin;
}

const std::vector<GaugeNorm>& standard_norms() {
  static const std::vector<GaugeNorm> norms = {GaugeNorm::parse("op"), GaugeNorm::parse("kyfan:2"),
                                               GaugeNorm::parse("schatten:1"), GaugeNorm::parse("schatten:2"),
                                               GaugeNorm::parse("schatten:4")};
  return norms;
}

Verdict check_tao_positive(const HermMatrix& f, Index split) {
  const Index n = f.dim();
  if (split < 0 || split > n) throw Error(ErrorCode::invalid_argument, "split outside [0, dim]");
  if (n > 0) {
    const auto e = eigh(f);
    if (e.values(n - 1) < -1e-10 * std::max(1.0, std::abs(e.values(0)))) {
      throw Error(ErrorCode::not_positive, "F is not positive semidefinite");
    }
  }
  const CMatrix g = f.matrix().block(0, split, split, n - split);
  const std::size_t k = std::size_t(n);
  SpreadSeq lhs = seq_scale(svd_values(g, k), 2.0);
  SpreadSeq rhs = psd_singular_values(f, k);
  Verdict v = entrywise_verdict("tao_positive", lhs, rhs, Digest().add(f.matrix()).add(std::uint64_t(split)));
  v.checks.push_back(from_report("spread_form", true, submajorizes(v.lhs, compact_spread(f))));
  finalize(v);
  return v;
}

Verdict check_key(const HermMatrix& a, Index split) {
  const Index n = a.dim();
  if (split < 0 || split > n) throw Error(ErrorCode::invalid_argument, "split outside [0, dim]");
  const CMatrix b = a.matrix().block(0, split, split, n - split);
  const std::size_t k = std::max<std::size_t>(1, 2 * std::size_t(n));
  Verdict v = submajorization_verdict("key", seq_scale(svd_values(b, k), 2.0), compact_spread(a, k),
                                      Digest().add(a.matrix()).add(std::uint64_t(split)));
  finalize(v);
  return v;
}

namespace {

Verdict trace_pairing(const HermMatrix& a, const CMatrix& b_head, const TwoSidedSeq& lb, Digest d) {
  const TwoSidedSeq la = compact_scale(a, lb.horizon());
  const double lhs = (a.matrix() * b_head).trace().real();
  double rhs = 0.0;
  double mass = 0.0;
  for (std::size_t i = 0; i < la.horizon(); ++i) {
    rhs += la.pos[i] * lb.pos[i] + la.neg[i] * lb.neg[i];
    mass += std::abs(la.pos[i] * lb.pos[i]) + std::abs(la.neg[i] * lb.neg[i]);
  }
  Verdict v = scalar_verdict("trace_pairing", lhs, rhs, scalar_rel_tol * std::max(1.0, mass), d);
  v.mode = lb.model;
  finalize(v);
  return v;
}

}  // namespace

Verdict check_trace_pairing(const HermMatrix& a, const HermMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "trace pairing");
  return trace_pairing(a, b.matrix(), compact_scale(b), Digest().add(a.matrix()).add(b.matrix()));
}

Verdict check_trace_pairing(const HermMatrix& a, const TailedMatrix& b) {
  if (a.dim() != b.head.rows()) throw Error(ErrorCode::dimension_mismatch, "trace pairing");
  const std::size_t k = std::max<std::size_t>(1, 2 * std::size_t(a.dim()));
  return trace_pairing(a, b.head, tailed_scale(b, k), digest_of(b).add(a.matrix()));
}

Verdict check_commutator_scale(const HermMatrix& a, const HermMatrix& x) {
  if (a.dim() != x.dim()) throw Error(ErrorCode::dimension_mismatch, "commutator of different sizes");
  const CMatrix comm = a.matrix() * x.matrix() - x.matrix() * a.matrix();
  const HermMatrix c = hermitian_part(CMatrix(Complex(0.0, 1.0) * comm));
  const TwoSidedSeq lam = compact_scale(c);

  SpreadSeq lhs;
  lhs.values = lam.pos;
  SpreadSeq neg_side;
  for (double v : lam.neg) neg_side.values.push_back(-v);
  const SpreadSeq rhs = seq_scale(product(compact_spread(a), compact_spread(x)), 0.5);

  Verdict v = submajorization_verdict("commutator_scale", lhs, rhs, Digest().add(a.matrix()).add(x.matrix()));
  v.checks.push_back(from_report("negative_side", true, submajorizes(neg_side, rhs)));
  finalize(v);
  return v;
}

Verdict check_commutator_sv(const HermMatrix& a, const HermMatrix& x) {
  if (a.dim() != x.dim()) throw Error(ErrorCode::dimension_mismatch, "commutator of different sizes");
  const std::size_t d = std::size_t(a.dim());
  const CMatrix comm = a.matrix() * x.matrix() - x.matrix() * a.matrix();
  const HermMatrix aa = direct_sum(a, a);
  const HermMatrix xx = direct_sum(x, x);
  const SpreadSeq s = svd_values(comm, 4 * d);
  const SpreadSeq rhs = seq_scale(product(compact_spread(aa), compact_spread(xx)), 0.5);

  Verdict v = submajorization_verdict("commutator_sv", s, rhs, Digest().add(a.matrix()).add(x.matrix()));
  add_norm_forms(v, "norm:", s, rhs, true);
  const SpreadSeq rhs_m = seq_scale(seq_product(matrix_spread(aa), matrix_spread(xx)), 0.5);
  v.checks.push_back(from_report("matrix_model", true, submajorizes(as_matrix_model(s, d), rhs_m)));
  finalize(v);
  return v;
}

Verdict check_mixed_commutator(const HermMatrix& a, const HermMatrix& b, const CMatrix& x) {
  if (x.rows() != a.dim() || x.cols() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "X must be dim A x dim B");
  const std::size_t k = std::max<std::size_t>(1, 2 * std::size_t(a.dim() + b.dim()));
  const CMatrix diff = a.matrix() * x - x * b.matrix();
  const SpreadSeq lhs = svd_values(diff, k);
  const SpreadSeq sx = svd_values(x, k);
  const SpreadSeq rhs = product(compact_spread(direct_sum(a, b), k), sx);

  Verdict v = submajorization_verdict("mixed_commutator", lhs, rhs,
                                      Digest().add(a.matrix()).add(b.matrix()).add(x));
  v.entrywise = entrywise_le(lhs, rhs);
  if (is_psd(a) && is_psd(b)) {
    const SpreadSeq bound = seq_scale(psd_singular_values(direct_sum(a, b), k), sx.at(0));
    v.checks.push_back(from_entrywise("kittaneh_positive", true, entrywise_le(lhs, bound)));
  }
  finalize(v);
  return v;
}

Verdict check_general_commutator(const CMatrix& a, const CMatrix& b, const CMatrix& x) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) throw Error(ErrorCode::dimension_mismatch, "A and B must be square");
  if (x.rows() != a.rows() || x.cols() != b.rows()) throw Error(ErrorCode::dimension_mismatch, "X must be dim A x dim B");
  const std::size_t k = std::max<std::size_t>(1, 2 * std::size_t(a.rows() + b.rows()));
  const HermMatrix a1 = hermitian_part(a), a2 = skew_part(a);
  const HermMatrix b1 = hermitian_part(b), b2 = skew_part(b);
  const HermMatrix ab1 = direct_sum(a1, b1), ab2 = direct_sum(a2, b2);
  const SpreadSeq lhs = svd_values(CMatrix(a * x - x * b), k);
  const SpreadSeq sx = svd_values(x, k);
  const SpreadSeq rhs = product(sum(compact_spread(ab1, k), compact_spread(ab2, k)), sx);

  Verdict v = submajorization_verdict("general_commutator", lhs, rhs, Digest().add(a).add(b).add(x));

  // The compact embedding puts 0 in every spectrum, so the bounds a_j <= A_j
  // <= a_j' include 0.
  double width = 0.0;
  for (const HermMatrix* m : {&ab1, &ab2}) {
    width += std::max(max_eigenvalue(*m), 0.0) - std::min(min_eigenvalue(*m), 0.0);
  }
  const SpreadSeq scalar_bound = seq_scale(sx, width);
  v.checks.push_back(from_report("scalar_bound", true, submajorizes(lhs, scalar_bound)));
  add_norm_forms(v, "scalar_norm:", lhs, scalar_bound, true);
  finalize(v);
  return v;
}

Verdict check_unitary_conj(const HermMatrix& a, const HermMatrix& x) {
  if (a.dim() != x.dim()) throw Error(ErrorCode::dimension_mismatch, "A and X must have equal size");
  const std::size_t d = std::size_t(a.dim());
  const CMatrix u = unitary_exp(x);
  const CMatrix diff = a.matrix() - u.adjoint() * a.matrix() * u;
  const SpreadSeq lhs = svd_values(diff, 4 * d);
  const SpreadSeq rhs = seq_scale(product(compact_spread(direct_sum(x, x)), compact_spread(direct_sum(a, a))), 0.5);
  Verdict v = submajorization_verdict("unitary_conj", lhs, rhs, Digest().add(a.matrix()).add(x.matrix()));
  finalize(v);
  return v;
}

CMatrix douglas_factorize(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::dimension_mismatch, "A and B must have the same row count");
  const CMatrix bp = pinv(b);
  const CMatrix residual = a - b * (bp * a);
  if (residual.norm() > 1e-8 * std::max(1.0, a.norm())) {
    throw Error(ErrorCode::range_not_contained, "range of A is not contained in range of B");
  }
  return bp * a;
}

Verdict check_agm_projection(const CMatrix& s, const CMatrix& c, const HermMatrix& e) {
  if (s.rows() != c.rows() || s.cols() != c.cols() || s.cols() != e.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "S, C and E have incompatible sizes");
  }
  const CMatrix p = c.adjoint() * c + s.adjoint() * s;
  require_projection_sum(p);
  const std::size_t d = std::size_t(e.dim());
  const HermMatrix pep = hermitian_part(CMatrix(p * e.matrix() * p));
  const HermMatrix pep0 = pad_zero(pep, e.dim());
  const CMatrix sec = s * e.matrix() * c.adjoint();
  const SpreadSeq lhs = seq_scale(svd_values(sec, 2 * d), 2.0);

  Verdict v = submajorization_verdict("agm_projection", lhs, compact_spread(pep0),
                                      Digest().add(s).add(c).add(e.matrix()));
  if (std::size_t(sec.rows()) == d) {
    v.checks.push_back(from_report("matrix_model", true, submajorizes(as_matrix_model(lhs, d), matrix_spread(pep0))));
  }
  finalize(v);
  return v;
}

Verdict check_agm_projection(const TailedMatrix& s, const TailedMatrix& c, const TailedMatrix& e) {
  const Index d = e.head.rows();
  for (const TailedMatrix* m : {&s, &c, &e}) {
    if (m->head.rows() != d || m->head.cols() != d) throw Error(ErrorCode::dimension_mismatch, "heads must be square of equal size");
  }
  const TailedMatrix cc = adjoint(c) * c;
  const TailedMatrix ss = adjoint(s) * s;
  const TailedMatrix psum{cc.head + ss.head, cc.tail + ss.tail};
  require_projection_sum(psum.head);
  const double pt = projection_tail(psum.tail, ErrorCode::not_projection_sum);
  if (std::abs(e.tail.imag()) > tol::hermitian) throw Error(ErrorCode::not_hermitian, "E tail must be real");

  const std::size_t k = 2 * std::size_t(d);
  const TailedMatrix sec = s * e * adjoint(c);
  const SpreadSeq lhs = seq_scale(tailed_singular_values(sec, k), 2.0);

  // PEP ⊕ 0 has the two accumulation points p·t and 0.
  DiagSpec spec;
  spec.head = eigen_list(hermitian_part(CMatrix(psum.head * e.head * psum.head)));
  const double t = pt * e.tail.real();
  spec.liminf = std::min(t, 0.0);
  spec.limsup = std::max(t, 0.0);
  const SpreadSeq rhs = spread_plus(diag_scale(spec, k));

  Verdict v = submajorization_verdict("agm_projection", lhs, rhs,
                                      digest_of(s).add(digest_of(c).value()).add(digest_of(e).value()));
  finalize(v);
  return v;
}

Verdict check_agm_pair(const CMatrix& s, const CMatrix& c, const HermMatrix& e1, const HermMatrix& e2) {
  require_square_same(s, c, "S and C must be square of equal size");
  if (e1.dim() != s.rows() || e2.dim() != s.rows()) throw Error(ErrorCode::dimension_mismatch, "E1, E2 sizes");
  const HermMatrix sh(s), ch(c);
  if (!is_psd(sh) || !is_psd(ch)) throw Error(ErrorCode::not_positive, "S and C must be positive");
  const CMatrix p = c * c + s * s;
  require_projection_sum(p);

  const std::size_t d = std::size_t(s.rows());
  const CMatrix lhs_m = s * e1.matrix() * c + c * e2.matrix() * s;
  const HermMatrix pe1p = hermitian_part(CMatrix(p * e1.matrix() * p));
  const HermMatrix pe2p = hermitian_part(CMatrix(p * e2.matrix() * p));
  const SpreadSeq lhs = svd_values(lhs_m, 4 * d);
  const SpreadSeq rhs = seq_scale(compact_spread(direct_sum(pe1p, -pe2p)), 0.5);

  Verdict v = submajorization_verdict("agm_pair", lhs, rhs,
                                      Digest().add(s).add(c).add(e1.matrix()).add(e2.matrix()));
  if (e1.matrix() == e2.matrix()) {
    const HermMatrix& e = e1;
    const SpreadSeq se = svd_values(e.matrix(), 2 * d);
    const CMatrix sec = s * e.matrix() * c;
    const CMatrix re = (sec + sec.adjoint()) / 2.0;
    v.checks.push_back(from_report("real_part", true, submajorizes(svd_values(re, 2 * d), seq_scale(se, 0.5))));

    const SpreadSeq spr = compact_spread(direct_sum(e, -e), 2 * d);
    double gap = 0.0;
    for (std::size_t i = 0; i < 2 * d; ++i) gap = std::max(gap, std::abs(spr.at(i) - 2.0 * se.at(i)));
    const double tolerance = scalar_rel_tol * std::max(1.0, se.at(0));
    v.checks.push_back({"spread_identity", true, gap <= tolerance, -gap});
  }
  finalize(v);
  return v;
}

Verdict check_agm_compact(const CMatrix& s, const CMatrix& c, const HermMatrix& e) {
  if (s.rows() != c.rows() || s.cols() != c.cols() || s.cols() != e.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "S, C and E have incompatible sizes");
  }
  const CMatrix p = c.adjoint() * c + s.adjoint() * s;
  require_projection_sum(p);
  const std::size_t d = std::size_t(e.dim());
  const CMatrix sec = s * e.matrix() * c.adjoint();
  const SpreadSeq s_sec = svd_values(sec, 2 * d);
  const SpreadSeq lhs = seq_scale(s_sec, 2.0);
  const SpreadSeq spr_e = compact_spread(e);

  Verdict v = submajorization_verdict("agm_compact", lhs, spr_e, Digest().add(s).add(c).add(e.matrix()));
  v.entrywise = entrywise_le(lhs, spr_e);

  const HermMatrix pep = hermitian_part(CMatrix(p * e.matrix() * p));
  v.checks.push_back(from_report("compression", true, submajorizes(compact_spread(pep), spr_e)));
  v.checks.push_back(from_report("oplus_zero", true, submajorizes(lhs, compact_spread(pad_zero(pep, e.dim())))));
  const SpreadSeq half_spread = seq_scale(spr_e, 0.5);
  add_norm_forms(v, "norm:", s_sec, half_spread, true);

  // N(SEC*) <= N(E)/2 is a consequence only for positive E.
  const bool positive = is_psd(e);
  const SpreadSeq half_se = seq_scale(svd_values(e.matrix(), 2 * d), 0.5);
  add_norm_forms(v, "half_norm:", s_sec, half_se, positive);
  if (positive) v.checks.push_back(from_entrywise("positive_entrywise", true, entrywise_le(s_sec, half_se)));
  finalize(v);
  return v;
}

Verdict check_agm_compact(const CMatrix& s, const CMatrix& c, const TailedMatrix& e) {
  const Index d = e.head.rows();
  if (s.rows() != c.rows() || s.cols() != d || c.cols() != d || e.head.cols() != d) {
    throw Error(ErrorCode::dimension_mismatch, "S, C and E have incompatible sizes");
  }
  require_projection_sum(c.adjoint() * c + s.adjoint() * s);
  const std::size_t k = 2 * std::size_t(d);
  const SpreadSeq lhs = seq_scale(svd_values(s * e.head * c.adjoint(), k), 2.0);
  const SpreadSeq rhs = spread_plus(tailed_scale(e, k));
  Verdict v = submajorization_verdict("agm_compact", lhs, rhs, digest_of(e).add(s).add(c));
  v.entrywise = entrywise_le(lhs, rhs);
  finalize(v);
  return v;
}

Verdict check_agm_general(const CMatrix& a, const CMatrix& b, const HermMatrix& e) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.cols() != e.dim()) {
    throw Error(ErrorCode::dimension_mismatch, "A, B and E have incompatible sizes");
  }
  const std::size_t d = std::size_t(e.dim());
  const HermMatrix f = hermitian_part(CMatrix(a.adjoint() * a + b.adjoint() * b));
  const HermMatrix g = sqrt_psd(f);
  const HermMatrix geg = hermitian_part(CMatrix(g.matrix() * e.matrix() * g.matrix()));
  const CMatrix aeb = a * e.matrix() * b.adjoint();
  const SpreadSeq lhs = svd_values(aeb, 2 * d);
  const SpreadSeq spr = compact_spread(geg);

  Verdict v = submajorization_verdict("agm_general", lhs, seq_scale(spr, 0.5),
                                      Digest().add(a).add(b).add(e.matrix()));
  v.entrywise = entrywise_le(seq_scale(lhs, 2.0), spr);

  const HermMatrix geg0 = pad_zero(geg, e.dim());
  v.checks.push_back(from_report("oplus_zero", true, submajorizes(lhs, seq_scale(compact_spread(geg0), 0.5))));
  if (std::size_t(aeb.rows()) == d) {
    v.checks.push_back(from_report("matrix_model", true,
                                   submajorizes(as_matrix_model(lhs, d), seq_scale(matrix_spread(geg0), 0.5))));
  }
  if (is_psd(e)) {
    const HermMatrix r = sqrt_psd(e);
    const HermMatrix efe = hermitian_part(CMatrix(r.matrix() * f.matrix() * r.matrix()));
    v.checks.push_back(
        from_report("positive_form", true, submajorizes(seq_scale(lhs, 2.0), psd_singular_values(efe, 2 * d))));
  }
  finalize(v);
  return v;
}

Verdict check_zhan(const HermMatrix& e, const HermMatrix& f) {
  if (e.dim() != f.dim()) throw Error(ErrorCode::dimension_mismatch, "E and F must have equal size");
  const std::size_t k = 4 * std::size_t(e.dim());
  Verdict v = submajorization_verdict("zhan", svd_values(CMatrix(e.matrix() - f.matrix()), k),
                                      compact_spread(direct_sum(e, f)), Digest().add(e.matrix()).add(f.matrix()));
  finalize(v);
  return v;
}

Verdict check_zhan(const TailedMatrix& e, const TailedMatrix& f) {
  const Index d = e.head.rows();
  if (f.head.rows() != d) throw Error(ErrorCode::dimension_mismatch, "E and F must have equal size");
  if (std::abs(e.tail.imag()) > tol::hermitian || std::abs(f.tail.imag()) > tol::hermitian) {
    throw Error(ErrorCode::not_hermitian, "tails must be real");
  }
  const std::size_t k = std::max<std::size_t>(1, 4 * std::size_t(d));
  DiagSpec spec;
  spec.head = eigen_list(HermMatrix(e.head));
  const auto fl = eigen_list(HermMatrix(f.head));
  spec.head.insert(spec.head.end(), fl.begin(), fl.end());
  spec.liminf = std::min(e.tail.real(), f.tail.real());
  spec.limsup = std::max(e.tail.real(), f.tail.real());
  Verdict v = submajorization_verdict("zhan", tailed_singular_values(minus(e, f), k), spread_plus(diag_scale(spec, k)),
                                      digest_of(e).add(digest_of(f).value()));
  finalize(v);
  return v;
}

Verdict check_projection_split(const HermMatrix& e, const HermMatrix& p) {
  if (e.dim() != p.dim()) throw Error(ErrorCode::dimension_mismatch, "E and P must have equal size");
  require_projection(p);
  const Index d = e.dim();
  const std::size_t k = std::max<std::size_t>(1, 2 * std::size_t(d));
  const CMatrix block = p.matrix() * e.matrix() * (CMatrix::Identity(d, d) - p.matrix());
  Verdict v = submajorization_verdict("projection_split", seq_scale(svd_values(block, k), 2.0), compact_spread(e, k),
                                      Digest().add(e.matrix()).add(p.matrix()));
  finalize(v);
  return v;
}

Verdict check_projection_split(const TailedMatrix& e, const TailedMatrix& p) {
  const Index d = e.head.rows();
  if (p.head.rows() != d) throw Error(ErrorCode::dimension_mismatch, "E and P must have equal size");
  const HermMatrix ph(p.head);
  require_projection(ph);
  projection_tail(p.tail, ErrorCode::not_projection);
  const std::size_t k = std::max<std::size_t>(1, 2 * std::size_t(d));
  // The tail of PE(I - P) is p t (1 - p) = 0.
  const CMatrix block = p.head * e.head * (CMatrix::Identity(d, d) - p.head);
  Verdict v = submajorization_verdict("projection_split", seq_scale(svd_values(block, k), 2.0),
                                      spread_plus(tailed_scale(e, k)), digest_of(e).add(digest_of(p).value()));
  finalize(v);
  return v;
}

Verdict check_kittaneh_positive(const HermMatrix& c, const HermMatrix& d, const CMatrix& x) {
  if (x.rows() != c.dim() || x.cols() != d.dim()) throw Error(ErrorCode::dimension_mismatch, "X must be dim C x dim D");
  if (!is_psd(c) || !is_psd(d)) throw Error(ErrorCode::not_positive, "C and D must be positive");
  const std::size_t k = std::size_t(c.dim() + d.dim());
  const SpreadSeq lhs = svd_values(CMatrix(c.matrix() * x - x * d.matrix()), k);
  const SpreadSeq rhs = seq_scale(psd_singular_values(direct_sum(c, d), k), operator_norm(x));
  Verdict v = entrywise_verdict("control_kittaneh", lhs, rhs, Digest().add(c.matrix()).add(d.matrix()).add(x));
  finalize(v);
  return v;
}

Verdict check_bhatia_kittaneh(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::dimension_mismatch, "A and B must have equal shape");
  const std::size_t k = std::size_t(std::max(a.rows(), a.cols()));
  const SpreadSeq lhs = seq_scale(svd_values(CMatrix(a * b.adjoint()), k), 2.0);
  const SpreadSeq rhs = psd_singular_values(hermitian_part(CMatrix(a.adjoint() * a + b.adjoint() * b)), k);
  Verdict v = entrywise_verdict("control_bhatia_kittaneh", lhs, rhs, Digest().add(a).add(b));
  finalize(v);
  return v;
}

Verdict check_strict_gap(const HermMatrix& e) {
  const auto values = eigen_list(e);
  if (values.empty() || values.front() <= 0.0 || values.back() >= 0.0) {
    throw Error(ErrorCode::invalid_argument, "E needs eigenvalues of both signs");
  }
  const double lhs = e.matrix().norm();
  const double rhs = schatten(compact_spread(e), 2.0);
  // Strict: the margin has to clear the tolerance, not just -tolerance.
  const double tolerance = 1e-9 * lhs;
  Verdict v = scalar_verdict("strict_gap", lhs, rhs, tolerance, Digest().add(e.matrix()));
  v.report.holds = rhs - lhs > tolerance;
  finalize(v);
  return v;
}

const std::vector<std::string>& equivalence_items() {
  static const std::vector<std::string> items = {"equiv_1",        "equiv_2",        "equiv_3", "equiv_4",
                                                 "equiv_5",        "equiv_compact_1", "equiv_compact_2"};
  return items;
}

Verdict equivalence_trial(const std::string& item, std::uint64_t seed, Index d) {
  CounterRng rng(seed);
  const auto tail = [&] { return Complex(rng.normal(), 0.0); };
  Verdict v;
  if (item == "equiv_1") {
    const HermMatrix e = random_hermitian(rng, d);
    const Index rank = Index(rng.index(std::size_t(d) + 1));
    const HermMatrix p = random_projection(rng, d, rank);
    const double pt = rng.uniform01() < 0.5 ? 0.0 : 1.0;
    v = check_projection_split(TailedMatrix{e.matrix(), tail()}, TailedMatrix{p.matrix(), pt});
  } else if (item == "equiv_2") {
    const HermMatrix e = random_hermitian(rng, d);
    v = check_commutator_sv(e, random_hermitian(rng, d));
  } else if (item == "equiv_3") {
    const HermMatrix e = random_hermitian(rng, d);
    const HermMatrix f = random_hermitian(rng, d);
    v = check_mixed_commutator(e, f, gaussian_matrix(rng, d, d));
  } else if (item == "equiv_4") {
    const TailedMatrix e{random_hermitian(rng, d).matrix(), tail()};
    const TailedMatrix f{random_hermitian(rng, d).matrix(), tail()};
    v = check_zhan(e, f);
  } else if (item == "equiv_5") {
    const auto part = random_partition_isometry(rng, d, d);
    const double phi = rng.uniform(0.0, std::numbers::pi / 2);
    const TailedMatrix e{random_hermitian(rng, d).matrix(), tail()};
    v = check_agm_projection(TailedMatrix{part.s, std::sin(phi)}, TailedMatrix{part.c, std::cos(phi)}, e);
  } else if (item == "equiv_compact_1") {
    const HermMatrix e = random_hermitian(rng, d);
    const Index rank = Index(rng.index(std::size_t(d) + 1));
    v = check_projection_split(e, random_projection(rng, d, rank));
  } else if (item == "equiv_compact_2") {
    const CMatrix a = gaussian_matrix(rng, d, d);
    const CMatrix b = gaussian_matrix(rng, d, d);
    v = check_agm_general(a, b, random_hermitian(rng, d));
  } else {
    throw Error(ErrorCode::unknown_inequality, "unknown equivalence item '" + item + "'");
  }
  v.ineq_id = item;
  return v;
}

std::vector<Verdict> equivalence_suite(std::uint64_t seed, std::size_t trials) {
  std::vector<Verdict> out;
  out.reserve(trials * equivalence_items().size());
  for (const auto& item : equivalence_items()) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = derive_seed(seed, item, t);
      const Index d = 2 + Index(CounterRng(s ^ 0xD1B54A32D192ED03ULL).index(7));
      out.push_back(equivalence_trial(item, s, d));
    }
  }
  return out;
}

}  // namespace sspread
