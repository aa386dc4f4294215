#include "sspread/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sspread {

namespace {

std::vector<double> eigenvalues(const HermMatrix& a) {
  const auto e = eigh(a);
  return {e.values.data(), e.values.data() + e.values.size()};
}

// Eigenvalues within a few ulps of zero (relative to the spectral radius) are
// set to zero before they are split by sign.
void snap_zeros(std::vector<double>& values) {
  double radius = 1.0;
  for (double v : values) radius = std::max(radius, std::abs(v));
  const double cut = 16.0 * std::numeric_limits<double>::epsilon() * radius;
  for (double& v : values) {
    if (std::abs(v) <= cut) v = 0.0;
  }
}

std::size_t default_horizon(Index dim) { return std::max<std::size_t>(1, 2 * std::size_t(dim)); }

}  // namespace

TwoSidedSeq matrix_scale(const HermMatrix& a) {
  TwoSidedSeq out;
  out.model = Model::matrix;
  out.pos = eigenvalues(a);
  out.neg.assign(out.pos.rbegin(), out.pos.rend());
  return out;
}

TwoSidedSeq compact_scale(const HermMatrix& a, std::size_t horizon) {
  if (horizon == 0) horizon = default_horizon(a.dim());
  if (horizon < std::size_t(a.dim())) {
    throw Error(ErrorCode::invalid_argument, "compact horizon smaller than the dimension");
  }
  auto values = eigenvalues(a);
  snap_zeros(values);

  TwoSidedSeq out;
  out.model = Model::compact;
  out.pos.assign(horizon, 0.0);
  out.neg.assign(horizon, 0.0);
  std::size_t np = 0;
  for (double v : values) {
    if (v > 0.0) out.pos[np++] = v;
  }
  std::size_t nn = 0;
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    if (*it < 0.0) out.neg[nn++] = *it;
  }
  out.pos_tail = 0.0;
  out.neg_tail = 0.0;
  out.tail_exact = true;
  return out;
}

double DiagGenerator::at(std::size_t n) const {
  const auto p = [&](std::size_t i) {
    if (i >= params.size()) throw Error(ErrorCode::invalid_argument, "generator parameter missing");
    return params[i];
  };
  switch (rule) {
    case Rule::constant: return p(0);
    case Rule::harmonic: return p(0) + p(1) / double(n);
    case Rule::interleaved_harmonic: {
      const std::size_t m = (n + 1) / 2;
      const double base = (n % 2 == 1) ? p(0) : p(1);
      return base + p(2) / double(m);
    }
  }
  return 0.0;
}

std::pair<double, double> DiagGenerator::limits() const {
  switch (rule) {
    case Rule::constant: return {at(1), at(1)};
    case Rule::harmonic: return {params.at(0), params.at(0)};
    case Rule::interleaved_harmonic:
      return {std::min(params.at(0), params.at(1)), std::max(params.at(0), params.at(1))};
  }
  return {0.0, 0.0};
}

std::pair<double, double> DiagGenerator::bounds_beyond(std::size_t n) const {
  switch (rule) {
    case Rule::constant: return limits();
    case Rule::harmonic: {
      const double c = params.at(0);
      const double next = c + params.at(1) / double(n + 1);
      return {std::min(c, next), std::max(c, next)};
    }
    case Rule::interleaved_harmonic: {
      const double amp = params.at(2);
      const double m_min = double((n + 2) / 2);
      const double shift = amp / m_min;
      const double lo = std::min(params.at(0), params.at(1));
      const double hi = std::max(params.at(0), params.at(1));
      return {lo + std::min(shift, 0.0), hi + std::max(shift, 0.0)};
    }
  }
  return {0.0, 0.0};
}

std::string DiagGenerator::rule_name(Rule r) {
  switch (r) {
    case Rule::constant: return "constant";
    case Rule::harmonic: return "harmonic";
    case Rule::interleaved_harmonic: return "interleaved_harmonic";
  }
  return "unknown";
}

DiagGenerator::Rule DiagGenerator::parse_rule(const std::string& name) {
  if (name == "constant") return Rule::constant;
  if (name == "harmonic") return Rule::harmonic;
  if (name == "interleaved_harmonic") return Rule::interleaved_harmonic;
  throw Error(ErrorCode::invalid_argument, "unknown generator rule '" + name + "'");
}

TwoSidedSeq diag_scale(const DiagSpec& a, std::size_t horizon, std::size_t sampling) {
  if (horizon == 0) throw Error(ErrorCode::invalid_argument, "diagonal horizon must be positive");
  if (a.liminf > a.limsup) throw Error(ErrorCode::invalid_argument, "liminf exceeds limsup");
  if (sampling == 0) sampling = 64 * horizon;

  std::vector<double> sample = a.head;
  double lower = a.liminf;
  double upper = a.limsup;
  if (a.generator) {
    const auto [lo, hi] = a.generator->limits();
    if (std::abs(lo - a.liminf) > tail_tol || std::abs(hi - a.limsup) > tail_tol) {
      throw Error(ErrorCode::invalid_argument, "generator limits disagree with liminf/limsup");
    }
    const std::size_t generated = sampling > a.head.size() ? sampling - a.head.size() : 0;
    sample.reserve(a.head.size() + generated);
    for (std::size_t n = 1; n <= generated; ++n) sample.push_back(a.generator->at(n));
    std::tie(lower, upper) = a.generator->bounds_beyond(generated);
  }

  std::vector<double> above;
  std::vector<double> below;
  for (double v : sample) {
    if (v > a.limsup) above.push_back(v);
    if (v < a.liminf) below.push_back(v);
  }
  std::sort(above.begin(), above.end(), std::greater<>());
  std::sort(below.begin(), below.end());

  // Unsampled entries may still exceed limsup (resp. undercut liminf); the
  // listed entries are certified only while they dominate that bound.
  if (upper > a.limsup && (above.size() < horizon || above[horizon - 1] < upper)) {
    throw Error(ErrorCode::insufficient_sampling, "cannot certify the positive side of the scale");
  }
  if (lower < a.liminf && (below.size() < horizon || below[horizon - 1] > lower)) {
    throw Error(ErrorCode::insufficient_sampling, "cannot certify the negative side of the scale");
  }

  TwoSidedSeq out;
  out.model = Model::diagonal;
  out.pos.resize(horizon);
  out.neg.resize(horizon);
  for (std::size_t i = 0; i < horizon; ++i) {
    out.pos[i] = i < above.size() ? above[i] : a.limsup;
    out.neg[i] = i < below.size() ? below[i] : a.liminf;
  }
  out.pos_tail = a.limsup;
  out.neg_tail = a.liminf;
  out.tail_exact = upper <= a.limsup && lower >= a.liminf && above.size() <= horizon && below.size() <= horizon;
  return out;
}

TwoSidedSeq spread_full(const TwoSidedSeq& lambda) {
  TwoSidedSeq out;
  out.model = lambda.model;
  out.tail_exact = lambda.tail_exact;
  out.pos.resize(lambda.pos.size());
  out.neg.resize(lambda.pos.size());
  for (std::size_t i = 0; i < lambda.pos.size(); ++i) {
    out.pos[i] = lambda.pos[i] - lambda.neg[i];
    out.neg[i] = -out.pos[i];
  }
  if (lambda.pos_tail && lambda.neg_tail) {
    out.pos_tail = *lambda.pos_tail - *lambda.neg_tail;
    out.neg_tail = -*out.pos_tail;
  }
  return out;
}

SpreadSeq spread_plus(const TwoSidedSeq& lambda) {
  SpreadSeq out;
  out.model = lambda.model;
  out.tail_exact = lambda.tail_exact;
  std::size_t n = lambda.pos.size();
  if (lambda.model == Model::matrix) n = (n + 1) / 2;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = lambda.pos[i] - lambda.neg[i];
  if (lambda.pos_tail && lambda.neg_tail) out.tail = *lambda.pos_tail - *lambda.neg_tail;
  return out;
}

SpreadSeq compact_spread(const HermMatrix& a, std::size_t horizon) {
  return spread_plus(compact_scale(a, horizon));
}

SpreadSeq matrix_spread(const HermMatrix& a) { return spread_plus(matrix_scale(a)); }

TailedMatrix operator*(const TailedMatrix& a, const TailedMatrix& b) {
  if (a.head.cols() != b.head.rows()) throw Error(ErrorCode::dimension_mismatch, "tailed product");
  return {a.head * b.head, a.tail * b.tail};
}

TailedMatrix adjoint(const TailedMatrix& a) { return {a.head.adjoint(), std::conj(a.tail)}; }

TwoSidedSeq tailed_scale(const TailedMatrix& a, std::size_t horizon) {
  if (std::abs(a.tail.imag()) > tol::hermitian * std::max(1.0, std::abs(a.tail))) {
    throw Error(ErrorCode::not_hermitian, "tail of a Hermitian operator must be real");
  }
  const HermMatrix head(a.head);
  if (horizon == 0) horizon = default_horizon(head.dim());
  if (horizon < std::size_t(head.dim())) {
    throw Error(ErrorCode::invalid_argument, "horizon smaller than the head dimension");
  }
  DiagSpec spec;
  spec.head = eigenvalues(head);
  spec.liminf = spec.limsup = a.tail.real();
  return diag_scale(spec, horizon);
}

SpreadSeq tailed_singular_values(const TailedMatrix& a, std::size_t horizon) {
  if (a.head.rows() != a.head.cols()) throw Error(ErrorCode::dimension_mismatch, "tailed head must be square");
  if (horizon == 0) horizon = default_horizon(a.head.rows());
  const double t = std::abs(a.tail);
  const SpreadSeq s = svd_values(a.head, horizon);
  SpreadSeq out;
  out.model = Model::diagonal;
  out.tail = t;
  out.tail_exact = true;
  out.values.resize(horizon);
  for (std::size_t i = 0; i < horizon; ++i) out.values[i] = std::max(s.values[i], t);
  return out;
}

}  // namespace sspread
