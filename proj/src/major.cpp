#include "sspread/major.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>

#include "sspread/error.hpp"

namespace sspread {

namespace {

double sup_abs(std::span<const double> x, double tail = 0.0) {
  double m = std::abs(tail);
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

// Fills margins with running sums of (b - a) and tracks the minimum.
void partial_margins(std::span<const double> a, std::span<const double> b, double sign,
                     std::vector<double>& out) {
  out.resize(a.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += sign * (b[i] - a[i]);
    out[i] = acc;
  }
}

void finish(MajorizationReport& r) {
  r.worst_margin = std::numeric_limits<double>::infinity();
  r.worst_k = 0;
  for (std::size_t i = 0; i < r.margins_upper.size(); ++i) {
    if (r.margins_upper[i] < r.worst_margin) {
      r.worst_margin = r.margins_upper[i];
      r.worst_k = i + 1;
      r.worst_in_lower = false;
    }
  }
  for (std::size_t i = 0; i < r.margins_lower.size(); ++i) {
    if (r.margins_lower[i] < r.worst_margin) {
      r.worst_margin = r.margins_lower[i];
      r.worst_k = i + 1;
      r.worst_in_lower = true;
    }
  }
  if (r.worst_k == 0) r.worst_margin = 0.0;
  r.holds = r.worst_margin >= -r.tolerance && r.tail_verdict != TailVerdict::tail_violated;
}

std::vector<double> padded(const std::vector<double>& v, std::size_t n, double fill) {
  std::vector<double> out(v);
  out.resize(std::max(n, v.size()), fill);
  return out;
}

void require_same_mode(Model a, Model b) {
  if ((a == Model::matrix) != (b == Model::matrix)) {
    throw Error(ErrorCode::mode_error, "cannot compare a matrix-mode sequence with an operator-mode one");
  }
}

}  // namespace

std::string_view to_string(MajorizationKind k) noexcept {
  return k == MajorizationKind::submajorization ? "submajorization" : "majorization";
}

std::string_view to_string(TailVerdict v) noexcept {
  switch (v) {
    case TailVerdict::conclusive: return "conclusive";
    case TailVerdict::horizon_limited: return "horizon_limited";
    case TailVerdict::tail_violated: return "tail_violated";
  }
  return "unknown";
}

double majorization_tolerance(double b_sup, std::size_t horizon) {
  return 1e-9 * std::max(1.0, b_sup * double(horizon));
}

std::vector<double> dec_rearrange(std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SpreadSeq decreasing(const SpreadSeq& a, std::size_t horizon) {
  SpreadSeq out = a;
  if (a.model == Model::matrix) {
    out.values = dec_rearrange(a.values);
    return out;
  }
  std::vector<double> above;
  for (double v : a.values) {
    if (v > a.tail) above.push_back(v);
  }
  std::sort(above.begin(), above.end(), std::greater<>());
  out.values = padded(above, std::max(horizon, a.values.size()), a.tail);
  return out;
}

SpreadSeq decreasing(const TwoSidedData& a) {
  SpreadSeq joined;
  joined.model = Model::diagonal;
  joined.tail = std::max(a.neg_tail, a.pos_tail);
  joined.values = a.neg;
  joined.values.insert(joined.values.end(), a.pos.begin(), a.pos.end());
  if (a.neg_tail == 0.0 && a.pos_tail == 0.0) joined.model = Model::compact;
  return decreasing(joined);
}

TwoSidedSeq updown_rearrange(std::span<const double> x, std::size_t horizon) {
  if (horizon == 0) horizon = std::max<std::size_t>(1, x.size());
  if (horizon < x.size()) {
    std::size_t np = 0;
    std::size_t nn = 0;
    for (double v : x) (v > 0.0 ? np : nn) += (v != 0.0);
    if (std::max(np, nn) > horizon) throw Error(ErrorCode::horizon_mismatch, "horizon too short for the data");
  }
  TwoSidedSeq out;
  out.model = Model::compact;
  out.pos.assign(horizon, 0.0);
  out.neg.assign(horizon, 0.0);
  std::vector<double> sorted = dec_rearrange(x);
  std::size_t np = 0;
  for (double v : sorted) {
    if (v > 0.0) out.pos[np++] = v;
  }
  std::size_t nn = 0;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    if (*it < 0.0) out.neg[nn++] = *it;
  }
  out.pos_tail = 0.0;
  out.neg_tail = 0.0;
  return out;
}

TwoSidedSeq updown_rearrange(const TwoSidedData& x, std::size_t horizon) {
  if (x.neg_tail != 0.0 || x.pos_tail != 0.0) {
    throw Error(ErrorCode::mode_error, "up-down rearrangement needs finitely supported data");
  }
  std::vector<double> all = x.neg;
  all.insert(all.end(), x.pos.begin(), x.pos.end());
  return updown_rearrange(all, horizon);
}

TwoSidedData interleave(const SpreadSeq& a, const SpreadSeq& b) {
  if (a.horizon() != b.horizon()) throw Error(ErrorCode::horizon_mismatch, "interleave");
  return {a.values, b.values, a.tail, b.tail};
}

namespace {

SpreadSeq combine(const SpreadSeq& a, const SpreadSeq& b, const std::function<double(double, double)>& f) {
  if (a.horizon() != b.horizon()) throw Error(ErrorCode::horizon_mismatch, "sequence lengths differ");
  require_same_mode(a.model, b.model);
  SpreadSeq out;
  out.model = a.model == b.model ? a.model : Model::diagonal;
  out.tail_exact = a.tail_exact && b.tail_exact;
  out.tail = f(a.tail, b.tail);
  out.values.resize(a.horizon());
  for (std::size_t i = 0; i < a.horizon(); ++i) out.values[i] = f(a.values[i], b.values[i]);
  return out;
}

}  // namespace

SpreadSeq seq_product(const SpreadSeq& a, const SpreadSeq& b) {
  return combine(a, b, std::multiplies<>());
}

SpreadSeq seq_sum(const SpreadSeq& a, const SpreadSeq& b) { return combine(a, b, std::plus<>()); }

SpreadSeq seq_scale(const SpreadSeq& a, double c) {
  SpreadSeq out = a;
  for (double& v : out.values) v *= c;
  out.tail *= c;
  return out;
}

TwoSidedSeq seq_sum(const TwoSidedSeq& a, const TwoSidedSeq& b) {
  if (a.horizon() != b.horizon()) throw Error(ErrorCode::horizon_mismatch, "scale lengths differ");
  require_same_mode(a.model, b.model);
  TwoSidedSeq out;
  out.model = a.model == b.model ? a.model : Model::diagonal;
  out.tail_exact = a.tail_exact && b.tail_exact;
  out.pos.resize(a.horizon());
  out.neg.resize(a.horizon());
  for (std::size_t i = 0; i < a.horizon(); ++i) {
    out.pos[i] = a.pos[i] + b.pos[i];
    out.neg[i] = a.neg[i] + b.neg[i];
  }
  if (a.pos_tail && b.pos_tail) out.pos_tail = *a.pos_tail + *b.pos_tail;
  if (a.neg_tail && b.neg_tail) out.neg_tail = *a.neg_tail + *b.neg_tail;
  return out;
}

MajorizationReport submajorizes(const SpreadSeq& a, const SpreadSeq& b) {
  require_same_mode(a.model, b.model);
  MajorizationReport r;
  r.kind = MajorizationKind::submajorization;
  if (a.model == Model::matrix) {
    if (a.horizon() != b.horizon()) {
      throw Error(ErrorCode::dimension_mismatch, "matrix-mode sequences must have equal length");
    }
    return submajorizes(std::span<const double>(a.values), std::span<const double>(b.values));
  }
  const std::size_t k = std::max(a.horizon(), b.horizon());
  const SpreadSeq ad = decreasing(a, k);
  const SpreadSeq bd = decreasing(b, k);
  r.tolerance = majorization_tolerance(sup_abs(bd.values, b.tail), k);
  partial_margins(ad.values, bd.values, 1.0, r.margins_upper);
  if (a.tail > b.tail + r.tolerance) {
    r.tail_verdict = TailVerdict::tail_violated;
  } else if (a.tail_exact && b.tail_exact) {
    r.tail_verdict = TailVerdict::conclusive;
  } else {
    r.tail_verdict = TailVerdict::horizon_limited;
  }
  finish(r);
  return r;
}

MajorizationReport submajorizes(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "vectors must have equal length");
  MajorizationReport r;
  r.kind = MajorizationKind::submajorization;
  r.tolerance = majorization_tolerance(sup_abs(b), b.size());
  partial_margins(dec_rearrange(a), dec_rearrange(b), 1.0, r.margins_upper);
  finish(r);
  return r;
}

MajorizationReport majorizes(const TwoSidedSeq& a, const TwoSidedSeq& b) {
  require_same_mode(a.model, b.model);
  MajorizationReport r;
  r.kind = MajorizationKind::majorization;
  if (a.model == Model::matrix && a.horizon() != b.horizon()) {
    throw Error(ErrorCode::dimension_mismatch, "matrix-mode scales must have equal length");
  }
  const std::size_t k = std::max(a.horizon(), b.horizon());
  const double apt = a.pos_tail.value_or(0.0), ant = a.neg_tail.value_or(0.0);
  const double bpt = b.pos_tail.value_or(0.0), bnt = b.neg_tail.value_or(0.0);
  auto ap = padded(a.pos, k, apt), an = padded(a.neg, k, ant);
  auto bp = padded(b.pos, k, bpt), bn = padded(b.neg, k, bnt);
  std::sort(ap.begin(), ap.end(), std::greater<>());
  std::sort(bp.begin(), bp.end(), std::greater<>());
  std::sort(an.begin(), an.end());
  std::sort(bn.begin(), bn.end());

  r.tolerance = majorization_tolerance(std::max(sup_abs(bp, bpt), sup_abs(bn, bnt)), k);
  partial_margins(ap, bp, 1.0, r.margins_upper);
  partial_margins(an, bn, -1.0, r.margins_lower);
  if (a.model == Model::matrix) {
    r.tail_verdict = TailVerdict::conclusive;
  } else if (apt > bpt + r.tolerance || ant < bnt - r.tolerance) {
    r.tail_verdict = TailVerdict::tail_violated;
  } else if (a.tail_exact && b.tail_exact) {
    r.tail_verdict = TailVerdict::conclusive;
  } else {
    r.tail_verdict = TailVerdict::horizon_limited;
  }
  finish(r);
  return r;
}

MajorizationReport majorizes(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, "vectors must have equal length");
  TwoSidedSeq sa, sb;
  sa.model = sb.model = Model::matrix;
  sa.pos.assign(a.begin(), a.end());
  sa.neg = sa.pos;
  sb.pos.assign(b.begin(), b.end());
  sb.neg = sb.pos;
  return majorizes(sa, sb);
}

EntrywiseReport entrywise_le(const SpreadSeq& a, const SpreadSeq& b) {
  require_same_mode(a.model, b.model);
  if (a.model == Model::matrix && a.horizon() != b.horizon()) {
    throw Error(ErrorCode::dimension_mismatch, "matrix-mode sequences must have equal length");
  }
  const std::size_t k = std::max(a.horizon(), b.horizon());
  EntrywiseReport r;
  r.tolerance = majorization_tolerance(sup_abs(b.values, b.tail), 1);
  r.margins.resize(k);
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    r.margins[i] = b.at(i) - a.at(i);
    if (r.margins[i] < r.worst_margin) {
      r.worst_margin = r.margins[i];
      r.worst_i = i + 1;
    }
    if (!r.first_violation && r.margins[i] < -r.tolerance) r.first_violation = i + 1;
  }
  if (k == 0) r.worst_margin = 0.0;
  const bool tail_ok = a.model == Model::matrix || a.tail <= b.tail + r.tolerance;
  r.holds = !r.first_violation && tail_ok;
  return r;
}

double ky_fan(const SpreadSeq& a, std::size_t k) {
  const SpreadSeq d = decreasing(a, a.model == Model::matrix ? 0 : k);
  double sum = 0.0;
  for (std::size_t i = 0; i < std::min(k, d.values.size()); ++i) sum += d.values[i];
  return sum;
}

double schatten(const SpreadSeq& a, double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::invalid_argument, "Schatten index must be >= 1");
  if (a.model != Model::matrix && a.tail > 0.0) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (double v : a.values) sum += std::pow(std::abs(v), p);
  return std::pow(sum, 1.0 / p);
}

GaugeNorm GaugeNorm::parse(const std::string& text) {
  GaugeNorm n;
  if (text == "op") return n;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "kyfan" && !arg.empty()) {
    n.kind = Kind::ky_fan;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n.k);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || n.k == 0) {
      throw Error(ErrorCode::invalid_argument, "bad Ky Fan index '" + arg + "'");
    }
    return n;
  }
  if (head == "schatten" && !arg.empty()) {
    n.kind = Kind::schatten;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n.p);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || !(n.p >= 1.0)) {
      throw Error(ErrorCode::invalid_argument, "bad Schatten index '" + arg + "'");
    }
    return n;
  }
  throw Error(ErrorCode::invalid_argument, "unknown norm '" + text + "'");
}

std::string GaugeNorm::name() const {
  switch (kind) {
    case Kind::operator_norm: return "op";
    case Kind::ky_fan: return "kyfan:" + std::to_string(k);
    case Kind::schatten: {
      char buf[32];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p);
      return "schatten:" + std::string(buf, ptr);
    }
  }
  return "unknown";
}

double gauge(const SpreadSeq& a, const GaugeNorm& n) {
  switch (n.kind) {
    case GaugeNorm::Kind::operator_norm: return ky_fan(a, 1);
    case GaugeNorm::Kind::ky_fan: return ky_fan(a, n.k);
    case GaugeNorm::Kind::schatten: return schatten(a, n.p);
  }
  return 0.0;
}

}  // namespace sspread
