#pragma once

// Sequence algebra and (sub)majorization verdicts with raw margins.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sspread/sequence.hpp"

namespace sspread {

enum class MajorizationKind { submajorization, majorization };
enum class TailVerdict { conclusive, horizon_limited, tail_violated };

std::string_view to_string(MajorizationKind k) noexcept;
std::string_view to_string(TailVerdict v) noexcept;

struct MajorizationReport {
  MajorizationKind kind = MajorizationKind::submajorization;
  std::vector<double> margins_upper;  // sum_{i<=k} b - sum_{i<=k} a
  std::vector<double> margins_lower;  // majorization only
  double tolerance = 0.0;
  bool holds = false;
  std::size_t worst_k = 0;  // 1-based
  bool worst_in_lower = false;
  double worst_margin = 0.0;
  TailVerdict tail_verdict = TailVerdict::conclusive;
};

struct EntrywiseReport {
  std::vector<double> margins;  // b_i - a_i
  double tolerance = 0.0;
  bool holds = false;
  std::size_t worst_i = 0;  // 1-based
  double worst_margin = 0.0;
  std::optional<std::size_t> first_violation;  // 1-based
};

/// maj_tol = 1e-9 * max(1, sup|b| * K).
double majorization_tolerance(double b_sup, std::size_t horizon);

std::vector<double> dec_rearrange(std::span<const double> x);

/// a↓ in the l-infinity sense: entries strictly above the tail, descending,
/// then the tail. Horizon is kept unless `horizon` asks for more.
SpreadSeq decreasing(const SpreadSeq& a, std::size_t horizon = 0);
/// ↓ of a two-sided family seen as a single sequence indexed by Z_0.
SpreadSeq decreasing(const TwoSidedData& a);

/// λ(D_a) for finitely supported data. horizon == 0 uses the number of entries.
TwoSidedSeq updown_rearrange(std::span<const double> x, std::size_t horizon = 0);
/// Throws ModeError when the data carries nonzero tails.
TwoSidedSeq updown_rearrange(const TwoSidedData& x, std::size_t horizon = 0);

/// (a, b)_n = a_{-n} for n < 0 and b_n for n > 0.
TwoSidedData interleave(const SpreadSeq& a, const SpreadSeq& b);

SpreadSeq seq_product(const SpreadSeq& a, const SpreadSeq& b);
SpreadSeq seq_sum(const SpreadSeq& a, const SpreadSeq& b);
SpreadSeq seq_scale(const SpreadSeq& a, double c);
TwoSidedSeq seq_sum(const TwoSidedSeq& a, const TwoSidedSeq& b);

/// a ≺_w b. Matrix-mode operands must both be matrix mode with equal length;
/// otherwise sequences are compared on the larger horizon, padded with tails.
MajorizationReport submajorizes(const SpreadSeq& a, const SpreadSeq& b);
/// R^n semantics; lengths must agree.
MajorizationReport submajorizes(std::span<const double> a, std::span<const double> b);

/// a ≺ b for spectral scales (upper sums on the positive side, lower sums on
/// the negative side).
MajorizationReport majorizes(const TwoSidedSeq& a, const TwoSidedSeq& b);
/// R^n semantics; lengths must agree.
MajorizationReport majorizes(std::span<const double> a, std::span<const double> b);

/// a_i <= b_i on the common horizon, tails included.
EntrywiseReport entrywise_le(const SpreadSeq& a, const SpreadSeq& b);

double ky_fan(const SpreadSeq& a, std::size_t k);
/// +inf when the tail is nonzero.
double schatten(const SpreadSeq& a, double p);

struct GaugeNorm {
  enum class Kind { operator_norm, ky_fan, schatten };
  Kind kind = Kind::operator_norm;
  std::size_t k = 1;
  double p = 2.0;

  /// "op", "kyfan:k", "schatten:p".
  static GaugeNorm parse(const std::string& text);
  std::string name() const;
};

double gauge(const SpreadSeq& a, const GaugeNorm& n);

}  // namespace sspread
