#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace sspread {

/// Operator model a sequence was computed in.
///  - matrix: a d x d matrix acting on C^d; scales have exactly d entries and no tail.
///  - compact: the matrix embedded as A ⊕ 0 on an infinite-dimensional space; zero tails.
///  - diagonal: a bounded diagonal operator, or a matrix plus a scalar tail, with
///    essential-spectrum limits as tails.
enum class Model { matrix, compact, diagonal };

std::string_view to_string(Model m) noexcept;

/// Non-negative sequence indexed by N, truncated at a horizon. Entries past the
/// horizon equal `tail` when `tail_exact` holds; otherwise they only converge to it.
struct SpreadSeq {
  std::vector<double> values;
  double tail = 0.0;
  Model model = Model::compact;
  bool tail_exact = true;

  std::size_t horizon() const { return values.size(); }
  /// Entry i (0-based); past the horizon this is the tail.
  double at(std::size_t i) const { return i < values.size() ? values[i] : tail; }
};

/// Two-sided sequence indexed by Z_0: pos[i] = lambda_{i+1}, neg[i] = lambda_{-(i+1)}.
struct TwoSidedSeq {
  std::vector<double> pos;
  std::vector<double> neg;
  std::optional<double> pos_tail;
  std::optional<double> neg_tail;
  Model model = Model::compact;
  bool tail_exact = true;

  std::size_t horizon() const { return pos.size(); }
};

/// Raw Z_0-indexed data (a, b)_n = a_{-n} for n < 0, b_n for n > 0, with no ordering
/// constraints. Sequences are finitely supported unless a tail is given.
struct TwoSidedData {
  std::vector<double> neg;
  std::vector<double> pos;
  double neg_tail = 0.0;
  double pos_tail = 0.0;
};

/// Throws InvalidArgument when the ordering invariants fail: pos non-increasing,
/// neg non-decreasing and, outside matrix mode, neg[i] <= pos[i] and tails bracketing.
void validate(const TwoSidedSeq& s, double tolerance = 1e-9);
void validate(const SpreadSeq& s, double tolerance = 1e-9);

}  // namespace sspread
