#pragma once

// Spectral scales lambda(A) in the three operator models and the spread
// sequences built from them.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sspread/linalg.hpp"
#include "sspread/sequence.hpp"

namespace sspread {

inline constexpr double tail_tol = 1e-9;

/// Matrix mode: pos = eigenvalues non-increasing, neg = the same values
/// non-decreasing; horizon equals the dimension and there are no tails.
TwoSidedSeq matrix_scale(const HermMatrix& a);

/// Compact mode (A ⊕ 0 on an infinite-dimensional space): positive eigenvalues
/// descending, negative eigenvalues ascending, both zero-padded to `horizon`.
/// horizon == 0 selects 2 * dim; a horizon below dim is rejected.
TwoSidedSeq compact_scale(const HermMatrix& a, std::size_t horizon = 0);

/// Closed-form rules for the entries of a diagonal past its explicit head.
/// Entries are indexed n = 1, 2, ... after the head.
struct DiagGenerator {
  enum class Rule {
    constant,             // c
    harmonic,             // c + amp / n
    interleaved_harmonic  // upper + amp / m at n = 2m - 1, lower + amp / m at n = 2m
  };
  Rule rule = Rule::constant;
  std::vector<double> params;

  double at(std::size_t n) const;
  /// Smallest and largest accumulation point of the generated entries.
  std::pair<double, double> limits() const;
  /// Bounds on every generated entry with index > n.
  std::pair<double, double> bounds_beyond(std::size_t n) const;

  static std::string rule_name(Rule r);
  static Rule parse_rule(const std::string& name);
};

/// A bounded real sequence a defining the diagonal operator D_a.
struct DiagSpec {
  std::vector<double> head;
  double liminf = 0.0;
  double limsup = 0.0;
  std::optional<DiagGenerator> generator;
};

/// Spectral scale of D_a up to `horizon`. Sampled entries strictly above
/// limsup are listed (descending) before the tail limsup, symmetrically below
/// liminf. `sampling` == 0 selects 64 * horizon sampled entries.
/// Throws InsufficientSampling when the samples cannot certify the first
/// `horizon` entries on either side.
TwoSidedSeq diag_scale(const DiagSpec& a, std::size_t horizon, std::size_t sampling = 0);

/// Full spread: Spr_i = lambda_i - lambda_{-i}, Spr_{-i} = -Spr_i.
TwoSidedSeq spread_full(const TwoSidedSeq& lambda);

/// Spr+(A) = (lambda_i - lambda_{-i})_{i >= 1}. In matrix mode only the first
/// ceil(d/2) entries are kept; the remaining ones are their negatives.
SpreadSeq spread_plus(const TwoSidedSeq& lambda);

/// Shorthands for the common cases.
SpreadSeq compact_spread(const HermMatrix& a, std::size_t horizon = 0);
SpreadSeq matrix_spread(const HermMatrix& a);

/// head ⊕ tail·I on head-dim ⊕ (infinite-dimensional complement). A zero tail
/// is the compact embedding; a nonzero tail gives a non-compact operator whose
/// essential spectrum is {tail}.
struct TailedMatrix {
  CMatrix head;
  Complex tail{0.0, 0.0};
};

TailedMatrix operator*(const TailedMatrix& a, const TailedMatrix& b);
TailedMatrix adjoint(const TailedMatrix& a);

/// Spectral scale of a Hermitian TailedMatrix (tail must be real).
TwoSidedSeq tailed_scale(const TailedMatrix& a, std::size_t horizon = 0);
/// Singular values of a TailedMatrix: s(head) above |tail|, then |tail|.
SpreadSeq tailed_singular_values(const TailedMatrix& a, std::size_t horizon = 0);

}  // namespace sspread
