#pragma once

// One verifier per inequality. Each returns a Verdict carrying the raw margins
// of the main claim plus named sub-checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sspread/linalg.hpp"
#include "sspread/major.hpp"
#include "sspread/spectra.hpp"

namespace sspread {

enum class ClaimKind { submajorization, entrywise, scalar };
std::string_view to_string(ClaimKind k) noexcept;

/// A secondary comparison. Implied checks follow from the main theorem under
/// the given hypotheses and take part in `holds`; the others are contrasts that
/// are allowed to fail.
struct SubCheck {
  std::string name;
  bool implied = true;
  bool holds = true;
  double margin = 0.0;
};

struct Verdict {
  std::string ineq_id;
  bool holds = false;
  ClaimKind claim = ClaimKind::submajorization;
  MajorizationReport report;             // submajorization and scalar claims
  std::optional<EntrywiseReport> entrywise;
  SpreadSeq lhs;
  SpreadSeq rhs;
  std::vector<SubCheck> checks;
  std::uint64_t witness = 0;
  Model mode = Model::compact;

  /// The entrywise comparison is present and fails.
  bool entrywise_fails() const { return entrywise && !entrywise->holds; }
  /// Smallest margin of the main claim.
  double worst_margin() const;
};

/// Gauge norms evaluated by the norm-form sub-checks.
const std::vector<GaugeNorm>& standard_norms();

/// 2 s_i(G) <= s_i(F) for the off-diagonal block G of a positive F.
Verdict check_tao_positive(const HermMatrix& f, Index split);
/// 2 s(B) ≺_w Spr+(A) for the off-diagonal block B of A.
Verdict check_key(const HermMatrix& a, Index split);
/// tr(AB) <= sum over i of lambda_i(A) lambda_i(B).
Verdict check_trace_pairing(const HermMatrix& a, const HermMatrix& b);
/// Same with B = head ⊕ tail·I.
Verdict check_trace_pairing(const HermMatrix& a, const TailedMatrix& b);
/// lambda(i(AX - XA)) ≺_w ½ Spr+(A)·Spr+(X).
Verdict check_commutator_scale(const HermMatrix& a, const HermMatrix& x);
/// s(AX - XA) ≺_w ½ Spr+(A⊕A)·Spr+(X⊕X), with norm forms.
Verdict check_commutator_sv(const HermMatrix& a, const HermMatrix& x);
/// s(AX - XB) ≺_w Spr+(A⊕B)·s(X); records the entrywise contrast.
Verdict check_mixed_commutator(const HermMatrix& a, const HermMatrix& b, const CMatrix& x);
/// s(AX - XB) ≺_w (Spr+(A1⊕B1) + Spr+(A2⊕B2))·s(X) for A = A1 + iA2, B = B1 + iB2.
Verdict check_general_commutator(const CMatrix& a, const CMatrix& b, const CMatrix& x);
/// s(A - U*AU) ≺_w ½ Spr+(X⊕X)·Spr+(A⊕A) with U = e^{iX}.
Verdict check_unitary_conj(const HermMatrix& a, const HermMatrix& x);

/// The C with A = BC and R(C) ⊥ ker B; throws RangeNotContained unless
/// R(A) ⊆ R(B) numerically.
CMatrix douglas_factorize(const CMatrix& a, const CMatrix& b);

/// 2 s(SEC*) ≺_w Spr+(PEP ⊕ 0) where P = C*C + S*S is a projection.
Verdict check_agm_projection(const CMatrix& s, const CMatrix& c, const HermMatrix& e);
/// Non-compact version: S, C, E carry scalar tails on the complement.
Verdict check_agm_projection(const TailedMatrix& s, const TailedMatrix& c, const TailedMatrix& e);
/// s(S E1 C + C E2 S) ≺_w ½ Spr+(P E1 P ⊕ -P E2 P) for positive S, C with C² + S² = P.
Verdict check_agm_pair(const CMatrix& s, const CMatrix& c, const HermMatrix& e1, const HermMatrix& e2);
/// 2 s(SEC*) ≺_w Spr+(E) with E compact.
Verdict check_agm_compact(const CMatrix& s, const CMatrix& c, const HermMatrix& e);
/// Same claim with E = head ⊕ tail·I; fails in general for a nonzero tail.
Verdict check_agm_compact(const CMatrix& s, const CMatrix& c, const TailedMatrix& e);
/// s(AEB*) ≺_w ½ Spr+(G E G) with G = (A*A + B*B)^{1/2}; records the entrywise contrast.
Verdict check_agm_general(const CMatrix& a, const CMatrix& b, const HermMatrix& e);
/// s(E - F) ≺_w Spr+(E⊕F).
Verdict check_zhan(const HermMatrix& e, const HermMatrix& f);
Verdict check_zhan(const TailedMatrix& e, const TailedMatrix& f);
/// 2 s(PE(I - P)) ≺_w Spr+(E).
Verdict check_projection_split(const HermMatrix& e, const HermMatrix& p);
Verdict check_projection_split(const TailedMatrix& e, const TailedMatrix& p);

/// Kittaneh's positive case: s_i(CX - XD) <= |X| s_i(C⊕D) for positive C, D.
Verdict check_kittaneh_positive(const HermMatrix& c, const HermMatrix& d, const CMatrix& x);
/// Bhatia-Kittaneh: 2 s_i(AB*) <= s_i(A*A + B*B).
Verdict check_bhatia_kittaneh(const CMatrix& a, const CMatrix& b);
/// |E|_2 < g_2(Spr+(E)) for E with eigenvalues of both signs.
Verdict check_strict_gap(const HermMatrix& e);

/// Seeded trials of the equivalent items (projection split, commutator,
/// mixed commutator, Zhan, AGM with C*C + S*S = I) and of the two compact
/// items. One Verdict per trial.
std::vector<Verdict> equivalence_suite(std::uint64_t seed, std::size_t trials);

/// Item names used by equivalence_suite, in order.
const std::vector<std::string>& equivalence_items();
/// One trial of a named item.
Verdict equivalence_trial(const std::string& item, std::uint64_t seed, Index dim);

}  // namespace sspread
