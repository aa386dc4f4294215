#include <Eigen/Eigenvalues>
#include <cmath>

#include "sspread/harness.hpp"
#include "sspread/spectra.hpp"
#include "support.hpp"

using namespace sspread;

namespace {

HermMatrix diag(std::vector<double> d) { return HermMatrix::diagonal(d); }

}  // namespace

TEST_CASE("matrix-mode scale lists the eigenvalues both ways") {
  const TwoSidedSeq lam = matrix_scale(diag({1, -2, 3}));
  CHECK(lam.model == Model::matrix);
  test::check_values(lam.pos, {3, 1, -2}, 0.0);
  test::check_values(lam.neg, {-2, 1, 3}, 0.0);
  CHECK_FALSE(lam.pos_tail);
}

TEST_CASE("compact scale splits the spectrum by sign") {
  const TwoSidedSeq lam = compact_scale(diag({2, -1, 0}));
  CHECK(lam.horizon() == 6);
  test::check_values(lam.pos, {2, 0, 0, 0, 0, 0}, 0.0);
  test::check_values(lam.neg, {-1, 0, 0, 0, 0, 0}, 0.0);
  CHECK(*lam.pos_tail == 0.0);
  CHECK(*lam.neg_tail == 0.0);
  CHECK(test::error_of([] { compact_scale(diag({1, 2, 3}), 2); }) == ErrorCode::invalid_argument);
}

TEST_CASE("compact scale agrees with Eigen's eigenvalues") {
  CounterRng rng(21);
  const HermMatrix a = random_hermitian(rng, 7);
  const Eigen::SelfAdjointEigenSolver<CMatrix> ref(a.matrix());
  std::vector<double> pos, neg;
  for (Index i = 6; i >= 0; --i) {
    if (ref.eigenvalues()(i) > 0) pos.push_back(ref.eigenvalues()(i));
  }
  for (Index i = 0; i < 7; ++i) {
    if (ref.eigenvalues()(i) < 0) neg.push_back(ref.eigenvalues()(i));
  }
  const TwoSidedSeq lam = compact_scale(a);
  test::check_values(lam.pos, pos, 1e-12);
  test::check_values(lam.neg, neg, 1e-12);
  for (std::size_t i = pos.size(); i < lam.horizon(); ++i) CHECK(lam.pos[i] == 0.0);
}

TEST_CASE("eigenvalues at rounding level count as zero in the compact model") {
  const TwoSidedSeq lam = compact_scale(diag({1, 1e-17, -1e-17}));
  test::check_values(lam.pos, {1, 0}, 0.0);
  test::check_values(lam.neg, {0, 0}, 0.0);
}

TEST_CASE("spread of the 3x3 weighted matrix") {
  const Agm3x3Example ex = agm_3x3_example();
  const HermMatrix f = hermitian_part(CMatrix(ex.a.adjoint() * ex.a + ex.b.adjoint() * ex.b));
  const HermMatrix g = sqrt_psd(f);
  const HermMatrix geg = hermitian_part(CMatrix(g.matrix() * ex.e.matrix() * g.matrix()));
  test::check_values(compact_spread(geg).values, {13, 2, 0, 0, 0, 0}, 1e-9);
}

TEST_CASE("multiples of the identity have zero spread") {
  const HermMatrix ci = 2.5 * HermMatrix::identity(4);
  test::check_values(matrix_spread(ci).values, {0, 0}, 1e-15);
  DiagSpec c;
  c.liminf = c.limsup = 2.5;
  test::check_values(spread_plus(diag_scale(c, 5)).values, {0, 0, 0, 0, 0}, 0.0);
}

TEST_CASE("the identity and I plus a zero block have different spreads") {
  DiagSpec identity;
  identity.liminf = identity.limsup = 1.0;
  test::check_values(spread_plus(diag_scale(identity, 4)).values, {0, 0, 0, 0}, 0.0);
  DiagSpec with_zero;
  with_zero.liminf = 0.0;
  with_zero.limsup = 1.0;
  with_zero.generator = DiagGenerator{DiagGenerator::Rule::interleaved_harmonic, {1.0, 0.0, 0.0}};
  test::check_values(spread_plus(diag_scale(with_zero, 4)).values, {1, 1, 1, 1}, 0.0);
}

TEST_CASE("diagonal scale of the interleaved harmonic sequence") {
  const TwoSidedSeq lam = diag_scale(diag_scale_example(), 50);
  for (std::size_t i = 0; i < 50; ++i) {
    INFO("i = " << i + 1);
    CHECK(std::abs(lam.pos[i] - (1.0 + 1.0 / double(i + 1))) <= 1e-12);
    CHECK(lam.neg[i] == -1.0);
  }
  CHECK(*lam.pos_tail == 1.0);
  CHECK(*lam.neg_tail == -1.0);
  CHECK_FALSE(lam.tail_exact);
}

TEST_CASE("diagonal scale with a finite head") {
  DiagSpec spec;
  spec.head = {3, -4, 0.5, 2};
  spec.liminf = -1;
  spec.limsup = 1;
  const TwoSidedSeq lam = diag_scale(spec, 4);
  test::check_values(lam.pos, {3, 2, 1, 1}, 0.0);
  test::check_values(lam.neg, {-4, -1, -1, -1}, 0.0);
  CHECK(lam.tail_exact);
}

TEST_CASE("diagonal scale refuses what it cannot certify") {
  DiagSpec spec;
  spec.liminf = spec.limsup = 1.0;
  spec.generator = DiagGenerator{DiagGenerator::Rule::harmonic, {1.0, 1.0}};
  CHECK(test::error_of([&] { diag_scale(spec, 10, 5); }) == ErrorCode::insufficient_sampling);
  CHECK_FALSE(test::error_of([&] { diag_scale(spec, 10); }));
  spec.limsup = 2.0;
  CHECK(test::error_of([&] { diag_scale(spec, 10); }) == ErrorCode::invalid_argument);
}

TEST_CASE("generator rules") {
  const DiagGenerator h{DiagGenerator::Rule::harmonic, {2.0, -1.0}};
  CHECK(h.at(1) == 1.0);
  CHECK(h.at(4) == 1.75);
  CHECK(h.limits() == std::pair{2.0, 2.0});
  const DiagGenerator ih{DiagGenerator::Rule::interleaved_harmonic, {1.0, -1.0, 1.0}};
  CHECK(ih.at(1) == 2.0);
  CHECK(ih.at(2) == 0.0);
  CHECK(ih.at(3) == 1.5);
  CHECK(ih.limits() == std::pair{-1.0, 1.0});
  CHECK(DiagGenerator::parse_rule("interleaved_harmonic") == DiagGenerator::Rule::interleaved_harmonic);
}

TEST_CASE("spreads in the three models") {
  const HermMatrix a = diag({3, -1});
  test::check_values(compact_spread(a).values, {4, 0, 0, 0}, 0.0);
  test::check_values(matrix_spread(a).values, {4}, 0.0);
  const TwoSidedSeq full = spread_full(compact_scale(a));
  for (std::size_t i = 0; i < full.horizon(); ++i) CHECK(full.neg[i] == -full.pos[i]);
  validate(compact_spread(a));
}

TEST_CASE("matrix-mode spread is translation invariant") {
  CounterRng rng(22);
  const HermMatrix a = random_hermitian(rng, 5);
  const SpreadSeq shifted = matrix_spread(a + 7.0 * HermMatrix::identity(5));
  test::check_values(shifted.values, matrix_spread(a).values, 1e-12);
}

TEST_CASE("tailed operators") {
  const TailedMatrix t{diag({2, -3}).matrix(), 1.0};
  const TwoSidedSeq lam = tailed_scale(t, 3);
  test::check_values(lam.pos, {2, 1, 1}, 0.0);
  test::check_values(lam.neg, {-3, 1, 1}, 0.0);
  test::check_values(spread_plus(lam).values, {5, 0, 0}, 0.0);

  const SpreadSeq s = tailed_singular_values(TailedMatrix{diag({2, -3}).matrix(), 0.5}, 4);
  test::check_values(s.values, {3, 2, 0.5, 0.5}, 0.0);
  CHECK(s.tail == 0.5);

  CHECK(test::error_of([] { tailed_scale(TailedMatrix{CMatrix::Identity(2, 2), Complex(0, 1)}); }) ==
        ErrorCode::not_hermitian);
  const TailedMatrix prod = t * t;
  CHECK(prod.tail == Complex(1, 0));
  CHECK(prod.head(1, 1) == Complex(9, 0));
}

TEST_CASE("validate rejects misordered scales") {
  TwoSidedSeq bad;
  bad.pos = {1, 2};
  bad.neg = {-1, -1};
  CHECK(test::error_of([&] { validate(bad); }) == ErrorCode::invalid_argument);
  SpreadSeq neg;
  neg.values = {1, -1};
  CHECK(test::error_of([&] { validate(neg); }) == ErrorCode::invalid_argument);
}
