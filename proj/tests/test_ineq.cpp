#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "sspread/harness.hpp"
#include "sspread/ineq.hpp"
#include "support.hpp"

using namespace sspread;

namespace {

HermMatrix diag(std::vector<double> d) { return HermMatrix::diagonal(d); }

const SubCheck* find_check(const Verdict& v, const std::string& name) {
  for (const auto& c : v.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("Kittaneh's example: submajorization holds, the entrywise bound fails") {
  const KittanehExample ex = kittaneh_example();
  const Verdict v = check_mixed_commutator(ex.a, ex.b, ex.x);
  CHECK(v.holds);
  CHECK(v.entrywise_fails());
  REQUIRE(v.entrywise->first_violation);
  CHECK(*v.entrywise->first_violation == 2);
  test::check_values(v.lhs.values, {6, 2}, 1e-9);

  // Independent oracle for s(AX - XB).
  const CMatrix c = ex.a.matrix() * ex.x - ex.x * ex.b.matrix();
  const Eigen::JacobiSVD<CMatrix> svd(c);
  CHECK(svd.singularValues()(0) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(svd.singularValues()(1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("AGM 2x2 example: the half-norm bound fails, the spread bound holds") {
  const Agm2x2Example ex = agm_2x2_example();
  const Verdict v = check_agm_compact(ex.s, ex.c, ex.e);
  CHECK(v.holds);
  const double frob = (ex.s * ex.e.matrix() * ex.c.adjoint()).norm();
  CHECK(std::abs(frob - 0.7598) <= 5e-4);
  CHECK(frob > std::sqrt(2.0) / 2);
  const SubCheck* half = find_check(v, "half_norm:schatten:2");
  REQUIRE(half);
  CHECK_FALSE(half->implied);
  CHECK_FALSE(half->holds);
  test::check_values(v.rhs.values, {2, 0}, 1e-12);
}

TEST_CASE("AGM 3x3 example: submajorization holds, entrywise fails") {
  const Agm3x3Example ex = agm_3x3_example();
  const Verdict v = check_agm_general(ex.a, ex.b, ex.e);
  CHECK(v.holds);
  CHECK(v.entrywise_fails());
  const CMatrix aeb = ex.a * ex.e.matrix() * ex.b.adjoint();
  const Eigen::JacobiSVD<CMatrix> svd(aeb);
  const std::vector<double> expected = {4.74, 1.58, 1.0};
  for (Index i = 0; i < 3; ++i) CHECK(std::abs(svd.singularValues()(i) - expected[std::size_t(i)]) <= 5e-2);
  CHECK(2 * svd.singularValues()(1) > 2.0);
}

TEST_CASE("key inequality on a diagonal matrix") {
  const Verdict v = check_key(diag({3, -1, 2, 0}), 2);
  CHECK(v.holds);
  CHECK(v.lhs.at(0) == 0.0);
}

TEST_CASE("Tao's inequality at equality") {
  CMatrix f(2, 2);
  f << 1, 1, 1, 1;
  const Verdict v = check_tao_positive(HermMatrix(f), 1);
  CHECK(v.holds);
  CHECK(v.claim == ClaimKind::entrywise);
  CHECK(v.lhs.at(0) == doctest::Approx(2.0));
  CHECK(v.rhs.at(0) == doctest::Approx(2.0));
}

TEST_CASE("commutator singular values for a 2x2 pair") {
  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const Verdict v = check_commutator_sv(diag({1, -1}), HermMatrix(x));
  CHECK(v.holds);
  test::check_values(v.lhs.values, {2, 2, 0, 0}, 1e-12);
  test::check_values(v.rhs.values, {2, 2, 0, 0}, 1e-12);
}

TEST_CASE("trace pairing against the identity") {
  CounterRng rng(41);
  const HermMatrix a = random_positive(rng, 4);
  const Verdict v = check_trace_pairing(a, TailedMatrix{CMatrix::Identity(4, 4), 1.0});
  CHECK(v.holds);
  CHECK(std::abs(v.report.worst_margin) <= 1e-10 * a.matrix().norm());
  CHECK(check_trace_pairing(a, random_hermitian(rng, 4)).holds);
  CHECK(test::error_of([&] { check_trace_pairing(a, random_hermitian(rng, 3)); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("strict gap for an indefinite matrix") {
  const Verdict v = check_strict_gap(diag({1, -1}));
  CHECK(v.holds);
  CHECK(v.report.worst_margin == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(test::error_of([] { check_strict_gap(diag({1, 2})); }) == ErrorCode::invalid_argument);
}

TEST_CASE("Douglas factorization") {
  CounterRng rng(42);
  const CMatrix b = gaussian_matrix(rng, 4, 2) * gaussian_matrix(rng, 2, 4);
  const CMatrix a = b * gaussian_matrix(rng, 4, 3);
  const CMatrix c = douglas_factorize(a, b);
  CHECK((b * c - a).norm() <= 1e-9 * a.norm());
  const CMatrix kernel_part = (CMatrix::Identity(4, 4) - pinv(b) * b) * c;
  CHECK(kernel_part.norm() <= 1e-9 * c.norm());
  const CMatrix outside = gaussian_matrix(rng, 4, 3);
  CHECK(test::error_of([&] { douglas_factorize(outside, b); }) == ErrorCode::range_not_contained);
}

TEST_CASE("verifiers validate their hypotheses") {
  const CMatrix half = 0.5 * CMatrix::Identity(2, 2);
  const HermMatrix e = diag({1, -1});
  CHECK(test::error_of([&] { check_agm_projection(half, half, e); }) == ErrorCode::not_projection_sum);
  CHECK(test::error_of([&] { check_projection_split(e, diag({1, 0.5})); }) == ErrorCode::not_projection);
  const CMatrix s = diag({-1, 0}).matrix(), c = diag({0, 1}).matrix();
  CHECK(test::error_of([&] { check_agm_pair(s, c, e, e); }) == ErrorCode::not_positive);
}

TEST_CASE("AGM pair with equal weights reports the real-part and identity forms") {
  const double t = std::numbers::pi / 7;
  const CMatrix s = diag({std::sin(t), 1}).matrix(), c = diag({std::cos(t), 0}).matrix();
  CMatrix ev(2, 2);
  ev << 0.3, Complex(1, -2), Complex(1, 2), -1;
  const HermMatrix e(ev);
  const Verdict v = check_agm_pair(s, c, e, e);
  CHECK(v.holds);
  CHECK(find_check(v, "real_part"));
  REQUIRE(find_check(v, "spread_identity"));
  CHECK(find_check(v, "spread_identity")->holds);
}

TEST_CASE("Zhan's inequality, and the trivial case") {
  CounterRng rng(43);
  const HermMatrix e = random_hermitian(rng, 4), f = random_hermitian(rng, 4);
  CHECK(check_zhan(e, f).holds);
  const Verdict same = check_zhan(e, e);
  CHECK(same.holds);
  CHECK(same.lhs.at(0) <= 1e-12);
}

TEST_CASE("the identity as a non-compact operator has zero spread") {
  const Agm2x2Example ex = agm_2x2_example();
  const Verdict v = check_agm_compact(ex.s, ex.c, TailedMatrix{CMatrix::Identity(2, 2), 1.0});
  CHECK_FALSE(v.holds);
  CHECK(v.rhs.at(0) == 0.0);
}

TEST_CASE("witness digests identify the inputs") {
  const HermMatrix a = diag({1, -2}), b = diag({1, -3});
  CHECK(check_key(a, 1).witness == check_key(a, 1).witness);
  CHECK(check_key(a, 1).witness != check_key(b, 1).witness);
  CHECK(check_key(a, 1).witness != check_key(a, 0).witness);
}

TEST_CASE("equivalence items hold on a few seeds") {
  const auto verdicts = equivalence_suite(99, 3);
  CHECK(verdicts.size() == 3 * equivalence_items().size());
  for (const auto& v : verdicts) {
    INFO(v.ineq_id);
    CHECK(v.holds);
  }
  CHECK(test::error_of([] { equivalence_trial("equiv_9", 1, 3); }) == ErrorCode::unknown_inequality);
}
