#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>

#include "sspread/linalg.hpp"
#include "sspread/random.hpp"
#include "support.hpp"

using namespace sspread;

TEST_CASE("eigh matches Eigen's self-adjoint solver") {
  CounterRng rng(11);
  for (Index d : {1, 2, 3, 5, 8, 16, 32}) {
    const HermMatrix a = random_hermitian(rng, d);
    const EigenPair e = eigh(a);
    const Eigen::SelfAdjointEigenSolver<CMatrix> ref(a.matrix());
    for (Index i = 0; i < d; ++i) {
      CHECK(e.values(i) == doctest::Approx(ref.eigenvalues()(d - 1 - i)).epsilon(1e-12));
    }
    const auto r = eigen_residual(a, e);
    CHECK(r.residual <= 1e-10 * std::max(1.0, a.matrix().norm()));
    CHECK(r.orthogonality <= 1e-12 * double(d));
  }
}

TEST_CASE("eigh of a 2x2 block has the closed-form eigenvalues") {
  const double a = 1.5, c = -0.25;
  const Complex b(0.3, -1.1);
  CMatrix m(2, 2);
  m << a, b, std::conj(b), c;
  const double mid = (a + c) / 2, rad = std::sqrt((a - c) * (a - c) / 4 + std::norm(b));
  const EigenPair e = eigh(HermMatrix(m));
  CHECK(e.values(0) == doctest::Approx(mid + rad).epsilon(1e-14));
  CHECK(e.values(1) == doctest::Approx(mid - rad).epsilon(1e-14));
}

TEST_CASE("eigh returns non-increasing eigenvalues with ties") {
  const std::vector<double> d = {1, 3, 1, -2, 3};
  const EigenPair e = eigh(HermMatrix::diagonal(d));
  test::check_values({e.values.data(), e.values.data() + e.values.size()}, {3, 3, 1, 1, -2}, 0.0);
}

TEST_CASE("eigh works in extended precision") {
  CounterRng rng(3);
  const CMatrix g = gaussian_matrix(rng, 6, 6);
  const BasicHermMatrix<long double> a(CMatrixT<long double>((g + g.adjoint()).cast<std::complex<long double>>()));
  const auto e = eigh(a);
  const CMatrixT<long double> diff = a.matrix() * e.vectors - e.vectors * e.values.asDiagonal();
  CHECK(double(diff.norm()) <= 1e-15);
}

TEST_CASE("HermMatrix rejects non-Hermitian input") {
  CMatrix m(2, 2);
  m << 1, 2, 3, 4;
  CHECK(test::error_of([&] { HermMatrix h(m); }) == ErrorCode::not_hermitian);
  CHECK(test::error_of([&] { HermMatrix h(CMatrix(2, 3)); }) == ErrorCode::not_hermitian);
}

TEST_CASE("hermitian and skew parts recombine") {
  CounterRng rng(5);
  const CMatrix x = gaussian_matrix(rng, 4, 4);
  const CMatrix back = hermitian_part(x).matrix() + Complex(0, 1) * skew_part(x).matrix();
  CHECK((back - x).norm() <= 1e-14);
}

TEST_CASE("direct sums, padding and the off-diagonal embedding") {
  const HermMatrix a = HermMatrix::diagonal(std::vector<double>{1, 2});
  const HermMatrix b = HermMatrix::diagonal(std::vector<double>{3});
  const HermMatrix s = direct_sum(a, b);
  CHECK(s.dim() == 3);
  CHECK(s(2, 2).real() == 3);
  CHECK(s(0, 2) == Complex(0, 0));
  CHECK(pad_zero(a, 2).dim() == 4);
  CMatrix x(1, 2);
  x << Complex(1, 1), 2;
  const auto hat = offdiag_embed(x);
  CHECK(hat.dim() == 3);
  CHECK(hat(0, 1) == Complex(1, 1));
  CHECK(hat(1, 0) == Complex(1, -1));
  CHECK(hat(0, 0) == Complex(0, 0));
}

TEST_CASE("sqrt_psd squares back and rejects indefinite input") {
  CounterRng rng(8);
  const HermMatrix p = random_positive(rng, 5);
  const HermMatrix r = sqrt_psd(p);
  CHECK((r.matrix() * r.matrix() - p.matrix()).norm() <= 1e-10 * p.matrix().norm());
  CHECK(eigh(r).values.minCoeff() >= -1e-12);
  CHECK(test::error_of([] { sqrt_psd(HermMatrix::diagonal(std::vector<double>{1, -1})); }) ==
        ErrorCode::not_positive);
}

TEST_CASE("polar decomposition of a rank-deficient matrix") {
  CounterRng rng(9);
  const CMatrix x = gaussian_matrix(rng, 4, 2) * gaussian_matrix(rng, 2, 4);
  const Polar pd = sspread::polar(x);
  CHECK((pd.isometry * pd.modulus.matrix() - x).norm() <= 1e-10 * x.norm());
  const CMatrix uu = pd.isometry.adjoint() * pd.isometry;
  CHECK((uu * uu - uu).norm() <= 1e-9);
  CHECK(std::abs(uu.trace().real() - 2.0) <= 1e-9);
}

TEST_CASE("singular values match Eigen's SVD") {
  CounterRng rng(12);
  for (auto [r, c] : {std::pair<Index, Index>{3, 3}, {2, 5}, {6, 1}, {7, 4}}) {
    const CMatrix x = gaussian_matrix(rng, r, c);
    const Eigen::JacobiSVD<CMatrix> ref(x);
    const SpreadSeq s = svd_values(x);
    CHECK(s.horizon() == std::size_t(std::min(r, c)));
    for (Index i = 0; i < std::min(r, c); ++i) {
      CHECK(s.at(std::size_t(i)) == doctest::Approx(ref.singularValues()(i)).epsilon(1e-12));
    }
    const Svd t = nonzero_svd(x);
    CHECK((t.u * t.sigma.asDiagonal() * t.v.adjoint() - x).norm() <= 1e-10 * x.norm());
    CHECK(operator_norm(x) == doctest::Approx(ref.singularValues()(0)).epsilon(1e-12));
  }
}

TEST_CASE("svd_values keeps small singular values accurate") {
  const std::vector<double> d = {1.0, 1e-9, 1e-13};
  const CMatrix x = HermMatrix::diagonal(d).matrix();
  const SpreadSeq s = svd_values(x, 5);
  CHECK(s.horizon() == 5);
  CHECK(s.at(1) == doctest::Approx(1e-9).epsilon(1e-6));
  CHECK(s.at(2) == doctest::Approx(1e-13).epsilon(1e-3));
  CHECK(s.at(4) == 0.0);
}

TEST_CASE("pinv satisfies the Moore-Penrose identities") {
  CounterRng rng(13);
  const CMatrix x = gaussian_matrix(rng, 5, 2) * gaussian_matrix(rng, 2, 4);
  const CMatrix p = pinv(x);
  CHECK(numerical_rank(x) == 2);
  CHECK((x * p * x - x).norm() <= 1e-9 * x.norm());
  CHECK((p * x * p - p).norm() <= 1e-9 * p.norm());
  const CMatrix xp = x * p, px = p * x;
  CHECK((xp - xp.adjoint()).norm() <= 1e-9);
  CHECK((px - px.adjoint()).norm() <= 1e-9);
}

TEST_CASE("unitary_exp") {
  CounterRng rng(14);
  const HermMatrix x = random_hermitian(rng, 4);
  const CMatrix u = unitary_exp(x);
  CHECK((u.adjoint() * u - CMatrix::Identity(4, 4)).norm() <= 1e-12);
  const CMatrix flip = unitary_exp(HermMatrix::diagonal(std::vector<double>{std::numbers::pi, 0}));
  CHECK(std::abs(flip(0, 0) - Complex(-1, 0)) <= 1e-15);
  CHECK(std::abs(flip(1, 1) - Complex(1, 0)) <= 1e-15);
}

TEST_CASE("compress restricts to the range of the projection") {
  CounterRng rng(15);
  const HermMatrix a = random_hermitian(rng, 5);
  const HermMatrix p = random_projection(rng, 5, 3);
  const Compression c = compress(a, p);
  CHECK(c.restricted.dim() == 3);
  CHECK((c.basis * c.restricted.matrix() * c.basis.adjoint() - c.full.matrix()).norm() <= 1e-10);
  CHECK(test::error_of([&] { compress(a, HermMatrix::diagonal(std::vector<double>{1, 0.5, 0, 0, 0})); }) ==
        ErrorCode::not_projection);
}
