#pragma once

// Dense complex linear algebra on top of Eigen storage: a cyclic Jacobi
// eigensolver for Hermitian matrices and the factorizations built from it.
// Everything here is templated on the real scalar type; the rest of the
// library works with the double instantiation.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "sspread/error.hpp"
#include "sspread/sequence.hpp"

namespace sspread {

using Index = Eigen::Index;

template <typename Real>
using CMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CMatrix = CMatrixT<double>;
using RVector = RVectorT<double>;

namespace tol {
/// Hermiticity and projection checks, relative to max(1, max |entry|).
inline constexpr double hermitian = 1e-10;
inline constexpr double projection = 1e-10;
/// Jacobi stops once the off-diagonal Frobenius norm is below this times ||A||_F.
inline constexpr double jacobi_offdiag = 1e-13;
inline constexpr int jacobi_sweep_cap = 100;
/// Negative eigenvalues of a PSD candidate above -psd_clamp * scale are clamped to zero.
inline constexpr double psd_clamp = 1e-12;
/// Singular values below rank_cutoff * s_1 are treated as zero.
inline constexpr double rank_cutoff = 1e-10;
}  // namespace tol

template <typename Derived>
auto max_abs_entry(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return m.size() == 0 ? Real(0) : Real(m.cwiseAbs().maxCoeff());
}

template <typename Derived>
auto entry_scale(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return std::max(Real(1), max_abs_entry(m));
}

/// max_{i,j} |m_ij - conj(m_ji)|; infinite for non-square input.
template <typename Derived>
auto hermitian_defect(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.rows() != m.cols()) return std::numeric_limits<Real>::infinity();
  return m.size() == 0 ? Real(0) : Real((m - m.adjoint()).cwiseAbs().maxCoeff());
}

/// ||P^2 - P||_max + ||P - P*||_max, the defect used to certify projections.
template <typename Derived>
auto projection_defect(const Eigen::MatrixBase<Derived>& p) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (p.rows() != p.cols()) return std::numeric_limits<Real>::infinity();
  if (p.size() == 0) return Real(0);
  return Real((p * p - p).cwiseAbs().maxCoeff()) + hermitian_defect(p);
}

/// A square complex matrix certified Hermitian at construction. Inputs outside
/// the tolerance are rejected, never symmetrized.
template <typename Real>
class BasicHermMatrix {
 public:
  using Matrix = CMatrixT<Real>;

  BasicHermMatrix() = default;

  explicit BasicHermMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) {
      throw Error(ErrorCode::not_hermitian, "matrix is not square");
    }
    if (!m_.allFinite()) {
      throw Error(ErrorCode::not_hermitian, "matrix has non-finite entries");
    }
    if (hermitian_defect(m_) > Real(tol::hermitian) * entry_scale(m_)) {
      throw Error(ErrorCode::not_hermitian, "asymmetry exceeds tolerance");
    }
  }

  static BasicHermMatrix zero(Index dim) { return BasicHermMatrix(Matrix::Zero(dim, dim)); }
  static BasicHermMatrix identity(Index dim) { return BasicHermMatrix(Matrix::Identity(dim, dim)); }
  static BasicHermMatrix diagonal(std::span<const Real> d) {
    Matrix m = Matrix::Zero(Index(d.size()), Index(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(Index(i), Index(i)) = d[i];
    return BasicHermMatrix(std::move(m));
  }

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  std::complex<Real> operator()(Index i, Index j) const { return m_(i, j); }

  friend BasicHermMatrix operator+(const BasicHermMatrix& a, const BasicHermMatrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "sum of Hermitian matrices");
    return BasicHermMatrix(a.m_ + b.m_);
  }
  friend BasicHermMatrix operator-(const BasicHermMatrix& a, const BasicHermMatrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "difference of Hermitian matrices");
    return BasicHermMatrix(a.m_ - b.m_);
  }
  friend BasicHermMatrix operator-(const BasicHermMatrix& a) { return BasicHermMatrix(Matrix(-a.m_)); }
  friend BasicHermMatrix operator*(Real c, const BasicHermMatrix& a) { return BasicHermMatrix(Matrix(c * a.m_)); }

 private:
  Matrix m_;
};

using HermMatrix = BasicHermMatrix<double>;

/// (M + M*)/2 for a matrix that is Hermitian up to rounding, e.g. a computed product.
template <typename Derived>
auto hermitian_part(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.rows() != m.cols()) throw Error(ErrorCode::dimension_mismatch, "hermitian_part of non-square matrix");
  return BasicHermMatrix<Real>(CMatrixT<Real>((m + m.adjoint()) / Real(2)));
}

/// (M - M*)/(2i), so that M = hermitian_part(M) + i * skew_part(M).
template <typename Derived>
auto skew_part(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  if (m.rows() != m.cols()) throw Error(ErrorCode::dimension_mismatch, "skew_part of non-square matrix");
  const std::complex<Real> two_i(0, 2);
  return BasicHermMatrix<Real>(CMatrixT<Real>((m - m.adjoint()) / two_i));
}

template <typename Real>
struct BasicEigenPair {
  RVectorT<Real> values;    // non-increasing
  CMatrixT<Real> vectors;   // columns in matching order
  int sweeps = 0;
};

using EigenPair = BasicEigenPair<double>;

namespace detail {

// Applies the unitary G = diag(1, conj(phase)) * [[c, s], [-s, c]] on the
// (p, q) plane: w <- G* w G, v <- v G.
template <typename Real>
void jacobi_rotate(CMatrixT<Real>& w, CMatrixT<Real>& v, Index p, Index q) {
  using C = std::complex<Real>;
  const C apq = w(p, q);
  const Real mag = std::abs(apq);
  if (mag == Real(0)) return;
  const C phase = apq / mag;
  const Real theta = (std::real(w(q, q)) - std::real(w(p, p))) / (Real(2) * mag);
  const Real sign = theta >= Real(0) ? Real(1) : Real(-1);
  const Real t = sign / (std::abs(theta) + std::hypot(theta, Real(1)));
  const Real c = Real(1) / std::hypot(t, Real(1));
  const Real s = t * c;

  const C g_pp(c, 0);
  const C g_pq(s, 0);
  const C g_qp = -s * std::conj(phase);
  const C g_qq = c * std::conj(phase);

  const Index n = w.rows();
  for (Index k = 0; k < n; ++k) {
    const C wkp = w(k, p);
    const C wkq = w(k, q);
    w(k, p) = wkp * g_pp + wkq * g_qp;
    w(k, q) = wkp * g_pq + wkq * g_qq;
  }
  for (Index k = 0; k < n; ++k) {
    const C wpk = w(p, k);
    const C wqk = w(q, k);
    w(p, k) = std::conj(g_pp) * wpk + std::conj(g_qp) * wqk;
    w(q, k) = std::conj(g_pq) * wpk + std::conj(g_qq) * wqk;
  }
  w(p, q) = C(0);
  w(q, p) = C(0);
  w(p, p) = C(std::real(w(p, p)), 0);
  w(q, q) = C(std::real(w(q, q)), 0);

  for (Index k = 0; k < v.rows(); ++k) {
    const C vkp = v(k, p);
    const C vkq = v(k, q);
    v(k, p) = vkp * g_pp + vkq * g_qp;
    v(k, q) = vkp * g_pq + vkq * g_qq;
  }
}

template <typename Real>
Real offdiag_norm(const CMatrixT<Real>& w) {
  Real sum = 0;
  for (Index j = 0; j < w.cols(); ++j) {
    for (Index i = 0; i < w.rows(); ++i) {
      if (i != j) sum += std::norm(w(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
/// Eigenvalues come out non-increasing; ties keep their diagonal order.
template <typename Real>
BasicEigenPair<Real> eigh(const BasicHermMatrix<Real>& a) {
  const Index n = a.dim();
  CMatrixT<Real> w = (a.matrix() + a.matrix().adjoint()) / Real(2);
  CMatrixT<Real> v = CMatrixT<Real>::Identity(n, n);

  const Real rel = std::max(Real(tol::jacobi_offdiag),
                            Real(4) * Real(std::max<Index>(n, 1)) * std::numeric_limits<Real>::epsilon());
  const Real threshold = rel * w.norm();

  int sweep = 0;
  while (detail::offdiag_norm(w) > threshold) {
    if (sweep == tol::jacobi_sweep_cap) {
      throw Error(ErrorCode::no_convergence, "Jacobi sweep cap reached");
    }
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) detail::jacobi_rotate(w, v, p, q);
    }
    ++sweep;
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return std::real(w(i, i)) > std::real(w(j, j)); });

  BasicEigenPair<Real> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  out.sweeps = sweep;
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = std::real(w(src, src));
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

template <typename Real>
BasicHermMatrix<Real> direct_sum(const BasicHermMatrix<Real>& a, const BasicHermMatrix<Real>& b) {
  CMatrixT<Real> m = CMatrixT<Real>::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return BasicHermMatrix<Real>(std::move(m));
}

/// A ⊕ 0_k.
template <typename Real>
BasicHermMatrix<Real> pad_zero(const BasicHermMatrix<Real>& a, Index k) {
  return direct_sum(a, BasicHermMatrix<Real>::zero(k));
}

template <typename Derived>
auto direct_sum(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Derived>& b) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  CMatrixT<Real> m = CMatrixT<Real>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

/// The Hermitian dilation [[0, B], [B*, 0]].
template <typename Derived>
auto offdiag_embed(const Eigen::MatrixBase<Derived>& b) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Index r = b.rows();
  const Index c = b.cols();
  CMatrixT<Real> m = CMatrixT<Real>::Zero(r + c, r + c);
  m.topRightCorner(r, c) = b;
  m.bottomLeftCorner(c, r) = b.adjoint();
  return BasicHermMatrix<Real>(std::move(m));
}

/// V f(Λ) V* for a real function f applied to the spectrum.
template <typename Real, typename F>
CMatrixT<Real> spectral_apply(const BasicEigenPair<Real>& e, F&& f) {
  const Index n = e.values.size();
  CMatrixT<Real> scaled = e.vectors;
  for (Index k = 0; k < n; ++k) scaled.col(k) *= f(e.values(k));
  return scaled * e.vectors.adjoint();
}

/// Clamps eigenvalues of a positive semidefinite candidate; throws NotPositive
/// when an eigenvalue is more negative than the clamp tolerance.
template <typename Real>
RVectorT<Real> clamp_psd_spectrum(const RVectorT<Real>& values, Real scale) {
  RVectorT<Real> out = values;
  for (Index k = 0; k < out.size(); ++k) {
    if (out(k) < -Real(tol::psd_clamp) * scale) {
      throw Error(ErrorCode::not_positive, "eigenvalue below clamp tolerance");
    }
    out(k) = std::max(out(k), Real(0));
  }
  return out;
}

/// Positive square root of a positive semidefinite Hermitian matrix.
template <typename Real>
BasicHermMatrix<Real> sqrt_psd(const BasicHermMatrix<Real>& a) {
  auto e = eigh(a);
  const Real scale = std::max(Real(1), e.values.size() ? std::abs(e.values(0)) : Real(0));
  e.values = clamp_psd_spectrum(e.values, scale);
  return hermitian_part(spectral_apply(e, [](Real x) { return std::sqrt(x); }));
}

template <typename Real>
struct BasicPolar {
  CMatrixT<Real> isometry;           // partial isometry U
  BasicHermMatrix<Real> modulus;     // P = (X*X)^{1/2}
};

using Polar = BasicPolar<double>;

/// X = U P with P = (X*X)^{1/2} and U a partial isometry whose initial space is
/// the range of P (singular values below the rank cutoff count as zero).
template <typename Derived>
auto polar(const Eigen::MatrixBase<Derived>& x) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const CMatrixT<Real> xx = x.adjoint() * x;
  const auto e = eigh(hermitian_part(xx));
  // s_k = ||X v_k|| rather than sqrt(mu_k): rounding in mu_k near zero would
  // otherwise surface at the square-root scale and defeat the rank cutoff.
  const CMatrixT<Real> xv = x * e.vectors;
  const RVectorT<Real> sigma = xv.colwise().norm().transpose();
  const Real cutoff = Real(tol::rank_cutoff) * (sigma.size() ? sigma.maxCoeff() : Real(0));

  CMatrixT<Real> scaled = e.vectors, inv_scaled = xv;
  for (Index k = 0; k < sigma.size(); ++k) {
    scaled.col(k) *= sigma(k);
    inv_scaled.col(k) *= (sigma(k) > cutoff && sigma(k) > Real(0)) ? Real(1) / sigma(k) : Real(0);
  }
  return BasicPolar<Real>{CMatrixT<Real>(inv_scaled * e.vectors.adjoint()),
                          hermitian_part(CMatrixT<Real>(scaled * e.vectors.adjoint()))};
}

template <typename Real>
struct BasicSvd {
  CMatrixT<Real> u;        // left singular vectors, one column per retained value
  RVectorT<Real> sigma;    // retained singular values, non-increasing, all > cutoff
  CMatrixT<Real> v;        // right singular vectors
};

using Svd = BasicSvd<double>;

/// Singular triplets with sigma > rel_cutoff * sigma_max, read off the
/// eigenpairs of the Hermitian dilation: (sigma, [u; v]/sqrt 2).
template <typename Derived>
auto nonzero_svd(const Eigen::MatrixBase<Derived>& x, double rel_cutoff = tol::rank_cutoff) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Index r = x.rows();
  const Index c = x.cols();
  const auto e = eigh(offdiag_embed(x));
  const Index k = std::min(r, c);
  const Real top = e.values.size() ? std::max(e.values(0), Real(0)) : Real(0);
  Index keep = 0;
  while (keep < k && e.values(keep) > Real(rel_cutoff) * top && e.values(keep) > Real(0)) ++keep;

  BasicSvd<Real> out;
  out.sigma = e.values.head(keep);
  const Real root2 = std::sqrt(Real(2));
  out.u = root2 * e.vectors.topLeftCorner(r, keep);
  out.v = root2 * e.vectors.bottomLeftCorner(c, keep);
  return out;
}

/// Moore-Penrose pseudoinverse with relative singular value cutoff.
template <typename Derived>
auto pinv(const Eigen::MatrixBase<Derived>& x, double rel_cutoff = tol::rank_cutoff) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const auto s = nonzero_svd(x, rel_cutoff);
  CMatrixT<Real> vs = s.v;
  for (Index k = 0; k < s.sigma.size(); ++k) vs.col(k) /= s.sigma(k);
  return CMatrixT<Real>(vs * s.u.adjoint());
}

template <typename Derived>
Index numerical_rank(const Eigen::MatrixBase<Derived>& x, double rel_cutoff = tol::rank_cutoff) {
  return nonzero_svd(x, rel_cutoff).sigma.size();
}

/// e^{iX} through the eigendecomposition of X.
template <typename Real>
CMatrixT<Real> unitary_exp(const BasicHermMatrix<Real>& x) {
  const auto e = eigh(x);
  const Index n = x.dim();
  CMatrixT<Real> scaled = e.vectors;
  for (Index k = 0; k < n; ++k) scaled.col(k) *= std::polar(Real(1), e.values(k));
  return scaled * e.vectors.adjoint();
}

template <typename Real>
struct BasicCompression {
  BasicHermMatrix<Real> restricted;  // A_P on an orthonormal basis of R(P)
  BasicHermMatrix<Real> full;        // PAP on the whole space
  CMatrixT<Real> basis;              // columns span R(P)
};

using Compression = BasicCompression<double>;

template <typename Real>
BasicCompression<Real> compress(const BasicHermMatrix<Real>& a, const BasicHermMatrix<Real>& p) {
  if (a.dim() != p.dim()) throw Error(ErrorCode::dimension_mismatch, "compress");
  if (projection_defect(p.matrix()) > Real(tol::projection) * entry_scale(p.matrix())) {
    throw Error(ErrorCode::not_projection, "P is not an orthogonal projection");
  }
  const auto e = eigh(p);
  Index rank = 0;
  while (rank < e.values.size() && e.values(rank) > Real(0.5)) ++rank;
  CMatrixT<Real> q = e.vectors.leftCols(rank);
  return BasicCompression<Real>{hermitian_part(CMatrixT<Real>(q.adjoint() * a.matrix() * q)),
                                hermitian_part(CMatrixT<Real>(p.matrix() * a.matrix() * p.matrix())),
                                std::move(q)};
}

/// Operator (spectral) norm.
template <typename Derived>
auto operator_norm(const Eigen::MatrixBase<Derived>& x) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const auto s = nonzero_svd(x, 0.0);
  return s.sigma.size() ? s.sigma(0) : Real(0);
}

/// Singular values via the eigenvalues of X*X, non-increasing, min(rows, cols)
/// entries zero-padded to `horizon` (compact model).
SpreadSeq svd_values(const CMatrix& x, std::size_t horizon = 0);

/// Frobenius-residual diagnostics of an eigendecomposition.
struct EigenResidual {
  double residual;       // ||A V - V diag(values)||_F
  double orthogonality;  // ||V* V - I||_F
};
EigenResidual eigen_residual(const HermMatrix& a, const EigenPair& e);

}  // namespace sspread
