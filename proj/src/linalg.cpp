#include "sspread/linalg.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace sspread {

SpreadSeq svd_values(const CMatrix& x, std::size_t horizon) {
  const Index k = std::min(x.rows(), x.cols());
  SpreadSeq out;
  out.model = Model::compact;
  out.values.assign(std::max<std::size_t>(horizon, std::size_t(k)), 0.0);
  if (k == 0) return out;
  // Eigenvectors of X*X, with s_i = |X v_i|: the square roots of tiny
  // eigenvalues of X*X would lose half the working precision.
  const auto e = eigh(hermitian_part(CMatrix(x.adjoint() * x)));
  std::vector<double> s(std::size_t(e.values.size()));
  for (Index i = 0; i < e.values.size(); ++i) s[std::size_t(i)] = (x * e.vectors.col(i)).norm();
  std::sort(s.begin(), s.end(), std::greater<>());
  for (Index i = 0; i < k; ++i) out.values[std::size_t(i)] = s[std::size_t(i)];
  return out;
}

EigenResidual eigen_residual(const HermMatrix& a, const EigenPair& e) {
  const Index n = a.dim();
  const CMatrix av = a.matrix() * e.vectors;
  CMatrix vl = e.vectors;
  for (Index k = 0; k < n; ++k) vl.col(k) *= e.values(k);
  return {(av - vl).norm(), (e.vectors.adjoint() * e.vectors - CMatrix::Identity(n, n)).norm()};
}

}  // namespace sspread
