#include "sspread/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

#include "sspread/digest.hpp"

namespace sspread {

namespace {
constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::next_u64() { return splitmix64_mix(seed_ + (++counter_) * golden_gamma); }

double CounterRng::uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

std::size_t CounterRng::index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "empty index range");
  return std::min(n - 1, std::size_t(uniform01() * double(n)));
}

double CounterRng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(t);
  has_cached_ = true;
  return r * std::cos(t);
}

Complex CounterRng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * (1.0 / std::numbers::sqrt2);
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view id, std::uint64_t trial) {
  return splitmix64_mix(Digest().add(base).add(id).add(trial).value());
}

CMatrix gaussian_matrix(CounterRng& rng, Index rows, Index cols, double scale) {
  CMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = scale * rng.complex_normal();
  }
  return g;
}

HermMatrix random_hermitian(CounterRng& rng, Index d, double scale) {
  const CMatrix g = gaussian_matrix(rng, d, d, scale);
  return hermitian_part(g);
}

HermMatrix random_positive(CounterRng& rng, Index d, double scale) {
  const CMatrix g = gaussian_matrix(rng, d, d, std::sqrt(scale));
  return hermitian_part(CMatrix(g.adjoint() * g));
}

CMatrix random_unitary(CounterRng& rng, Index d) {
  const CMatrix g = gaussian_matrix(rng, d, d);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (Index k = 0; k < d; ++k) {
    const double mod = std::abs(r(k, k));
    if (mod > 0.0) q.col(k) *= r(k, k) / mod;
  }
  return q;
}

HermMatrix random_projection(CounterRng& rng, Index d, Index rank) {
  const CMatrix q = random_unitary(rng, d).leftCols(rank);
  return hermitian_part(CMatrix(q * q.adjoint()));
}

PartitionIsometry random_partition_isometry(CounterRng& rng, Index d, Index rank) {
  const CMatrix q = random_unitary(rng, d).leftCols(rank);
  const CMatrix v = random_unitary(rng, d).leftCols(rank);
  const CMatrix w = random_unitary(rng, d).leftCols(rank);
  RVector cosv(rank), sinv(rank);
  for (Index k = 0; k < rank; ++k) {
    const double t = rng.uniform(0.0, std::numbers::pi / 2);
    cosv(k) = std::cos(t);
    sinv(k) = std::sin(t);
  }
  const CMatrix qa = q.adjoint();
  return {v * cosv.asDiagonal() * qa, w * sinv.asDiagonal() * qa, hermitian_part(CMatrix(q * qa))};
}

PartitionIsometry random_agm_pair(CounterRng& rng, Index d, Index rank) {
  const CMatrix q = random_unitary(rng, d).leftCols(rank);
  RVector cosv(rank), sinv(rank);
  for (Index k = 0; k < rank; ++k) {
    const double t = rng.uniform(0.0, std::numbers::pi / 2);
    cosv(k) = std::cos(t);
    sinv(k) = std::sin(t);
  }
  const CMatrix qa = q.adjoint();
  return {hermitian_part(CMatrix(q * cosv.asDiagonal() * qa)).matrix(),
          hermitian_part(CMatrix(q * sinv.asDiagonal() * qa)).matrix(), hermitian_part(CMatrix(q * qa))};
}

GenKind parse_gen_kind(const std::string& name) {
  for (GenKind k : {GenKind::hermitian, GenKind::positive, GenKind::unitary, GenKind::projection,
                    GenKind::partition_isometry, GenKind::complex_general}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::unknown_kind, "unknown generator kind '" + name + "'");
}

std::string_view to_string(GenKind k) noexcept {
  switch (k) {
    case GenKind::hermitian: return "hermitian";
    case GenKind::positive: return "positive";
    case GenKind::unitary: return "unitary";
    case GenKind::projection: return "projection";
    case GenKind::partition_isometry: return "partition_isometry";
    case GenKind::complex_general: return "complex_general";
  }
  return "unknown";
}

std::vector<CMatrix> generate(const GenSpec& spec) {
  if (spec.dim < 1) throw Error(ErrorCode::invalid_argument, "dimension must be at least 1");
  CounterRng rng(spec.seed);
  const Index d = spec.dim;
  switch (spec.kind) {
    case GenKind::hermitian: return {random_hermitian(rng, d, spec.scale).matrix()};
    case GenKind::positive: return {random_positive(rng, d, spec.scale).matrix()};
    case GenKind::unitary: return {random_unitary(rng, d)};
    case GenKind::projection: {
      const Index rank = Index(rng.index(std::size_t(d) + 1));
      return {random_projection(rng, d, rank).matrix()};
    }
    case GenKind::partition_isometry: {
      const Index rank = Index(rng.index(std::size_t(d) + 1));
      auto p = random_partition_isometry(rng, d, rank);
      return {p.c, p.s, p.p.matrix()};
    }
    case GenKind::complex_general: return {gaussian_matrix(rng, d, d, spec.scale)};
  }
  throw Error(ErrorCode::unknown_kind, "unknown generator kind");
}

}  // namespace sspread
