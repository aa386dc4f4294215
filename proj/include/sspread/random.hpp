#pragma once

// Reproducible random instances. The stream is SplitMix64 in counter form:
// the n-th draw (n = 1, 2, ...) is mix(seed + n * 0x9E3779B97F4A7C15), so any
// implementation can regenerate it from the seed alone.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sspread/linalg.hpp"

namespace sspread {

std::uint64_t splitmix64_mix(std::uint64_t z);

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform on {0, ..., n - 1}.
  std::size_t index(std::size_t n);
  /// Standard normal (Box-Muller; the second value of each pair is cached).
  double normal();
  /// (N1 + i N2) / sqrt 2.
  Complex complex_normal();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// Seed for trial `trial` of campaign `id` under base seed `base`.
std::uint64_t derive_seed(std::uint64_t base, std::string_view id, std::uint64_t trial);

CMatrix gaussian_matrix(CounterRng& rng, Index rows, Index cols, double scale = 1.0);
HermMatrix random_hermitian(CounterRng& rng, Index d, double scale = 1.0);
HermMatrix random_positive(CounterRng& rng, Index d, double scale = 1.0);
/// Haar-distributed unitary (QR of a Gaussian matrix with phase correction).
CMatrix random_unitary(CounterRng& rng, Index d);
/// Orthogonal projection of the given rank.
HermMatrix random_projection(CounterRng& rng, Index d, Index rank);

/// C = V diag(cos θ) Q*, S = W diag(sin θ) Q*, P = Q Q*; C*C + S*S = P.
struct PartitionIsometry {
  CMatrix c;
  CMatrix s;
  HermMatrix p;
};
PartitionIsometry random_partition_isometry(CounterRng& rng, Index d, Index rank);

/// Positive S = Q diag(sin θ) Q*, C = Q diag(cos θ) Q* with C² + S² = Q Q*.
PartitionIsometry random_agm_pair(CounterRng& rng, Index d, Index rank);

enum class GenKind { hermitian, positive, unitary, projection, partition_isometry, complex_general };

struct GenSpec {
  GenKind kind = GenKind::hermitian;
  Index dim = 1;
  std::uint64_t seed = 0;
  double scale = 1.0;
};

GenKind parse_gen_kind(const std::string& name);
std::string_view to_string(GenKind k) noexcept;

/// One matrix for most kinds; {C, S, P} for partition_isometry (random rank).
std::vector<CMatrix> generate(const GenSpec& spec);

}  // namespace sspread
