#include <cmath>
#include <set>

#include "sspread/harness.hpp"
#include "support.hpp"

using namespace sspread;

TEST_CASE("counter RNG streams are reproducible") {
  CounterRng a(5), b(5), c(6);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
  }
  CounterRng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.index(7) < 7);
  }
  CHECK(test::error_of([&] { r.index(0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("normal draws have unit variance") {
  CounterRng rng(17);
  const int n = 40000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.03);
  CHECK(std::abs(sq / n - mean * mean - 1.0) < 0.03);
}

TEST_CASE("derived seeds separate campaigns and trials") {
  std::set<std::uint64_t> seen;
  for (const char* id : {"key", "zhan"}) {
    for (std::uint64_t t = 0; t < 50; ++t) seen.insert(derive_seed(1, id, t));
  }
  CHECK(seen.size() == 100);
  CHECK(derive_seed(1, "key", 3) == derive_seed(1, "key", 3));
  CHECK(derive_seed(1, "key", 3) != derive_seed(2, "key", 3));
}

TEST_CASE("random generators produce their classes") {
  CounterRng rng(23);
  const CMatrix u = random_unitary(rng, 5);
  CHECK((u.adjoint() * u - CMatrix::Identity(5, 5)).norm() <= 1e-12);
  const HermMatrix p = random_projection(rng, 5, 2);
  CHECK((p.matrix() * p.matrix() - p.matrix()).norm() <= 1e-12);
  CHECK(p.matrix().trace().real() == doctest::Approx(2.0));
  CHECK(eigh(random_positive(rng, 4)).values.minCoeff() >= -1e-12);
  const PartitionIsometry pi = random_partition_isometry(rng, 5, 3);
  const CMatrix sum = pi.c.adjoint() * pi.c + pi.s.adjoint() * pi.s;
  CHECK((sum - pi.p.matrix()).norm() <= 1e-12);
}

TEST_CASE("generate dispatches on the kind") {
  CHECK(generate({GenKind::partition_isometry, 4, 7, 1.0}).size() == 3);
  CHECK(generate({GenKind::unitary, 3, 7, 1.0}).front().rows() == 3);
  CHECK(generate({GenKind::hermitian, 3, 7, 1.0}).front() == generate({GenKind::hermitian, 3, 7, 1.0}).front());
  CHECK(parse_gen_kind("positive") == GenKind::positive);
  CHECK(test::error_of([] { parse_gen_kind("banded"); }) == ErrorCode::unknown_kind);
}

TEST_CASE("trial dimensions cover the range") {
  std::set<Index> dims;
  for (std::uint64_t t = 0; t < 200; ++t) dims.insert(trial_dim(derive_seed(1, "x", t), DimRange{2, 8}));
  CHECK(*dims.begin() == 2);
  CHECK(*dims.rbegin() == 8);
  CHECK(dims.size() == 7);
}

TEST_CASE("fuzz campaigns are deterministic") {
  const FuzzSummary a = fuzz("zhan", 20, DimRange{2, 5}, 3);
  const FuzzSummary b = fuzz("zhan", 20, DimRange{2, 5}, 3);
  CHECK(a.failures == 0);
  CHECK(a.worst_margin == b.worst_margin);
  CHECK(a.worst_seed == b.worst_seed);
  const FuzzSummary empty = fuzz("key", 0, DimRange{}, 1);
  CHECK(empty.trials == 0);
  CHECK(empty.failures == 0);
  CHECK(test::error_of([] { fuzz("nope", 1, DimRange{}, 1); }) == ErrorCode::unknown_inequality);
}

TEST_CASE("every campaign runs on small dimensions") {
  for (const auto& id : fuzz_ids()) {
    INFO(id);
    CHECK(fuzz(id, 5, DimRange{1, 3}, 8).failures == 0);
  }
}

TEST_CASE("worked examples reproduce") {
  for (const auto& id : example_ids()) {
    const ReproReport r = repro(id);
    INFO(id);
    CHECK(r.pass);
    CHECK_FALSE(r.items.empty());
  }
  CHECK(test::error_of([] { repro("nope"); }) == ErrorCode::unknown_example);
}

TEST_CASE("property suite on a reduced budget") {
  const PropertyReport r = property_suite(4, 25);
  CHECK(r.pass);
  std::set<std::string> names;
  for (const auto& p : r.results) {
    INFO(p.name);
    CHECK(p.failures == 0);
    CHECK(p.trials == 25);
    names.insert(p.name);
  }
  CHECK(names.size() == r.results.size());
}
