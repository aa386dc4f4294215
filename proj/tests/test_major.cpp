#include <cmath>
#include <limits>

#include "sspread/major.hpp"
#include "sspread/random.hpp"
#include "sspread/spectra.hpp"
#include "support.hpp"

using namespace sspread;

namespace {

SpreadSeq seq(std::vector<double> v, double tail = 0.0, Model m = Model::compact, bool exact = true) {
  SpreadSeq s;
  s.values = std::move(v);
  s.tail = tail;
  s.model = m;
  s.tail_exact = exact;
  return s;
}

using V = std::vector<double>;

}  // namespace

TEST_CASE("submajorization margins are partial-sum differences") {
  const auto r = submajorizes(seq({2, 2}), seq({3, 1}));
  CHECK(r.holds);
  test::check_values(r.margins_upper, {1, 0}, 0.0);
  CHECK(r.worst_k == 2);
  CHECK(r.worst_margin == 0.0);

  const auto bad = submajorizes(seq({3, 1}), seq({2, 2}));
  CHECK_FALSE(bad.holds);
  CHECK(bad.worst_k == 1);
  CHECK(bad.worst_margin == -1.0);
}

TEST_CASE("operands are rearranged before summing") {
  const auto r = submajorizes(seq({0, 1, 0.5}), seq({1, 0.5, 0}));
  CHECK(r.holds);
  test::check_values(r.margins_upper, {0, 0, 0}, 0.0);
}

TEST_CASE("majorization tolerance scales with the right-hand side") {
  CHECK(majorization_tolerance(0.1, 2) == 1e-9);
  CHECK(majorization_tolerance(2.0, 10) == doctest::Approx(2e-8));
  const auto r = submajorizes(seq({1.0 + 1e-12}), seq({1.0}));
  CHECK(r.holds);
  CHECK(r.worst_margin < 0.0);
}

TEST_CASE("majorization compares both ends on R^n") {
  CHECK(majorizes(V{2, 2}, V{3, 1}).holds);
  CHECK_FALSE(majorizes(V{3, 1}, V{2, 2}).holds);
  CHECK_FALSE(majorizes(V{1, 1}, V{3, 1}).holds);  // different totals
  CHECK(test::error_of([] { majorizes(V{1}, V{1, 2}); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("majorization of spectral scales") {
  TwoSidedSeq a, b;
  a.pos = {1, 0};
  a.neg = {-1, 0};
  b.pos = {2, 0};
  b.neg = {-2, 0};
  a.pos_tail = a.neg_tail = b.pos_tail = b.neg_tail = 0.0;
  const auto r = majorizes(a, b);
  CHECK(r.holds);
  CHECK(r.kind == MajorizationKind::majorization);
  test::check_values(r.margins_upper, {1, 1}, 0.0);
  test::check_values(r.margins_lower, {1, 1}, 0.0);
  CHECK_FALSE(majorizes(b, a).holds);
}

TEST_CASE("Weyl's inequality for spectral scales on random pairs") {
  CounterRng rng(31);
  for (int t = 0; t < 20; ++t) {
    const HermMatrix a = random_hermitian(rng, 5), b = random_hermitian(rng, 5);
    CHECK(majorizes(compact_scale(a + b), seq_sum(compact_scale(a), compact_scale(b))).holds);
  }
}

TEST_CASE("only weak majorization survives rearranged products") {
  // x = (1, 0), y = (0, 1): x*y = 0 but x↓*y↓ = (1, 0).
  const V prod = {0, 0}, sorted = {1, 0};
  CHECK(submajorizes(prod, sorted).holds);
  CHECK_FALSE(majorizes(prod, sorted).holds);
}

TEST_CASE("tails follow l-infinity semantics") {
  // Entries at or below the tail are replaced by it.
  const auto r = submajorizes(seq({0.5}, 1.0), seq({3, 1, 1}, 1.0));
  CHECK(r.holds);
  test::check_values(r.margins_upper, {2, 2, 2}, 0.0);
  CHECK(r.tail_verdict == TailVerdict::conclusive);

  CHECK(submajorizes(seq({5}, 1.0), seq({6}, 0.5)).tail_verdict == TailVerdict::tail_violated);
  CHECK_FALSE(submajorizes(seq({5}, 1.0), seq({6}, 0.5)).holds);
  CHECK(submajorizes(seq({1}, 0.0, Model::diagonal, false), seq({2})).tail_verdict == TailVerdict::horizon_limited);
}

TEST_CASE("matrix mode needs equal lengths and cannot mix with other models") {
  const SpreadSeq m2 = seq({1, 0}, 0.0, Model::matrix), m3 = seq({1, 0, 0}, 0.0, Model::matrix);
  CHECK(test::error_of([&] { submajorizes(m2, m3); }) == ErrorCode::dimension_mismatch);
  CHECK(test::error_of([&] { submajorizes(m2, seq({1, 0})); }) == ErrorCode::mode_error);
  CHECK(submajorizes(m2, m2).holds);
}

TEST_CASE("entrywise comparison reports the first violation") {
  const auto e = entrywise_le(seq({6, 2}), seq({12, 1}));
  CHECK_FALSE(e.holds);
  REQUIRE(e.first_violation);
  CHECK(*e.first_violation == 2);
  test::check_values(e.margins, {6, -1}, 0.0);
  CHECK(entrywise_le(seq({1, 1}), seq({1, 1})).holds);
}

TEST_CASE("rearrangements") {
  test::check_values(dec_rearrange(V{1, 3, 2}), {3, 2, 1}, 0.0);
  const SpreadSeq d = decreasing(seq({0.2, 2, 1}, 0.5), 5);
  test::check_values(d.values, {2, 1, 0.5, 0.5, 0.5}, 0.0);
  const TwoSidedSeq ud = updown_rearrange(V{-1, 3, 0, -4, 2});
  test::check_values(ud.pos, {3, 2, 0, 0, 0}, 0.0);
  test::check_values(ud.neg, {-4, -1, 0, 0, 0}, 0.0);
  const TwoSidedData data = interleave(seq({1, 2}), seq({3, 4}));
  test::check_values(data.neg, {1, 2}, 0.0);
  test::check_values(data.pos, {3, 4}, 0.0);
  CHECK(test::error_of([] { interleave(seq({1}), seq({1, 2})); }) == ErrorCode::horizon_mismatch);
  TwoSidedData tailed = data;
  tailed.pos_tail = 1.0;
  CHECK(test::error_of([&] { updown_rearrange(tailed); }) == ErrorCode::mode_error);
}

TEST_CASE("sequence arithmetic") {
  test::check_values(seq_product(seq({2, 3}, 1), seq({4, 5}, 2)).values, {8, 15}, 0.0);
  CHECK(seq_product(seq({2, 3}, 1), seq({4, 5}, 2)).tail == 2.0);
  test::check_values(seq_sum(seq({2, 3}), seq({4, 5})).values, {6, 8}, 0.0);
  test::check_values(seq_scale(seq({2, 3}, 1), 0.5).values, {1, 1.5}, 0.0);
}

TEST_CASE("Ky Fan, Schatten and gauge norms") {
  const SpreadSeq s = seq({4, 3, 0});
  CHECK(ky_fan(s, 1) == 4.0);
  CHECK(ky_fan(s, 2) == 7.0);
  CHECK(schatten(s, 2) == doctest::Approx(5.0));
  CHECK(schatten(s, 1) == 7.0);
  CHECK(std::isinf(schatten(seq({1}, 0.5), 1.0)));
  CHECK(test::error_of([&] { schatten(s, 0.5); }) == ErrorCode::invalid_argument);
  CHECK(gauge(s, GaugeNorm::parse("op")) == 4.0);
  CHECK(gauge(s, GaugeNorm::parse("kyfan:2")) == 7.0);
  CHECK(gauge(s, GaugeNorm::parse("schatten:2")) == doctest::Approx(5.0));
  CHECK(GaugeNorm::parse("kyfan:3").name() == "kyfan:3");
  CHECK(test::error_of([] { GaugeNorm::parse("frobenius"); }) == ErrorCode::invalid_argument);
}
