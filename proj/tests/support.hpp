#pragma once

#include "doctest.h"
#include "sspread/error.hpp"
#include "sspread/sequence.hpp"

namespace test {

/// Code of the sspread::Error thrown by f, or nothing.
template <typename F>
std::optional<sspread::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const sspread::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline void check_values(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  REQUIRE(got.size() >= want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    INFO("index " << i);
    CHECK(std::abs(got[i] - want[i]) <= tol);
  }
}

}  // namespace test
