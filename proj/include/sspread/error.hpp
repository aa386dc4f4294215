#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sspread {

enum class ErrorCode {
  not_hermitian,
  no_convergence,
  not_projection,
  not_positive,
  not_projection_sum,
  dimension_mismatch,
  horizon_mismatch,
  mode_error,
  insufficient_sampling,
  range_not_contained,
  invalid_argument,
  parse_error,
  unknown_kind,
  unknown_example,
  unknown_inequality,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sspread
