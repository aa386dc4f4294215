#include "sspread/sequence.hpp"

#include <string>

#include "sspread/error.hpp"

namespace sspread {

std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::matrix: return "matrix";
    case Model::compact: return "compact";
    case Model::diagonal: return "diagonal";
  }
  return "unknown";
}

void validate(const TwoSidedSeq& s, double tolerance) {
  if (s.pos.size() != s.neg.size()) {
    throw Error(ErrorCode::invalid_argument, "pos and neg sides have different horizons");
  }
  for (std::size_t i = 1; i < s.pos.size(); ++i) {
    if (s.pos[i] > s.pos[i - 1] + tolerance) throw Error(ErrorCode::invalid_argument, "pos side increases");
    if (s.neg[i] < s.neg[i - 1] - tolerance) throw Error(ErrorCode::invalid_argument, "neg side decreases");
  }
  if (s.model == Model::matrix) return;
  for (std::size_t i = 0; i < s.pos.size(); ++i) {
    if (s.neg[i] > s.pos[i] + tolerance) {
      throw Error(ErrorCode::invalid_argument, "lambda_{-i} > lambda_i at i=" + std::to_string(i + 1));
    }
  }
  if (s.tail_exact && !s.pos.empty()) {
    if (s.pos_tail && s.pos.back() < *s.pos_tail - tolerance) {
      throw Error(ErrorCode::invalid_argument, "pos side falls below its tail");
    }
    if (s.neg_tail && s.neg.back() > *s.neg_tail + tolerance) {
      throw Error(ErrorCode::invalid_argument, "neg side rises above its tail");
    }
  }
}

void validate(const SpreadSeq& s, double tolerance) {
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (s.values[i] < -tolerance) throw Error(ErrorCode::invalid_argument, "negative entry");
    if (i > 0 && s.values[i] > s.values[i - 1] + tolerance) {
      throw Error(ErrorCode::invalid_argument, "sequence increases");
    }
  }
  if (s.tail < -tolerance) throw Error(ErrorCode::invalid_argument, "negative tail");
}

}  // namespace sspread
