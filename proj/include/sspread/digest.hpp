#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

#include "sspread/linalg.hpp"

namespace sspread {

/// FNV-1a 64 over the exact bit patterns of the inputs.
class Digest {
 public:
  Digest& add_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      h_ ^= p[i];
      h_ *= 0x100000001b3ULL;
    }
    return *this;
  }
  Digest& add(std::uint64_t v) { return add_bytes(&v, sizeof v); }
  Digest& add(double v) { return add(std::bit_cast<std::uint64_t>(v)); }
  Digest& add(std::string_view s) { return add(std::uint64_t(s.size())).add_bytes(s.data(), s.size()); }
  Digest& add(const CMatrix& m) {
    add(std::uint64_t(m.rows())).add(std::uint64_t(m.cols()));
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) add(m(i, j).real()).add(m(i, j).imag());
    }
    return *this;
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace sspread
