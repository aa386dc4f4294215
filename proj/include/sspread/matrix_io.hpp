#pragma once

// Plain-text matrix and diagonal-operator files.
//
//   dim 2                     diag
//   mode: compact             head: 2 1.5 -0.5
//   1+0i 0.5-2i               liminf: -1
//   0.5+2i 3                  limsup: 1
//                             generator: harmonic 1 0.5
//
// A matrix file may carry "tail: a+bi", making it head ⊕ tail·I. Blank lines
// and lines starting with '#' are ignored.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "sspread/linalg.hpp"
#include "sspread/sequence.hpp"
#include "sspread/spectra.hpp"

namespace sspread {

struct InputFile {
  std::variant<CMatrix, DiagSpec> content;
  std::optional<Model> mode;
  std::optional<Complex> tail;  // matrix files only

  bool is_diag() const { return std::holds_alternative<DiagSpec>(content); }
  const CMatrix& matrix() const;
  const DiagSpec& diag() const;
  /// Hermitian head, validated.
  HermMatrix hermitian() const;
  TailedMatrix tailed() const;
};

Complex parse_complex(std::string_view token);
std::string format_complex(Complex z);
std::string format_real(double x);

InputFile parse_input(std::string_view text);
InputFile read_input(const std::string& path);

/// Canonical text; parse_input(serialize(f)) reproduces f exactly.
std::string serialize(const InputFile& file);

Model parse_mode(std::string_view name);

}  // namespace sspread
