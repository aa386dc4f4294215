#pragma once

// The sspread command line. Exit codes: 0 success, 1 a check or campaign
// failed, 2 parse or input error, 3 mode violation, 4 unknown id.

#include <iosfwd>

#include "sspread/error.hpp"

namespace sspread {

int exit_code(ErrorCode code) noexcept;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sspread
