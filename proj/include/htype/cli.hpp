#pragma once

#include "htype/algebra.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace htype::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// heisenberg:k, quaternionic:k, octonionic, or a path to an algebra JSON file.
HTypeAlgebra resolve_algebra(const std::string& source);

/// Runs one command. Reports go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace htype::cli
