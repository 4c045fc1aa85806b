#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coxl2/coxeter_system.hpp"
#include "coxl2/weights.hpp"

namespace coxl2 {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitUnknown = 2, kExitInconsistent = 3, kExitInputError = 4 };

/// "1/2" (every class), "1/2,3" (one value per class), "ge1" / "le1" (symbolic ray, all
/// exponents 1) or "ge1:1,2" (symbolic ray with exponents per class).
Weight parse_weight(const CoxeterSystem& sys, const std::string& text);

/// Runs `coxl2 <args...>`; args excludes the program name. Output JSON goes to `out`
/// (or to the --json file), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxl2
