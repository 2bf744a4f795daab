#pragma once

#include <string>

#include "orbifold/cli/spec_io.hpp"

namespace orbifold::cli {

enum ExitCode : int { kPass = 0, kConditionFailure = 1, kInputError = 2, kInternalError = 3 };

struct CommandResult {
  int exit_code = kPass;
  Json json;
  std::string text;  // human-readable table
};

/// The four PBW conditions plus the overlap oracle; exit 3 if the two disagree.
CommandResult cmd_check(const ProblemSpec& spec);
CommandResult cmd_reduce(const ProblemSpec& spec, const std::string& expression, bool graded_t);
CommandResult cmd_multiply(const ProblemSpec& spec, const std::string& lhs, const std::string& rhs, bool graded_t);

enum class SolveStage { Linear, Constant };
/// Exit 1 when the constant stage has no solution; inadmissible kappa^L is
/// an input error.
CommandResult cmd_solve(const ProblemSpec& spec, SolveStage stage);

/// Dimensions of the invariant representatives (H^p)^G of polynomial
/// degree <= q, per conjugacy class and per degree.
CommandResult cmd_cohomology(const ProblemSpec& spec, int p, int q);

/// {"command": ..., "error": {"kind": ..., "message": ...}}
Json error_json(const std::string& command, const std::string& kind, const std::string& message);

}  // namespace orbifold::cli
