#pragma once

#include <string>
#include <vector>

#include "etensor/io.hpp"

namespace etensor {

/// Exit codes shared by the command-line tool and the Python module.
enum ExitCode : int { kPass = 0, kFail = 1, kBadInput = 2 };

struct CommandOptions {
  int degree = 2;
  /// Truncation order for deformation commands; negative means the order stored in the file.
  int order = -1;
};

/// A report body starting with "command", and the exit code it implies.
struct CommandResult {
  io::Json body;
  int code = kPass;
};

/// verify-algebra, verify-rep, check-et, mc-check, cohomology, deform-check, deform-extend,
/// equivalence-check.
const std::vector<std::string>& command_names();

/// Runs one command on a parsed algebra file. A failed mathematical check is reported in the
/// result; input problems throw (ParseError, ShapeError, SizeCapError).
CommandResult run_command(const std::string& command, const io::AlgebraFile& file, const CommandOptions& options);

}  // namespace etensor
