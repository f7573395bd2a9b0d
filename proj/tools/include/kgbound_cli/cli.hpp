#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kgbound_cli/config.hpp"
#include "kgbound_cli/table.hpp"

namespace kgbound::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kConfig = 2,
  kDomain = 3,
  kNumerical = 4,
};

struct CommandResult {
  Table table;
  int exit_code = kOk;
};

CommandResult cmd_spectrum(const Settings& s);
CommandResult cmd_wavefunction(const Settings& s);
CommandResult cmd_solve(const Settings& s);
CommandResult cmd_compare(const Settings& s);
CommandResult cmd_lorentz(const Settings& s);
CommandResult cmd_convergence(const Settings& s);

CommandResult run_command(const std::string& command, const Settings& s);

/// Full command line (args[0] is the program name). Tables go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgbound::cli
