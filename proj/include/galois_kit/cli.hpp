#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace galois_kit::cli {

enum class Status { ok, law_violation, precondition_error, budget_exceeded, io_error };

std::string_view to_string(Status s);
int exit_code(Status s);

struct CommandResult {
  Status status = Status::ok;
  nlohmann::json payload;
  /// Set for non-JSON output (DOT graphs, help); printed instead of the payload.
  std::string text;
  std::vector<std::string> diagnostics;
  /// Destination given by --out; empty means stdout.
  std::string out_file;
};

/// Parses argv (without the program name) and runs one subcommand. Never throws.
CommandResult run(const std::vector<std::string>& args);

/// Exactly what the executable writes to stdout (or to --out).
std::string render(const CommandResult& result);

/// Runs, writes the rendered output to stdout or --out and diagnostics to err, and returns the
/// process exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CommandInfo {
  std::string group;
  std::string name;
  std::vector<std::string> operations;  // library operations this subcommand exposes
};

/// The dispatch table, in help order.
std::vector<CommandInfo> command_table();

}  // namespace galois_kit::cli
