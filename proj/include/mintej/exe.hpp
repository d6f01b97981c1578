#pragma once
// Execution mode: run a .jl file in a fresh environment, or a REPL-like
// typed session against the process-wide environment, with output and error
// blocks appended to log files in the working directory.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mintej {

struct Session;

struct ExecResult {
  std::vector<std::string> output;
  std::vector<std::string> error_lines;  // printed after "caught exception:"
  bool ok() const { return error_lines.empty(); }
};

// Fresh-environment run of one file; honors MINTEJ_EXTERNAL_RUNTIME.
// Appends the run's blocks to the session logs.
ExecResult execute_file(Session& session, const std::filesystem::path& path,
                        const std::string& shown_name);

// Splits a watch request on whitespace and commas.
std::vector<std::string> parse_watch_names(const std::string& line);

void exe_loop(Session& session);

}  // namespace mintej
