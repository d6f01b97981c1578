#pragma once
// Shared helpers for the test binaries: throwaway directories, file helpers,
// scripted whole-session runs, and the small programs the suites replay.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mintej/io.hpp"
#include "mintej/session.hpp"

namespace testutil {

namespace fs = std::filesystem;

class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    auto base = fs::temp_directory_path();
    std::random_device rd;
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto candidate = base / (tag + "-" + std::to_string(rd()));
      std::error_code ec;
      if (fs::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("could not create temp dir for " + tag);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }

private:
  fs::path path_;
};

inline void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

inline std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline std::string rtrim(const std::string& s) {
  auto e = s.find_last_not_of(" \t\r");
  return e == std::string::npos ? std::string{} : s.substr(0, e + 1);
}

// Replaces every occurrence of the temp workdir with a stable placeholder so
// transcripts can be compared against fixed goldens.
inline std::vector<std::string> normalized(const std::vector<std::string>& lines,
                                           const fs::path& workdir) {
  std::vector<std::string> out;
  auto needle = workdir.string();
  for (auto line : lines) {
    for (auto pos = line.find(needle); pos != std::string::npos; pos = line.find(needle, pos))
      line.replace(pos, needle.size(), "<WORKDIR>");
    out.push_back(line);
  }
  return out;
}

// Drives a single mode loop (or the whole shell) with scripted input and
// returns the transcript.
template <typename Loop>
std::vector<std::string> run_scripted(const fs::path& workdir, std::vector<std::string> inputs,
                                      Loop&& loop) {
  mintej::ScriptIo io(std::move(inputs));
  mintej::Session session(io, workdir);
  loop(session);
  return io.transcript();
}

// The program built in the editor walkthrough and executed in exe mode: an
// initial blank line, then a while loop printing 1..6.
inline const char* kCountdownProgram =
    "\n"
    "global x = 0\n"
    "while x <= 5\n"
    "    global x = x + 1\n"
    "    println(\"The number is:\",x)\n"
    "end\n";

// Function-wrapped counting loop used by the breakpoint walkthroughs; the
// for's `end` sits on line 6 when saved with the leading blank line.
inline const char* kBreakpointProgram =
    "\n"
    "function mi()\n"
    "x = 0\n"
    "for k = 1:3\n"
    "x = x+1\n"
    "end\n"
    "end\n"
    "mi()\n";

// Two-iteration global counter used by the stepping walkthroughs.
inline const char* kSteppingProgram =
    "\n"
    "global x = 0\n"
    "for k = 1:2\n"
    "    global x\n"
    "    x = x + 1\n"
    "end\n";

// The same program as typed interactively, one entry per prompt line.
inline std::vector<std::string> stepping_program_lines() {
  return {"global x = 0", "for k = 1:2", "global x", "x = x + 1", "end"};
}

inline std::vector<std::string> breakpoint_program_lines() {
  return {"function mi()", "x = 0", "for k = 1:3", "x = x+1", "end", "end", "mi()"};
}

// Comparison fixture pair: nearly identical one-statement files whose byte
// sizes land on 0.02 KB and 0.04 KB.
inline const char* kCmpFileA = "\nprintln(\"Hello world\")\n";
inline const char* kCmpFileB = "\nprintln(\"hello Julia Programming) \n";

}  // namespace testutil
