#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <regex>
#include <string>
#include <vector>

#include "doctest.h"
#include "mintej/exe.hpp"
#include "mintej/session.hpp"
#include "testutil.hpp"

namespace fs = std::filesystem;
using testutil::TempDir;

namespace {

std::vector<std::string> run_exe(const fs::path& workdir, std::vector<std::string> inputs) {
  return testutil::run_scripted(workdir, std::move(inputs),
                                [](mintej::Session& s) { mintej::exe_loop(s); });
}

struct EnvGuard {
  std::string name;
  EnvGuard(const std::string& n, const std::string& value) : name(n) {
    setenv(name.c_str(), value.c_str(), 1);
  }
  ~EnvGuard() { unsetenv(name.c_str()); }
};

}  // namespace

TEST_CASE("parse_watch_names splits on spaces and commas") {
  CHECK(mintej::parse_watch_names("x y q") == std::vector<std::string>{"x", "y", "q"});
  CHECK(mintej::parse_watch_names("a,b, c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(mintej::parse_watch_names("  one  ") == std::vector<std::string>{"one"});
  CHECK(mintej::parse_watch_names("") == std::vector<std::string>{});
  CHECK(mintej::parse_watch_names(" , ,") == std::vector<std::string>{});
}

TEST_CASE("info lists the exe commands") {
  TempDir dir("exe-info");
  auto transcript = run_exe(dir.path(), {"info", "exit"});
  std::vector<std::string> expected = {
      "exe>>info",
      "e         :: Execution of julia file",
      "repl      :: REPL like session",
      "info      :: command information",
      "exe>>exit",
  };
  CHECK(transcript == expected);
}

TEST_CASE("executing the counting program prints its six lines") {
  TempDir dir("exe-run");
  testutil::write_file(dir.path() / "myfirstcode.jl", testutil::kCountdownProgram);
  auto transcript = run_exe(dir.path(), {"e", "myfirstcode.jl", "exit"});
  std::vector<std::string> expected = {
      "exe>>e",
      "Enter the file name to execute",
      "myfirstcode.jl",
      "The number is:1",
      "The number is:2",
      "The number is:3",
      "The number is:4",
      "The number is:5",
      "The number is:6",
      "exe>>exit",
  };
  CHECK(transcript == expected);
}

TEST_CASE("a parse error takes the whoops path naming the fault") {
  TempDir dir("exe-err");
  testutil::write_file(dir.path() / "test_cmp_2.jl", testutil::kCmpFileB);
  auto transcript = run_exe(dir.path(), {"e", "test_cmp_2.jl", "exit"});
  std::vector<std::string> expected = {
      "exe>>e",
      "Enter the file name to execute",
      "test_cmp_2.jl",
      "whoops - No file or Program runs an issue to execute",
      "caught exception:",
      "ParseError: unterminated string literal at test_cmp_2.jl:2",
      "exe>>exit",
  };
  CHECK(transcript == expected);
}

TEST_CASE("a missing file takes the whoops path with a system error") {
  TempDir dir("exe-missing");
  auto transcript = run_exe(dir.path(), {"e", "nope.jl", "exit"});
  std::vector<std::string> expected = {
      "exe>>e",
      "Enter the file name to execute",
      "nope.jl",
      "whoops - No file or Program runs an issue to execute",
      "caught exception:",
      "SystemError: opening file \"nope.jl\": No such file or directory",
      "exe>>exit",
  };
  CHECK(transcript == expected);
}

TEST_CASE("a runtime error in an executed file is rendered with its line") {
  TempDir dir("exe-rt");
  testutil::write_file(dir.path() / "bad.jl", "x = 1\nprintln(ghost)\n");
  auto transcript = run_exe(dir.path(), {"e", "bad.jl", "exit"});
  CHECK(transcript[3] == "whoops - No file or Program runs an issue to execute");
  CHECK(transcript[5] == "UndefVarError: ghost not defined at bad.jl:2");
}

TEST_CASE("typed repl session evaluates after END and reports the result") {
  TempDir dir("exe-repl");
  auto transcript = run_exe(
      dir.path(),
      {"repl", "", "for k = 1:3", "println(k, \":hello Julia Programming\")", "end", "END",
       "", "exit"});
  std::vector<std::string> expected = {
      "exe>>repl",
      "Type jl to read file",
      "OR",
      "Hit return to work in REPL like session",
      "",
      "Enter your code. Type 'END' on a new line to finish:",
      "exe>>for k = 1:3",
      "exe>>println(k, \":hello Julia Programming\")",
      "exe>>end",
      "exe>>END",
      "1:hello Julia Programming",
      "2:hello Julia Programming",
      "3:hello Julia Programming",
      "Result: nothing",
      "Enter the variables to watch",
      "",
      "exe>>exit",
  };
  CHECK(transcript == expected);
}

TEST_CASE("END alone runs the empty program") {
  TempDir dir("exe-empty");
  auto transcript = run_exe(dir.path(), {"repl", "", "END", "", "exit"});
  CHECK(transcript[7] == "Result: nothing");
}

TEST_CASE("repl environment persists across sessions") {
  TempDir dir("exe-persist");
  auto transcript = run_exe(dir.path(), {"repl", "", "x = 5", "END", "",
                                         "repl", "", "println(x)", "END", "",
                                         "exit"});
  bool printed = false;
  for (std::size_t i = 1; i < transcript.size(); ++i)
    if (transcript[i] == "5" && transcript[i + 1] == "Result: nothing") printed = true;
  CHECK(printed);
}

TEST_CASE("watch report prints values and flags unknowns") {
  TempDir dir("exe-watch");
  auto transcript = run_exe(dir.path(), {"repl", "", "x = 1", "y = 2", "END", "x y q", "exit"});
  REQUIRE(transcript.size() >= 5);
  std::vector<std::string> tail(transcript.end() - 5, transcript.end());
  std::vector<std::string> expected = {"x y q", "x = 1", "y = 2", "q is undefined", "exe>>exit"};
  CHECK(tail == expected);
}

TEST_CASE("repl jl mode reads a file into the persistent environment") {
  TempDir dir("exe-jl");
  testutil::write_file(dir.path() / "myfirstcode.jl", testutil::kCountdownProgram);
  auto transcript =
      run_exe(dir.path(), {"repl", "jl", "myfirstcode.jl", "x", "exit"});
  std::vector<std::string> expected = {
      "exe>>repl",
      "Type jl to read file",
      "OR",
      "Hit return to work in REPL like session",
      "jl",
      "Enter the file name",
      "myfirstcode.jl",
      "The number is:1",
      "The number is:2",
      "The number is:3",
      "The number is:4",
      "The number is:5",
      "The number is:6",
      "Result: nothing",
      "Enter the variables to watch",
      "x",
      "x = 6",
      "exe>>exit",
  };
  CHECK(transcript == expected);
}

TEST_CASE("repl jl mode reports a missing file") {
  TempDir dir("exe-jl-miss");
  auto transcript = run_exe(dir.path(), {"repl", "jl", "ghost.jl", "exit"});
  CHECK(transcript[7] == "No such file: ghost.jl");
}

TEST_CASE("a repl error is caught and the environment survives") {
  TempDir dir("exe-repl-err");
  auto transcript = run_exe(dir.path(), {"repl", "", "x = 7", "END", "",
                                         "repl", "", "boom", "END", "",
                                         "repl", "", "println(x)", "END", "",
                                         "exit"});
  bool caught = false;
  bool still_there = false;
  for (std::size_t i = 0; i + 1 < transcript.size(); ++i) {
    if (transcript[i] == "caught exception:" &&
        transcript[i + 1] == "UndefVarError: boom not defined at repl:1")
      caught = true;
    if (transcript[i] == "7" && transcript[i + 1] == "Result: nothing") still_there = true;
  }
  CHECK(caught);
  CHECK(still_there);
}

TEST_CASE("runs append timestamped blocks to the output log") {
  TempDir dir("exe-log");
  testutil::write_file(dir.path() / "p.jl", "println(\"logged\")\n");
  run_exe(dir.path(), {"e", "p.jl", "e", "p.jl", "exit"});
  auto log = testutil::read_file(dir.path() / "mintej_output.log");
  std::regex header(R"(==== \d{4}-\d{2}-\d{2} \d{2}:\d{2}:\d{2} p\.jl ====)");
  auto begin = std::sregex_iterator(log.begin(), log.end(), header);
  CHECK(std::distance(begin, std::sregex_iterator()) == 2);
  CHECK(log.find("logged\n") != std::string::npos);
  CHECK_FALSE(fs::exists(dir.path() / "mintej_error.log"));
}

TEST_CASE("failed runs append the rendered error to the error log") {
  TempDir dir("exe-errlog");
  testutil::write_file(dir.path() / "bad.jl", "boom\n");
  run_exe(dir.path(), {"e", "bad.jl", "exit"});
  auto log = testutil::read_file(dir.path() / "mintej_error.log");
  CHECK(log.find("bad.jl ====") != std::string::npos);
  CHECK(log.find("UndefVarError: boom not defined at bad.jl:1\n") != std::string::npos);
}

TEST_CASE("external runtime executes the file when configured") {
  TempDir dir("exe-ext");
  testutil::write_file(dir.path() / "p.jl", "not minijl at all\n");
  EnvGuard guard("MINTEJ_EXTERNAL_RUNTIME", "/bin/cat");
  auto transcript = run_exe(dir.path(), {"e", "p.jl", "exit"});
  std::vector<std::string> expected = {
      "exe>>e",
      "Enter the file name to execute",
      "p.jl",
      "not minijl at all",
      "exe>>exit",
  };
  CHECK(transcript == expected);
}

TEST_CASE("a missing external runtime is reported, not silently ignored") {
  TempDir dir("exe-ext-miss");
  testutil::write_file(dir.path() / "p.jl", "x\n");
  EnvGuard guard("MINTEJ_EXTERNAL_RUNTIME", "/no/such/interpreter");
  auto transcript = run_exe(dir.path(), {"e", "p.jl", "exit"});
  CHECK(transcript[3] == "whoops - No file or Program runs an issue to execute");
  CHECK(transcript[5] == "external runtime not found: /no/such/interpreter");
}

TEST_CASE("external runtime failures surface stderr lines") {
  TempDir dir("exe-ext-err");
  testutil::write_file(dir.path() / "p.jl", "x\n");
  EnvGuard guard("MINTEJ_EXTERNAL_RUNTIME", "/bin/false");
  auto transcript = run_exe(dir.path(), {"e", "p.jl", "exit"});
  CHECK(transcript[3] == "whoops - No file or Program runs an issue to execute");
  CHECK(transcript[5] == "external runtime exited with code 1");
}

TEST_CASE("unknown commands and blank lines in the exe loop") {
  TempDir dir("exe-misc");
  auto transcript = run_exe(dir.path(), {"bogus", "", "clear", "exit"});
  std::vector<std::string> expected = {
      "exe>>bogus", "Unknown command", "exe>>", "exe>>clear", "<CLEAR>", "exe>>exit"};
  CHECK(transcript == expected);
}
