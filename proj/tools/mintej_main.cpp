#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mintej/bench.hpp"
#include "mintej/io.hpp"
#include "mintej/session.hpp"
#include "mintej/shell.hpp"
#include "mintej/syntaxdb.hpp"

namespace fs = std::filesystem;

namespace {

fs::path executable_dir(const char* argv0) {
  std::error_code ec;
  auto self = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) return self.parent_path();
  auto p = fs::absolute(fs::path(argv0), ec);
  return ec ? fs::current_path() : p.parent_path();
}

std::vector<std::string> read_script(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MinTEJ - minimalistic terminal editor for Julia-style programs"};
  std::string script;
  std::string workdir = ".";
  std::string syntax_db;
  std::vector<std::string> bench;
  app.add_option("--script", script, "Run a scripted session and print its transcript");
  app.add_option("--workdir", workdir, "Working directory for the session");
  app.add_option("--syntax-db", syntax_db, "Path of the syntax database file");
  app.add_option("--bench", bench, "Sample a process: PID INTERVAL_SECONDS WINDOW")
      ->expected(3);
  CLI11_PARSE(app, argc, argv);

  if (!bench.empty()) {
    try {
      int pid = std::stoi(bench[0]);
      double interval = std::stod(bench[1]);
      std::size_t window = static_cast<std::size_t>(std::stoul(bench[2]));
      mintej::bench_sample(pid, interval, window, std::cout);
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "bad --bench arguments: " << e.what() << "\n";
      return 2;
    }
  }

  fs::path db_path = syntax_db.empty() ? executable_dir(argv[0]) / "syntax_db.txt"
                                       : fs::path(syntax_db);

  if (!script.empty()) {
    auto result = mintej::replay(read_script(script), workdir, db_path);
    for (const auto& line : result.transcript) std::cout << line << "\n";
    return 0;
  }

  mintej::ConsoleIo io;
  mintej::Session session(io, workdir);
  session.syntax_path = db_path;
  try {
    session.syntax = mintej::ensure_database(db_path);
  } catch (const std::exception& e) {
    io.print_line(std::string("syntax database unavailable: ") + e.what());
  }
  mintej::main_loop(session);
  return 0;
}
