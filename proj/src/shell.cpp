#include "mintej/shell.hpp"

#include "mintej/debugger.hpp"
#include "mintej/editor.hpp"
#include "mintej/exe.hpp"
#include "mintej/fms.hpp"
#include "mintej/io.hpp"
#include "mintej/session.hpp"
#include "mintej/syntaxdb.hpp"

namespace mintej {
namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> banner_lines() {
  return {
      "+++++",
      "Welcome to Minimalistic Julia Terminal Editor Version 00",
      "+++++",
      "Enter in file management system >>fms",
      "Enter in Editor mode >>edm",
      "Enter in Execution mode >>exe",
      "Enter in debug mode >>db",
      "Enter in syntax mode >>syntax",
  };
}

void main_loop(Session& session) {
  auto& io = session.io;
  io.print_lines(banner_lines());
  while (true) {
    auto input = io.read_line("MinTEJ>>");
    if (!input) return;
    auto cmd = trimmed(*input);
    if (cmd == "exit") return;
    if (cmd.empty()) continue;
    Mode target;
    if (cmd == "edm") target = Mode::Edm;
    else if (cmd == "fms") target = Mode::Fms;
    else if (cmd == "exe") target = Mode::Exe;
    else if (cmd == "db") target = Mode::Db;
    else if (cmd == "syntax" || cmd == "syntx") target = Mode::Syntax;
    else {
      io.print_line("Unknown command");
      continue;
    }
    session.log_transition(Mode::Main, target);
    switch (target) {
      case Mode::Edm: edm_loop(session); break;
      case Mode::Fms: fms_loop(session); break;
      case Mode::Exe: exe_loop(session); break;
      case Mode::Db: db_loop(session); break;
      case Mode::Syntax: syntax_loop(session); break;
      case Mode::Main: break;
    }
    session.log_transition(target, Mode::Main);
  }
}

ReplayResult replay(const std::vector<std::string>& inputs, const std::filesystem::path& workdir,
                    const std::filesystem::path& syntax_db) {
  ScriptIo io(inputs);
  Session session(io, workdir);
  if (!syntax_db.empty()) {
    session.syntax_path = syntax_db;
    session.syntax = ensure_database(syntax_db);
  }
  main_loop(session);
  return ReplayResult{io.transcript(), session.transitions};
}

}  // namespace mintej
