#pragma once
// The shared state every mode reads and writes: one Io, one working
// directory, one editor buffer, one REPL environment, one syntax database.
// Mode transitions pass through here and are logged for the mode-graph tests.

#include <filesystem>
#include <string>
#include <vector>

#include "mintej/editor.hpp"
#include "mintej/interp.hpp"
#include "mintej/io.hpp"
#include "mintej/syntaxdb.hpp"

namespace mintej {

enum class Mode { Main, Edm, Fms, Exe, Db, Syntax };

const char* mode_name(Mode mode);    // "main", "edm", ...
const char* mode_prompt(Mode mode);  // "MinTEJ>>", "edm>>", ...

struct Session {
  Io& io;
  std::filesystem::path workdir;  // logical cwd; fms `cdir` moves it
  EditorState editor;
  interp::Environment repl_env;  // persists across repl sessions in one process
  SyntaxDb syntax;
  std::filesystem::path syntax_path;
  std::vector<std::string> transitions;  // "main->edm", "edm->main", ...

  Session(Io& io, std::filesystem::path workdir);

  // Relative paths resolve against the session working directory.
  std::filesystem::path resolve(const std::filesystem::path& name) const;
  void log_transition(Mode from, Mode to);
};

}  // namespace mintej
