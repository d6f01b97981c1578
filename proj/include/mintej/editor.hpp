#pragma once
// Editor mode: line-oriented editing over a LineBuffer bound to one .jl file,
// with whole-buffer undo/redo snapshots and auto-save after every mutation.

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mintej/seqbuffer.hpp"

namespace mintej {

struct Session;

struct EditorState {
  std::optional<std::filesystem::path> file;
  LineBuffer buffer;
  std::vector<std::vector<std::string>> undo_stack;
  std::vector<std::vector<std::string>> redo_stack;
  std::vector<std::pair<std::string, std::string>> history;  // (command, argument)
};

// Editor filename rule: a bare name (no extension on the basename) gets ".jl"
// appended; relative names resolve against `workdir`.
std::filesystem::path resolve_source_name(const std::filesystem::path& workdir,
                                          const std::string& name);

void edm_loop(Session& session);

}  // namespace mintej
