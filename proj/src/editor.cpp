#include "mintej/editor.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "mintej/io.hpp"
#include "mintej/session.hpp"

namespace mintej {
namespace {

constexpr std::size_t kUndoCap = 100;
constexpr std::size_t kStageCapacity = 4096;

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string display_name(const EditorState& ed) { return ed.file->filename().string(); }

// Two listing formats exist side by side: plain reads use "N:line", the
// re-read before a mutation uses "N: line".
void list_buffer(Io& io, const LineBuffer& buf, bool space_after_colon) {
  const char* sep = space_after_colon ? ": " : ":";
  for (std::size_t n = 1; n <= buf.line_count(); ++n)
    io.print_line(std::to_string(n) + sep + buf.line(n));
}

void save_buffer(Session& s) {
  auto& ed = s.editor;
  std::ofstream out(*ed.file, std::ios::binary | std::ios::trunc);
  out << ed.buffer.render();
  out.close();
  ed.buffer.mark_saved();
  s.io.print_line("Saved to " + display_name(ed));
}

bool require_file(Session& s) {
  if (s.editor.file) return true;
  s.io.print_line("No file selected. Use onfile to choose one.");
  return false;
}

// Pre-state snapshot for undo; call after a successful mutation with the
// lines captured beforehand.
void commit_mutation(EditorState& ed, std::vector<std::string> pre) {
  if (pre == ed.buffer.lines()) return;
  if (ed.undo_stack.size() == kUndoCap) ed.undo_stack.erase(ed.undo_stack.begin());
  ed.undo_stack.push_back(std::move(pre));
  ed.redo_stack.clear();
}

LineBuffer buffer_from_lines(const std::vector<std::string>& lines) {
  LineBuffer buf;
  for (const auto& l : lines) buf.append(l);
  return buf;
}

void select_file(Session& s, const std::string& name) {
  auto path = resolve_source_name(s.workdir, name);
  try {
    if (std::filesystem::exists(path)) {
      std::ifstream in(path, std::ios::binary);
      std::ostringstream text;
      text << in.rdbuf();
      s.editor.buffer = LineBuffer::load(text.str());
    } else {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        s.io.print_line("Cannot create file: " + path.string());
        return;
      }
      out << "\n";  // a fresh file opens as one blank line
      s.editor.buffer = LineBuffer::load("\n");
    }
  } catch (const std::exception& e) {
    s.io.print_line(std::string("Cannot open file: ") + e.what());
    return;
  }
  s.editor.file = path;
  s.editor.undo_stack.clear();
  s.editor.redo_stack.clear();
  s.io.print_line("Choose option from info list");
}

// "Enter the file name" + bare read; returns false when input is exhausted.
bool prompt_file_name(Session& s) {
  s.io.print_line("Enter the file name");
  auto name = s.io.read_line("");
  if (!name) return false;
  auto n = trimmed(*name);
  if (!n.empty()) select_file(s, n);
  return true;
}

std::optional<long> parse_int(const std::string& text) {
  auto t = trimmed(text);
  if (t.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    long v = std::stol(t, &used);
    if (used != t.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

// ---- commands ----------------------------------------------------------

void cmd_write(Session& s) {
  if (!require_file(s)) return;
  auto& ed = s.editor;
  s.io.print_line("Editing: " + display_name(ed));
  list_buffer(s.io, ed.buffer, false);
  s.io.print_line("Type new lines. Type 's' to save and exit.");
  SequentialBuffer stage(kStageCapacity);
  while (true) {
    auto line = s.io.read_line("");
    if (!line || *line == "s") break;
    try {
      stage.write(*line);
    } catch (const BufferFullError&) {
      s.io.print_line("Input buffer full; saving what was typed.");
      break;
    }
  }
  auto pre = ed.buffer.lines();
  while (!stage.empty()) ed.buffer.append(stage.read());
  commit_mutation(ed, std::move(pre));
  save_buffer(s);
}

void cmd_read_lines(Session& s) {
  if (!require_file(s)) return;
  auto& buf = s.editor.buffer;
  s.io.print_line("Reading: " + display_name(s.editor));
  list_buffer(s.io, buf, false);
  while (true) {
    s.io.print_line("Info: Enter Start_line, off-set before the start line, End_line till to be read");
    auto in = s.io.read_line("");
    if (!in) return;
    std::istringstream parts(*in);
    std::string a, b, c;
    if (!std::getline(parts, a, ',') || !std::getline(parts, b, ',') || !std::getline(parts, c))
      continue;
    auto start = parse_int(a), offset = parse_int(b), end = parse_int(c);
    if (!start || !offset || !end || *start < 1 || *offset < 0 || *end < 1) continue;
    auto eff_start = static_cast<std::size_t>(std::max(1L, *start - *offset));
    auto eff_end = std::min(static_cast<std::size_t>(*end), buf.line_count());
    for (std::size_t n = eff_start; n <= eff_end && n >= 1; ++n)
      s.io.print_line(std::to_string(n) + ":" + buf.line(n));
    return;
  }
}

// Shared front half of every mutating command: the "Re-reading saved file:"
// echo. The back half (result listing + save) runs only when `mutate`
// reported success.
template <typename Fn>
void mutation_command(Session& s, Fn mutate) {
  if (!require_file(s)) return;
  s.io.print_line("Re-reading saved file:");
  list_buffer(s.io, s.editor.buffer, true);
  auto pre = s.editor.buffer.lines();
  if (!mutate()) return;
  commit_mutation(s.editor, std::move(pre));
  list_buffer(s.io, s.editor.buffer, true);
  save_buffer(s);
}

// Re-prompts until a parsable, in-bounds range arrives; nullopt = input gone.
std::optional<LineRange> prompt_range(Session& s, const std::string& info,
                                      std::size_t max_line) {
  while (true) {
    s.io.print_line(info);
    auto in = s.io.read_line("");
    if (!in) return std::nullopt;
    auto range = LineRange::parse(trimmed(*in));
    if (range && range->start >= 1 && range->end <= max_line) return range;
  }
}

void cmd_delete(Session& s) {
  mutation_command(s, [&] {
    auto range = prompt_range(s, "Info: Enter Start_line & End_line number or line to be deleted",
                              s.editor.buffer.line_count());
    if (!range) return false;
    s.editor.buffer.remove(*range);
    s.editor.history.emplace_back("d", std::to_string(range->start) + ":" + std::to_string(range->end));
    return true;
  });
}

void cmd_copy(Session& s) {
  mutation_command(s, [&] {
    auto& buf = s.editor.buffer;
    auto src = prompt_range(s, "Info: Enter line number to be copied", buf.line_count());
    if (!src) return false;
    std::optional<std::size_t> dest;
    while (!dest) {
      s.io.print_line("Info: Enter location to be copied");
      auto in = s.io.read_line("");
      if (!in) return false;
      auto v = parse_int(*in);
      if (v && *v >= 1 && static_cast<std::size_t>(*v) <= buf.line_count() + 1)
        dest = static_cast<std::size_t>(*v);
    }
    buf.copy_lines(*src, *dest);
    s.editor.history.emplace_back("cp", std::to_string(src->start) + ":" +
                                            std::to_string(src->end) + "->" + std::to_string(*dest));
    return true;
  });
}

void cmd_blank(Session& s) {
  mutation_command(s, [&] {
    auto& buf = s.editor.buffer;
    auto range = prompt_range(s, "Info: Enter line number where the blank space is needed",
                              buf.line_count() + 1);
    if (!range) return false;
    for (std::size_t i = 0; i < range->count(); ++i) buf.insert_blank(range->start);
    s.editor.history.emplace_back("bs", std::to_string(range->start));
    return true;
  });
}

void cmd_comment(Session& s) {
  mutation_command(s, [&] {
    auto range = prompt_range(s, "Info: Enter line number to comment", s.editor.buffer.line_count());
    if (!range) return false;
    s.editor.buffer.comment(*range);
    s.editor.history.emplace_back("cm", std::to_string(range->start) + ":" + std::to_string(range->end));
    return true;
  });
}

void cmd_uncomment(Session& s) {
  mutation_command(s, [&] {
    auto range = prompt_range(s, "Info: Enter line number to uncomment", s.editor.buffer.line_count());
    if (!range) return false;
    s.editor.buffer.uncomment(*range);
    s.editor.history.emplace_back("uncm", std::to_string(range->start) + ":" + std::to_string(range->end));
    return true;
  });
}

void cmd_find(Session& s) {
  if (!require_file(s)) return;
  while (true) {
    s.io.print_line("Info: Enter the keyword to find");
    auto in = s.io.read_line("");
    if (!in) return;
    if (trimmed(*in).empty()) continue;
    const auto& buf = s.editor.buffer;
    bool any = false;
    for (std::size_t n = 1; n <= buf.line_count(); ++n) {
      if (buf.line(n).find(*in) != std::string::npos) {
        s.io.print_line(std::to_string(n) + ": " + buf.line(n));
        any = true;
      }
    }
    if (!any) s.io.print_line("No match found.");
    return;
  }
}

void cmd_copy_file(Session& s) {
  s.io.print_line("Enter the source file name");
  auto src = s.io.read_line("");
  if (!src || trimmed(*src).empty()) return;
  s.io.print_line("Enter the destination file name");
  auto dst = s.io.read_line("");
  if (!dst || trimmed(*dst).empty()) return;
  auto src_path = resolve_source_name(s.workdir, trimmed(*src));
  auto dst_path = resolve_source_name(s.workdir, trimmed(*dst));
  if (!std::filesystem::exists(src_path)) {
    s.io.print_line("No such file: " + trimmed(*src));
    return;
  }
  try {
    std::filesystem::copy_file(src_path, dst_path,
                               std::filesystem::copy_options::overwrite_existing);
    s.io.print_line("Copied '" + trimmed(*src) + "' to '" + trimmed(*dst) + "'");
  } catch (const std::exception& e) {
    s.io.print_line(std::string("Copy failed: ") + e.what());
  }
}

void cmd_undo(Session& s) {
  auto& ed = s.editor;
  if (!ed.file || ed.undo_stack.empty()) {
    s.io.print_line("nothing to undo");
    return;
  }
  ed.redo_stack.push_back(ed.buffer.lines());
  ed.buffer = buffer_from_lines(ed.undo_stack.back());
  ed.undo_stack.pop_back();
  list_buffer(s.io, ed.buffer, true);
  save_buffer(s);
}

void cmd_redo(Session& s) {
  auto& ed = s.editor;
  if (!ed.file || ed.redo_stack.empty()) {
    s.io.print_line("nothing to redo");
    return;
  }
  ed.undo_stack.push_back(ed.buffer.lines());
  ed.buffer = buffer_from_lines(ed.redo_stack.back());
  ed.redo_stack.pop_back();
  list_buffer(s.io, ed.buffer, true);
  save_buffer(s);
}

void print_info(Io& io) {
  auto row = [&](std::string cmd, const std::string& what) {
    if (cmd.size() < 10) cmd.resize(10, ' ');
    io.print_line(cmd + ":: " + what);
  };
  row("w", "Writes the file");
  row("rd_lines", "Reads the file");
  row("d", "deletes the lines in file");
  row("cp", "Copies the lines in file");
  row("bs", "Adds blank lines in file");
  row("cm", "Adds comments to lines in file");
  row("uncm", "Uncomments the lines in file");
  row("onfile", "User enter the filename");
  row("clear", "Clears the console");
  row("find", "Finds the keyword in file");
  row("copy_file", "Copies one file into other");
  row("undo", "Reverts the last change");
  row("redo", "Reapplies the reverted change");
  row("back", "Returns to main mode");
}

}  // namespace

std::filesystem::path resolve_source_name(const std::filesystem::path& workdir,
                                          const std::string& name) {
  std::filesystem::path p(name);
  if (p.filename().string().find('.') == std::string::npos) p += ".jl";
  if (p.is_absolute()) return p.lexically_normal();
  return (workdir / p).lexically_normal();
}

void edm_loop(Session& session) {
  auto& io = session.io;
  if (!prompt_file_name(session)) return;
  while (true) {
    auto input = io.read_line("edm>>");
    if (!input) return;
    auto cmd = trimmed(*input);
    if (cmd == "exit" || cmd == "back") return;
    if (cmd.empty()) continue;
    if (cmd == "info") print_info(io);
    else if (cmd == "onfile") prompt_file_name(session);
    else if (cmd == "w") cmd_write(session);
    else if (cmd == "rd_lines") cmd_read_lines(session);
    else if (cmd == "d") cmd_delete(session);
    else if (cmd == "cp") cmd_copy(session);
    else if (cmd == "bs") cmd_blank(session);
    else if (cmd == "cm") cmd_comment(session);
    else if (cmd == "uncm") cmd_uncomment(session);
    else if (cmd == "find") cmd_find(session);
    else if (cmd == "copy_file") cmd_copy_file(session);
    else if (cmd == "undo") cmd_undo(session);
    else if (cmd == "redo") cmd_redo(session);
    else if (cmd == "clear") io.clear_screen();
    else io.print_line("Unknown command");
  }
}

}  // namespace mintej
