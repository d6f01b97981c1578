#include "mintej/fms.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#ifndef _WIN32
#include <sys/wait.h>
#include <unistd.h>
#endif

#include "mintej/io.hpp"
#include "mintej/seqbuffer.hpp"
#include "mintej/session.hpp"

namespace mintej {
namespace fs = std::filesystem;
namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Prints `message`, reads one bare line; empty result means skip.
std::string ask(Session& s, const std::string& message) {
  s.io.print_line(message);
  auto in = s.io.read_line("");
  return in ? trimmed(*in) : std::string{};
}

std::vector<std::string> sorted_children(const fs::path& dir, bool full_path) {
  std::vector<std::string> out;
  for (const auto& entry : fs::directory_iterator(dir))
    out.push_back(full_path ? entry.path().string() : entry.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

void cmd_lc(Session& s) {
  s.io.print_line("Printing the current directory");
  s.io.print_line(s.workdir.string());
}

void cmd_dir(Session& s) {
  s.io.print_line("Printing the list content of directory");
  for (const auto& name : sorted_children(s.workdir, false)) s.io.print_line(name);
}

void cmd_ls(Session& s) {
  s.io.print_line("List all files and directory with path");
  for (const auto& p : sorted_children(s.workdir, true)) s.io.print_line(p);
}

void cmd_cdir(Session& s) {
  s.io.print_line("Changing directory");
  auto path = ask(s, "Enter the path");
  if (path.empty()) return;
  auto target = s.resolve(path);
  if (fs::is_directory(target)) {
    s.workdir = target;
    s.io.print_line(s.workdir.string());
  } else {
    s.io.print_line("No such directory: " + path);
  }
}

void cmd_mkdr(Session& s) {
  auto name = ask(s, "Add the folder name to create directory");
  if (name.empty()) return;
  std::error_code ec;
  fs::create_directories(s.resolve(name), ec);
  if (ec) s.io.print_line("Cannot create directory: " + ec.message());
}

void cmd_cpy(Session& s) {
  auto src = ask(s, "Enter the source file/folder name");
  if (src.empty()) return;
  auto dst = ask(s, "Enter the destination file/folder name");
  if (dst.empty()) return;
  auto from = s.resolve(src), to = s.resolve(dst);
  std::error_code ec;
  if (fs::is_directory(from)) {
    fs::create_directories(to, ec);
    fs::copy(from, to, fs::copy_options::recursive | fs::copy_options::overwrite_existing, ec);
  } else {
    fs::copy_file(from, to, fs::copy_options::overwrite_existing, ec);
  }
  if (ec)
    s.io.print_line("Copy failed: " + ec.message());
  else
    s.io.print_line("Copied '" + src + "' to '" + dst + "'");
}

void cmd_delfl(Session& s) {
  auto path = ask(s, "Warning: Provide the file path");
  if (path.empty()) return;  // RETURN skips the delete
  auto target = s.resolve(path);
  if (!fs::is_regular_file(target)) {
    s.io.print_line("No such file: " + path);
    return;
  }
  std::error_code ec;
  fs::remove(target, ec);
  s.io.print_line(ec ? "Delete failed: " + ec.message() : "File is deleted!");
}

void cmd_deldir(Session& s) {
  auto path = ask(s, "Warning: Provide the folder path");
  if (path.empty()) return;
  auto target = s.resolve(path);
  if (!fs::is_directory(target)) {
    s.io.print_line("No such directory: " + path);
    return;
  }
  std::error_code ec;
  fs::remove_all(target, ec);
  s.io.print_line(ec ? "Delete failed: " + ec.message() : "Folder is deleted!");
}

void cmd_rn(Session& s) {
  auto oldname = ask(s, "Enter the oldname file/folder name");
  if (oldname.empty()) return;
  auto newname = ask(s, "Enter the newname file/folder name");
  if (newname.empty()) return;
  std::error_code ec;
  fs::rename(s.resolve(oldname), s.resolve(newname), ec);
  if (ec)
    s.io.print_line("Rename failed: " + ec.message());
  else
    s.io.print_line("Renamed '" + oldname + "' to '" + newname + "'");
}

void cmd_tree(Session& s) {
  s.io.print_line("List tree");
  s.io.print_lines(tree_listing(s.workdir));
}

void cmd_rd_lines(Session& s) {
  auto name = ask(s, "Enter the file name");
  if (name.empty()) return;
  auto path = s.resolve(name);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    s.io.print_line("No such file: " + name);
    return;
  }
  std::ostringstream text;
  text << in.rdbuf();
  auto buf = LineBuffer::load(text.str());
  s.io.print_line("Reading: " + name);
  for (std::size_t n = 1; n <= buf.line_count(); ++n)
    s.io.print_line(std::to_string(n) + ":" + buf.line(n));
}

void cmd_cmp(Session& s) {
  auto a = ask(s, "Enter the text file 1");
  if (a.empty()) return;
  auto b = ask(s, "Enter the text file 2");
  if (b.empty()) return;
  auto pa = s.resolve(a), pb = s.resolve(b);
  if (!fs::is_regular_file(pa)) {
    s.io.print_line("No such file: " + a);
    return;
  }
  if (!fs::is_regular_file(pb)) {
    s.io.print_line("No such file: " + b);
    return;
  }
  compare_files(s.io, pa, pb, a, b);
}

void cmd_cmdwin(Session& s) {
#ifdef _WIN32
  std::system("start cmd");
  s.io.print_line("Opening the command window");
#else
  // Detached terminal; double fork so the grandchild is reparented and a
  // failed exec never surfaces as a zombie here.
  pid_t pid = fork();
  if (pid < 0) {
    s.io.print_line("Could not open a command window on this platform");
    return;
  }
  if (pid == 0) {
    if (fork() == 0) {
      setsid();
      std::error_code ec;
      fs::current_path(s.workdir, ec);
      execlp("x-terminal-emulator", "x-terminal-emulator", static_cast<char*>(nullptr));
      execlp("xterm", "xterm", static_cast<char*>(nullptr));
      _exit(127);
    }
    _exit(0);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  s.io.print_line("Opening the command window");
#endif
}

void print_info(Io& io) {
  io.print_line("lc    :: Current directory");
  io.print_line("dir   :: List directory");
  io.print_line("ls    :: List directory with path");
  io.print_line("cdir  :: Change directory");
  io.print_line("cpy   :: Copy files/directory");
  io.print_line("delfl :: delete file");
  io.print_line("deldir:: delete directory");
  io.print_line("mkdr  :: Create directory");
  io.print_line("rn    :: Rename file/ directory");
  io.print_line("clear :: clear console");
  io.print_line("tree  :: View tree structure");
  io.print_line("rd_lines :: Reads file");
  io.print_line("cmp   :: Compares two text files");
  io.print_line("cmdwin :: Opens the windows instance");
  io.print_line("      :: Unknown command");
}

}  // namespace

FileStats gather_stats(const fs::path& path, const std::string& shown_name) {
  FileStats st;
  st.name = shown_name;
  std::error_code ec;
  st.size_bytes = fs::file_size(path, ec);
  if (ec) st.size_bytes = 0;
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  auto buf = LineBuffer::load(text.str());
  st.lines = buf.line_count();
  for (const auto& line : buf.lines()) {
    std::istringstream words(line);
    std::string w;
    while (words >> w) ++st.words;
  }
  return st;
}

bool compare_files(Io& io, const fs::path& a, const fs::path& b, const std::string& name_a,
                   const std::string& name_b) {
  auto read_lines = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return LineBuffer::load(text.str()).lines();
  };
  auto la = read_lines(a);
  auto lb = read_lines(b);
  bool identical = true;
  auto line_of = [](const std::vector<std::string>& v, std::size_t i) {
    return i < v.size() ? v[i] : std::string{};
  };
  for (std::size_t i = 0; i < std::max(la.size(), lb.size()); ++i) {
    if (line_of(la, i) == line_of(lb, i)) continue;
    identical = false;
    io.print_line("File A: " + std::to_string(i + 1) + " " + line_of(la, i));
    io.print_line("File B: " + std::to_string(i + 1) + " " + line_of(lb, i));
  }
  io.print_line(identical ? "Files are identical" : "Files do not match");

  auto sa = gather_stats(a, name_a);
  auto sb = gather_stats(b, name_b);
  auto row = [&](const std::string& label, const std::string& left, const std::string& right) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-16s%-19s| %s", label.c_str(), left.c_str(), right.c_str());
    io.print_line(buf);
  };
  auto kb = [](std::uintmax_t bytes) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", static_cast<double>(bytes) / 1024.0);
    return std::string(buf);
  };
  row("File name:", sa.name, sb.name);
  row("File size (KB):", kb(sa.size_bytes), kb(sb.size_bytes));
  row("Total lines:", std::to_string(sa.lines), std::to_string(sb.lines));
  row("Total words:", std::to_string(sa.words), std::to_string(sb.words));
  return identical;
}

std::vector<std::string> tree_listing(const fs::path& root) {
  std::vector<fs::path> dirs{root};
  for (auto it = fs::recursive_directory_iterator(root); it != fs::recursive_directory_iterator(); ++it)
    if (it->is_directory()) dirs.push_back(it->path());
  std::sort(dirs.begin() + 1, dirs.end());
  std::vector<std::string> out;
  for (const auto& dir : dirs) {
    out.push_back(dir.string());
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file()) files.push_back(entry.path().filename().string());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back("├── " + f);
  }
  return out;
}

void fms_loop(Session& session) {
  auto& io = session.io;
  while (true) {
    auto input = io.read_line("fms>>");
    if (!input) return;
    auto cmd = trimmed(*input);
    if (cmd == "exit") return;
    if (cmd.empty()) continue;
    try {
      if (cmd == "info") print_info(io);
      else if (cmd == "lc") cmd_lc(session);
      else if (cmd == "dir") cmd_dir(session);
      else if (cmd == "ls") cmd_ls(session);
      else if (cmd == "cdir") cmd_cdir(session);
      else if (cmd == "cpy") cmd_cpy(session);
      else if (cmd == "delfl") cmd_delfl(session);
      else if (cmd == "deldir") cmd_deldir(session);
      else if (cmd == "mkdr") cmd_mkdr(session);
      else if (cmd == "rn") cmd_rn(session);
      else if (cmd == "clear") io.clear_screen();
      else if (cmd == "tree") cmd_tree(session);
      else if (cmd == "rd_lines") cmd_rd_lines(session);
      else if (cmd == "cmp") cmd_cmp(session);
      else if (cmd == "cmdwin") cmd_cmdwin(session);
      else io.print_line("Unknown command");
    } catch (const std::exception& e) {
      io.print_line(std::string("Operation failed: ") + e.what());
    }
  }
}

}  // namespace mintej
