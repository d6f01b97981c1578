#include "mintej/exe.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <thread>

#ifndef _WIN32
#include <sys/wait.h>
#include <unistd.h>
#endif

#include "mintej/editor.hpp"
#include "mintej/interp.hpp"
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

std::string timestamp() {
  auto now = std::chrono::system_clock::now();
  auto t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
#ifdef _WIN32
  localtime_s(&tm, &t);
#else
  localtime_r(&t, &tm);
#endif
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%d %H:%M:%S", &tm);
  return buf;
}

// One run = one atomic append: the whole block is built first and written in
// a single stream operation so a crash mid-run can't interleave partials.
void append_log(const fs::path& log, const std::string& label,
                const std::vector<std::string>& lines) {
  std::string block = "==== " + timestamp() + " " + label + " ====\n";
  for (const auto& l : lines) block += l + "\n";
  std::ofstream out(log, std::ios::binary | std::ios::app);
  if (out) out << block;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

#ifndef _WIN32
struct ExternalRun {
  std::vector<std::string> out;
  std::vector<std::string> err;
  int exit_code = -1;
};

std::string drain_fd(int fd) {
  std::string data;
  char buf[4096];
  ssize_t n;
  while ((n = read(fd, buf, sizeof buf)) > 0) data.append(buf, static_cast<std::size_t>(n));
  return data;
}

ExternalRun run_external(const std::string& binary, const fs::path& file) {
  ExternalRun result;
  int out_pipe[2], err_pipe[2];
  if (pipe(out_pipe) != 0 || pipe(err_pipe) != 0) {
    result.err = {"cannot create pipes for external runtime"};
    return result;
  }
  pid_t pid = fork();
  if (pid < 0) {
    result.err = {"cannot start external runtime"};
    return result;
  }
  if (pid == 0) {
    dup2(out_pipe[1], STDOUT_FILENO);
    dup2(err_pipe[1], STDERR_FILENO);
    close(out_pipe[0]);
    close(out_pipe[1]);
    close(err_pipe[0]);
    close(err_pipe[1]);
    execlp(binary.c_str(), binary.c_str(), file.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(out_pipe[1]);
  close(err_pipe[1]);
  // Both streams must drain concurrently or a chatty child deadlocks on a
  // full pipe.
  std::string err_text;
  std::thread err_reader([&] { err_text = drain_fd(err_pipe[0]); });
  std::string out_text = drain_fd(out_pipe[0]);
  err_reader.join();
  close(out_pipe[0]);
  close(err_pipe[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = split_lines(out_text);
  result.err = split_lines(err_text);
  if (result.exit_code == 127 && result.out.empty() && result.err.empty())
    result.err = {"external runtime not found: " + binary};
  return result;
}
#endif

void print_info(Io& io) {
  io.print_line("e         :: Execution of julia file");
  io.print_line("repl      :: REPL like session");
  io.print_line("info      :: command information");
}

void cmd_execute(Session& s) {
  s.io.print_line("Enter the file name to execute");
  auto name = s.io.read_line("");
  if (!name) return;
  auto n = trimmed(*name);
  if (n.empty()) return;
  auto path = resolve_source_name(s.workdir, n);
  auto result = execute_file(s, path, n);
  s.io.print_lines(result.output);
  if (!result.ok()) {
    s.io.print_line("whoops - No file or Program runs an issue to execute");
    s.io.print_line("caught exception:");
    s.io.print_lines(result.error_lines);
  }
}

void watch_report(Session& s) {
  s.io.print_line("Enter the variables to watch");
  auto in = s.io.read_line("");
  if (!in) return;
  auto names = parse_watch_names(*in);
  if (names.empty()) return;
  auto vars = s.repl_env.snapshot();
  for (const auto& name : names) {
    bool found = false;
    for (const auto& [k, v] : vars) {
      if (k == name) {
        s.io.print_line(name + " = " + interp::display(v));
        found = true;
        break;
      }
    }
    if (!found) s.io.print_line(name + " is undefined");
  }
}

void repl_session(Session& s) {
  s.io.print_line("Type jl to read file");
  s.io.print_line("OR");
  s.io.print_line("Hit return to work in REPL like session");
  auto choice = s.io.read_line("");
  if (!choice) return;
  std::string source;
  std::string origin = "repl";
  if (trimmed(*choice) == "jl") {
    s.io.print_line("Enter the file name");
    auto name = s.io.read_line("");
    if (!name) return;
    auto n = trimmed(*name);
    if (n.empty()) return;
    auto path = resolve_source_name(s.workdir, n);
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      s.io.print_line("No such file: " + n);
      return;
    }
    std::ostringstream text;
    text << in.rdbuf();
    source = text.str();
    origin = n;
  } else {
    s.io.print_line("Enter your code. Type 'END' on a new line to finish:");
    SequentialBuffer stage(4096);
    while (true) {
      auto line = s.io.read_line("exe>>");
      if (!line || *line == "END") break;
      try {
        stage.write(*line);
      } catch (const BufferFullError&) {
        s.io.print_line("Input buffer full; running what was typed.");
        break;
      }
    }
    while (!stage.empty()) source += stage.read() + "\n";
  }

  auto result = interp::run_in(s.repl_env, source, origin);
  s.io.print_lines(result.output);
  append_log(s.workdir / "mintej_output.log", origin, result.output);
  if (result.error) {
    s.io.print_line("caught exception:");
    s.io.print_line(result.error->render());
    append_log(s.workdir / "mintej_error.log", origin, {result.error->render()});
  } else {
    s.io.print_line("Result: " + interp::show(result.value));
  }
  watch_report(s);
}

}  // namespace

ExecResult execute_file(Session& session, const fs::path& path, const std::string& shown_name) {
  ExecResult result;
#ifndef _WIN32
  if (const char* runtime = std::getenv("MINTEJ_EXTERNAL_RUNTIME"); runtime && *runtime) {
    if (!fs::is_regular_file(path)) {
      result.error_lines = {"SystemError: opening file \"" + shown_name +
                            "\": No such file or directory"};
    } else {
      auto run = run_external(runtime, path);
      result.output = run.out;
      if (run.exit_code != 0) {
        result.error_lines = run.err.empty()
                                 ? std::vector<std::string>{"external runtime exited with code " +
                                                            std::to_string(run.exit_code)}
                                 : run.err;
      }
    }
    append_log(session.workdir / "mintej_output.log", shown_name, result.output);
    if (!result.ok())
      append_log(session.workdir / "mintej_error.log", shown_name, result.error_lines);
    return result;
  }
#endif
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    result.error_lines = {"SystemError: opening file \"" + shown_name +
                          "\": No such file or directory"};
    append_log(session.workdir / "mintej_error.log", shown_name, result.error_lines);
    return result;
  }
  std::ostringstream text;
  text << in.rdbuf();
  auto run = interp::run_program(text.str(), shown_name);
  result.output = run.output;
  if (run.error) result.error_lines = {run.error->render()};
  append_log(session.workdir / "mintej_output.log", shown_name, result.output);
  if (!result.ok())
    append_log(session.workdir / "mintej_error.log", shown_name, result.error_lines);
  return result;
}

std::vector<std::string> parse_watch_names(const std::string& line) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : line + " ") {
    if (c == ' ' || c == '\t' || c == ',' || c == '\r') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return names;
}

void exe_loop(Session& session) {
  auto& io = session.io;
  while (true) {
    auto input = io.read_line("exe>>");
    if (!input) return;
    auto cmd = trimmed(*input);
    if (cmd == "exit") return;
    if (cmd.empty()) continue;
    if (cmd == "info") print_info(io);
    else if (cmd == "e") cmd_execute(session);
    else if (cmd == "repl") repl_session(session);
    else if (cmd == "clear") io.clear_screen();
    else io.print_line("Unknown command");
  }
}

}  // namespace mintej
