#include "mintej/debugger.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "mintej/editor.hpp"
#include "mintej/interp.hpp"
#include "mintej/io.hpp"
#include "mintej/seqbuffer.hpp"
#include "mintej/session.hpp"

namespace mintej {

using minilang::AstNode;
using minilang::AstPtr;
using minilang::Compound;
using minilang::Head;

namespace {

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

AstPtr clone(const AstNode& node) { return std::make_shared<const AstNode>(node); }

}  // namespace

AstPtr step_transform(const AstNode& node, int depth) {
  const Compound* c = minilang::as_compound(node);
  if (!c) {
    if (minilang::as_marker(node)) return clone(node);
    return minilang::make_compound(Head::Step, {clone(node)}, 0, depth);
  }
  switch (c->head) {
    case Head::Block: {
      std::vector<AstPtr> args;
      args.reserve(c->args.size());
      for (const auto& item : c->args) {
        if (minilang::as_marker(*item))
          args.push_back(item);
        else
          args.push_back(step_transform(*item, depth + 1));
      }
      return minilang::make_compound(Head::Block, std::move(args), c->end_line, c->aux);
    }
    case Head::If: {
      std::vector<AstPtr> args{c->args[0], step_transform(*c->args[1], depth)};
      if (c->args.size() == 3) args.push_back(step_transform(*c->args[2], depth));
      return minilang::make_compound(Head::If, std::move(args), c->end_line, c->aux);
    }
    case Head::While:
      return minilang::make_compound(Head::While, {c->args[0], step_transform(*c->args[1], depth)},
                                     c->end_line, c->aux);
    case Head::For:
      return minilang::make_compound(Head::StepFor,
                                     {c->args[0], step_transform(*c->args[1], depth + 1)},
                                     c->end_line, depth);
    case Head::Function:
      return minilang::make_compound(Head::Function,
                                     {c->args[0], step_transform(*c->args[1], depth)},
                                     c->end_line, c->aux);
    default:
      return minilang::make_compound(Head::Step, {clone(node)}, 0, depth);
  }
}

AstPtr erase_instrumentation(const AstNode& node) {
  const Compound* c = minilang::as_compound(node);
  if (!c) return clone(node);
  switch (c->head) {
    case Head::Step:
      return erase_instrumentation(*c->args[0]);
    case Head::StepFor:
      return minilang::make_compound(
          Head::For, {erase_instrumentation(*c->args[0]), erase_instrumentation(*c->args[1])},
          c->end_line, 0);
    case Head::Block: {
      std::vector<AstPtr> args;
      for (const auto& item : c->args) {
        if (minilang::as_compound(*item, Head::Breakpoint)) continue;
        args.push_back(erase_instrumentation(*item));
      }
      return minilang::make_compound(Head::Block, std::move(args), c->end_line, c->aux);
    }
    default: {
      std::vector<AstPtr> args;
      args.reserve(c->args.size());
      for (const auto& item : c->args) args.push_back(erase_instrumentation(*item));
      return minilang::make_compound(c->head, std::move(args), c->end_line, c->aux);
    }
  }
}

namespace {

// Appends the breakpoint as the body's final statement; for if-chains the
// innermost chained branch owns the shared `end`.
AstPtr append_break_to_body(const Compound& c, int line);

AstPtr append_break(const AstNode& block, int line) {
  const Compound* b = minilang::as_compound(block, Head::Block);
  std::vector<AstPtr> args = b ? b->args : std::vector<AstPtr>{clone(block)};
  args.push_back(minilang::make_compound(Head::Breakpoint, {}, 0, line));
  return minilang::make_compound(Head::Block, std::move(args), b ? b->end_line : 0,
                                 b ? b->aux : 0);
}

AstPtr append_break_to_body(const Compound& c, int line) {
  std::vector<AstPtr> args = c.args;
  if (c.head == Head::If && args.size() == 3) {
    if (const Compound* chained = minilang::as_compound(*args[2], Head::If)) {
      args[2] = append_break_to_body(*chained, line);
      return minilang::make_compound(c.head, std::move(args), c.end_line, c.aux);
    }
    args[2] = append_break(*args[2], line);
    return minilang::make_compound(c.head, std::move(args), c.end_line, c.aux);
  }
  args[1] = append_break(*args[1], line);
  return minilang::make_compound(c.head, std::move(args), c.end_line, c.aux);
}

AstPtr insert_bp(const AstNode& node, int line, bool& found) {
  const Compound* c = minilang::as_compound(node);
  if (!c) return clone(node);
  if (c->head == Head::Block) {
    std::vector<AstPtr> args;
    args.reserve(c->args.size() + 1);
    for (const auto& item : c->args) {
      if (const auto* m = minilang::as_marker(*item)) {
        args.push_back(item);
        if (!found && m->line == line) {
          found = true;
          args.push_back(minilang::make_compound(Head::Breakpoint, {}, 0, line));
        }
      } else {
        args.push_back(insert_bp(*item, line, found));
      }
    }
    return minilang::make_compound(Head::Block, std::move(args), c->end_line, c->aux);
  }
  std::vector<AstPtr> args;
  args.reserve(c->args.size());
  for (const auto& item : c->args) args.push_back(insert_bp(*item, line, found));
  auto rebuilt = minilang::make_compound(c->head, std::move(args), c->end_line, c->aux);
  if (!found && c->end_line == line &&
      (c->head == Head::For || c->head == Head::While || c->head == Head::Function ||
       c->head == Head::If)) {
    found = true;
    return append_break_to_body(*minilang::as_compound(*rebuilt), line);
  }
  return rebuilt;
}

}  // namespace

std::optional<AstPtr> insert_breakpoint(const AstNode& program, int line) {
  bool found = false;
  auto result = insert_bp(program, line, found);
  if (!found) return std::nullopt;
  return result;
}

bool parse_watch_assignment(const std::string& input, WatchList& list) {
  if (trimmed(input).empty()) return true;  // keep the current list
  static const std::regex shape(R"(^\s*list_variables\s*=\s*\[([^\]]*)\]\s*$)");
  std::smatch m;
  if (!std::regex_match(input, m, shape)) return false;
  static const std::regex name_shape(R"(^:[A-Za-z_][A-Za-z0-9_]*$)");
  std::vector<std::string> names;
  std::istringstream inner(m[1].str());
  std::string piece;
  while (std::getline(inner, piece, ',')) {
    auto p = trimmed(piece);
    if (p.empty()) return false;
    if (!std::regex_match(p, name_shape)) return false;
    names.push_back(p.substr(1));
  }
  list.names = std::move(names);
  return true;
}

namespace {

class TraceClient : public interp::DebugClient {
 public:
  TraceClient(Session& session, interp::Environment& env) : s_(session), env_(env) {}

  WatchList watch;

  void statement_echo(int depth, const AstNode& stmt) override {
    s_.io.print_line("Line at " + std::to_string(depth) + ": " + minilang::unparse(stmt));
  }

  void after_statement(int depth) override {
    print_watch();
    if (depth == 2) pause();
  }

  void loop_enter(int depth, const AstNode& loop) override {
    auto text = minilang::unparse(loop);
    std::istringstream lines(text);
    std::string line;
    bool first = true;
    while (std::getline(lines, line)) {
      if (first)
        s_.io.print_line("Entering for loop at depth " + std::to_string(depth) + ": " + line);
      else
        s_.io.print_line(line);
      first = false;
    }
  }

  void iteration_end(int) override {
    pause();
    print_watch();
  }

  void breakpoint_hit(int line, interp::Environment& env) override {
    s_.io.print_line("Breakpoint hit at line " + std::to_string(line));
    s_.io.print_line("Variables in scope:");
    for (const auto& [name, value] : env.snapshot())
      s_.io.print_line("  " + name + " = " + interp::display(value));
    s_.io.read_line("");  // RETURN continues
  }

 private:
  void print_watch() {
    for (const auto& name : watch.names)
      if (auto v = env_.lookup(name)) s_.io.print_line("  " + name + " = " + interp::display(*v));
  }

  void pause() {
    auto in = s_.io.read_line("Enter variable assignment (e.g., list_variables = [:x, :y]): ");
    if (!in) return;
    if (!parse_watch_assignment(*in, watch))
      s_.io.print_line("Invalid watch assignment; expected list_variables = [:x, :y]");
  }

  Session& s_;
  interp::Environment& env_;
};

// Writes the source verbatim and parses from the copy so every marker (and
// thus every directive the traces print) cites the debug file.
std::optional<AstPtr> prepare_debug_copy(Session& s, const std::string& source,
                                         std::string& copy_name) {
  auto copy = s.workdir / "output_debug.jl";
  {
    std::ofstream out(copy, std::ios::binary | std::ios::trunc);
    out << source;
  }
  copy_name = copy.string();
  try {
    return minilang::parse_program(source, copy_name);
  } catch (const ParseError& e) {
    interp::ErrorInfo info;
    info.kind = interp::ErrorInfo::Kind::Parse;
    info.message = e.what();
    info.line = e.line();
    info.file = e.file();
    s.io.print_line(info.render());
    return std::nullopt;
  }
}

void run_traced(Session& s, const AstNode& program, const std::string& copy_name) {
  interp::Environment env;
  interp::OutputSink sink([&](const std::string& l) { s.io.print_line(l); });
  TraceClient client(s, env);
  interp::Evaluator ev(env, sink, &client);
  try {
    ev.eval(program);
  } catch (const EvalError& e) {
    interp::ErrorInfo info;
    info.message = e.what();
    info.line = e.line();
    info.file = ev.current_file().empty() ? copy_name : ev.current_file();
    s.io.print_line(info.render());
  }
}

}  // namespace

void run_stepped(Session& session, const std::string& source) {
  std::string copy_name;
  auto program = prepare_debug_copy(session, source, copy_name);
  if (!program) return;
  auto instrumented = step_transform(**program, 1);
  run_traced(session, *instrumented, copy_name);
}

void run_with_breakpoint(Session& session, const std::string& source, int line) {
  std::string copy_name;
  auto program = prepare_debug_copy(session, source, copy_name);
  if (!program) return;
  auto armed = insert_breakpoint(**program, line);
  if (!armed) {
    session.io.print_line("Warning: no statement at line " + std::to_string(line) +
                          "; running without breakpoint");
    run_traced(session, **program, copy_name);
    return;
  }
  run_traced(session, **armed, copy_name);
}

namespace {

void print_info(Io& io) {
  auto row = [&](std::string key, const std::string& what) {
    if (key.size() < 12) key.resize(12, ' ');
    io.print_line(key + ":: " + what);
  };
  row("db", "debug mode - step and break");
  row("bp", "Break point mode");
  row("ibp", "interactive break");
  row("", "file mode break");
  row("stepin", "Run the code step wise");
  row("", "Run file code step wise");
  row("istepin", "interactive step");
  row("clear", "clears the console");
}

// db>> lines staged until END, echoed back numbered for verification.
std::optional<std::string> read_typed_program(Session& s) {
  SequentialBuffer stage(4096);
  while (true) {
    auto line = s.io.read_line("db>>");
    if (!line || *line == "END") break;
    try {
      stage.write(*line);
    } catch (const BufferFullError&) {
      s.io.print_line("Input buffer full; using what was typed.");
      break;
    }
  }
  auto lines = stage.contents();
  std::string source;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    s.io.print_line(std::to_string(i + 1) + ": " + lines[i]);
    source += lines[i] + "\n";
  }
  return source;
}

std::optional<std::string> read_source_file(Session& s) {
  s.io.print_line("Enter the file name");
  auto name = s.io.read_line("");
  if (!name) return std::nullopt;
  auto n = trimmed(*name);
  if (n.empty()) return std::nullopt;
  auto path = resolve_source_name(s.workdir, n);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    s.io.print_line("No such file: " + n);
    return std::nullopt;
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::optional<int> read_breakpoint_line(Session& s) {
  s.io.print_line("Add the break point");
  auto in = s.io.read_line("");
  if (!in) return std::nullopt;
  try {
    std::size_t used = 0;
    int line = std::stoi(trimmed(*in), &used);
    if (used == trimmed(*in).size() && line >= 1) return line;
  } catch (...) {
  }
  s.io.print_line("Invalid line number");
  return std::nullopt;
}

void interactive_breakpoint(Session& s) {
  auto source = read_typed_program(s);
  if (!source) return;
  auto line = read_breakpoint_line(s);
  if (!line) return;
  run_with_breakpoint(s, *source, *line);
}

void file_breakpoint(Session& s) {
  auto source = read_source_file(s);
  if (!source) return;
  auto line = read_breakpoint_line(s);
  if (!line) return;
  run_with_breakpoint(s, *source, *line);
}

void interactive_step(Session& s) {
  auto source = read_typed_program(s);
  if (!source) return;
  run_stepped(s, *source);
}

void file_step(Session& s) {
  auto source = read_source_file(s);
  if (!source) return;
  run_stepped(s, *source);
}

void bp_choice(Session& s) {
  s.io.print_line("Type ibp for interactive breakpoint");
  s.io.print_line("Hit RETURN for adding breakpoint in julia file");
  auto choice = s.io.read_line("");
  if (!choice) return;
  if (trimmed(*choice) == "ibp")
    interactive_breakpoint(s);
  else
    file_breakpoint(s);
}

void step_choice(Session& s) {
  s.io.print_line("Type istepin for interactive stepping");
  s.io.print_line("Hit RETURN for adding interactive stepping in julia file");
  auto choice = s.io.read_line("");
  if (!choice) return;
  if (trimmed(*choice) == "istepin")
    interactive_step(s);
  else
    file_step(s);
}

}  // namespace

void db_loop(Session& session) {
  auto& io = session.io;
  while (true) {
    auto input = io.read_line("db>>");
    if (!input) return;
    auto cmd = trimmed(*input);
    if (cmd == "exit") return;
    if (cmd.empty()) continue;
    if (cmd == "info") print_info(io);
    else if (cmd == "bp") bp_choice(session);
    else if (cmd == "ibp") interactive_breakpoint(session);
    else if (cmd == "stepin") step_choice(session);
    else if (cmd == "istepin") interactive_step(session);
    else if (cmd == "clear") io.clear_screen();
    else io.print_line("Unknown command");
  }
}

}  // namespace mintej
