#include "mintej/syntaxdb.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mintej/io.hpp"
#include "mintej/session.hpp"

namespace mintej {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string trimmed(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_header(std::string_view line) { return line.rfind("==", 0) == 0; }

}  // namespace

SyntaxDb SyntaxDb::parse(const std::string& text) {
  SyntaxDb db;
  std::istringstream in(text);
  std::string line;
  bool have_entry = false;
  SyntaxEntry current;
  auto flush = [&] {
    if (have_entry) db.add(std::move(current));
    current = {};
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_header(line)) {
      flush();
      current.key = trimmed(std::string_view(line).substr(2));
      if (current.key.empty()) throw SyntaxDbError("record header with empty keyword");
      have_entry = true;
    } else if (!have_entry) {
      if (!trimmed(line).empty())
        throw SyntaxDbError("content before first record header: \"" + line + "\"");
      // leading blank lines are tolerated
    } else {
      current.body.push_back(line);
    }
  }
  flush();
  // Trailing blank lines on the last record are a file-formatting artifact.
  if (!db.entries_.empty()) {
    auto& body = db.entries_.back().body;
    while (!body.empty() && trimmed(body.back()).empty()) body.pop_back();
  }
  return db;
}

SyntaxDb SyntaxDb::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxDbError("cannot open database file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string SyntaxDb::render() const {
  std::string out;
  for (const auto& e : entries_) {
    out += "== " + e.key + "\n";
    for (const auto& l : e.body) out += l + "\n";
  }
  return out;
}

void SyntaxDb::save_file(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw SyntaxDbError("cannot write database file: " + tmp.string());
    out << render();
  }
  std::filesystem::rename(tmp, path);
}

std::vector<std::string> SyntaxDb::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.key);
  return out;
}

const SyntaxEntry* SyntaxDb::lookup(std::string_view key) const {
  auto want = lower(key);
  for (const auto& e : entries_)
    if (lower(e.key) == want) return &e;
  return nullptr;
}

void SyntaxDb::add(SyntaxEntry entry) {
  if (lookup(entry.key)) throw SyntaxDbError("duplicate keyword: " + entry.key);
  if (entry.key.empty()) throw SyntaxDbError("empty keyword");
  for (const auto& l : entry.body)
    if (is_header(l))
      throw SyntaxDbError("body line in \"" + entry.key + "\" would start a new record: \"" + l + "\"");
  // Trailing blank lines would be lost on a file round trip; normalize now so
  // in-memory and re-loaded entries agree.
  while (!entry.body.empty() && trimmed(entry.body.back()).empty()) entry.body.pop_back();
  entries_.push_back(std::move(entry));
}

namespace {

SyntaxEntry entry(std::string key, std::vector<std::string> body) {
  return SyntaxEntry{std::move(key), std::move(body)};
}

}  // namespace

SyntaxDb stock_database() {
  SyntaxDb db;
  db.add(entry("print", {
      "println(\"Hello world\")",
      "name = \"Julia\"",
      "println(\"Hello \", name)",
      "print(\"print stays on the same line\")",
  }));
  db.add(entry("arithmetic", {
      "a = 7 + 3 * 2     # 13",
      "b = 2^10          # 1024",
      "c = 7 / 2         # 3.5, / always yields a float",
      "d = div(7, 2)     # 3, integer division",
      "e = 7 % 2         # 1, remainder",
  }));
  db.add(entry("parse", {
      "x = parse(Int64, \"42\")",
      "y = parse(Float64, \"2.5\")",
      "string(42)        # back to \"42\"",
  }));
  db.add(entry("formatting", {
      "using Printf",
      "@printf(\"pi is %.3f\\n\", 3.14159)",
      "s = @sprintf(\"%05d\", 42)    # \"00042\"",
  }));
  db.add(entry("stringformatting", {
      "name = \"Julia\"",
      "greeting = \"Hello $name\"",
      "\"1 + 1 = $(1 + 1)\"",
      "lpad(\"7\", 3, '0')    # \"007\"",
  }));
  db.add(entry("errorhandling", {
      "try",
      "    sqrt(-1.0)",
      "catch err",
      "    println(\"caught: \", err)",
      "finally",
      "    println(\"done\")",
      "end",
  }));
  db.add(entry("arrays", {
      "a = [1, 2, 3]",
      "push!(a, 4)",
      "a[1]         # 1-based indexing",
      "length(a)    # 4",
      "b = [i * i for i in 1:5]",
  }));
  db.add(entry("dictionary", {
      "d = Dict(\"one\" => 1, \"two\" => 2)",
      "d[\"three\"] = 3",
      "haskey(d, \"two\")     # true",
      "for (k, v) in d",
      "    println(k, \" => \", v)",
      "end",
  }));
  db.add(entry("variables", {
      "x = 42               # Int64",
      "y = 2.5              # Float64",
      "s = \"text\"           # String",
      "flag = true          # Bool",
      "global counter = 0   # reach the global from inside a scope",
  }));
  db.add(entry("for", {
      "for k = 1:10",
      "    println(\"Index is:\", k)",
      "end",
  }));
  db.add(entry("if", {
      "x = 7",
      "if x > 10",
      "    println(\"big\")",
      "elseif x > 5",
      "    println(\"medium\")",
      "else",
      "    println(\"small\")",
      "end",
  }));
  db.add(entry("while", {
      "global x = 0",
      "while x <= 5",
      "    x = x + 1",
      "    println(x)",
      "end",
  }));
  db.add(entry("function", {
      "function greet(name)",
      "    println(\"Hello \", name)",
      "end",
      "greet(\"Julia\")",
  }));
  db.add(entry("mathematicalprogramming", {
      "Mathematical Optimization in Syntax",
      "More examples can be found here:",
      "https://jump.dev/JuMP.jl/stable/tutorials/getting_started/getting_started_with_JuMP/",
      "-----",
      "using JuMP",
      "using HiGHS",
      "model = Model(HiGHS.Optimizer)",
      "",
      "@variable(model, x >= 0)",
      "@variable(model, 0 <= y <= 3)",
      "@objective(model, Min, 12x + 20y)",
      "",
      "@constraint(model, c1, 6x + 8y >= 100)",
      "@constraint(model, c2, 7x + 12y >= 120)",
      "",
      "print(model)",
      "optimize!(model)",
      "",
      "termination_status(model) #OPTIMAL::TerminationStatusCode = 1",
      "primal_status(model) #FEASIBLE_POINT::ResultStatusCode = 1",
      "dual_status(model) #FEASIBLE_POINT::ResultStatusCode = 1",
      "",
      "objective_value(model)",
      "value(x)",
      "value(y)",
      "shadow_price(c1)",
      "shadow_price(c2)",
  }));
  return db;
}

SyntaxDb ensure_database(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) stock_database().save_file(path);
  return SyntaxDb::load_file(path);
}

namespace {

void print_info(Session& s) {
  s.io.print_line("-----");
  s.io.print_line("Examples are taken from");
  s.io.print_line("1. https://juliabyexample.helpmanual.io/");
  s.io.print_line("2. https://www.datacamp.com/cheat-sheet/julia-basics-cheat-sheet");
  for (const auto& k : s.syntax.keys()) s.io.print_line(":" + k);
}

void add_flow(Session& s) {
  auto key = s.io.read_line("Enter the new keyword: ");
  if (!key) return;
  auto k = trimmed(*key);
  if (k.empty()) {
    s.io.print_line("No keyword given.");
    return;
  }
  if (s.syntax.lookup(k)) {
    s.io.print_line("Keyword already exists: " + k);
    return;
  }
  s.io.print_line("Enter the snippet. Type 'END' on a new line to finish:");
  SyntaxEntry e;
  e.key = k;
  while (true) {
    auto line = s.io.read_line("");
    if (!line || *line == "END") break;
    e.body.push_back(*line);
  }
  try {
    s.syntax.add(std::move(e));
    s.syntax.save_file(s.syntax_path);
    s.io.print_line("Added: " + k);
  } catch (const SyntaxDbError& err) {
    s.io.print_line(std::string("Not added: ") + err.what());
  }
}

}  // namespace

void syntax_loop(Session& session) {
  auto& io = session.io;
  while (true) {
    auto input = io.read_line("syntax>>");
    if (!input) return;
    auto cmd = trimmed(*input);
    if (cmd == "exit") return;
    if (cmd.empty()) continue;
    if (cmd == "info") {
      print_info(session);
    } else if (cmd == "clear") {
      io.clear_screen();
    } else if (cmd == "add") {
      add_flow(session);
    } else if (const auto* e = session.syntax.lookup(cmd)) {
      io.print_lines(e->body);
    } else {
      io.print_line("Unknown keyword: " + cmd);
    }
  }
}

}  // namespace mintej
