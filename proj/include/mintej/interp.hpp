#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mintej/minilang.hpp"

namespace mintej::interp {

using minilang::AstNode;
using minilang::AstPtr;

struct Nothing {
  bool operator==(const Nothing&) const = default;
};

struct RangeVal {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const RangeVal&) const = default;
};

using Value = std::variant<Nothing, std::int64_t, double, bool, std::string, RangeVal>;

// println-style text: strings raw, ints bare, floats with a decimal point.
std::string display(const Value& v);
// result-style text: like display but strings are quoted.
std::string show(const Value& v);
std::string type_name(const Value& v);

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;
  AstPtr body;
};

// Lexical scoping with function-call barriers.  The top frame starts with no
// local scopes, so assignments there land in the global map directly.  Loops
// push a scope per iteration; `global` declarations punch through to the
// global map from anywhere.
class Environment {
 public:
  Environment();

  void push_frame();
  void pop_frame();
  std::size_t frame_depth() const;

  void push_scope();
  void pop_scope();

  std::optional<Value> lookup(const std::string& name) const;
  void assign(const std::string& name, Value v);
  // Binds in the innermost scope unconditionally (loop variables, function
  // parameters) -- never searches outward.
  void bind_local(const std::string& name, Value v);
  void declare_global(const std::string& name);
  void define_function(FunctionDef def);
  const FunctionDef* find_function(const std::string& name) const;

  // Visible variables (globals shadowed by current-frame locals), sorted by
  // name.  Functions are not values and never appear here.
  std::vector<std::pair<std::string, Value>> snapshot() const;

  // Drops any frames/scopes left behind by an error unwind; globals survive.
  void reset_to_top();

 private:
  struct Scope {
    std::map<std::string, Value> vars;
    std::map<std::string, bool> global_decls;
    std::map<std::string, FunctionDef> functions;
  };
  struct Frame {
    std::vector<Scope> scopes;
  };

  bool is_global_here(const std::string& name) const;

  std::map<std::string, Value> globals_;
  std::map<std::string, FunctionDef> global_functions_;
  std::vector<Frame> frames_;
};

// Collects program output one line per print call; optionally mirrors each
// line to a callback as it appears.
class OutputSink {
 public:
  using Echo = std::function<void(const std::string&)>;

  explicit OutputSink(Echo echo = nullptr) : echo_(std::move(echo)) {}

  void line(const std::string& text);
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  std::vector<std::string> lines_;
  Echo echo_;
};

// Hooks the stepper and breakpoint machinery attach to the evaluator.  The
// evaluator only reports events; all pausing and printing lives client-side.
class DebugClient {
 public:
  virtual ~DebugClient() = default;
  virtual void statement_echo(int depth, const AstNode& stmt) = 0;
  virtual void after_statement(int depth) = 0;
  virtual void loop_enter(int depth, const AstNode& loop) = 0;
  virtual void iteration_end(int depth) = 0;
  virtual void breakpoint_hit(int line, Environment& env) = 0;
};

class Evaluator {
 public:
  Evaluator(Environment& env, OutputSink& out, DebugClient* debug = nullptr);

  Value eval(const AstNode& node);

  int current_line() const { return current_line_; }
  const std::string& current_file() const { return current_file_; }

 private:
  Value eval_compound(const minilang::Compound& c, const AstNode& node);
  Value eval_block(const minilang::Compound& c);
  Value eval_call(const minilang::Compound& c);
  Value apply_operator(const std::string& op, const std::vector<Value>& args);
  Value call_function(const FunctionDef& def, const std::vector<Value>& args);
  Value eval_for(const minilang::Compound& c, int step_depth);
  bool truthy(const Value& v);

  Environment& env_;
  OutputSink& out_;
  DebugClient* debug_;
  int current_line_ = 1;
  std::string current_file_;
};

struct ErrorInfo {
  enum class Kind { Parse, Runtime };
  Kind kind = Kind::Runtime;
  std::string message;
  int line = 0;
  std::string file;

  std::string render() const;
};

struct RunResult {
  Value value;
  std::vector<std::string> output;
  std::optional<ErrorInfo> error;

  bool ok() const { return !error.has_value(); }
};

// Parses and runs a whole program in a fresh environment.  Errors come back
// in the result; nothing escapes as an exception.
RunResult run_program(const std::string& source, const std::string& file = "none",
                      OutputSink::Echo echo = nullptr);

// Same, but against a caller-owned environment (REPL sessions).
RunResult run_in(Environment& env, const std::string& source, const std::string& file = "none",
                 OutputSink::Echo echo = nullptr);

}  // namespace mintej::interp
