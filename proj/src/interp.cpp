#include "mintej/interp.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "mintej/errors.hpp"

namespace mintej::interp {

using minilang::Compound;
using minilang::Head;
using minilang::Identifier;
using minilang::LineMarker;
using minilang::StringLit;
using minilang::as_compound;
using minilang::as_identifier;

namespace {

// Each interpreter frame costs several host stack frames, so this guard must
// trip well before the native stack runs out.
constexpr std::size_t kMaxFrames = 1'000;

bool int_like(const Value& v, std::int64_t& out) {
  if (const auto* n = std::get_if<std::int64_t>(&v)) {
    out = *n;
    return true;
  }
  if (const auto* b = std::get_if<bool>(&v)) {
    out = *b ? 1 : 0;
    return true;
  }
  return false;
}

bool numeric(const Value& v) {
  return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<double>(v) ||
         std::holds_alternative<bool>(v);
}

double num_of(const Value& v) {
  if (const auto* n = std::get_if<std::int64_t>(&v)) return static_cast<double>(*n);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::get<bool>(v) ? 1.0 : 0.0;
}

std::string method_error(const std::string& op, const std::vector<Value>& args) {
  std::string msg = "MethodError: no method matching " + op + "(";
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k > 0) msg += ", ";
    msg += "::" + type_name(args[k]);
  }
  return msg + ")";
}

bool equal_values(const Value& a, const Value& b) {
  if (numeric(a) && numeric(b)) {
    std::int64_t x = 0;
    std::int64_t y = 0;
    if (int_like(a, x) && int_like(b, y)) return x == y;
    return num_of(a) == num_of(b);
  }
  if (a.index() != b.index()) return false;
  return a == b;
}

}  // namespace

std::string display(const Value& v) {
  struct Visitor {
    std::string operator()(Nothing) const { return "nothing"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(double d) const {
      if (std::isnan(d)) return "NaN";
      if (std::isinf(d)) return d < 0 ? "-Inf" : "Inf";
      return minilang::float_repr(d);
    }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const RangeVal& r) const {
      return std::to_string(r.lo) + ":" + std::to_string(r.hi);
    }
  };
  return std::visit(Visitor{}, v);
}

std::string show(const Value& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return minilang::quote_string(*s);
  return display(v);
}

std::string type_name(const Value& v) {
  struct Visitor {
    std::string operator()(Nothing) const { return "Nothing"; }
    std::string operator()(std::int64_t) const { return "Int64"; }
    std::string operator()(double) const { return "Float64"; }
    std::string operator()(bool) const { return "Bool"; }
    std::string operator()(const std::string&) const { return "String"; }
    std::string operator()(const RangeVal&) const { return "UnitRange{Int64}"; }
  };
  return std::visit(Visitor{}, v);
}

Environment::Environment() { frames_.push_back(Frame{}); }

void Environment::push_frame() { frames_.push_back(Frame{}); }

void Environment::pop_frame() { frames_.pop_back(); }

std::size_t Environment::frame_depth() const { return frames_.size(); }

void Environment::push_scope() { frames_.back().scopes.push_back(Scope{}); }

void Environment::pop_scope() { frames_.back().scopes.pop_back(); }

std::optional<Value> Environment::lookup(const std::string& name) const {
  const Frame& frame = frames_.back();
  for (auto it = frame.scopes.rbegin(); it != frame.scopes.rend(); ++it) {
    if (it->global_decls.count(name)) break;  // declared global here: read the global
    auto found = it->vars.find(name);
    if (found != it->vars.end()) return found->second;
  }
  auto g = globals_.find(name);
  if (g != globals_.end()) return g->second;
  return std::nullopt;
}

void Environment::assign(const std::string& name, Value v) {
  Frame& frame = frames_.back();
  for (auto it = frame.scopes.rbegin(); it != frame.scopes.rend(); ++it) {
    if (it->global_decls.count(name)) {
      globals_[name] = std::move(v);
      return;
    }
    auto found = it->vars.find(name);
    if (found != it->vars.end()) {
      found->second = std::move(v);
      return;
    }
  }
  if (frame.scopes.empty()) {
    globals_[name] = std::move(v);
    return;
  }
  frame.scopes.back().vars[name] = std::move(v);
}

void Environment::bind_local(const std::string& name, Value v) {
  Frame& frame = frames_.back();
  if (frame.scopes.empty()) {
    globals_[name] = std::move(v);
    return;
  }
  frame.scopes.back().vars[name] = std::move(v);
}

void Environment::declare_global(const std::string& name) {
  Frame& frame = frames_.back();
  if (frame.scopes.empty()) return;  // the current scope already is global
  frame.scopes.back().global_decls[name] = true;
}

void Environment::define_function(FunctionDef def) {
  Frame& frame = frames_.back();
  if (frame.scopes.empty()) {
    global_functions_[def.name] = std::move(def);
    return;
  }
  frame.scopes.back().functions[def.name] = std::move(def);
}

const FunctionDef* Environment::find_function(const std::string& name) const {
  const Frame& frame = frames_.back();
  for (auto it = frame.scopes.rbegin(); it != frame.scopes.rend(); ++it) {
    auto found = it->functions.find(name);
    if (found != it->functions.end()) return &found->second;
  }
  auto g = global_functions_.find(name);
  if (g != global_functions_.end()) return &g->second;
  return nullptr;
}

std::vector<std::pair<std::string, Value>> Environment::snapshot() const {
  std::map<std::string, Value> merged = globals_;
  for (const Scope& scope : frames_.back().scopes)
    for (const auto& [name, value] : scope.vars) merged[name] = value;
  return {merged.begin(), merged.end()};
}

void Environment::reset_to_top() {
  frames_.resize(1);
  frames_[0].scopes.clear();
}

void OutputSink::line(const std::string& text) {
  lines_.push_back(text);
  if (echo_) echo_(text);
}

Evaluator::Evaluator(Environment& env, OutputSink& out, DebugClient* debug)
    : env_(env), out_(out), debug_(debug) {}

Value Evaluator::eval(const AstNode& node) {
  if (const auto* n = std::get_if<std::int64_t>(&node.data)) return *n;
  if (const auto* d = std::get_if<double>(&node.data)) return *d;
  if (const auto* b = std::get_if<bool>(&node.data)) return *b;
  if (const auto* s = std::get_if<StringLit>(&node.data)) return s->value;
  if (const auto* id = std::get_if<Identifier>(&node.data)) {
    auto v = env_.lookup(id->name);
    if (!v) throw EvalError("UndefVarError: " + id->name + " not defined", current_line_);
    return *v;
  }
  if (const auto* m = std::get_if<LineMarker>(&node.data)) {
    current_line_ = m->line;
    current_file_ = m->file;
    return Nothing{};
  }
  return eval_compound(std::get<Compound>(node.data), node);
}

Value Evaluator::eval_compound(const Compound& c, const AstNode& node) {
  switch (c.head) {
    case Head::Block:
      return eval_block(c);
    case Head::Assign: {
      const Identifier* target = as_identifier(*c.args[0]);
      Value v = eval(*c.args[1]);
      env_.assign(target->name, v);
      return v;
    }
    case Head::Global: {
      Value last = Nothing{};
      for (const auto& arg : c.args) {
        if (const Identifier* id = as_identifier(*arg)) {
          env_.declare_global(id->name);
        } else if (const Compound* assign = as_compound(*arg, Head::Assign)) {
          const Identifier* target = as_identifier(*assign->args[0]);
          env_.declare_global(target->name);
          last = eval(*arg);
        }
      }
      return last;
    }
    case Head::If: {
      if (truthy(eval(*c.args[0]))) return eval(*c.args[1]);
      if (c.args.size() == 3) return eval(*c.args[2]);
      return Nothing{};
    }
    case Head::While: {
      while (truthy(eval(*c.args[0]))) {
        env_.push_scope();
        try {
          eval(*c.args[1]);
        } catch (...) {
          env_.pop_scope();
          throw;
        }
        env_.pop_scope();
      }
      return Nothing{};
    }
    case Head::For:
      return eval_for(c, 0);
    case Head::Range: {
      Value lo = eval(*c.args[0]);
      Value hi = eval(*c.args[1]);
      const auto* a = std::get_if<std::int64_t>(&lo);
      const auto* b = std::get_if<std::int64_t>(&hi);
      if (!a || !b)
        throw EvalError("ArgumentError: range endpoints must be integers", current_line_);
      return RangeVal{*a, *b};
    }
    case Head::Function: {
      const Compound* sig = as_compound(*c.args[0], Head::Call);
      FunctionDef def;
      def.name = as_identifier(*sig->args[0])->name;
      for (std::size_t k = 1; k < sig->args.size(); ++k)
        def.params.push_back(as_identifier(*sig->args[k])->name);
      def.body = c.args[1];
      env_.define_function(std::move(def));
      return Nothing{};
    }
    case Head::Call:
      return eval_call(c);
    case Head::Step: {
      if (debug_) debug_->statement_echo(c.aux, *c.args[0]);
      Value v = eval(*c.args[0]);
      if (debug_) debug_->after_statement(c.aux);
      return v;
    }
    case Head::StepFor: {
      if (debug_) debug_->loop_enter(c.aux, node);
      return eval_for(c, c.aux);
    }
    case Head::Breakpoint:
      if (debug_) debug_->breakpoint_hit(c.aux, env_);
      return Nothing{};
  }
  throw EvalError("malformed expression", current_line_);
}

Value Evaluator::eval_block(const Compound& c) {
  Value last = Nothing{};
  for (const auto& arg : c.args) {
    if (std::holds_alternative<LineMarker>(arg->data)) {
      eval(*arg);
      continue;
    }
    last = eval(*arg);
  }
  return last;
}

Value Evaluator::eval_for(const Compound& c, int step_depth) {
  const Compound* header = as_compound(*c.args[0], Head::Assign);
  const Identifier* var = as_identifier(*header->args[0]);
  Value iterable = eval(*header->args[1]);
  const auto* range = std::get_if<RangeVal>(&iterable);
  if (!range)
    throw EvalError("TypeError: cannot iterate over " + type_name(iterable), current_line_);
  for (std::int64_t k = range->lo; k <= range->hi; ++k) {
    env_.push_scope();
    try {
      env_.bind_local(var->name, k);
      eval(*c.args[1]);
      if (step_depth > 0 && debug_) debug_->iteration_end(step_depth);
    } catch (...) {
      env_.pop_scope();
      throw;
    }
    env_.pop_scope();
  }
  return Nothing{};
}

Value Evaluator::eval_call(const Compound& c) {
  const Identifier* callee = as_identifier(*c.args[0]);
  const std::string& name = callee->name;
  std::vector<Value> args;
  args.reserve(c.args.size() - 1);
  for (std::size_t k = 1; k < c.args.size(); ++k) args.push_back(eval(*c.args[k]));

  if (name == "println") {
    std::string text;
    for (const Value& v : args) text += display(v);
    out_.line(text);
    return Nothing{};
  }
  if (!name.empty() && !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
    return apply_operator(name, args);
  if (const FunctionDef* def = env_.find_function(name)) return call_function(*def, args);
  throw EvalError("UndefVarError: " + name + " not defined", current_line_);
}

Value Evaluator::apply_operator(const std::string& op, const std::vector<Value>& args) {
  auto fail = [&]() -> EvalError { return {method_error(op, args), current_line_}; };

  if (op == "+" || (op == "*" && numeric(args[0]))) {
    bool all_int = true;
    for (const Value& v : args) {
      if (!numeric(v)) throw fail();
      std::int64_t ignored = 0;
      if (!int_like(v, ignored)) all_int = false;
    }
    if (all_int) {
      std::int64_t acc = 0;
      int_like(args[0], acc);
      for (std::size_t k = 1; k < args.size(); ++k) {
        std::int64_t next = 0;
        int_like(args[k], next);
        acc = op == "+" ? acc + next : acc * next;
      }
      return acc;
    }
    double acc = num_of(args[0]);
    for (std::size_t k = 1; k < args.size(); ++k)
      acc = op == "+" ? acc + num_of(args[k]) : acc * num_of(args[k]);
    return acc;
  }
  if (op == "*") {  // non-numeric leading operand: string concatenation
    std::string acc;
    for (const Value& v : args) {
      const auto* s = std::get_if<std::string>(&v);
      if (!s) throw fail();
      acc += *s;
    }
    return acc;
  }
  if (op == "-") {
    if (args.size() == 1) {
      std::int64_t a = 0;
      if (int_like(args[0], a)) return -a;
      if (const auto* d = std::get_if<double>(&args[0])) return -*d;
      throw fail();
    }
    if (!numeric(args[0]) || !numeric(args[1])) throw fail();
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (int_like(args[0], a) && int_like(args[1], b)) return a - b;
    return num_of(args[0]) - num_of(args[1]);
  }
  if (op == "/") {
    if (!numeric(args[0]) || !numeric(args[1])) throw fail();
    return num_of(args[0]) / num_of(args[1]);
  }
  if (op == "==") return equal_values(args[0], args[1]);
  if (op == "!=") return !equal_values(args[0], args[1]);
  if (op == "<" || op == "<=" || op == ">" || op == ">=") {
    if (!numeric(args[0]) || !numeric(args[1])) throw fail();
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (int_like(args[0], a) && int_like(args[1], b)) {
      if (op == "<") return a < b;
      if (op == "<=") return a <= b;
      if (op == ">") return a > b;
      return a >= b;
    }
    double x = num_of(args[0]);
    double y = num_of(args[1]);
    if (op == "<") return x < y;
    if (op == "<=") return x <= y;
    if (op == ">") return x > y;
    return x >= y;
  }
  throw fail();
}

Value Evaluator::call_function(const FunctionDef& def, const std::vector<Value>& args) {
  if (args.size() != def.params.size())
    throw EvalError("MethodError: " + def.name + " expects " + std::to_string(def.params.size()) +
                        " arguments, got " + std::to_string(args.size()),
                    current_line_);
  if (env_.frame_depth() >= kMaxFrames) throw EvalError("StackOverflowError", current_line_);
  int saved_line = current_line_;
  std::string saved_file = current_file_;
  env_.push_frame();
  env_.push_scope();
  for (std::size_t k = 0; k < args.size(); ++k) env_.bind_local(def.params[k], args[k]);
  Value result;
  try {
    result = eval(*def.body);
  } catch (...) {
    env_.pop_frame();
    throw;
  }
  env_.pop_frame();
  current_line_ = saved_line;
  current_file_ = saved_file;
  return result;
}

bool Evaluator::truthy(const Value& v) {
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  throw EvalError("TypeError: non-boolean (" + type_name(v) + ") used in boolean context",
                  current_line_);
}

std::string ErrorInfo::render() const {
  std::string head = kind == Kind::Parse ? "ParseError: " : "";
  std::string where;
  if (line > 0) where = " at " + (file.empty() ? std::string("none") : file) + ":" +
                        std::to_string(line);
  return head + message + where;
}

RunResult run_in(Environment& env, const std::string& source, const std::string& file,
                 OutputSink::Echo echo) {
  RunResult result;
  OutputSink sink(std::move(echo));
  try {
    AstPtr program = minilang::parse_program(source, file);
    Evaluator evaluator(env, sink);
    result.value = evaluator.eval(*program);
  } catch (const ParseError& e) {
    result.error = ErrorInfo{ErrorInfo::Kind::Parse, e.what(), e.line(), e.file()};
    env.reset_to_top();
  } catch (const EvalError& e) {
    result.error = ErrorInfo{ErrorInfo::Kind::Runtime, e.what(), e.line(), file};
    env.reset_to_top();
  }
  result.output = sink.lines();
  return result;
}

RunResult run_program(const std::string& source, const std::string& file, OutputSink::Echo echo) {
  Environment env;
  return run_in(env, source, file, std::move(echo));
}

}  // namespace mintej::interp
