#include "mintej/minilang.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <initializer_list>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

namespace mintej::minilang {

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "function", "for", "while", "if", "elseif", "else", "end", "global", "in", "true", "false"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// "#= file:N =#" comments act like line directives: the next physical line is
// numbered N and attributed to file. unparse emits them so provenance
// round-trips through re-parsing.
const std::regex kLineDirective(R"(^#= (.+):([0-9]+) =#\s*$)");

struct Lexer {
  std::string_view src;
  std::string file;
  std::size_t pos = 0;
  int line = 1;
  int paren_depth = 0;
  std::optional<std::pair<std::string, int>> pending_directive;
  std::vector<Token> out;

  char peek(std::size_t ahead = 0) const {
    return pos + ahead < src.size() ? src[pos + ahead] : '\0';
  }

  void push(TokenKind kind, std::string text) {
    out.push_back(Token{kind, std::move(text), line, file});
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else if (c == '\n') {
        ++pos;
        if (paren_depth == 0) push(TokenKind::Newline, "\n");
        if (pending_directive) {
          file = pending_directive->first;
          line = pending_directive->second;
          pending_directive.reset();
        } else {
          ++line;
        }
      } else if (c == '#') {
        lex_comment();
      } else if (c == '"') {
        lex_string();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number();
      } else if (ident_start(c)) {
        lex_word();
      } else {
        lex_operator();
      }
    }
    out.push_back(Token{TokenKind::EndOfInput, "", line, file});
  }

  void lex_comment() {
    auto eol = src.find('\n', pos);
    std::string text(src.substr(pos, (eol == std::string_view::npos ? src.size() : eol) - pos));
    pos += text.size();
    std::smatch m;
    if (std::regex_match(text, m, kLineDirective)) {
      pending_directive = {m[1].str(), std::atoi(m[2].str().c_str())};
    }
  }

  void lex_string() {
    int start_line = line;
    ++pos;  // opening quote
    std::string value;
    while (true) {
      if (pos >= src.size() || src[pos] == '\n')
        throw ParseError("unterminated string literal", start_line, file);
      char c = src[pos++];
      if (c == '"') break;
      if (c == '\\') {
        if (pos >= src.size()) throw ParseError("unterminated string literal", start_line, file);
        char esc = src[pos++];
        switch (esc) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          default:
            throw ParseError(std::string("invalid escape sequence `\\") + esc + "`", start_line,
                             file);
        }
      } else {
        value += c;
      }
    }
    push(TokenKind::String, std::move(value));
  }

  void lex_number() {
    std::size_t start = pos;
    bool is_float = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      is_float = true;
      ++pos;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    }
    if (peek() == 'e' || peek() == 'E') {
      std::size_t mark = pos;
      ++pos;
      if (peek() == '+' || peek() == '-') ++pos;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        is_float = true;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
      } else {
        pos = mark;  // not an exponent, e.g. `2e` starting an identifier: leave it
      }
    }
    push(is_float ? TokenKind::Float : TokenKind::Integer, std::string(src.substr(start, pos - start)));
  }

  void lex_word() {
    std::size_t start = pos;
    while (ident_char(peek())) ++pos;
    std::string text(src.substr(start, pos - start));
    TokenKind kind = kKeywords.count(text) ? TokenKind::Keyword : TokenKind::Identifier;
    push(kind, std::move(text));
  }

  void lex_operator() {
    static constexpr std::array<std::string_view, 4> two = {"==", "!=", "<=", ">="};
    std::string_view rest = src.substr(pos);
    for (auto op : two) {
      if (rest.substr(0, 2) == op) {
        push(TokenKind::Operator, std::string(op));
        pos += 2;
        return;
      }
    }
    char c = src[pos];
    static const std::string singles = "+-*/=<>:(),";
    if (singles.find(c) == std::string::npos)
      throw ParseError(std::string("unexpected character `") + c + "`", line, file);
    if (c == '(') ++paren_depth;
    if (c == ')' && paren_depth > 0) --paren_depth;
    push(TokenKind::Operator, std::string(1, c));
    ++pos;
  }
};

}  // namespace

std::vector<Token> tokenize(std::string_view source, std::string_view file) {
  Lexer lexer;
  lexer.src = source;
  lexer.file = std::string(file);
  lexer.run();
  return std::move(lexer.out);
}

std::string_view head_name(Head head) {
  switch (head) {
    case Head::Block: return "block";
    case Head::If: return "if";
    case Head::While: return "while";
    case Head::For: return "for";
    case Head::Function: return "function";
    case Head::Call: return "call";
    case Head::Assign: return "assign";
    case Head::Global: return "global";
    case Head::Range: return "range";
    case Head::Step: return "step";
    case Head::StepFor: return "stepfor";
    case Head::Breakpoint: return "breakpoint";
  }
  return "?";
}

AstPtr make_int(std::int64_t v) { return std::make_shared<const AstNode>(AstNode{v}); }
AstPtr make_float(double v) { return std::make_shared<const AstNode>(AstNode{v}); }
AstPtr make_bool(bool v) { return std::make_shared<const AstNode>(AstNode{v}); }
AstPtr make_string(std::string v) {
  return std::make_shared<const AstNode>(AstNode{StringLit{std::move(v)}});
}
AstPtr make_identifier(std::string name) {
  return std::make_shared<const AstNode>(AstNode{Identifier{std::move(name)}});
}
AstPtr make_marker(int line, std::string file) {
  return std::make_shared<const AstNode>(AstNode{LineMarker{line, std::move(file)}});
}
AstPtr make_compound(Head head, std::vector<AstPtr> args, int end_line, int aux) {
  return std::make_shared<const AstNode>(AstNode{Compound{head, std::move(args), end_line, aux}});
}

const Compound* as_compound(const AstNode& node) { return std::get_if<Compound>(&node.data); }
const Compound* as_compound(const AstNode& node, Head head) {
  const auto* c = std::get_if<Compound>(&node.data);
  return c && c->head == head ? c : nullptr;
}
const Identifier* as_identifier(const AstNode& node) {
  return std::get_if<Identifier>(&node.data);
}
const LineMarker* as_marker(const AstNode& node) { return std::get_if<LineMarker>(&node.data); }

namespace {

bool is_comparison_op(std::string_view t) {
  return t == "==" || t == "!=" || t == "<=" || t == ">=" || t == "<" || t == ">";
}

struct Parser {
  std::vector<Token> toks;
  std::size_t i = 0;

  const Token& peek() const { return toks[i]; }

  bool at_op(std::string_view text) const {
    return peek().kind == TokenKind::Operator && peek().text == text;
  }
  bool at_kw(std::string_view text) const {
    return peek().kind == TokenKind::Keyword && peek().text == text;
  }
  bool at_end() const { return peek().kind == TokenKind::EndOfInput; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().file);
  }

  Token take() { return toks[i++]; }

  Token expect_op(std::string_view text) {
    if (!at_op(text)) fail("Expected `" + std::string(text) + "`");
    return take();
  }
  Token expect_kw(std::string_view text) {
    if (!at_kw(text)) fail("Expected `" + std::string(text) + "`");
    return take();
  }

  void skip_newlines() {
    while (peek().kind == TokenKind::Newline) ++i;
  }

  // A statement must be followed by a newline, end-of-input, or a block
  // terminator keyword.
  void expect_statement_break() {
    if (peek().kind == TokenKind::Newline || at_end() || at_kw("end") || at_kw("else") ||
        at_kw("elseif"))
      return;
    fail("Expected newline after statement");
  }

  bool at_terminator(std::initializer_list<std::string_view> stops) const {
    if (at_end()) return true;
    for (auto s : stops)
      if (at_kw(s)) return true;
    return false;
  }

  AstPtr parse_statements(std::initializer_list<std::string_view> stops) {
    std::vector<AstPtr> items;
    skip_newlines();
    while (!at_terminator(stops)) {
      const Token& first = peek();
      items.push_back(make_marker(first.line, first.file));
      items.push_back(parse_statement());
      expect_statement_break();
      skip_newlines();
    }
    return make_compound(Head::Block, std::move(items));
  }

  AstPtr parse_statement() {
    if (at_kw("global")) return parse_global();
    if (at_kw("if")) return parse_if();
    if (at_kw("while")) return parse_while();
    if (at_kw("for")) return parse_for();
    if (at_kw("function")) return parse_function();
    return parse_expression();
  }

  AstPtr parse_global() {
    take();  // global
    if (peek().kind != TokenKind::Identifier) fail("Expected identifier after `global`");
    AstPtr name = make_identifier(take().text);
    if (at_op("=")) {
      take();
      AstPtr rhs = parse_expression();
      return make_compound(Head::Global,
                           {make_compound(Head::Assign, {std::move(name), std::move(rhs)})});
    }
    return make_compound(Head::Global, {std::move(name)});
  }

  AstPtr parse_if() {
    take();  // if / elseif already consumed by caller for continuations
    return parse_if_tail();
  }

  // Parses from the condition onward; used for both `if` and `elseif`.
  AstPtr parse_if_tail() {
    AstPtr cond = parse_expression();
    expect_statement_break();
    AstPtr then_block = parse_statements({"elseif", "else", "end"});
    if (at_kw("elseif")) {
      take();
      AstPtr rest = parse_if_tail();  // nested if in the else slot
      int end_line = as_compound(*rest, Head::If)->end_line;
      return make_compound(Head::If, {std::move(cond), std::move(then_block), std::move(rest)},
                           end_line);
    }
    if (at_kw("else")) {
      take();
      expect_statement_break();
      AstPtr else_block = parse_statements({"end"});
      Token end_tok = expect_kw("end");
      return make_compound(Head::If,
                           {std::move(cond), std::move(then_block), std::move(else_block)},
                           end_tok.line);
    }
    Token end_tok = expect_kw("end");
    return make_compound(Head::If, {std::move(cond), std::move(then_block)}, end_tok.line);
  }

  AstPtr parse_while() {
    take();
    AstPtr cond = parse_expression();
    expect_statement_break();
    AstPtr body = parse_statements({"end"});
    Token end_tok = expect_kw("end");
    return make_compound(Head::While, {std::move(cond), std::move(body)}, end_tok.line);
  }

  AstPtr parse_for() {
    take();
    if (peek().kind != TokenKind::Identifier) fail("Expected loop variable after `for`");
    AstPtr var = make_identifier(take().text);
    if (at_op("=") || at_kw("in")) {
      take();
    } else {
      fail("Expected `=` or `in` in for loop header");
    }
    AstPtr iter = parse_expression();
    expect_statement_break();
    AstPtr body = parse_statements({"end"});
    Token end_tok = expect_kw("end");
    AstPtr header = make_compound(Head::Assign, {std::move(var), std::move(iter)});
    return make_compound(Head::For, {std::move(header), std::move(body)}, end_tok.line);
  }

  AstPtr parse_function() {
    take();
    if (peek().kind != TokenKind::Identifier) fail("Expected function name");
    AstPtr name = make_identifier(take().text);
    expect_op("(");
    std::vector<AstPtr> sig;
    sig.push_back(std::move(name));
    if (!at_op(")")) {
      while (true) {
        if (peek().kind != TokenKind::Identifier) fail("Expected parameter name");
        sig.push_back(make_identifier(take().text));
        if (at_op(",")) {
          take();
          continue;
        }
        break;
      }
    }
    expect_op(")");
    expect_statement_break();
    AstPtr body = parse_statements({"end"});
    Token end_tok = expect_kw("end");
    return make_compound(Head::Function,
                         {make_compound(Head::Call, std::move(sig)), std::move(body)},
                         end_tok.line);
  }

  AstPtr parse_expression() { return parse_assign(); }

  AstPtr parse_assign() {
    AstPtr left = parse_comparison();
    if (at_op("=")) {
      if (!as_identifier(*left)) fail("Invalid assignment target");
      take();
      AstPtr right = parse_assign();  // right-associative
      return make_compound(Head::Assign, {std::move(left), std::move(right)});
    }
    return left;
  }

  AstPtr parse_comparison() {
    AstPtr left = parse_range();
    if (peek().kind == TokenKind::Operator && is_comparison_op(peek().text)) {
      std::string op = take().text;
      AstPtr right = parse_range();
      if (peek().kind == TokenKind::Operator && is_comparison_op(peek().text))
        fail("Comparison chains are not supported");
      return make_compound(Head::Call,
                           {make_identifier(std::move(op)), std::move(left), std::move(right)});
    }
    return left;
  }

  AstPtr parse_range() {
    AstPtr left = parse_additive();
    if (at_op(":")) {
      take();
      AstPtr right = parse_additive();
      if (at_op(":")) fail("Ranges with a step are not supported");
      return make_compound(Head::Range, {std::move(left), std::move(right)});
    }
    return left;
  }

  // `+` and `*` flatten uninterrupted chains into one n-ary call, matching
  // the reference surface syntax; `-` and `/` stay binary left-associative.
  AstPtr parse_additive() {
    AstPtr left = parse_multiplicative();
    bool left_is_chain = false;
    while (at_op("+") || at_op("-")) {
      std::string op = take().text;
      AstPtr right = parse_multiplicative();
      if (op == "+" && left_is_chain) {
        const Compound* c = as_compound(*left, Head::Call);
        std::vector<AstPtr> args = c->args;
        args.push_back(std::move(right));
        left = make_compound(Head::Call, std::move(args));
      } else {
        left = make_compound(
            Head::Call, {make_identifier(op), std::move(left), std::move(right)});
        left_is_chain = (op == "+");
      }
    }
    return left;
  }

  AstPtr parse_multiplicative() {
    AstPtr left = parse_unary();
    bool left_is_chain = false;
    while (at_op("*") || at_op("/")) {
      std::string op = take().text;
      AstPtr right = parse_unary();
      if (op == "*" && left_is_chain) {
        const Compound* c = as_compound(*left, Head::Call);
        std::vector<AstPtr> args = c->args;
        args.push_back(std::move(right));
        left = make_compound(Head::Call, std::move(args));
      } else {
        left = make_compound(
            Head::Call, {make_identifier(op), std::move(left), std::move(right)});
        left_is_chain = (op == "*");
      }
    }
    return left;
  }

  AstPtr parse_unary() {
    if (at_op("-")) {
      take();
      // Negation of a numeric literal folds into the literal.
      if (peek().kind == TokenKind::Integer) {
        Token t = take();
        return make_int(-parse_int_text(t));
      }
      if (peek().kind == TokenKind::Float) {
        Token t = take();
        return make_float(-std::strtod(t.text.c_str(), nullptr));
      }
      AstPtr operand = parse_unary();
      return make_compound(Head::Call, {make_identifier("-"), std::move(operand)});
    }
    return parse_postfix();
  }

  std::int64_t parse_int_text(const Token& t) const {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw ParseError("integer literal out of range", t.line, t.file);
    return value;
  }

  AstPtr parse_postfix() {
    AstPtr node = parse_primary();
    if (as_identifier(*node) && at_op("(")) {
      take();
      std::vector<AstPtr> args;
      args.push_back(std::move(node));
      if (!at_op(")")) {
        while (true) {
          args.push_back(parse_expression());
          if (at_op(",")) {
            take();
            continue;
          }
          break;
        }
      }
      expect_op(")");
      return make_compound(Head::Call, std::move(args));
    }
    return node;
  }

  AstPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Integer: {
        Token tok = take();
        return make_int(parse_int_text(tok));
      }
      case TokenKind::Float: {
        Token tok = take();
        return make_float(std::strtod(tok.text.c_str(), nullptr));
      }
      case TokenKind::String: {
        Token tok = take();
        return make_string(std::move(tok.text));
      }
      case TokenKind::Identifier: {
        Token tok = take();
        return make_identifier(std::move(tok.text));
      }
      case TokenKind::Keyword:
        if (t.text == "true") {
          take();
          return make_bool(true);
        }
        if (t.text == "false") {
          take();
          return make_bool(false);
        }
        fail("Unexpected keyword `" + t.text + "`");
      case TokenKind::Operator:
        if (t.text == "(") {
          take();
          AstPtr inner = parse_expression();
          expect_op(")");
          return inner;
        }
        fail("Expected expression, got `" + t.text + "`");
      default:
        fail("Expected expression");
    }
  }
};

}  // namespace

AstPtr parse_program(std::string_view source, std::string_view file) {
  Parser parser;
  parser.toks = tokenize(source, file);
  AstPtr program = parser.parse_statements({});
  if (!parser.at_end()) parser.fail("Unexpected trailing input");
  return program;
}

// ---------------------------------------------------------------------------
// unparse

namespace {

// Binding strength used for parenthesisation; larger binds tighter.
enum Prec { kAssign = 1, kCompare = 2, kRange = 3, kAdd = 4, kMul = 5, kUnary = 6, kAtom = 7 };

bool is_operator_name(std::string_view name) {
  return name == "+" || name == "-" || name == "*" || name == "/" || is_comparison_op(name);
}

std::string expr_string(const AstNode& node, int min_prec);

std::string wrap(const std::string& text, int prec, int min_prec) {
  if (prec < min_prec) return "(" + text + ")";
  return text;
}

std::string call_string(const Compound& call, int min_prec) {
  const Identifier* callee = call.args.empty() ? nullptr : as_identifier(*call.args[0]);
  if (callee && is_operator_name(callee->name) && call.args.size() >= 2) {
    const std::string& op = callee->name;
    if (call.args.size() == 2) {  // unary minus
      return wrap("-" + expr_string(*call.args[1], kUnary), kUnary, min_prec);
    }
    int prec = kCompare;
    if (op == "+" || op == "-") prec = kAdd;
    if (op == "*" || op == "/") prec = kMul;
    std::string text = expr_string(*call.args[1], prec);
    for (std::size_t k = 2; k < call.args.size(); ++k)
      text += " " + op + " " + expr_string(*call.args[k], prec + 1);
    return wrap(text, prec, min_prec);
  }
  std::string text = callee ? callee->name : expr_string(*call.args[0], kAtom);
  text += "(";
  for (std::size_t k = 1; k < call.args.size(); ++k) {
    if (k > 1) text += ", ";
    text += expr_string(*call.args[k], kAssign);
  }
  text += ")";
  return text;
}

std::string expr_string(const AstNode& node, int min_prec) {
  if (const auto* v = std::get_if<std::int64_t>(&node.data)) return std::to_string(*v);
  if (const auto* v = std::get_if<double>(&node.data)) return float_repr(*v);
  if (const auto* v = std::get_if<bool>(&node.data)) return *v ? "true" : "false";
  if (const auto* v = std::get_if<StringLit>(&node.data)) return quote_string(v->value);
  if (const auto* v = std::get_if<Identifier>(&node.data)) return v->name;
  if (const auto* v = std::get_if<LineMarker>(&node.data))
    return "#= " + v->file + ":" + std::to_string(v->line) + " =#";
  const Compound& c = std::get<Compound>(node.data);
  switch (c.head) {
    case Head::Call:
      return call_string(c, min_prec);
    case Head::Assign: {
      std::string text =
          expr_string(*c.args[0], kAtom) + " = " + expr_string(*c.args[1], kAssign);
      return wrap(text, kAssign, min_prec);
    }
    case Head::Range: {
      std::string text =
          expr_string(*c.args[0], kAdd) + ":" + expr_string(*c.args[1], kAdd);
      return wrap(text, kRange, min_prec);
    }
    case Head::Global:
      return "global " + expr_string(*c.args[0], kAssign);
    case Head::Step:
      return expr_string(*c.args[0], min_prec);
    default:
      return "";  // multi-line constructs handled by the statement renderer
  }
}

void render_statement(const AstNode& node, int indent, std::vector<std::string>& out);

void render_block(const AstNode& block, int indent, std::vector<std::string>& out) {
  const Compound* c = as_compound(block, Head::Block);
  if (!c) {
    render_statement(block, indent, out);
    return;
  }
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& item : c->args) {
    if (const auto* m = as_marker(*item)) {
      out.push_back(pad + "#= " + m->file + ":" + std::to_string(m->line) + " =#");
    } else {
      render_statement(*item, indent, out);
    }
  }
}

void render_end(int end_line, const std::string& file, int indent, std::vector<std::string>& out) {
  if (end_line > 0 && !file.empty())
    out.push_back(std::string(static_cast<std::size_t>(indent + 2), ' ') + "#= " + file + ":" +
                  std::to_string(end_line) + " =#");
  out.push_back(std::string(static_cast<std::size_t>(indent), ' ') + "end");
}

// Digs a representative file name out of the first marker anywhere in the
// subtree, for the `end` directive comment.
std::string find_marker_file(const AstNode& node);

std::string find_marker_file(const Compound& c) {
  for (const auto& arg : c.args) {
    std::string file = find_marker_file(*arg);
    if (!file.empty()) return file;
  }
  return "";
}

std::string find_marker_file(const AstNode& node) {
  if (const auto* m = as_marker(node)) return m->file;
  if (const Compound* c = as_compound(node)) return find_marker_file(*c);
  return "";
}

void render_if(const Compound& node, int indent, std::vector<std::string>& out, bool first) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  out.push_back(pad + (first ? "if " : "elseif ") + expr_string(*node.args[0], kAssign));
  render_block(*node.args[1], indent + 2, out);
  if (node.args.size() == 3) {
    if (const Compound* chained = as_compound(*node.args[2], Head::If)) {
      render_if(*chained, indent, out, false);
      return;
    }
    out.push_back(pad + "else");
    render_block(*node.args[2], indent + 2, out);
  }
  render_end(node.end_line, find_marker_file(node), indent, out);
}

void render_statement(const AstNode& node, int indent, std::vector<std::string>& out) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  const Compound* c = as_compound(node);
  if (!c) {
    out.push_back(pad + expr_string(node, kAssign));
    return;
  }
  switch (c->head) {
    case Head::Block:
      render_block(node, indent, out);
      return;
    case Head::If:
      render_if(*c, indent, out, true);
      return;
    case Head::While:
      out.push_back(pad + "while " + expr_string(*c->args[0], kAssign));
      render_block(*c->args[1], indent + 2, out);
      render_end(c->end_line, find_marker_file(*c), indent, out);
      return;
    case Head::For:
      out.push_back(pad + "for " + expr_string(*c->args[0], kAssign));
      render_block(*c->args[1], indent + 2, out);
      render_end(c->end_line, find_marker_file(*c), indent, out);
      return;
    case Head::Function:
      out.push_back(pad + "function " + expr_string(*c->args[0], kAssign));
      render_block(*c->args[1], indent + 2, out);
      render_end(c->end_line, find_marker_file(*c), indent, out);
      return;
    case Head::Step:
      render_statement(*c->args[0], indent, out);
      return;
    case Head::StepFor:
      out.push_back(pad + "for " + expr_string(*c->args[0], kAssign));
      render_block(*c->args[1], indent + 2, out);
      render_end(c->end_line, find_marker_file(*c), indent, out);
      return;
    case Head::Breakpoint:
      return;  // instrumentation has no surface syntax
    default:
      out.push_back(pad + expr_string(node, kAssign));
      return;
  }
}

}  // namespace

std::string unparse(const AstNode& node) {
  std::vector<std::string> lines;
  render_statement(node, 0, lines);
  std::string out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (k > 0) out += '\n';
    out += lines[k];
  }
  return out;
}

bool ast_equal(const AstNode& a, const AstNode& b) {
  if (a.data.index() != b.data.index()) return false;
  if (const auto* ca = std::get_if<Compound>(&a.data)) {
    const auto& cb = std::get<Compound>(b.data);
    if (ca->head != cb.head || ca->end_line != cb.end_line || ca->aux != cb.aux ||
        ca->args.size() != cb.args.size())
      return false;
    for (std::size_t k = 0; k < ca->args.size(); ++k)
      if (!ast_equal(*ca->args[k], *cb.args[k])) return false;
    return true;
  }
  if (const auto* ia = std::get_if<std::int64_t>(&a.data))
    return *ia == std::get<std::int64_t>(b.data);
  if (const auto* da = std::get_if<double>(&a.data)) return *da == std::get<double>(b.data);
  if (const auto* ba = std::get_if<bool>(&a.data)) return *ba == std::get<bool>(b.data);
  if (const auto* sa = std::get_if<StringLit>(&a.data))
    return sa->value == std::get<StringLit>(b.data).value;
  if (const auto* na = std::get_if<Identifier>(&a.data))
    return na->name == std::get<Identifier>(b.data).name;
  const auto& ma = std::get<LineMarker>(a.data);
  const auto& mb = std::get<LineMarker>(b.data);
  return ma.line == mb.line && ma.file == mb.file;
}

std::string shape(const AstNode& node) {
  if (const auto* v = std::get_if<std::int64_t>(&node.data)) return std::to_string(*v);
  if (const auto* v = std::get_if<double>(&node.data)) return float_repr(*v);
  if (const auto* v = std::get_if<bool>(&node.data)) return *v ? "true" : "false";
  if (const auto* v = std::get_if<StringLit>(&node.data)) return quote_string(v->value);
  if (const auto* v = std::get_if<Identifier>(&node.data)) return v->name;
  if (const auto* v = std::get_if<LineMarker>(&node.data))
    return "(line " + std::to_string(v->line) + ")";
  const Compound& c = std::get<Compound>(node.data);
  std::string out = "(";
  out += head_name(c.head);
  for (const auto& arg : c.args) {
    out += ' ';
    out += shape(*arg);
  }
  out += ')';
  return out;
}

std::string float_repr(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string text(buf, ptr);
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
      text.find("inf") == std::string::npos && text.find("nan") == std::string::npos)
    text += ".0";
  return text;
}

std::string quote_string(std::string_view raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

}  // namespace mintej::minilang
