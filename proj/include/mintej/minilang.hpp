#pragma once
// Lexer, recursive-descent parser and source printer for the embedded
// Julia-flavoured mini language.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mintej/errors.hpp"

namespace mintej::minilang {

enum class TokenKind { Keyword, Identifier, Integer, Float, String, Operator, Newline, EndOfInput };

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;
  std::string file;
};

// Throws ParseError on lexical faults (unterminated string literal, unknown
// character, bad escape).
std::vector<Token> tokenize(std::string_view source, std::string_view file = "");

// Heads past Range are debugger instrumentation; the parser never emits them.
enum class Head { Block, If, While, For, Function, Call, Assign, Global, Range, Step, StepFor, Breakpoint };

std::string_view head_name(Head head);

struct AstNode;
using AstPtr = std::shared_ptr<const AstNode>;

struct Identifier {
  std::string name;
  bool operator==(const Identifier&) const = default;
};

struct StringLit {
  std::string value;
  bool operator==(const StringLit&) const = default;
};

// Provenance node: precedes every statement inside a block.
struct LineMarker {
  int line = 0;
  std::string file;
  bool operator==(const LineMarker&) const = default;
};

struct Compound {
  Head head;
  std::vector<AstPtr> args;
  int end_line = 0;  // line of the closing `end` for if/while/for/function
  int aux = 0;       // instrumentation payload: step depth or breakpoint line
};

struct AstNode {
  std::variant<std::int64_t, double, bool, StringLit, Identifier, LineMarker, Compound> data;
};

AstPtr make_int(std::int64_t v);
AstPtr make_float(double v);
AstPtr make_bool(bool v);
AstPtr make_string(std::string v);
AstPtr make_identifier(std::string name);
AstPtr make_marker(int line, std::string file);
AstPtr make_compound(Head head, std::vector<AstPtr> args, int end_line = 0, int aux = 0);

const Compound* as_compound(const AstNode& node);
const Compound* as_compound(const AstNode& node, Head head);
const Identifier* as_identifier(const AstNode& node);
const LineMarker* as_marker(const AstNode& node);

// Parses a whole program into a Block whose statements are each preceded by a
// LineMarker. Throws ParseError.
AstPtr parse_program(std::string_view source, std::string_view file = "");

// Renders a node back to parseable source. Blocks interleave `#= file:N =#`
// marker comments, which the lexer treats as line directives, so
// parse(unparse(parse(s))) == parse(s).
std::string unparse(const AstNode& node);

bool ast_equal(const AstNode& a, const AstNode& b);

// Compact s-expression of the head/args structure, used by the parser
// fixture corpus: e.g. "(block (line 1) (assign x (call + x 1)))".
std::string shape(const AstNode& node);

// Rendering helpers shared with the interpreter's value printer.
std::string float_repr(double v);
std::string quote_string(std::string_view raw);

}  // namespace mintej::minilang
