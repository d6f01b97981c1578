#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <vector>

#include "doctest.h"
#include "mintej/interp.hpp"

using namespace mintej::interp;

namespace {

RunResult run(const std::string& source) { return run_program(source, "prog.jl"); }

Value result_of(const std::string& source) {
  auto r = run(source);
  REQUIRE(r.ok());
  return r.value;
}

}  // namespace

TEST_CASE("display and show render each value family") {
  CHECK(display(Value{Nothing{}}) == "nothing");
  CHECK(display(Value{std::int64_t{42}}) == "42");
  CHECK(display(Value{2.5}) == "2.5");
  CHECK(display(Value{4.0}) == "4.0");
  CHECK(display(Value{true}) == "true");
  CHECK(display(Value{std::string("hi")}) == "hi");
  CHECK(display(Value{RangeVal{1, 5}}) == "1:5");
  CHECK(show(Value{std::string("hi")}) == "\"hi\"");
  CHECK(show(Value{std::int64_t{7}}) == "7");
  CHECK(type_name(Value{std::int64_t{1}}) == "Int64");
  CHECK(type_name(Value{1.0}) == "Float64");
  CHECK(type_name(Value{RangeVal{}}) == "UnitRange{Int64}");
}

TEST_CASE("arithmetic stays integral until a float appears") {
  CHECK(result_of("x = 2 + 3") == Value{std::int64_t{5}});
  CHECK(result_of("x = 2 + 3.0") == Value{5.0});
  CHECK(result_of("x = 2 * 3 * 4") == Value{std::int64_t{24}});
  CHECK(result_of("x = 7 - 2 - 1") == Value{std::int64_t{4}});
  CHECK(result_of("x = 7 / 2") == Value{3.5});  // division is always floating
  CHECK(result_of("x = -5 + 1") == Value{std::int64_t{-4}});
  CHECK(result_of("x = 1 + 2 + 3 + 4") == Value{std::int64_t{10}});
}

TEST_CASE("string concatenation uses *") {
  CHECK(result_of("s = \"ab\" * \"cd\"") == Value{std::string("abcd")});
  auto r = run("s = \"ab\" * 3");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->message == "MethodError: no method matching *(::String, ::Int64)");
}

TEST_CASE("comparisons and equality") {
  CHECK(result_of("b = 2 < 3") == Value{true});
  CHECK(result_of("b = 2 >= 3") == Value{false});
  CHECK(result_of("b = 1 == 1.0") == Value{true});
  CHECK(result_of("b = \"a\" == \"a\"") == Value{true});
  CHECK(result_of("b = \"a\" != \"b\"") == Value{true});
  CHECK(result_of("b = true == 1") == Value{true});
}

TEST_CASE("println writes display text and returns nothing") {
  auto r = run("println(\"The number is:\",1)\nprintln(2, \" and \", 3.0)");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"The number is:1", "2 and 3.0"});
  CHECK(r.value == Value{Nothing{}});
}

TEST_CASE("counting while loop prints one through six") {
  auto r = run(
      "global x = 0\n"
      "while x <= 5\n"
      "    global x = x + 1\n"
      "    println(\"The number is:\",x)\n"
      "end\n");
  REQUIRE(r.ok());
  std::vector<std::string> expected;
  for (int i = 1; i <= 6; ++i) expected.push_back("The number is:" + std::to_string(i));
  CHECK(r.output == expected);
}

TEST_CASE("for loop iteration count matches the range length") {
  for (int n = 0; n <= 100; n += 7) {
    auto r = run(
        "global c = 0\n"
        "for k = 1:" + std::to_string(n) + "\n"
        "    global c = c + 1\n"
        "end\n"
        "println(c)\n");
    CAPTURE(n);
    REQUIRE(r.ok());
    CHECK(r.output == std::vector<std::string>{std::to_string(n)});
  }
}

TEST_CASE("for loop over explicit descending range runs zero times") {
  auto r = run("global c = 0\nfor k = 5:1\nglobal c = c + 1\nend\nprintln(c)");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"0"});
}

TEST_CASE("for in form iterates like the = form") {
  auto r = run("for k in 1:3\nprintln(k)\nend");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("if elseif else picks exactly one branch") {
  auto pick = [](int x) {
    auto r = run_program(
        "x = " + std::to_string(x) + "\n"
        "if x < 0\n"
        "    println(\"neg\")\n"
        "elseif x == 0\n"
        "    println(\"zero\")\n"
        "else\n"
        "    println(\"pos\")\n"
        "end\n");
    REQUIRE(r.ok());
    REQUIRE(r.output.size() == 1);
    return r.output[0];
  };
  CHECK(pick(-3) == "neg");
  CHECK(pick(0) == "zero");
  CHECK(pick(9) == "pos");
}

TEST_CASE("functions bind parameters in a fresh frame") {
  auto r = run(
      "x = 10\n"
      "function double(x)\n"
      "    x * 2\n"
      "end\n"
      "println(double(4))\n"
      "println(x)\n");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"8", "10"});
}

TEST_CASE("function body sees globals but writes locally") {
  auto r = run(
      "g = 5\n"
      "function probe()\n"
      "    g = 1\n"
      "    println(g)\n"
      "end\n"
      "probe()\n"
      "println(g)\n");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"1", "5"});
}

TEST_CASE("global declaration inside a function writes through") {
  auto r = run(
      "g = 5\n"
      "function bump()\n"
      "    global g = g + 1\n"
      "end\n"
      "bump()\n"
      "println(g)\n");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"6"});
}

TEST_CASE("loop variable does not leak out of the loop") {
  auto r = run("for k = 1:3\nend\nprintln(k)\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->message == "UndefVarError: k not defined");
}

TEST_CASE("bare loop assignment stays loop-local without global") {
  auto r = run(
      "global x = 0\n"
      "for k = 1:2\n"
      "    x = x + 1\n"
      "end\n"
      "println(x)\n");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"0"});
}

TEST_CASE("global statement inside a loop makes assignment write through") {
  auto r = run(
      "global x = 0\n"
      "for k = 1:2\n"
      "    global x\n"
      "    x = x + 1\n"
      "end\n"
      "println(x)\n");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"2"});
}

TEST_CASE("nested function calls and recursion") {
  auto r = run(
      "function fact(n)\n"
      "    if n <= 1\n"
      "        1\n"
      "    else\n"
      "        n * fact(n - 1)\n"
      "    end\n"
      "end\n"
      "println(fact(6))\n");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"720"});
}

TEST_CASE("runaway recursion reports a stack overflow") {
  auto r = run("function f()\nf()\nend\nf()\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->message == "StackOverflowError");
}

TEST_CASE("runtime errors carry the offending line and file") {
  auto r = run("x = 1\ny = boom\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == ErrorInfo::Kind::Runtime);
  CHECK(r.error->message == "UndefVarError: boom not defined");
  CHECK(r.error->line == 2);
  CHECK(r.error->file == "prog.jl");
  CHECK(r.error->render() == "UndefVarError: boom not defined at prog.jl:2");
}

TEST_CASE("parse errors come back rendered, not thrown") {
  auto r = run("x = \"unclosed\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->kind == ErrorInfo::Kind::Parse);
  CHECK(r.error->message == "unterminated string literal");
  CHECK(r.error->render() == "ParseError: unterminated string literal at prog.jl:1");
}

TEST_CASE("output before an error is preserved") {
  auto r = run("println(\"first\")\nprintln(oops)\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.output == std::vector<std::string>{"first"});
}

TEST_CASE("non-boolean conditions are rejected") {
  auto r = run("if 3\nprintln(1)\nend\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->message == "TypeError: non-boolean (Int64) used in boolean context");
}

TEST_CASE("wrong arity reports a method error") {
  auto r = run("function f(a, b)\na + b\nend\nf(1)\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->message == "MethodError: f expects 2 arguments, got 1");
}

TEST_CASE("range endpoints must be integers") {
  auto r = run("for k = 1:2.5\nend\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.error->message == "ArgumentError: range endpoints must be integers");
}

TEST_CASE("run_in persists state across snippets") {
  Environment env;
  auto r1 = run_in(env, "x = 1", "repl");
  REQUIRE(r1.ok());
  auto r2 = run_in(env, "y = x + 1", "repl");
  REQUIRE(r2.ok());
  auto r3 = run_in(env, "println(y)", "repl");
  REQUIRE(r3.ok());
  CHECK(r3.output == std::vector<std::string>{"2"});
}

TEST_CASE("run_in survives an error and keeps earlier globals") {
  Environment env;
  REQUIRE(run_in(env, "x = 41", "repl").ok());
  auto bad = run_in(env, "function f()\nboom\nend\nf()", "repl");
  REQUIRE_FALSE(bad.ok());
  auto after = run_in(env, "x = x + 1\nprintln(x)", "repl");
  REQUIRE(after.ok());
  CHECK(after.output == std::vector<std::string>{"42"});
}

TEST_CASE("snapshot lists visible variables sorted, without functions") {
  Environment env;
  REQUIRE(run_in(env, "b = 2\na = 1\nfunction f()\nend", "repl").ok());
  auto snap = env.snapshot();
  REQUIRE(snap.size() == 2);
  CHECK(snap[0].first == "a");
  CHECK(snap[0].second == Value{std::int64_t{1}});
  CHECK(snap[1].first == "b");
  CHECK(snap[1].second == Value{std::int64_t{2}});
}

TEST_CASE("lookup differentiates missing from present") {
  Environment env;
  REQUIRE(run_in(env, "q = 3", "repl").ok());
  CHECK(env.lookup("q") == Value{std::int64_t{3}});
  CHECK_FALSE(env.lookup("missing").has_value());
}

TEST_CASE("last statement value is the program result") {
  CHECK(result_of("1 + 1") == Value{std::int64_t{2}});
  CHECK(result_of("x = 1\nx + 10") == Value{std::int64_t{11}});
  auto r = run("println(9)");
  REQUIRE(r.ok());
  CHECK(r.value == Value{Nothing{}});
}

TEST_CASE("echo callback sees lines as they print") {
  std::vector<std::string> seen;
  auto r = run_program("println(1)\nprintln(2)\n", "prog.jl",
                       [&](const std::string& line) { seen.push_back(line); });
  REQUIRE(r.ok());
  CHECK(seen == r.output);
}

TEST_CASE("while loop honors boolean conditions only once true") {
  auto r = run(
      "global n = 3\n"
      "while n > 0\n"
      "    println(n)\n"
      "    global n = n - 1\n"
      "end\n");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"3", "2", "1"});
}

TEST_CASE("true and false literals evaluate as booleans") {
  CHECK(result_of("b = true") == Value{true});
  CHECK(result_of("b = false") == Value{false});
  auto r = run("while false\nprintln(1)\nend\nprintln(\"done\")");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"done"});
}

TEST_CASE("range values are first class") {
  CHECK(result_of("r = 2:6") == Value{RangeVal{2, 6}});
  auto r = run("r = 1:3\nfor k in r\nprintln(k)\nend");
  REQUIRE(r.ok());
  CHECK(r.output == std::vector<std::string>{"1", "2", "3"});
}
