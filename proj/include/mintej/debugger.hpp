#pragma once
// Debug mode: recursive AST instrumentation for stepping (echo, watch,
// pause), breakpoint injection with scope dumps, and the db command loop.

#include <optional>
#include <string>
#include <vector>

#include "mintej/minilang.hpp"

namespace mintej {

struct Session;

struct WatchList {
  std::vector<std::string> names;
};

// step_transform instruments statements: block children one level deeper,
// leaf statements wrapped in Step nodes, for-loops in StepFor wrappers that
// announce themselves and pause every iteration. erase_instrumentation is
// its exact inverse (and drops Breakpoint nodes).
minilang::AstPtr step_transform(const minilang::AstNode& node, int depth);
minilang::AstPtr erase_instrumentation(const minilang::AstNode& node);

// Inserts a Breakpoint node for `line`: before the statement on that line,
// or as the final body statement when `line` is a block's `end`. Returns
// nullopt when the line matches nothing.
std::optional<minilang::AstPtr> insert_breakpoint(const minilang::AstNode& program, int line);

// `list_variables = [:a, :b]` updates `list` and returns true; empty input
// returns true with no change; anything else returns false (caller prints a
// notice) and leaves the list alone.
bool parse_watch_assignment(const std::string& input, WatchList& list);

// Both write the ingested source verbatim to output_debug.jl in the session
// working directory and parse from that copy.
void run_stepped(Session& session, const std::string& source);
void run_with_breakpoint(Session& session, const std::string& source, int line);

void db_loop(Session& session);

}  // namespace mintej
