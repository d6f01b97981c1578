#pragma once
// Syntax mode: a keyword-indexed knowledge base of Julia snippets, kept in a
// hand-editable text file. A record starts with a line "== <key>"; every line
// until the next "==" is the record's body.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mintej/errors.hpp"

namespace mintej {

struct Session;

struct SyntaxEntry {
  std::string key;
  std::vector<std::string> body;
};

class SyntaxDb {
public:
  SyntaxDb() = default;

  // Throws SyntaxDbError naming the offending record; a failed parse loads
  // nothing (no partial databases).
  static SyntaxDb parse(const std::string& text);
  static SyntaxDb load_file(const std::filesystem::path& path);

  std::string render() const;
  void save_file(const std::filesystem::path& path) const;  // temp + rename

  const std::vector<SyntaxEntry>& entries() const noexcept { return entries_; }
  std::vector<std::string> keys() const;
  const SyntaxEntry* lookup(std::string_view key) const;  // case-insensitive
  void add(SyntaxEntry entry);  // throws SyntaxDbError on duplicate/bad body

private:
  std::vector<SyntaxEntry> entries_;
};

// The database the editor ships with (the 14 documented keywords).
SyntaxDb stock_database();

// Loads `path`, writing the stock database there first if nothing exists.
SyntaxDb ensure_database(const std::filesystem::path& path);

void syntax_loop(Session& session);

}  // namespace mintej
