#pragma once
// File management mode: directory navigation, copy/delete/rename, tree view,
// file reading, and the two-file comparison report.

#include <filesystem>
#include <string>
#include <vector>

namespace mintej {

struct Session;
class Io;

struct FileStats {
  std::string name;
  std::uintmax_t size_bytes = 0;
  std::size_t lines = 0;
  std::size_t words = 0;
};

FileStats gather_stats(const std::filesystem::path& path, const std::string& shown_name);

// Prints mismatching line pairs, the verdict, and the stats table; returns
// true when the files are identical.
bool compare_files(Io& io, const std::filesystem::path& a, const std::filesystem::path& b,
                   const std::string& name_a, const std::string& name_b);

// "List tree" body: one section per directory (the root first), each section
// an absolute path line followed by "├── <file>" rows.
std::vector<std::string> tree_listing(const std::filesystem::path& root);

void fms_loop(Session& session);

}  // namespace mintej
