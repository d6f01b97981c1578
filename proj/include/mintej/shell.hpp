#pragma once
// Program entry plumbing: banner, the main mode-dispatch loop, and scripted
// whole-session replay for transcript tests.

#include <filesystem>
#include <string>
#include <vector>

namespace mintej {

struct Session;

std::vector<std::string> banner_lines();

void main_loop(Session& session);

struct ReplayResult {
  std::vector<std::string> transcript;
  std::vector<std::string> transitions;
};

// Runs a complete session against scripted input lines, rooted at `workdir`.
// An empty `syntax_db` path skips database loading (syntax mode then knows no
// keywords but still runs).
ReplayResult replay(const std::vector<std::string>& inputs, const std::filesystem::path& workdir,
                    const std::filesystem::path& syntax_db = {});

}  // namespace mintej
