#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mintej/bench.hpp"

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("sampling self emits the documented CSV shape") {
  std::ostringstream out;
  auto rows = mintej::bench_sample(getpid(), 0.01, 2, out, 5);
  CHECK(rows == 5);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "timestamp,rss-bytes,cpu-pct,rss-ma,cpu-pct-ma");
  double last_ts = 0.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split(lines[i], ',');
    REQUIRE(fields.size() == 5);
    double ts = std::stod(fields[0]);
    CHECK(ts >= last_ts);
    last_ts = ts;
    CHECK(std::stoll(fields[1]) > 0);
    CHECK(std::stod(fields[2]) >= 0.0);
    // the moving average needs a full window: empty on row 1, defined after
    if (i < 2) {
      CHECK(fields[3].empty());
      CHECK(fields[4].empty());
    } else {
      CHECK_FALSE(fields[3].empty());
      CHECK_FALSE(fields[4].empty());
    }
  }
}

TEST_CASE("a window of one makes the average track the raw column") {
  std::ostringstream out;
  auto rows = mintej::bench_sample(getpid(), 0.01, 1, out, 3);
  CHECK(rows == 3);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 4);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split(lines[i], ',');
    REQUIRE(fields.size() == 5);
    CHECK(std::stod(fields[3]) == doctest::Approx(std::stod(fields[1])).epsilon(1e-9));
    CHECK(std::abs(std::stod(fields[4]) - std::stod(fields[2])) <= 0.006);
  }
}

TEST_CASE("a zero window is treated as one") {
  std::ostringstream out;
  auto rows = mintej::bench_sample(getpid(), 0.01, 0, out, 2);
  CHECK(rows == 2);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 3);
  CHECK_FALSE(split(lines[1], ',')[3].empty());
}

TEST_CASE("the moving averages are the means of the last window rows") {
  std::ostringstream out;
  auto rows = mintej::bench_sample(getpid(), 0.01, 3, out, 7);
  CHECK(rows == 7);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 8);
  std::vector<double> rss, cpu;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split(lines[i], ',');
    rss.push_back(std::stod(fields[1]));
    cpu.push_back(std::stod(fields[2]));
    if (i < 3) {
      CHECK(fields[3].empty());
      continue;
    }
    double rss_mean = (rss[i - 1] + rss[i - 2] + rss[i - 3]) / 3.0;
    double cpu_mean = (cpu[i - 1] + cpu[i - 2] + cpu[i - 3]) / 3.0;
    CHECK(std::abs(std::stod(fields[3]) - rss_mean) <= 0.051);
    CHECK(std::abs(std::stod(fields[4]) - cpu_mean) <= 0.0051);
  }
}

TEST_CASE("an unreadable process yields a lone header") {
  std::ostringstream out;
  auto rows = mintej::bench_sample(999999999, 0.01, 4, out, 5);
  CHECK(rows == 0);
  CHECK(out.str() == "timestamp,rss-bytes,cpu-pct,rss-ma,cpu-pct-ma\n");
}

TEST_CASE("a reaped process reads as gone") {
  pid_t child = fork();
  REQUIRE(child >= 0);
  if (child == 0) _exit(0);
  int status = 0;
  waitpid(child, &status, 0);
  std::ostringstream out;
  auto rows = mintej::bench_sample(child, 0.01, 2, out, 5);
  CHECK(rows == 0);
}
