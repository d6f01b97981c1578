#include "mintej/bench.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#ifndef _WIN32
#include <unistd.h>
#endif

namespace mintej {
namespace {

struct ProcSample {
  long long rss_bytes = 0;
  long long cpu_ticks = 0;
};

bool read_proc(int pid, ProcSample& out) {
#ifdef _WIN32
  (void)pid;
  (void)out;
  return false;
#else
  {
    std::ifstream statm("/proc/" + std::to_string(pid) + "/statm");
    long long size = 0, resident = 0;
    if (!(statm >> size >> resident)) return false;
    out.rss_bytes = resident * sysconf(_SC_PAGESIZE);
  }
  std::ifstream stat("/proc/" + std::to_string(pid) + "/stat");
  std::string content;
  if (!std::getline(stat, content)) return false;
  // comm may contain spaces; fields restart after the closing paren.
  auto paren = content.rfind(')');
  if (paren == std::string::npos) return false;
  std::istringstream rest(content.substr(paren + 1));
  std::string field;
  long long utime = 0, stime = 0;
  // after ')': state is field 3; utime is field 14, stime 15
  for (int idx = 3; rest >> field; ++idx) {
    if (idx == 14) utime = std::stoll(field);
    if (idx == 15) {
      stime = std::stoll(field);
      break;
    }
  }
  out.cpu_ticks = utime + stime;
  return true;
#endif
}

double mean(const std::deque<double>& values) {
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

}  // namespace

std::size_t bench_sample(int pid, double interval_s, std::size_t window, std::ostream& out,
                         std::size_t max_rows) {
  out << "timestamp,rss-bytes,cpu-pct,rss-ma,cpu-pct-ma\n";
  if (window == 0) window = 1;

#ifndef _WIN32
  const double ticks_per_sec = static_cast<double>(sysconf(_SC_CLK_TCK));
#else
  const double ticks_per_sec = 100.0;
#endif

  ProcSample prev;
  if (!read_proc(pid, prev)) return 0;

  std::deque<double> rss_hist, cpu_hist;
  std::size_t rows = 0;
  while (max_rows == 0 || rows < max_rows) {
    std::this_thread::sleep_for(std::chrono::duration<double>(interval_s));
    ProcSample cur;
    if (!read_proc(pid, cur)) break;

    double cpu_pct = interval_s > 0.0
                         ? 100.0 * static_cast<double>(cur.cpu_ticks - prev.cpu_ticks) /
                               ticks_per_sec / interval_s
                         : 0.0;
    prev = cur;

    rss_hist.push_back(static_cast<double>(cur.rss_bytes));
    cpu_hist.push_back(cpu_pct);
    if (rss_hist.size() > window) {
      rss_hist.pop_front();
      cpu_hist.pop_front();
    }

    double now = std::chrono::duration<double>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count();
    char line[160];
    if (rss_hist.size() == window) {
      std::snprintf(line, sizeof line, "%.3f,%lld,%.2f,%.1f,%.2f", now, cur.rss_bytes, cpu_pct,
                    mean(rss_hist), mean(cpu_hist));
    } else {
      std::snprintf(line, sizeof line, "%.3f,%lld,%.2f,,", now, cur.rss_bytes, cpu_pct);
    }
    out << line << "\n";
    out.flush();
    ++rows;
  }
  return rows;
}

}  // namespace mintej
