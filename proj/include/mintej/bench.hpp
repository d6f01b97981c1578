#pragma once
// Resource sampler: polls a process's resident memory and CPU share at a
// fixed interval and streams CSV rows with moving-average columns.

#include <cstddef>
#include <ostream>

namespace mintej {

// Emits a header then one row per sample:
//   timestamp,rss-bytes,cpu-pct,rss-ma,cpu-pct-ma
// The ma columns stay empty until `window` samples exist. Sampling stops when
// the target process exits or after `max_rows` rows (0 = no cap). Returns the
// number of data rows written.
std::size_t bench_sample(int pid, double interval_s, std::size_t window, std::ostream& out,
                         std::size_t max_rows = 0);

}  // namespace mintej
