#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hoctop/report.hpp"

namespace hoctop {

struct BenchRow {
  std::size_t n = 0;
  StageTimings median;        // per-stage medians over the repeats
  double ratio = 0.0;         // median total ms / (n log2 n)
  std::size_t peak_bytes = 0; // heap high-water mark above the input cloud
  std::size_t pairs = 0;
};

struct BenchOptions {
  std::size_t max_n = 1'000'000;
  std::size_t repeats = 3;
  std::uint64_t seed = 0;
  std::vector<std::size_t> sizes = {1'000, 10'000, 100'000, 1'000'000};
};

/// Times the pipeline on uniform clouds for every size up to max_n. Each
/// repeat draws a fresh cloud from seed + repeat.
std::vector<BenchRow> bench(const BenchOptions& options);

struct ScalingSummary {
  double ratio_spread = 0.0;       // max ratio / min ratio
  double max_memory_growth = 0.0;  // largest peak(n2) / peak(n1) between consecutive rows
  double max_memory_per_point_growth = 0.0;
};

ScalingSummary summarize(const std::vector<BenchRow>& rows);

void print_bench(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace hoctop
