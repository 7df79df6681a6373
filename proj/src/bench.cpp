#include "hoctop/bench.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "hoctop/alloc_stats.hpp"
#include "hoctop/errors.hpp"
#include "hoctop/samplers.hpp"

namespace hoctop {
namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

std::vector<BenchRow> bench(const BenchOptions& options) {
  if (options.max_n < 1000) throw InputError(InputError::Kind::InvalidArgument, "bench needs --max-n >= 1000");
  if (options.repeats == 0) throw InputError(InputError::Kind::InvalidArgument, "bench needs at least one repeat");

  std::vector<BenchRow> rows;
  for (const std::size_t n : options.sizes) {
    if (n > options.max_n) continue;
    std::vector<double> tri, sort, sweep, total;
    BenchRow row;
    row.n = n;
    for (std::size_t r = 0; r < options.repeats; ++r) {
      const Cloud cloud = uniform_cloud(n, options.seed + r);
      const std::size_t base = alloc::current_bytes();
      alloc::reset_peak();
      const TimedRun run = run_hoctop_timed(cloud);
      row.peak_bytes = std::max(row.peak_bytes, alloc::peak_bytes() - base);
      row.pairs = run.sweep.diagram.size();
      tri.push_back(run.timings.triangulate_ms);
      sort.push_back(run.timings.sort_ms);
      sweep.push_back(run.timings.sweep_ms);
      total.push_back(run.timings.total_ms);
    }
    row.median = {median(tri), median(sort), median(sweep), median(total)};
    const auto dn = static_cast<double>(n);
    row.ratio = row.median.total_ms / (dn * std::log2(dn));
    rows.push_back(row);
  }
  return rows;
}

ScalingSummary summarize(const std::vector<BenchRow>& rows) {
  ScalingSummary s;
  if (rows.empty()) return s;
  double lo = rows.front().ratio, hi = rows.front().ratio;
  for (const auto& r : rows) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  s.ratio_spread = lo > 0.0 ? hi / lo : 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto prev = static_cast<double>(rows[i - 1].peak_bytes);
    const auto cur = static_cast<double>(rows[i].peak_bytes);
    if (prev <= 0.0) continue;
    const double growth = cur / prev;
    const double scale = static_cast<double>(rows[i].n) / static_cast<double>(rows[i - 1].n);
    s.max_memory_growth = std::max(s.max_memory_growth, growth);
    s.max_memory_per_point_growth = std::max(s.max_memory_per_point_growth, growth / scale);
  }
  return s;
}

void print_bench(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << std::setw(9) << "n" << std::setw(14) << "triangulate" << std::setw(10) << "sort" << std::setw(10) << "sweep"
      << std::setw(11) << "total ms" << std::setw(16) << "ms/(n log2 n)" << std::setw(12) << "peak MiB"
      << std::setw(12) << "bytes/pt" << '\n';
  for (const auto& r : rows) {
    out << std::fixed << std::setw(9) << r.n << std::setprecision(2) << std::setw(14) << r.median.triangulate_ms
        << std::setw(10) << r.median.sort_ms << std::setw(10) << r.median.sweep_ms << std::setw(11)
        << r.median.total_ms << std::scientific << std::setprecision(3) << std::setw(16) << r.ratio << std::fixed
        << std::setprecision(2) << std::setw(12) << static_cast<double>(r.peak_bytes) / (1024.0 * 1024.0)
        << std::setprecision(1) << std::setw(12) << static_cast<double>(r.peak_bytes) / static_cast<double>(r.n)
        << '\n';
  }
  out << std::defaultfloat;
  const ScalingSummary s = summarize(rows);
  out << "ratio spread " << std::setprecision(3) << s.ratio_spread << "x, peak memory growth per step "
      << s.max_memory_growth << "x (" << s.max_memory_per_point_growth << "x per point)\n";
}

}  // namespace hoctop
