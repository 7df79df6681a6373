#include "hoctop/analytics.hpp"

#include <algorithm>
#include <functional>

namespace hoctop {

std::size_t Staircase::count_at(double alpha) const {
  if (empty() || alpha < lo() || alpha >= hi()) return 0;
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), alpha);
  return counts[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
}

Staircase staircase(const Diagram& d) {
  std::vector<std::pair<double, int>> events;
  for (const auto& p : d.pairs()) {
    if (p.is_diagonal()) continue;
    events.emplace_back(p.birth, +1);
    events.emplace_back(p.death, -1);
  }
  Staircase s;
  if (events.empty()) return s;
  std::sort(events.begin(), events.end());

  long long level = 0;
  for (std::size_t i = 0; i < events.size();) {
    const double at = events[i].first;
    for (; i < events.size() && events[i].first == at; ++i) level += events[i].second;
    s.breakpoints.push_back(at);
    if (i < events.size()) s.counts.push_back(static_cast<std::size_t>(level));
  }
  return s;
}

HoleProbabilityTable hole_probabilities(const Staircase& s) {
  HoleProbabilityTable table;
  if (s.empty() || !(s.hi() > s.lo())) {
    table.entries[0] = 1.0;
    table.empty_range = true;
    return table;
  }
  const double range = s.hi() - s.lo();
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    table.entries[s.counts[i]] += (s.breakpoints[i + 1] - s.breakpoints[i]) / range;
  }
  return table;
}

HoleProbabilityTable hole_probabilities(const Diagram& d) { return hole_probabilities(staircase(d)); }

std::vector<std::pair<std::size_t, double>> HoleProbabilityTable::ranked() const {
  std::vector<std::pair<std::size_t, double>> out;
  for (const auto& [k, p] : entries) {
    if (p > 0.0) out.emplace_back(k, p);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

double HoleProbabilityTable::probability(std::size_t holes) const {
  const auto it = entries.find(holes);
  return it == entries.end() ? 0.0 : it->second;
}

Barcode barcode(const Diagram& d) {
  Barcode b;
  b.bars.reserve(d.size());
  for (const auto& p : d.pairs()) {
    if (!p.is_diagonal()) b.bars.push_back(p.persistence());
  }
  std::sort(b.bars.begin(), b.bars.end(), std::greater<>());
  return b;
}

HoleCountInference infer_hole_count(const Diagram& d) {
  std::vector<double> values{0.0};
  for (const auto& p : d.pairs()) {
    if (!p.is_diagonal()) values.push_back(p.persistence());
  }
  std::sort(values.begin(), values.end());
  HoleCountInference result;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double gap = values[i] - values[i - 1];
    if (gap > result.gap) {
      result.gap = gap;
      result.holes = values.size() - i;
    }
  }
  return result;
}

}  // namespace hoctop
