#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hoctop/diagram.hpp"

namespace hoctop {

/// Number of holes of the offset as a step function of the scale. Interval i
/// is [breakpoints[i], breakpoints[i + 1]) and carries counts[i] holes.
struct Staircase {
  std::vector<double> breakpoints;
  std::vector<std::size_t> counts;

  bool empty() const noexcept { return breakpoints.size() < 2; }
  double lo() const { return breakpoints.front(); }
  double hi() const { return breakpoints.back(); }
  /// Holes at scale alpha (zero outside the range).
  std::size_t count_at(double alpha) const;
};

/// Pairs with zero persistence are ignored; the range is
/// [min birth, max death] over the remaining pairs.
Staircase staircase(const Diagram& d);

struct HoleProbabilityTable {
  std::map<std::size_t, double> entries;  // hole count -> probability
  bool empty_range = false;

  /// Entries with positive probability, most likely first (ties: fewer holes first).
  std::vector<std::pair<std::size_t, double>> ranked() const;
  double probability(std::size_t holes) const;
};

HoleProbabilityTable hole_probabilities(const Diagram& d);
HoleProbabilityTable hole_probabilities(const Staircase& s);

struct Barcode {
  std::vector<double> bars;  // death - birth, descending; zero bars omitted
};

Barcode barcode(const Diagram& d);

/// Bottleneck distance under the L-infinity ground metric; a point may be
/// matched to the diagonal at cost (death - birth) / 2.
double bottleneck_distance(const Diagram& a, const Diagram& b);

struct HoleCountInference {
  std::size_t holes = 0;
  double gap = 0.0;
};

/// Counts the pairs above the widest gap between consecutive persistence
/// values (with 0 prepended). Zero-persistence pairs are ignored.
HoleCountInference infer_hole_count(const Diagram& d);

}  // namespace hoctop
