#pragma once

// Pipeline orchestration with per-stage timings, and the file formats the
// command-line tool reads and writes.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hoctop/analytics.hpp"
#include "hoctop/delaunay.hpp"
#include "hoctop/diagram.hpp"
#include "hoctop/dual_forest.hpp"

namespace hoctop {

struct StageTimings {
  double triangulate_ms = 0.0;
  double sort_ms = 0.0;
  double sweep_ms = 0.0;
  double total_ms = 0.0;
};

struct TimedRun {
  SweepResult sweep;
  StageTimings timings;
  std::size_t triangles = 0;
  std::size_t edges = 0;
  std::size_t hull_edges = 0;
};

TimedRun run_hoctop_timed(const Cloud& cloud);

struct RunReport {
  std::string source;
  std::size_t points = 0;
  std::size_t duplicates_removed = 0;
  std::size_t triangles = 0;
  std::size_t edges = 0;
  Diagram diagram;
  HoleProbabilityTable probabilities;
  HoleCountInference inference;
  StageTimings timings;

  friend bool operator==(const RunReport& a, const RunReport& b);
};

RunReport make_report(const Cloud& cloud, const std::string& source);

std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

/// One "x,y" pair per line; blank lines, '#' comments and a non-numeric
/// header line are skipped. Throws InputError(Malformed) naming the line.
std::vector<Point2> parse_cloud_csv(std::istream& in);
std::vector<Point2> read_cloud_csv(const std::string& path);
void write_cloud_csv(std::ostream& out, std::span<const Point2> points);

/// Header "birth,death" then one pair per line with 15 significant digits.
void write_pairs_csv(std::ostream& out, const Diagram& d);
Diagram parse_pairs_csv(std::istream& in);
Diagram read_pairs_csv(const std::string& path);

/// Human-readable summary table.
void print_report(std::ostream& out, const RunReport& report);

}  // namespace hoctop
