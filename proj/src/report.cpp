#include "hoctop/report.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hoctop/errors.hpp"

namespace hoctop {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Reads rows of two comma-separated numbers. The first non-comment line may be
// a header (its first field is not a number); any other bad row is an error.
std::vector<std::pair<double, double>> parse_two_columns(std::istream& in, const char* what) {
  std::vector<std::pair<double, double>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto comma = body.find(',');
    double a = 0.0, b = 0.0;
    const bool ok = comma != std::string_view::npos && body.find(',', comma + 1) == std::string_view::npos &&
                    parse_double(body.substr(0, comma), a) && parse_double(body.substr(comma + 1), b);
    if (!ok) {
      double ignored = 0.0;
      const bool numeric = parse_double(body.substr(0, comma), ignored);
      if (!seen_content && comma != std::string_view::npos && !numeric) {
        seen_content = true;
        continue;  // header
      }
      throw InputError(InputError::Kind::Malformed,
                       std::string(what) + " line " + std::to_string(lineno) + ": expected two numbers, got '" +
                           std::string(body) + "'");
    }
    seen_content = true;
    rows.emplace_back(a, b);
  }
  return rows;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(InputError::Kind::Malformed, "cannot open '" + path + "'");
  return in;
}

}  // namespace

TimedRun run_hoctop_timed(const Cloud& cloud) {
  TimedRun run;
  const auto t0 = Clock::now();
  const Triangulation tri = triangulate(cloud);
  const auto t1 = Clock::now();
  const std::vector<EdgeId> order = edges_sorted_desc(tri);
  const auto t2 = Clock::now();
  run.sweep = sweep(tri, order);
  const auto t3 = Clock::now();
  run.timings = {elapsed_ms(t0, t1), elapsed_ms(t1, t2), elapsed_ms(t2, t3), elapsed_ms(t0, t3)};
  run.triangles = tri.triangles().size();
  run.edges = tri.edges().size();
  run.hull_edges = tri.hull_edge_count();
  return run;
}

bool operator==(const RunReport& a, const RunReport& b) {
  return a.source == b.source && a.points == b.points && a.duplicates_removed == b.duplicates_removed &&
         a.triangles == b.triangles && a.edges == b.edges && a.diagram == b.diagram &&
         a.probabilities.entries == b.probabilities.entries &&
         a.probabilities.empty_range == b.probabilities.empty_range && a.inference.holes == b.inference.holes &&
         a.inference.gap == b.inference.gap && a.timings.triangulate_ms == b.timings.triangulate_ms &&
         a.timings.sort_ms == b.timings.sort_ms && a.timings.sweep_ms == b.timings.sweep_ms &&
         a.timings.total_ms == b.timings.total_ms;
}

RunReport make_report(const Cloud& cloud, const std::string& source) {
  TimedRun run = run_hoctop_timed(cloud);
  RunReport r;
  r.source = source;
  r.points = cloud.size();
  r.duplicates_removed = cloud.duplicates_removed();
  r.triangles = run.triangles;
  r.edges = run.edges;
  r.diagram = std::move(run.sweep.diagram);
  r.probabilities = hole_probabilities(r.diagram);
  r.inference = infer_hole_count(r.diagram);
  r.timings = run.timings;
  return r;
}

std::string report_to_json(const RunReport& r) {
  json j;
  j["input"] = {{"source", r.source},
                {"points", r.points},
                {"duplicates_removed", r.duplicates_removed},
                {"triangles", r.triangles},
                {"edges", r.edges}};
  json pairs = json::array();
  for (const auto& p : r.diagram.pairs()) pairs.push_back({p.birth, p.death});
  j["pairs"] = pairs;
  json probs = json::array();
  for (const auto& [k, p] : r.probabilities.ranked()) probs.push_back({{"holes", k}, {"probability", p}});
  j["probabilities"] = probs;
  j["empty_range"] = r.probabilities.empty_range;
  j["inferred_holes"] = r.inference.holes;
  j["gap"] = r.inference.gap;
  j["timings_ms"] = {{"triangulate", r.timings.triangulate_ms},
                     {"sort", r.timings.sort_ms},
                     {"sweep", r.timings.sweep_ms},
                     {"total", r.timings.total_ms}};
  return j.dump(2);
}

RunReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    const json& in = j.at("input");
    r.source = in.at("source").get<std::string>();
    r.points = in.at("points").get<std::size_t>();
    r.duplicates_removed = in.at("duplicates_removed").get<std::size_t>();
    r.triangles = in.at("triangles").get<std::size_t>();
    r.edges = in.at("edges").get<std::size_t>();
    std::vector<PersistencePair> pairs;
    for (const auto& p : j.at("pairs")) pairs.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    r.diagram = Diagram(std::move(pairs));
    for (const auto& e : j.at("probabilities")) {
      r.probabilities.entries[e.at("holes").get<std::size_t>()] = e.at("probability").get<double>();
    }
    r.probabilities.empty_range = j.at("empty_range").get<bool>();
    r.inference.holes = j.at("inferred_holes").get<std::size_t>();
    r.inference.gap = j.at("gap").get<double>();
    const json& t = j.at("timings_ms");
    r.timings = {t.at("triangulate").get<double>(), t.at("sort").get<double>(), t.at("sweep").get<double>(),
                 t.at("total").get<double>()};
    return r;
  } catch (const json::exception& e) {
    throw InputError(InputError::Kind::Malformed, std::string("bad report JSON: ") + e.what());
  }
}

std::vector<Point2> parse_cloud_csv(std::istream& in) {
  std::vector<Point2> pts;
  for (const auto& [x, y] : parse_two_columns(in, "cloud")) pts.push_back({x, y});
  return pts;
}

std::vector<Point2> read_cloud_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_cloud_csv(in);
}

void write_cloud_csv(std::ostream& out, std::span<const Point2> points) {
  out << std::setprecision(17);
  for (const auto& p : points) out << p.x << ',' << p.y << '\n';
}

void write_pairs_csv(std::ostream& out, const Diagram& d) {
  out << "birth,death\n" << std::setprecision(15);
  for (const auto& p : d.pairs()) out << p.birth << ',' << p.death << '\n';
}

Diagram parse_pairs_csv(std::istream& in) {
  std::vector<PersistencePair> pairs;
  for (const auto& [b, d] : parse_two_columns(in, "pairs")) {
    if (!(d >= b)) throw InputError(InputError::Kind::Malformed, "pair with death below birth");
    pairs.push_back({b, d});
  }
  return Diagram(std::move(pairs));
}

Diagram read_pairs_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_pairs_csv(in);
}

void print_report(std::ostream& out, const RunReport& r) {
  out << "input      " << r.source << " (" << r.points << " points";
  if (r.duplicates_removed > 0) out << ", " << r.duplicates_removed << " duplicates removed";
  out << ")\n";
  out << "complex    " << r.triangles << " triangles, " << r.edges << " edges\n";
  out << "pairs      " << r.diagram.size() << "\n";
  out << std::setprecision(6);
  for (const auto& p : r.diagram.pairs()) {
    if (!p.is_diagonal()) out << "  birth " << p.birth << "  death " << p.death << "  persistence " << p.persistence() << '\n';
  }
  out << "P(k holes)" << (r.probabilities.empty_range ? "  (empty range)" : "") << '\n';
  for (const auto& [k, p] : r.probabilities.ranked()) {
    out << "  " << std::setw(4) << k << "  " << std::fixed << std::setprecision(2) << 100.0 * p << "%\n"
        << std::defaultfloat;
  }
  out << std::setprecision(6) << "holes      " << r.inference.holes << " (gap " << r.inference.gap << ")\n";
  out << std::fixed << std::setprecision(2) << "timings    triangulate " << r.timings.triangulate_ms << " ms, sort "
      << r.timings.sort_ms << " ms, sweep " << r.timings.sweep_ms << " ms, total " << r.timings.total_ms << " ms\n"
      << std::defaultfloat;
}

}  // namespace hoctop
