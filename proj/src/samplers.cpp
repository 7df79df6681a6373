#include "hoctop/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "hoctop/analytics.hpp"
#include "hoctop/dual_forest.hpp"
#include "hoctop/errors.hpp"
#include "hoctop/report.hpp"

namespace hoctop {
namespace {

using json = nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw InputError(InputError::Kind::InvalidArgument, what); }

std::vector<Segment> build_segments(const WheelShape& w) {
  if (w.spokes < 3) invalid("a wheel needs at least 3 spokes");
  if (!(w.radius > 0.0)) invalid("wheel radius must be positive");
  std::vector<Point2> rim(w.spokes);
  for (std::size_t i = 0; i < w.spokes; ++i) {
    const double angle = std::numbers::pi / 2 + 2.0 * std::numbers::pi * static_cast<double>(i) /
                                                    static_cast<double>(w.spokes);
    rim[i] = {w.radius * std::cos(angle), w.radius * std::sin(angle)};
  }
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < w.spokes; ++i) {
    segs.push_back({Point2{0.0, 0.0}, rim[i]});
    segs.push_back({rim[i], rim[(i + 1) % w.spokes]});
  }
  return segs;
}

std::vector<Segment> build_segments(const LatticeShape& l) {
  if (l.rows == 0 || l.cols == 0) invalid("a lattice needs at least one row and one column");
  if (!(l.cell > 0.0)) invalid("lattice cell size must be positive");
  auto node = [&](std::size_t i, std::size_t j) {
    return Point2{static_cast<double>(i) * l.cell, static_cast<double>(j) * l.cell};
  };
  std::vector<Segment> segs;
  for (std::size_t j = 0; j <= l.rows; ++j) {
    for (std::size_t i = 0; i < l.cols; ++i) segs.push_back({node(i, j), node(i + 1, j)});
  }
  for (std::size_t i = 0; i <= l.cols; ++i) {
    for (std::size_t j = 0; j < l.rows; ++j) segs.push_back({node(i, j), node(i, j + 1)});
  }
  return segs;
}

std::vector<Segment> build_segments(const PolygonShape& p) {
  if (p.points.size() < 3) invalid("a polygon needs at least 3 vertices");
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    const Point2& a = p.points[i];
    const Point2& b = p.points[(i + 1) % p.points.size()];
    if (!is_finite(a)) invalid("polygon vertex is not finite");
    if (a == b) continue;
    segs.push_back({a, b});
  }
  return segs;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double point_segment_distance(const Point2& p, const Segment& s) {
  const double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  const double len2 = dx * dx + dy * dy;
  double t = ((p.x - s.a.x) * dx + (p.y - s.a.y) * dy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, Point2{s.a.x + t * dx, s.a.y + t * dy});
}

// Bucket grid for nearest-neighbour queries.
class PointGrid {
 public:
  PointGrid(std::span<const Point2> pts, double cell) : pts_(pts), cell_(cell) {
    xmin_ = ymin_ = std::numeric_limits<double>::infinity();
    double xmax = -xmin_, ymax = -ymin_;
    for (const auto& p : pts) {
      xmin_ = std::min(xmin_, p.x);
      ymin_ = std::min(ymin_, p.y);
      xmax = std::max(xmax, p.x);
      ymax = std::max(ymax, p.y);
    }
    nx_ = static_cast<std::ptrdiff_t>((xmax - xmin_) / cell_) + 1;
    ny_ = static_cast<std::ptrdiff_t>((ymax - ymin_) / cell_) + 1;
    start_.assign(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
    for (const auto& p : pts) ++start_[bucket(p) + 1];
    for (std::size_t i = 1; i < start_.size(); ++i) start_[i] += start_[i - 1];
    items_.resize(pts.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::uint32_t i = 0; i < pts.size(); ++i) items_[fill[bucket(pts[i])]++] = i;
  }

  double nearest_distance(const Point2& q) const {
    const std::ptrdiff_t cx = clampx(static_cast<std::ptrdiff_t>(std::floor((q.x - xmin_) / cell_)));
    const std::ptrdiff_t cy = clampy(static_cast<std::ptrdiff_t>(std::floor((q.y - ymin_) / cell_)));
    double best = std::numeric_limits<double>::infinity();
    const std::ptrdiff_t max_ring = std::max(nx_, ny_);
    for (std::ptrdiff_t r = 0; r <= max_ring; ++r) {
      for (std::ptrdiff_t j = cy - r; j <= cy + r; ++j) {
        if (j < 0 || j >= ny_) continue;
        const bool edge_row = (j == cy - r || j == cy + r);
        for (std::ptrdiff_t i = cx - r; i <= cx + r; i += (edge_row ? 1 : 2 * std::max<std::ptrdiff_t>(r, 1))) {
          if (i < 0 || i >= nx_) continue;
          const auto b = static_cast<std::size_t>(j * nx_ + i);
          for (std::size_t k = start_[b]; k < start_[b + 1]; ++k) best = std::min(best, distance(q, pts_[items_[k]]));
        }
      }
      // Anything in ring r + 1 is at least r * cell away.
      if (best <= static_cast<double>(r) * cell_) break;
    }
    return best;
  }

 private:
  std::ptrdiff_t clampx(std::ptrdiff_t i) const { return std::clamp<std::ptrdiff_t>(i, 0, nx_ - 1); }
  std::ptrdiff_t clampy(std::ptrdiff_t j) const { return std::clamp<std::ptrdiff_t>(j, 0, ny_ - 1); }
  std::size_t bucket(const Point2& p) const {
    const auto i = clampx(static_cast<std::ptrdiff_t>((p.x - xmin_) / cell_));
    const auto j = clampy(static_cast<std::ptrdiff_t>((p.y - ymin_) / cell_));
    return static_cast<std::size_t>(j * nx_ + i);
  }

  std::span<const Point2> pts_;
  double cell_;
  double xmin_, ymin_;
  std::ptrdiff_t nx_ = 1, ny_ = 1;
  std::vector<std::size_t> start_;
  std::vector<std::uint32_t> items_;
};

}  // namespace

ShapeSpec::ShapeSpec(Variant shape) : shape_(std::move(shape)) {
  segments_ = std::visit([](const auto& s) { return build_segments(s); }, shape_);
  if (segments_.empty()) invalid("shape has no segments");
  for (const auto& s : segments_) total_length_ += distance(s.a, s.b);
}

std::string ShapeSpec::kind() const {
  struct {
    std::string operator()(const WheelShape&) const { return "wheel"; }
    std::string operator()(const LatticeShape&) const { return "lattice"; }
    std::string operator()(const PolygonShape&) const { return "polygon"; }
  } name;
  return std::visit(name, shape_);
}

std::size_t ShapeSpec::hole_count() const {
  struct {
    std::size_t operator()(const WheelShape& w) const { return w.spokes; }
    std::size_t operator()(const LatticeShape& l) const { return l.rows * l.cols; }
    std::size_t operator()(const PolygonShape&) const { return 1; }
  } holes;
  return std::visit(holes, shape_);
}

std::string ShapeSpec::to_json() const {
  json j;
  j["kind"] = kind();
  if (const auto* w = std::get_if<WheelShape>(&shape_)) {
    j["spokes"] = w->spokes;
    j["radius"] = w->radius;
  } else if (const auto* l = std::get_if<LatticeShape>(&shape_)) {
    j["rows"] = l->rows;
    j["cols"] = l->cols;
    j["cell"] = l->cell;
  } else {
    json pts = json::array();
    for (const auto& p : std::get<PolygonShape>(shape_).points) pts.push_back({p.x, p.y});
    j["points"] = pts;
  }
  return j.dump();
}

ShapeSpec ShapeSpec::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "wheel") return ShapeSpec(WheelShape{j.at("spokes").get<std::size_t>(), j.value("radius", 1.0)});
    if (kind == "lattice") {
      return ShapeSpec(LatticeShape{j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                                    j.value("cell", 1.0)});
    }
    if (kind == "polygon") {
      PolygonShape poly;
      for (const auto& p : j.at("points")) poly.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      return ShapeSpec(std::move(poly));
    }
    invalid("unknown shape kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InputError(InputError::Kind::Malformed, std::string("bad shape JSON: ") + e.what());
  }
}

PolygonShape read_polyline_csv(const std::string& path) {
  PolygonShape poly;
  for (const auto& p : read_cloud_csv(path)) poly.points.push_back(p);
  return poly;
}

Cloud sample_shape(const ShapeSpec& spec, std::size_t n, double noise, std::uint64_t seed) {
  if (n < 3) invalid("need at least 3 sample points");
  if (!(noise >= 0.0)) invalid("noise must be non-negative");
  const auto& segs = spec.segments();
  std::vector<double> cumulative(segs.size() + 1, 0.0);
  for (std::size_t i = 0; i < segs.size(); ++i) cumulative[i + 1] = cumulative[i] + distance(segs[i].a, segs[i].b);
  const double total = cumulative.back();

  std::mt19937_64 rng(seed);
  std::vector<Point2> pts;
  pts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = uniform01(rng) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()) - 1, segs.size() - 1);
    const double t = (s - cumulative[i]) / (cumulative[i + 1] - cumulative[i]);
    const Segment& seg = segs[i];
    Point2 p{seg.a.x + t * (seg.b.x - seg.a.x), seg.a.y + t * (seg.b.y - seg.a.y)};
    const double r = noise * std::sqrt(uniform01(rng));
    const double theta = 2.0 * std::numbers::pi * uniform01(rng);
    if (noise > 0.0) {
      p.x += r * std::cos(theta);
      p.y += r * std::sin(theta);
    }
    pts.push_back(p);
  }
  return Cloud::from_points(std::move(pts));
}

Cloud uniform_cloud(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    p.x = uniform01(rng);
    p.y = uniform01(rng);
  }
  return Cloud::from_points(std::move(pts));
}

Cloud dense_sample(const ShapeSpec& spec, double spacing) {
  if (!(spacing > 0.0)) invalid("spacing must be positive");
  std::vector<Point2> pts;
  for (const auto& s : spec.segments()) {
    const auto m = static_cast<std::size_t>(std::ceil(distance(s.a, s.b) / spacing));
    pts.push_back(s.a);
    for (std::size_t j = 1; j < m; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(m);
      pts.push_back({s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)});
    }
    pts.push_back(s.b);
  }
  return Cloud::from_points(std::move(pts));
}

SampleQuality epsilon_of_sample(const Cloud& cloud, const ShapeSpec& spec) {
  SampleQuality q;
  if (cloud.size() == 0) return q;
  const double spacing = spec.total_length() / static_cast<double>(cloud.size());
  const Cloud probe = dense_sample(spec, spacing / 10.0);
  const PointGrid grid(cloud.points(), std::max(spacing, 1e-12));
  for (const auto& p : probe.points()) q.coverage = std::max(q.coverage, grid.nearest_distance(p));
  for (const auto& p : cloud.points()) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : spec.segments()) best = std::min(best, point_segment_distance(p, s));
    q.deviation = std::max(q.deviation, best);
  }
  q.epsilon = std::max(q.coverage, q.deviation);
  return q;
}

FeatureSizes shape_feature_sizes(const ShapeSpec& spec) {
  const Cloud dense = dense_sample(spec, spec.total_length() / 20000.0);
  const Diagram d = run_hoctop(dense);
  const HoleCountInference inferred = infer_hole_count(d);
  std::vector<PersistencePair> pairs(d.pairs().begin(), d.pairs().end());
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.persistence() > b.persistence(); });
  FeatureSizes sizes;
  if (inferred.holes == 0) return sizes;
  sizes.minhfs = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < inferred.holes; ++i) {
    sizes.minhfs = std::min(sizes.minhfs, pairs[i].death);
    sizes.maxhfs = std::max(sizes.maxhfs, pairs[i].death);
  }
  return sizes;
}

bool hole_count_guaranteed(const FeatureSizes& sizes, double epsilon) {
  return sizes.minhfs > 0.5 * sizes.maxhfs + 4.0 * epsilon;
}

}  // namespace hoctop
