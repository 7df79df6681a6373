#include "hoctop/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "hoctop/analytics.hpp"
#include "hoctop/dual_forest.hpp"
#include "hoctop/errors.hpp"

namespace hoctop {
namespace {

// Circumradius through the circumcenter, independent of the edge-product
// formula used by the sweep.
double circumradius_via_center(const Point2& a, const Point2& b, const Point2& c) {
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double d = 2.0 * (bx * cy - by * cx);
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  return std::hypot(ux, uy);
}

double triangle_value(const Point2& a, const Point2& b, const Point2& c) {
  if (is_acute(a, b, c)) return circumradius_via_center(a, b, c);
  return 0.5 * std::max({distance(a, b), distance(b, c), distance(c, a)});
}

using Column = std::vector<std::uint32_t>;

void add_column(Column& target, const Column& source) {
  Column out;
  out.reserve(target.size() + source.size());
  std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                std::back_inserter(out));
  target = std::move(out);
}

}  // namespace

AlphaFiltration alpha_filtration(const Triangulation& tri) {
  AlphaFiltration f;
  const auto pts = tri.vertices();
  f.vertex_count = pts.size();
  for (VertexId v = 0; v < pts.size(); ++v) f.simplices.push_back({0, {v, kNoVertex, kNoVertex}, 0.0});
  for (const auto& e : tri.edges()) {
    f.simplices.push_back(
        {1, {e.endpoints[0], e.endpoints[1], kNoVertex}, 0.5 * distance(pts[e.endpoints[0]], pts[e.endpoints[1]])});
  }
  for (const auto& t : tri.triangles()) {
    std::array<VertexId, 3> v = t.v;
    std::sort(v.begin(), v.end());
    f.simplices.push_back({2, v, triangle_value(pts[v[0]], pts[v[1]], pts[v[2]])});
  }
  std::sort(f.simplices.begin(), f.simplices.end(), [](const FilteredSimplex& x, const FilteredSimplex& y) {
    if (x.value != y.value) return x.value < y.value;
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.vertices < y.vertices;
  });
  return f;
}

AlphaFiltration alpha_filtration(const Cloud& cloud) { return alpha_filtration(triangulate(cloud)); }

ReductionResult reduce_filtration(const AlphaFiltration& f) {
  const std::size_t n = f.simplices.size();
  std::map<std::array<VertexId, 2>, std::uint32_t> edge_index;
  std::vector<std::uint32_t> vertex_index(f.vertex_count, 0);
  std::vector<Column> columns(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    const auto& s = f.simplices[j];
    if (s.dim == 0) {
      vertex_index[s.vertices[0]] = j;
    } else if (s.dim == 1) {
      edge_index[{s.vertices[0], s.vertices[1]}] = j;
      columns[j] = {vertex_index[s.vertices[0]], vertex_index[s.vertices[1]]};
    } else {
      const auto& v = s.vertices;
      for (const auto& key : {std::array<VertexId, 2>{v[0], v[1]}, std::array<VertexId, 2>{v[1], v[2]},
                              std::array<VertexId, 2>{v[0], v[2]}}) {
        const auto it = edge_index.find(key);
        expects(it != edge_index.end(), "triangle edge missing from the filtration prefix");
        columns[j].push_back(it->second);
      }
    }
    std::sort(columns[j].begin(), columns[j].end());
  }

  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> owner(n, kNone);  // row -> column whose lowest one it is
  std::vector<char> paired(n, 0);
  ReductionResult result;
  std::vector<PersistencePair> h1;
  for (std::uint32_t j = 0; j < n; ++j) {
    Column& col = columns[j];
    while (!col.empty() && owner[col.back()] != kNone) add_column(col, columns[owner[col.back()]]);
    if (col.empty()) continue;
    const std::uint32_t low = col.back();
    owner[low] = j;
    paired[low] = 1;
    paired[j] = 1;
    if (f.simplices[j].dim == 2) h1.push_back({f.simplices[low].value, f.simplices[j].value});
  }
  for (std::uint32_t j = 0; j < n; ++j) {
    if (paired[j] || !columns[j].empty()) continue;
    if (f.simplices[j].dim == 0) ++result.h0_essential;
    if (f.simplices[j].dim == 1) ++result.h1_essential;
  }
  result.h1 = Diagram(std::move(h1));
  return result;
}

Diagram reduce_boundary_matrix(const AlphaFiltration& f) {
  ReductionResult r = reduce_filtration(f);
  expects(r.h1_essential == 0, "a Delaunay complex cannot carry an essential cycle");
  return std::move(r.h1);
}

RasterCount raster_hole_count(const Cloud& cloud, double alpha, double resolution) {
  if (!(alpha > 0.0) || !(resolution > 0.0)) {
    throw InputError(InputError::Kind::InvalidArgument, "raster needs positive alpha and resolution");
  }
  const auto pts = cloud.points();
  RasterCount out;
  if (pts.empty()) return out;
  const double h = 1.0 / resolution;
  out.too_coarse = !(h < alpha / 10.0);

  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double pad = 2.0 * alpha;
  const double x0 = xmin - pad, y0 = ymin - pad;
  const auto w = static_cast<std::size_t>(std::ceil((xmax - xmin + 2 * pad) / h)) + 1;
  const auto ht = static_cast<std::size_t>(std::ceil((ymax - ymin + 2 * pad) / h)) + 1;
  if (static_cast<double>(w) * static_cast<double>(ht) > 4e8) {
    throw InputError(InputError::Kind::InvalidArgument, "raster grid too large");
  }
  out.width = w;
  out.height = ht;

  // 0 = uncovered and deep, 1 = covered, 2 = visited, 3 = uncovered within
  // kShallow cells of a disk. Every bounded component of the true complement
  // contains a point at least its depth away from the cloud; the thin cusps
  // where two disk boundaries cross digitize into isolated shallow cells.
  constexpr double kShallow = 2.0;
  std::vector<std::uint8_t> grid(w * ht, 0);
  const double r2 = alpha * alpha;
  const double reach = alpha + kShallow * h;
  const double reach2 = reach * reach;
  for (const auto& p : pts) {
    const auto i0 = static_cast<std::ptrdiff_t>(std::floor((p.x - reach - x0) / h));
    const auto i1 = static_cast<std::ptrdiff_t>(std::ceil((p.x + reach - x0) / h));
    const auto j0 = static_cast<std::ptrdiff_t>(std::floor((p.y - reach - y0) / h));
    const auto j1 = static_cast<std::ptrdiff_t>(std::ceil((p.y + reach - y0) / h));
    for (std::ptrdiff_t j = std::max<std::ptrdiff_t>(j0, 0); j <= std::min<std::ptrdiff_t>(j1, ht - 1); ++j) {
      const double dy = y0 + (static_cast<double>(j) + 0.5) * h - p.y;
      for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(i0, 0); i <= std::min<std::ptrdiff_t>(i1, w - 1); ++i) {
        const double dx = x0 + (static_cast<double>(i) + 0.5) * h - p.x;
        const double d2 = dx * dx + dy * dy;
        std::uint8_t& cell = grid[static_cast<std::size_t>(j) * w + static_cast<std::size_t>(i)];
        if (d2 <= r2) {
          cell = 1;
        } else if (d2 <= reach2 && cell == 0) {
          cell = 3;
        }
      }
    }
  }

  std::vector<std::size_t> stack;
  // Marks the component of `seed` visited; returns whether it has a deep cell.
  auto flood = [&](std::size_t seed) {
    bool deep = grid[seed] == 0;
    grid[seed] = 2;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      const std::size_t i = c % w, j = c / w;
      auto visit = [&](std::size_t n) {
        if (grid[n] == 0 || grid[n] == 3) {
          deep = deep || grid[n] == 0;
          grid[n] = 2;
          stack.push_back(n);
        }
      };
      if (i > 0) visit(c - 1);
      if (i + 1 < w) visit(c + 1);
      if (j > 0) visit(c - w);
      if (j + 1 < ht) visit(c + w);
    }
    return deep;
  };
  auto open = [&](std::size_t c) { return grid[c] == 0 || grid[c] == 3; };
  for (std::size_t i = 0; i < w; ++i) {
    if (open(i)) flood(i);
    if (open((ht - 1) * w + i)) flood((ht - 1) * w + i);
  }
  for (std::size_t j = 0; j < ht; ++j) {
    if (open(j * w)) flood(j * w);
    if (open(j * w + w - 1)) flood(j * w + w - 1);
  }
  for (std::size_t c = 0; c < grid.size(); ++c) {
    if (open(c) && flood(c)) ++out.holes;
  }
  return out;
}

std::vector<RasterProbe> raster_spot_checks(const Cloud& cloud, const Triangulation& tri, const Diagram& d,
                                            std::size_t count, std::uint64_t seed) {
  const Staircase stairs = staircase(d);
  const AlphaFiltration f = alpha_filtration(tri);
  std::vector<double> critical;
  for (const auto& s : f.simplices) {
    if (s.dim > 0) critical.push_back(s.value);
  }
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

  const double lo = stairs.empty() ? 0.0 : stairs.lo();
  const double hi = stairs.empty() ? critical.back() : stairs.hi();
  double xmin = cloud[0].x, xmax = cloud[0].x, ymin = cloud[0].y, ymax = cloud[0].y;
  for (const auto& p : cloud.points()) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double extent = std::max(xmax - xmin, ymax - ymin);
  constexpr double kMaxCells = 4e7;
  constexpr double kMarginCells = 3.5;

  struct Gap {
    double alpha, resolution, length;
  };
  std::vector<Gap> gaps;
  for (std::size_t i = 0; i + 1 < critical.size(); ++i) {
    const double a = critical[i], b = critical[i + 1];
    if (a < lo || b > hi) continue;
    const double alpha = 0.5 * (a + b);
    const double h = std::min(alpha / 10.5, 0.5 * (b - a) / kMarginCells);
    const double side = (extent + 4.0 * alpha) / h;
    if (side * side > kMaxCells) continue;
    gaps.push_back({alpha, 1.0 / h, b - a});
  }

  std::mt19937_64 rng(seed);
  std::vector<RasterProbe> probes;
  while (probes.size() < count && !gaps.empty()) {
    std::vector<double> weights;
    for (const auto& g : gaps) weights.push_back(g.length);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const std::size_t k = pick(rng);
    const Gap g = gaps[k];
    gaps.erase(gaps.begin() + static_cast<std::ptrdiff_t>(k));
    const RasterCount rc = raster_hole_count(cloud, g.alpha, g.resolution);
    probes.push_back({g.alpha, g.resolution, stairs.count_at(g.alpha), rc.holes});
  }
  return probes;
}

EquivalenceReport verify_equivalence(const Cloud& cloud, std::uint64_t seed, double tolerance) {
  EquivalenceReport report;
  const Triangulation tri = triangulate(cloud);
  const std::vector<EdgeId> order = edges_sorted_desc(tri);
  const Diagram fast = sweep(tri, order).diagram.off_diagonal();
  const Diagram oracle = reduce_boundary_matrix(alpha_filtration(tri)).off_diagonal();
  report.fast_pairs = fast.size();
  report.oracle_pairs = oracle.size();

  if (fast.size() != oracle.size()) {
    std::ostringstream msg;
    msg << "pair count differs: sweep " << fast.size() << ", reduction " << oracle.size();
    report.mismatches.push_back(msg.str());
  } else {
    for (std::size_t i = 0; i < fast.size(); ++i) {
      const double dev = std::max(std::abs(fast[i].birth - oracle[i].birth), std::abs(fast[i].death - oracle[i].death));
      report.max_deviation = std::max(report.max_deviation, dev);
      if (dev > tolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "pair " << i << ": sweep " << fast[i] << ", reduction " << oracle[i];
        report.mismatches.push_back(msg.str());
      }
    }
  }

  const bool pairs_equal = report.mismatches.empty();
  for (const auto& probe : raster_spot_checks(cloud, tri, fast, 5, seed)) {
    ++report.raster_checks;
    if (probe.expected == probe.observed) {
      ++report.raster_agreements;
    } else {
      std::ostringstream msg;
      msg << "raster at alpha " << probe.alpha << ": staircase " << probe.expected << ", raster " << probe.observed;
      report.mismatches.push_back(msg.str());
    }
  }
  report.equal = pairs_equal;
  return report;
}

}  // namespace hoctop
