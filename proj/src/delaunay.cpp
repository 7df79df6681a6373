#include "hoctop/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "hoctop/errors.hpp"

namespace hoctop {

Cloud Cloud::from_points(std::vector<Point2> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!is_finite(points[i])) {
      throw InputError(InputError::Kind::NonFinite,
                       "point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  std::vector<std::uint32_t> order(points.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return points[a] < points[b]; });
  std::vector<char> keep(points.size(), 1);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (points[order[i]] == points[order[i - 1]]) keep[order[i]] = 0;
  }
  Cloud cloud;
  cloud.points_.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (keep[i]) cloud.points_.push_back(points[i]);
  }
  cloud.duplicates_removed_ = points.size() - cloud.points_.size();
  return cloud;
}

int perturbed_incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                       std::array<std::uint32_t, 4> ranks) {
  const int s = incircle_sign(a, b, c, d);
  if (s != 0) return s;
  // Lift every point by an infinitesimal ordered by rank; the highest-ranked
  // point's cofactor decides. Four distinct cocircular points have no three
  // collinear, so the first cofactor is never zero.
  int top = 0;
  for (int i = 1; i < 4; ++i) {
    if (ranks[i] > ranks[top]) top = i;
  }
  switch (top) {
    case 3: return -1;
    case 2: return orient2d_sign(a, b, d);
    case 1: return orient2d_sign(a, d, c);
    default: return orient2d_sign(d, b, c);
  }
}

namespace {

// Hilbert index of (x, y) on a 2^16 x 2^16 grid.
std::uint64_t hilbert_index(std::uint32_t x, std::uint32_t y) {
  std::uint64_t d = 0;
  for (std::uint32_t s = 1u << 15; s > 0; s >>= 1) {
    const std::uint32_t rx = (x & s) ? 1 : 0;
    const std::uint32_t ry = (y & s) ? 1 : 0;
    d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - x;
        y = s - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

// Biased randomized insertion order: a random permutation split into rounds
// of doubling size, each round sorted along a Hilbert curve.
std::vector<VertexId> insertion_order(std::span<const Point2> pts, std::uint64_t seed) {
  const std::size_t n = pts.size();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& p : pts) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double span = std::max(xmax - xmin, ymax - ymin);
  const double scale = span > 0.0 ? 65535.0 / span : 0.0;
  std::vector<std::uint64_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto gx = static_cast<std::uint32_t>((pts[i].x - xmin) * scale);
    const auto gy = static_cast<std::uint32_t>((pts[i].y - ymin) * scale);
    key[i] = hilbert_index(std::min(gx, 65535u), std::min(gy, 65535u));
  }

  std::size_t end = n;
  while (end > 0) {
    const std::size_t begin = end > 64 ? end / 2 : 0;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
              order.begin() + static_cast<std::ptrdiff_t>(end),
              [&](VertexId a, VertexId b) { return key[a] < key[b]; });
    end = begin;
  }
  return order;
}

}  // namespace

// Bowyer-Watson insertion over a triangulation closed by ghost triangles that
// share a single vertex at infinity.
class TriangulationBuilder {
 public:
  explicit TriangulationBuilder(std::span<const Point2> pts)
      : pts_(pts), inf_(static_cast<VertexId>(pts.size())) {}

  Triangulation build(std::uint64_t seed);

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  struct Tri {
    std::array<VertexId, 3> v;
    std::array<std::uint32_t, 3> nb;
  };

  bool is_ghost(const Tri& t) const { return t.v[0] == inf_ || t.v[1] == inf_ || t.v[2] == inf_; }

  std::uint32_t new_tri(VertexId a, VertexId b, VertexId c) {
    std::uint32_t id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
    } else {
      id = static_cast<std::uint32_t>(tris_.size());
      tris_.emplace_back();
      visit_.push_back(0);
      in_cavity_.push_back(0);
    }
    tris_[id] = Tri{{a, b, c}, {kNone, kNone, kNone}};
    return id;
  }

  void start(VertexId a, VertexId b, VertexId c);
  std::uint32_t locate(VertexId d);
  bool cavity_test(std::uint32_t t, VertexId d) const;
  void insert(VertexId d);
  Triangulation extract() const;

  std::span<const Point2> pts_;
  VertexId inf_;
  std::vector<Tri> tris_;
  std::vector<std::uint32_t> free_;
  std::vector<std::uint32_t> visit_;
  std::vector<char> in_cavity_;
  std::uint32_t stamp_ = 0;
  std::uint32_t last_ = 0;
  std::uint64_t walk_state_ = 0x9e3779b97f4a7c15ull;

  std::vector<std::uint32_t> cavity_;
  std::vector<std::uint32_t> stack_;
  struct BoundaryEdge {
    VertexId a, b;
    std::uint32_t outer;
  };
  std::vector<BoundaryEdge> boundary_;
  std::vector<std::uint32_t> first_of_;
};

void TriangulationBuilder::start(VertexId a, VertexId b, VertexId c) {
  if (orient2d_sign(pts_[a], pts_[b], pts_[c]) < 0) std::swap(b, c);
  const std::uint32_t t = new_tri(a, b, c);
  // Ghosts across the edges opposite a, b, c.
  const std::uint32_t ga = new_tri(c, b, inf_);
  const std::uint32_t gb = new_tri(a, c, inf_);
  const std::uint32_t gc = new_tri(b, a, inf_);
  tris_[t].nb = {ga, gb, gc};
  // Ghost (c, b, inf): opposite c is (b, inf) shared with gc; opposite b is
  // (inf, c) shared with gb.
  tris_[ga].nb = {gc, gb, t};
  tris_[gb].nb = {ga, gc, t};
  tris_[gc].nb = {gb, ga, t};
  last_ = t;
}

bool TriangulationBuilder::cavity_test(std::uint32_t t, VertexId d) const {
  const Tri& tri = tris_[t];
  const Point2& p = pts_[d];
  for (int k = 0; k < 3; ++k) {
    if (tri.v[k] != inf_) continue;
    const Point2& a = pts_[tri.v[(k + 1) % 3]];
    const Point2& b = pts_[tri.v[(k + 2) % 3]];
    const int o = orient2d_sign(a, b, p);
    if (o != 0) return o > 0;
    // Collinear with the hull edge: inside only on the open segment.
    return (a < p && p < b) || (b < p && p < a);
  }
  return perturbed_incircle(pts_[tri.v[0]], pts_[tri.v[1]], pts_[tri.v[2]], p,
                            {tri.v[0], tri.v[1], tri.v[2], d}) > 0;
}

std::uint32_t TriangulationBuilder::locate(VertexId d) {
  const Point2& p = pts_[d];
  std::uint32_t t = last_;
  if (is_ghost(tris_[t])) {
    for (int k = 0; k < 3; ++k) {
      if (tris_[t].v[k] == inf_) t = tris_[t].nb[k];
    }
  }
  for (;;) {
    const Tri& tri = tris_[t];
    if (is_ghost(tri)) return t;
    walk_state_ ^= walk_state_ << 13;
    walk_state_ ^= walk_state_ >> 7;
    walk_state_ ^= walk_state_ << 17;
    const int r = static_cast<int>(walk_state_ % 3);
    bool moved = false;
    for (int k = 0; k < 3; ++k) {
      const int i = (r + k) % 3;
      if (orient2d_sign(pts_[tri.v[(i + 1) % 3]], pts_[tri.v[(i + 2) % 3]], p) < 0) {
        t = tri.nb[i];
        moved = true;
        break;
      }
    }
    if (!moved) return t;
  }
}

void TriangulationBuilder::insert(VertexId d) {
  const std::uint32_t start_tri = locate(d);
  expects(cavity_test(start_tri, d), "located triangle is not in the insertion cavity");

  ++stamp_;
  cavity_.clear();
  boundary_.clear();
  stack_.clear();
  stack_.push_back(start_tri);
  visit_[start_tri] = stamp_;
  in_cavity_[start_tri] = 1;
  while (!stack_.empty()) {
    const std::uint32_t t = stack_.back();
    stack_.pop_back();
    cavity_.push_back(t);
    for (int i = 0; i < 3; ++i) {
      const std::uint32_t n = tris_[t].nb[i];
      if (visit_[n] != stamp_) {
        visit_[n] = stamp_;
        in_cavity_[n] = cavity_test(n, d) ? 1 : 0;
        if (in_cavity_[n]) stack_.push_back(n);
      }
    }
  }
  for (std::uint32_t t : cavity_) {
    for (int i = 0; i < 3; ++i) {
      const std::uint32_t n = tris_[t].nb[i];
      if (!in_cavity_[n]) {
        boundary_.push_back({tris_[t].v[(i + 1) % 3], tris_[t].v[(i + 2) % 3], n});
      }
    }
  }
  for (std::uint32_t t : cavity_) free_.push_back(t);

  for (const auto& e : boundary_) {
    const std::uint32_t t = new_tri(e.a, e.b, d);
    tris_[t].nb[2] = e.outer;
    Tri& outer = tris_[e.outer];
    for (int j = 0; j < 3; ++j) {
      const VertexId x = outer.v[(j + 1) % 3];
      const VertexId y = outer.v[(j + 2) % 3];
      if (x == e.b && y == e.a) outer.nb[j] = t;
    }
    first_of_[e.a] = t;
    visit_[t] = 0;
    in_cavity_[t] = 0;
  }
  for (const auto& e : boundary_) {
    const std::uint32_t t = first_of_[e.a];
    const std::uint32_t next = first_of_[e.b];
    tris_[t].nb[0] = next;
    tris_[next].nb[1] = t;
    if (e.a != inf_ && e.b != inf_) last_ = t;
  }
}

Triangulation TriangulationBuilder::build(std::uint64_t seed) {
  const std::size_t n = pts_.size();
  const std::vector<VertexId> order = insertion_order(pts_, seed);

  std::size_t third = n;
  for (std::size_t i = 2; i < n; ++i) {
    if (orient2d_sign(pts_[order[0]], pts_[order[1]], pts_[order[i]]) != 0) {
      third = i;
      break;
    }
  }
  if (third == n) throw InputError(InputError::Kind::AllCollinear, "all points are collinear");

  tris_.reserve(2 * n + 8);
  first_of_.assign(n + 1, kNone);
  start(order[0], order[1], order[third]);
  for (std::size_t i = 2; i < n; ++i) {
    if (i != third) insert(order[i]);
  }
  return extract();
}

Triangulation TriangulationBuilder::extract() const {
  Triangulation out;
  out.vertices_.assign(pts_.begin(), pts_.end());

  std::vector<std::uint32_t> face_of(tris_.size(), kExternalFace);
  std::vector<char> live(tris_.size(), 1);
  for (std::uint32_t f : free_) live[f] = 0;
  for (std::uint32_t t = 0; t < tris_.size(); ++t) {
    if (live[t] && !is_ghost(tris_[t])) {
      face_of[t] = static_cast<FaceId>(out.triangles_.size());
      out.triangles_.push_back(Triangle{tris_[t].v});
    }
  }
  out.edges_.reserve(out.triangles_.size() * 3 / 2 + 3);
  for (std::uint32_t t = 0; t < tris_.size(); ++t) {
    if (face_of[t] == kExternalFace) continue;
    for (int i = 0; i < 3; ++i) {
      const FaceId other = face_of[tris_[t].nb[i]];
      if (other != kExternalFace && other < face_of[t]) continue;
      VertexId a = tris_[t].v[(i + 1) % 3];
      VertexId b = tris_[t].v[(i + 2) % 3];
      if (a > b) std::swap(a, b);
      out.edges_.push_back(Edge{{a, b}, {face_of[t], other}, distance(pts_[a], pts_[b])});
      if (other == kExternalFace) ++out.hull_edges_;
    }
  }
  return out;
}

Triangulation triangulate(const Cloud& cloud, const TriangulateOptions& options) {
  if (cloud.size() < 3) {
    throw InputError(InputError::Kind::TooFewPoints,
                     "need at least 3 distinct points, got " + std::to_string(cloud.size()));
  }
  TriangulationBuilder builder(cloud.points());
  return builder.build(options.seed);
}

std::vector<EdgeId> edges_sorted_desc(const Triangulation& tri) {
  const auto edges = tri.edges();
  std::vector<EdgeId> ids(edges.size());
  std::iota(ids.begin(), ids.end(), 0u);
  std::sort(ids.begin(), ids.end(), [&](EdgeId i, EdgeId j) {
    const Edge& a = edges[i];
    const Edge& b = edges[j];
    if (a.length != b.length) return a.length > b.length;
    const int c = compare_squared_lengths(tri.point(a.endpoints[0]), tri.point(a.endpoints[1]),
                                          tri.point(b.endpoints[0]), tri.point(b.endpoints[1]));
    if (c != 0) return c > 0;
    return a.endpoints < b.endpoints;
  });
  return ids;
}

}  // namespace hoctop
