#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hoctop/geometry.hpp"

namespace hoctop {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Face id of the unbounded region outside the convex hull.
inline constexpr FaceId kExternalFace = std::numeric_limits<FaceId>::max();

/// An ordered point cloud with exact duplicates removed. The first occurrence
/// of each point is kept and the input order is otherwise preserved.
class Cloud {
 public:
  Cloud() = default;

  /// Throws InputError(NonFinite) on NaN or infinite coordinates.
  static Cloud from_points(std::vector<Point2> points);

  std::span<const Point2> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point2& operator[](std::size_t i) const { return points_[i]; }
  std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

 private:
  std::vector<Point2> points_;
  std::size_t duplicates_removed_ = 0;
};

struct Triangle {
  std::array<VertexId, 3> v;  // counter-clockwise
};

struct Edge {
  std::array<VertexId, 2> endpoints;  // ascending
  std::array<FaceId, 2> faces;        // faces[1] == kExternalFace on the hull
  double length;

  bool on_hull() const noexcept { return faces[1] == kExternalFace; }
};

/// Delaunay triangulation with edge-to-face adjacency. Immutable once built.
class Triangulation {
 public:
  std::span<const Point2> vertices() const noexcept { return vertices_; }
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t hull_edge_count() const noexcept { return hull_edges_; }

  const Point2& point(VertexId v) const { return vertices_[v]; }
  std::array<Point2, 3> corners(FaceId f) const {
    const auto& t = triangles_[f].v;
    return {vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]};
  }

 private:
  friend class TriangulationBuilder;

  std::vector<Point2> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::size_t hull_edges_ = 0;
};

struct TriangulateOptions {
  /// Seeds the randomized insertion order. The output does not depend on it:
  /// cocircular ties are broken by a symbolic perturbation over vertex ids.
  std::uint64_t seed = 0x5eed;
};

/// Randomized incremental Delaunay triangulation.
/// Throws InputError(TooFewPoints) for fewer than three points and
/// InputError(AllCollinear) when no triangle exists.
Triangulation triangulate(const Cloud& cloud, const TriangulateOptions& options = {});

/// Edge ids ordered by length descending; ties broken by exact squared length,
/// then by ascending endpoint pair.
std::vector<EdgeId> edges_sorted_desc(const Triangulation& tri);

/// Perturbed incircle sign used by the triangulator: never zero for four
/// distinct points with a, b, c counter-clockwise. Ranks order the symbolic
/// perturbation (higher rank = larger lift perturbation).
int perturbed_incircle(const Point2& a, const Point2& b, const Point2& c, const Point2& d,
                       std::array<std::uint32_t, 4> ranks);

}  // namespace hoctop
