#pragma once

// Seeded noisy samples of planar 1-complexes with a known number of holes.

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hoctop/delaunay.hpp"
#include "hoctop/geometry.hpp"

namespace hoctop {

/// Boundary of a regular polygon centred at the origin plus the radii to all
/// of its vertices. Has `spokes` holes.
struct WheelShape {
  std::size_t spokes = 6;
  double radius = 1.0;
};

/// Square grid of rows x cols cells with side `cell`, lower-left at the origin.
struct LatticeShape {
  std::size_t rows = 5;
  std::size_t cols = 5;
  double cell = 1.0;
};

/// Closed polyline through `points`.
struct PolygonShape {
  std::vector<Point2> points;
};

struct Segment {
  Point2 a, b;
};

class ShapeSpec {
 public:
  using Variant = std::variant<WheelShape, LatticeShape, PolygonShape>;

  ShapeSpec(Variant shape);  // NOLINT(google-explicit-constructor)

  const Variant& shape() const noexcept { return shape_; }
  std::string kind() const;

  /// The shape as a union of segments. Throws InputError on invalid specs.
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  double total_length() const noexcept { return total_length_; }

  /// Number of bounded components of the complement.
  std::size_t hole_count() const;

  std::string to_json() const;
  static ShapeSpec from_json(const std::string& text);

 private:
  Variant shape_;
  std::vector<Segment> segments_;
  double total_length_ = 0.0;
};

/// Reads "x,y" rows ('#' comments and an optional header allowed) as the
/// vertices of a closed polygon.
PolygonShape read_polyline_csv(const std::string& path);

/// `n` points at uniform arc-length positions, each displaced uniformly within
/// a disk of radius `noise`. Bit-identical for identical arguments.
Cloud sample_shape(const ShapeSpec& spec, std::size_t n, double noise, std::uint64_t seed);

/// `n` points uniform in the unit square.
Cloud uniform_cloud(std::size_t n, std::uint64_t seed);

/// Noise-free points at most `spacing` apart along every segment, including
/// all segment endpoints.
Cloud dense_sample(const ShapeSpec& spec, double spacing);

struct SampleQuality {
  double epsilon = 0.0;
  double coverage = 0.0;   // sup over the shape of distance to the cloud
  double deviation = 0.0;  // sup over the cloud of distance to the shape
};

/// Two-sided Hausdorff estimate; the shape is discretized ten times more
/// finely than the mean cloud spacing.
SampleQuality epsilon_of_sample(const Cloud& cloud, const ShapeSpec& spec);

struct FeatureSizes {
  double minhfs = 0.0;
  double maxhfs = 0.0;
};

/// Smallest and largest death among the persistent holes of a dense
/// noise-free sample.
FeatureSizes shape_feature_sizes(const ShapeSpec& spec);

/// True when minhfs > maxhfs / 2 + 4 epsilon.
bool hole_count_guaranteed(const FeatureSizes& sizes, double epsilon);

}  // namespace hoctop
