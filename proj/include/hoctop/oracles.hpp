#pragma once

// Slow, independent ground truth for the sweep: an explicit filtration of the
// Delaunay complex reduced over Z/2, and a pixel-level hole counter for the
// union of disks.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hoctop/delaunay.hpp"
#include "hoctop/diagram.hpp"

namespace hoctop {

struct FilteredSimplex {
  int dim;
  std::array<VertexId, 3> vertices;  // unused slots hold kNoVertex
  double value;
};

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Simplices ordered by (value, dimension). Vertices enter at 0, edges at half
/// their length, acute triangles at their circumradius and other triangles at
/// half their longest edge.
struct AlphaFiltration {
  std::size_t vertex_count = 0;
  std::vector<FilteredSimplex> simplices;
};

AlphaFiltration alpha_filtration(const Triangulation& tri);
AlphaFiltration alpha_filtration(const Cloud& cloud);

struct ReductionResult {
  Diagram h1;                        // (edge value, triangle value), zero pairs included
  std::size_t h0_essential = 0;      // components never merged
  std::size_t h1_essential = 0;      // cycles never filled
};

/// Standard column reduction of the boundary matrix over Z/2.
ReductionResult reduce_filtration(const AlphaFiltration& f);

/// H1 pairs of the filtration. Throws ContractViolation if a cycle survives.
Diagram reduce_boundary_matrix(const AlphaFiltration& f);

struct RasterCount {
  std::size_t holes = 0;
  bool too_coarse = false;  // cell size not below alpha / 10
  std::size_t width = 0;
  std::size_t height = 0;
};

/// Rasterizes the union of disks of radius alpha on a grid with `resolution`
/// cells per unit, padded by 2 alpha, and counts the bounded 4-connected
/// components of the uncovered cells that reach more than two cells beyond
/// every disk.
RasterCount raster_hole_count(const Cloud& cloud, double alpha, double resolution);

/// One staircase-versus-raster comparison.
struct RasterProbe {
  double alpha;
  double resolution;
  std::size_t expected;
  std::size_t observed;
};

/// Picks `count` scales inside the staircase range of `d`, each in a gap of
/// the filtration values of `tri`, and compares the staircase to the raster.
std::vector<RasterProbe> raster_spot_checks(const Cloud& cloud, const Triangulation& tri, const Diagram& d,
                                            std::size_t count, std::uint64_t seed);

struct EquivalenceReport {
  bool equal = false;  // pairs only; raster results are counted separately
  double max_deviation = 0.0;
  std::size_t fast_pairs = 0;    // off-diagonal
  std::size_t oracle_pairs = 0;  // off-diagonal
  std::size_t raster_checks = 0;
  std::size_t raster_agreements = 0;
  std::vector<std::string> mismatches;
};

/// Off-diagonal pairs equal as multisets within `tolerance`, plus 5 raster
/// spot-checks of the staircase.
EquivalenceReport verify_equivalence(const Cloud& cloud, std::uint64_t seed = 0, double tolerance = 1e-9);

}  // namespace hoctop
