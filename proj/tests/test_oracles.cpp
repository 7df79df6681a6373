#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hoctop/dual_forest.hpp"
#include "hoctop/errors.hpp"
#include "hoctop/oracles.hpp"
#include "hoctop/samplers.hpp"

using namespace hoctop;

namespace {

std::vector<double> values_of_dim(const AlphaFiltration& f, int dim) {
  std::vector<double> out;
  for (const auto& s : f.simplices) {
    if (s.dim == dim) out.push_back(s.value);
  }
  return out;
}

}  // namespace

TEST_CASE("square filtration") {
  const AlphaFiltration f = alpha_filtration(fixtures::square());
  CHECK(f.vertex_count == 4);
  CHECK(values_of_dim(f, 0) == std::vector<double>(4, 0.0));
  const auto edges = values_of_dim(f, 1);
  REQUIRE(edges.size() == 5);
  for (int i = 0; i < 4; ++i) CHECK(edges[i] == 1.0);
  CHECK(edges[4] == doctest::Approx(std::sqrt(2.0)));
  // right triangles enter with their hypotenuse
  const auto tris = values_of_dim(f, 2);
  REQUIRE(tris.size() == 2);
  CHECK(tris[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(tris[1] == doctest::Approx(std::sqrt(2.0)));
  for (std::size_t i = 1; i < f.simplices.size(); ++i) CHECK(f.simplices[i - 1].value <= f.simplices[i].value);
}

TEST_CASE("equilateral filtration") {
  const AlphaFiltration f = alpha_filtration(fixtures::equilateral());
  const auto tris = values_of_dim(f, 2);
  REQUIRE(tris.size() == 1);
  CHECK(tris[0] == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("obtuse triangle enters with its longest edge") {
  const AlphaFiltration f = alpha_filtration(Cloud::from_points({{0, 0}, {4, 0}, {2, 0.5}}));
  const auto tris = values_of_dim(f, 2);
  REQUIRE(tris.size() == 1);
  CHECK(tris[0] == 2.0);
}

TEST_CASE("square reduction") {
  const ReductionResult r = reduce_filtration(alpha_filtration(fixtures::square()));
  CHECK(r.h0_essential == 1);
  CHECK(r.h1_essential == 0);
  REQUIRE(r.h1.size() == 2);
  const Diagram off = r.h1.off_diagonal();
  REQUIRE(off.size() == 1);
  CHECK(off[0].birth == 1.0);
  CHECK(off[0].death == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("every triangle kills one cycle") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Triangulation tri = triangulate(uniform_cloud(60, seed));
    const ReductionResult r = reduce_filtration(alpha_filtration(tri));
    const std::size_t n = tri.vertices().size(), e = tri.edges().size();
    CHECK(r.h1.size() == e - n + 1);
    CHECK(r.h1.size() == tri.triangles().size());
    CHECK(r.h0_essential == 1);
  }
}

TEST_CASE("sweep equals reduction") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const EquivalenceReport rep = verify_equivalence(uniform_cloud(40 + 10 * seed, seed), seed);
    CHECK(rep.equal);
    CHECK(rep.max_deviation <= 1e-12);
  }
  std::vector<Point2> grid;
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) grid.push_back({static_cast<double>(i), static_cast<double>(j)});
  }
  const EquivalenceReport g = verify_equivalence(Cloud::from_points(grid), 1);
  CHECK(g.equal);
  CHECK(g.fast_pairs == 36);  // one hole per unit cell, alive on [1/2, sqrt(2)/2)
}

TEST_CASE("raster counts on fixtures") {
  const Cloud sq = fixtures::square();
  CHECK(raster_hole_count(sq, 0.9, 100).holes == 0);
  CHECK(raster_hole_count(sq, 1.2, 100).holes == 1);
  CHECK(raster_hole_count(sq, 1.5, 100).holes == 0);
  const Cloud f8 = fixtures::figure_eight();
  CHECK(raster_hole_count(f8, 1.7, 200).holes == 1);
  CHECK(raster_hole_count(f8, 2.2, 200).holes == 2);
  CHECK(raster_hole_count(f8, 2.8, 200).holes == 0);
  CHECK(raster_hole_count(sq, 1.2, 5).too_coarse);
  CHECK_FALSE(raster_hole_count(sq, 1.2, 100).too_coarse);
  CHECK_THROWS_AS(raster_hole_count(sq, 0.0, 100), InputError);
}

TEST_CASE("raster spot checks agree with the staircase") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Cloud c = uniform_cloud(40, seed);
    const Triangulation tri = triangulate(c);
    const auto probes = raster_spot_checks(c, tri, run_hoctop(c), 3, seed);
    CHECK(probes.size() == 3);
    for (const auto& p : probes) CHECK(p.expected == p.observed);
  }
}
