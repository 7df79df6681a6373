#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hoctop/dual_forest.hpp"
#include "hoctop/errors.hpp"
#include "hoctop/samplers.hpp"

using namespace hoctop;

TEST_CASE("fresh forest") {
  DualForest f(3);
  CHECK(f.size() == 4);
  CHECK(f.node(kExternalNode).birth == kInfiniteScale);
  CHECK_FALSE(f.is_gray(kExternalNode));
  for (NodeId v = 1; v < 4; ++v) {
    CHECK(f.is_gray(v));
    CHECK(f.find_root(v) == v);
  }
  CHECK(node_of(kExternalFace) == kExternalNode);
  CHECK(node_of(0) == 1);
}

TEST_CASE("init marks acute triangles white") {
  const Triangulation eq = triangulate(fixtures::equilateral());
  const DualForest f = DualForest::init(eq);
  CHECK(f.node(1).birth == doctest::Approx(2.0 / std::sqrt(3.0)));
  const DualForest sq = DualForest::init(triangulate(fixtures::square()));
  CHECK(sq.is_gray(1));
  CHECK(sq.is_gray(2));
}

TEST_CASE("linking operations") {
  DualForest f(4);
  f.link_two_gray(1, 2, 3.0);
  CHECK(f.find_root(2) == 1);
  CHECK(f.node(1).birth == 3.0);
  CHECK(f.node(2).birth == 3.0);
  CHECK(f.node(1).weight == 1);

  f.link_gray_to_white(3, 1);
  CHECK(f.find_root(3) == 1);
  CHECK(f.node(3).birth == 3.0);
  CHECK(f.node(1).weight == 2);

  f.set_birth(4, 5.0);
  // tree at 1 is heavier, so it absorbs 4 and keeps the older birth
  const PersistencePair p = f.merge_white(4, 1, 2.0);
  CHECK(p == PersistencePair{2.0, 3.0});
  CHECK(f.find_root(4) == 1);
  CHECK(f.node(1).birth == 5.0);
  CHECK(f.node(1).weight == 3);
  CHECK(f.links_added() == 3);

  std::size_t steps = 99;
  CHECK(f.find_root(1, steps) == 1);
  CHECK(steps == 0);
  f.find_root(4, steps);
  CHECK(steps == 1);
}

TEST_CASE("equal weights: the second root becomes the parent") {
  DualForest f(2);
  f.set_birth(1, 1.0);
  f.set_birth(2, 2.0);
  const PersistencePair p = f.merge_white(1, 2, 0.5);
  CHECK(p == PersistencePair{0.5, 1.0});
  CHECK(f.find_root(1) == 2);
  CHECK(f.node(2).birth == 2.0);
}

TEST_CASE("misuse is a contract violation") {
  DualForest f(3);
  f.link_two_gray(1, 2, 1.0);
  CHECK_THROWS_AS(f.link_two_gray(1, 3, 1.0), ContractViolation);   // 1 is white
  CHECK_THROWS_AS(f.link_gray_to_white(2, 1), ContractViolation);   // 2 is not a root
  CHECK_THROWS_AS(f.merge_white(1, 1, 0.5), ContractViolation);
  CHECK_THROWS_AS(f.link_gray_to_white(3, 3), ContractViolation);
}

TEST_CASE("square sweep trace") {
  const Triangulation tri = triangulate(fixtures::square());
  const SweepResult r = sweep(tri, edges_sorted_desc(tri), {.record_trace = true});
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].kind == SweepCase::TwoGray);
  CHECK(r.trace[0].alpha == doctest::Approx(std::sqrt(2.0)));
  CHECK(r.trace[1].kind == SweepCase::WhiteWhite);
  REQUIRE(r.trace[1].pair);
  CHECK(r.trace[1].pair->birth == 1.0);
  CHECK(r.trace[1].pair->death == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(r.links == 2);
  CHECK(r.edges_processed == 2);
}

TEST_CASE("equilateral sweep") {
  const Diagram d = run_hoctop(fixtures::equilateral());
  REQUIRE(d.size() == 1);
  CHECK(d[0].birth == 1.0);
  CHECK(d[0].death == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("find depth stays logarithmic") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Triangulation tri = triangulate(uniform_cloud(2000, seed));
    const SweepResult r = sweep(tri, edges_sorted_desc(tri));
    const double k = static_cast<double>(r.triangles);
    CHECK(r.stats.max_find_steps <= static_cast<std::size_t>(std::ceil(std::log2(k + 1))) + 1);
    CHECK(r.links == r.triangles);
    std::size_t total = 0;
    for (auto c : r.stats.case_counts) total += c;
    CHECK(total == r.edges_processed);
    CHECK(r.stats.case_counts[3] == r.pairs_in_sweep_order.size());
  }
}
