#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "hoctop/analytics.hpp"
#include "hoctop/dual_forest.hpp"
#include "hoctop/samplers.hpp"

using namespace hoctop;

namespace {

double linf(const PersistencePair& a, const PersistencePair& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Exhaustive matching over all bijections of A + diag(B) with B + diag(A).
double bottleneck_brute_force(const Diagram& da, const Diagram& db) {
  const auto a = da.off_diagonal(), b = db.off_diagonal();
  const std::size_t m = a.size() + b.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  auto cost = [&](std::size_t i, std::size_t j) {
    const bool real_i = i < a.size(), real_j = j < b.size();
    if (real_i && real_j) return linf(a[i], b[j]);
    if (real_i) return a[i].persistence() / 2;
    if (real_j) return b[j].persistence() / 2;
    return 0.0;
  };
  double best = INFINITY;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < m; ++i) worst = std::max(worst, cost(i, perm[i]));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return m == 0 ? 0.0 : best;
}

Diagram random_diagram(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<PersistencePair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = u(rng);
    pairs.push_back({b, b + u(rng)});
  }
  return Diagram(std::move(pairs));
}

}  // namespace

TEST_CASE("figure-eight staircase and probabilities") {
  const Diagram d = run_hoctop(fixtures::figure_eight());
  const Staircase s = staircase(d);
  REQUIRE(s.breakpoints.size() == 3);
  CHECK(s.breakpoints[0] == doctest::Approx(1.5));
  CHECK(s.breakpoints[1] == doctest::Approx(2.0));
  CHECK(s.breakpoints[2] == doctest::Approx(fixtures::kFigureEightDeath));
  CHECK(s.counts == std::vector<std::size_t>{1, 2});
  CHECK(s.count_at(1.0) == 0);
  CHECK(s.count_at(1.7) == 1);
  CHECK(s.count_at(2.2) == 2);
  CHECK(s.count_at(2.8) == 0);

  const HoleProbabilityTable t = hole_probabilities(d);
  const double range = fixtures::kFigureEightDeath - 1.5;
  CHECK(t.probability(1) == doctest::Approx(0.5 / range));
  CHECK(t.probability(2) == doctest::Approx((fixtures::kFigureEightDeath - 2.0) / range));
  CHECK(t.probability(3) == 0.0);
  const auto ranked = t.ranked();
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].first == 2);
  CHECK(ranked[1].first == 1);
}

TEST_CASE("empty diagram") {
  const HoleProbabilityTable t = hole_probabilities(Diagram{});
  CHECK(t.empty_range);
  CHECK(t.probability(0) == 1.0);
  CHECK(infer_hole_count(Diagram{}).holes == 0);
  CHECK(staircase(Diagram({{1.0, 1.0}})).empty());
  CHECK(barcode(Diagram{}).bars.empty());
}

TEST_CASE("probabilities sum to one and rank ties by fewer holes") {
  const Diagram d({{0.0, 1.0}, {1.0, 2.0}, {2.0, 4.0}, {2.5, 3.0}});
  const HoleProbabilityTable t = hole_probabilities(d);
  double sum = 0.0;
  for (const auto& [k, p] : t.entries) sum += p;
  CHECK(sum == doctest::Approx(1.0));
  // one hole on [0, 2.5) and [3, 4), two on [2.5, 3)
  CHECK(t.probability(1) == doctest::Approx(3.5 / 4.0));
  CHECK(t.probability(2) == doctest::Approx(0.5 / 4.0));

  const HoleProbabilityTable tie = hole_probabilities(Diagram({{0.0, 2.0}, {1.0, 3.0}}));
  // 1 hole on [0,1) and [2,3), 2 holes on [1,2): 2/3 vs 1/3
  CHECK(tie.ranked().front().first == 1);
  const HoleProbabilityTable even = hole_probabilities(Diagram({{0.0, 2.0}, {1.0, 2.0}}));
  CHECK(even.ranked()[0].first == 1);
  CHECK(even.ranked()[1].first == 2);
}

TEST_CASE("barcode lists persistences in descending order") {
  const Barcode b = barcode(Diagram({{0.0, 1.0}, {2.0, 5.0}, {1.0, 1.5}, {3.0, 3.0}}));
  CHECK(b.bars == std::vector<double>{3.0, 1.0, 0.5});
}

TEST_CASE("hole count inference at the widest gap") {
  CHECK(infer_hole_count(Diagram({{1.0, 1.4}})).holes == 1);
  CHECK(infer_hole_count(run_hoctop(fixtures::figure_eight())).holes == 2);
  std::vector<PersistencePair> pairs{{0.0, 5.0}, {0.1, 4.9}, {0.2, 5.3}};
  for (int i = 0; i < 40; ++i) pairs.push_back({0.01 * i, 0.01 * i + 0.05 + 0.001 * i});
  const HoleCountInference inf = infer_hole_count(Diagram(pairs));
  CHECK(inf.holes == 3);
  CHECK(inf.gap == doctest::Approx(4.8 - 0.089));
}

TEST_CASE("bottleneck examples") {
  const Diagram a({{0.0, 2.0}});
  CHECK(bottleneck_distance(a, a) == 0.0);
  CHECK(bottleneck_distance(a, Diagram{}) == doctest::Approx(1.0));
  CHECK(bottleneck_distance(a, Diagram({{0.0, 3.0}})) == doctest::Approx(1.0));
  CHECK(bottleneck_distance(Diagram({{0.0, 1.0}}), Diagram({{5.0, 6.0}})) == doctest::Approx(0.5));
  CHECK(bottleneck_distance(Diagram{}, Diagram{}) == 0.0);
  // zero-persistence pairs are invisible
  CHECK(bottleneck_distance(Diagram({{0.0, 2.0}, {1.0, 1.0}}), a) == 0.0);
}

TEST_CASE("bottleneck agrees with exhaustive matching") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Diagram a = random_diagram(rng, rng() % 4);
    const Diagram b = random_diagram(rng, rng() % 4);
    CHECK(bottleneck_distance(a, b) == doctest::Approx(bottleneck_brute_force(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("bottleneck is a pseudometric") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Diagram a = random_diagram(rng, 1 + rng() % 12);
    const Diagram b = random_diagram(rng, 1 + rng() % 12);
    const Diagram c = random_diagram(rng, 1 + rng() % 12);
    const double ab = bottleneck_distance(a, b), ba = bottleneck_distance(b, a);
    CHECK(ab == ba);
    CHECK(ab >= 0.0);
    CHECK(bottleneck_distance(a, a) == 0.0);
    CHECK(bottleneck_distance(a, c) <= ab + bottleneck_distance(b, c) + 1e-12);
  }
}

TEST_CASE("moving every point by at most eps moves the diagram by at most eps") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Cloud cloud = uniform_cloud(200, seed);
    for (double eps : {0.001, 0.01}) {
      std::uniform_real_distribution<double> angle(0.0, 2 * M_PI), radius(0.0, eps);
      std::vector<Point2> moved;
      for (const auto& p : cloud.points()) {
        const double t = angle(rng), r = radius(rng);
        moved.push_back({p.x + r * std::cos(t), p.y + r * std::sin(t)});
      }
      const double d = bottleneck_distance(run_hoctop(cloud), run_hoctop(Cloud::from_points(moved)));
      CHECK(d <= eps + 1e-9);
    }
  }
}
