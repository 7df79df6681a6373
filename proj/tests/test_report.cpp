#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "hoctop/errors.hpp"
#include "hoctop/report.hpp"
#include "hoctop/samplers.hpp"
#include "hoctop/svg.hpp"

using namespace hoctop;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("square report") {
  const RunReport r = make_report(fixtures::square(), "square");
  CHECK(r.points == 4);
  CHECK(r.triangles == 2);
  CHECK(r.edges == 5);
  REQUIRE(r.diagram.size() == 1);
  CHECK(r.diagram[0].birth == 1.0);
  CHECK(r.diagram[0].death == doctest::Approx(std::sqrt(2.0)));
  CHECK(r.probabilities.probability(1) == 1.0);
  CHECK(r.inference.holes == 1);
  CHECK(r.timings.triangulate_ms >= 0.0);
  CHECK(r.timings.triangulate_ms + r.timings.sort_ms + r.timings.sweep_ms <= r.timings.total_ms + 1e-9);
}

TEST_CASE("JSON output round-trips exactly") {
  for (const Cloud& c : {fixtures::square(), fixtures::figure_eight(), uniform_cloud(300, 5)}) {
    const RunReport r = make_report(c, "cloud");
    CHECK(report_from_json(report_to_json(r)) == r);
  }
  CHECK_THROWS_AS(report_from_json("{}"), InputError);
}

TEST_CASE("pair CSV round-trips to 15 digits") {
  const Diagram d = run_hoctop(uniform_cloud(300, 6));
  std::stringstream s;
  write_pairs_csv(s, d);
  CHECK(s.str().rfind("birth,death\n", 0) == 0);
  const Diagram back = parse_pairs_csv(s);
  REQUIRE(back.size() == d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(back[i].birth == doctest::Approx(d[i].birth).epsilon(1e-14));
    CHECK(back[i].death == doctest::Approx(d[i].death).epsilon(1e-14));
  }
  std::stringstream bad("birth,death\n2,1\n");
  CHECK_THROWS_AS(parse_pairs_csv(bad), InputError);
}

TEST_CASE("cloud CSV parsing") {
  std::stringstream in("# a comment\nx,y\n0,0\n\n1.5, 2\n  -3e-1 ,4\n");
  const auto pts = parse_cloud_csv(in);
  REQUIRE(pts.size() == 3);
  CHECK(pts[2] == Point2{-0.3, 4.0});

  std::stringstream bad("0,0\n1,1\n1,oops\n");
  try {
    parse_cloud_csv(bad);
    FAIL("malformed row accepted");
  } catch (const InputError& e) {
    CHECK(e.kind() == InputError::Kind::Malformed);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::stringstream three("1,2,3\n");
  CHECK_THROWS_AS(parse_cloud_csv(three), InputError);

  std::stringstream out;
  const std::vector<Point2> pts2{{0.1, 1.0 / 3.0}};
  write_cloud_csv(out, pts2);
  CHECK(parse_cloud_csv(out) == pts2);
}

TEST_CASE("plots") {
  const RunReport f8 = make_report(fixtures::figure_eight(), "f8");
  const RunReport copy = f8;
  const auto plots = render_plots(f8, {PlotKind::Diagram, PlotKind::Barcode, PlotKind::Staircase});
  CHECK(f8 == copy);
  REQUIRE(plots.size() == 3);
  for (const auto& [kind, svg] : plots) {
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("no holes") == std::string::npos);
  }
  CHECK(count_of(plots.at(PlotKind::Diagram), "<circle") == 2);
  CHECK(count_of(plots.at(PlotKind::Diagram), "stroke-dasharray") == 1);  // the diagonal
  CHECK(count_of(plots.at(PlotKind::Barcode), "stroke-width=\"4\"") == 2);
  // two steps: 4 polyline vertices
  const std::string& stairs = plots.at(PlotKind::Staircase);
  const auto start = stairs.find("points=\"");
  REQUIRE(start != std::string::npos);
  const std::string pts = stairs.substr(start + 8, stairs.find('"', start + 8) - start - 8);
  CHECK(count_of(pts, ",") == 4);

  const RunReport empty = make_report(Cloud::from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0.5, 0.5}}), "x");
  CHECK(empty.diagram.off_diagonal().empty());
  for (const auto& [kind, svg] : render_plots(empty, {PlotKind::Diagram, PlotKind::Barcode, PlotKind::Staircase})) {
    CHECK(svg.find("no holes") != std::string::npos);
  }
  CHECK(plot_name(PlotKind::Staircase) == "staircase");
}
