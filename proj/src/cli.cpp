#include "hoctop/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "hoctop/analytics.hpp"
#include "hoctop/bench.hpp"
#include "hoctop/errors.hpp"
#include "hoctop/oracles.hpp"
#include "hoctop/report.hpp"
#include "hoctop/samplers.hpp"
#include "hoctop/svg.hpp"

namespace hoctop {
namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;

Cloud load_cloud(const std::string& path) {
  Cloud cloud = Cloud::from_points(read_cloud_csv(path));
  if (cloud.duplicates_removed() > 0) {
    std::cerr << "warning: " << cloud.duplicates_removed() << " duplicate point(s) in '" << path << "' ignored\n";
  }
  return cloud;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError(InputError::Kind::InvalidArgument, "cannot write '" + path.string() + "'");
  out << text;
}

struct ComputeArgs {
  std::string input;
  bool json = false;
  bool csv = false;
  std::string svg_dir;
};

int run_compute(const ComputeArgs& a) {
  const RunReport report = make_report(load_cloud(a.input), a.input);
  if (a.json) {
    std::cout << report_to_json(report) << '\n';
  } else if (a.csv) {
    write_pairs_csv(std::cout, report.diagram);
  } else {
    print_report(std::cout, report);
  }
  if (!a.svg_dir.empty()) {
    const std::filesystem::path dir(a.svg_dir);
    std::filesystem::create_directories(dir);
    const auto plots = render_plots(report, {PlotKind::Diagram, PlotKind::Barcode, PlotKind::Staircase});
    for (const auto& [kind, svg] : plots) write_file(dir / (plot_name(kind) + ".svg"), svg);
  }
  return kOk;
}

struct SynthArgs {
  std::string shape;
  std::size_t spokes = 6;
  double radius = 1.0;
  std::size_t rows = 5;
  std::size_t cols = 5;
  double cell = 1.0;
  std::string poly;
  std::size_t points = 1000;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_synth(const SynthArgs& a) {
  std::optional<ShapeSpec> spec;
  if (a.shape == "wheel") {
    spec.emplace(WheelShape{a.spokes, a.radius});
  } else if (a.shape == "lattice") {
    spec.emplace(LatticeShape{a.rows, a.cols, a.cell});
  } else {
    if (a.poly.empty()) throw InputError(InputError::Kind::InvalidArgument, "polygon needs --poly FILE");
    spec.emplace(read_polyline_csv(a.poly));
  }
  if (!(a.noise >= 0.0)) throw InputError(InputError::Kind::InvalidArgument, "--noise must be nonnegative");
  const Cloud cloud = sample_shape(*spec, a.points, a.noise, a.seed);
  if (a.out.empty() || a.out == "-") {
    write_cloud_csv(std::cout, cloud.points());
  } else {
    std::ofstream out(a.out);
    if (!out) throw InputError(InputError::Kind::InvalidArgument, "cannot write '" + a.out + "'");
    out << "# " << spec->to_json() << " points=" << a.points << " noise=" << a.noise << " seed=" << a.seed << '\n';
    write_cloud_csv(out, cloud.points());
  }
  return kOk;
}

struct VerifyArgs {
  std::size_t n = 100;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
};

int run_verify(const VerifyArgs& a) {
  if (a.n < 3) throw InputError(InputError::Kind::TooFewPoints, "verify needs --n >= 3");
  std::size_t equal = 0, checks = 0, agreements = 0;
  for (std::size_t t = 0; t < a.trials; ++t) {
    const EquivalenceReport r = verify_equivalence(uniform_cloud(a.n, a.seed + t), a.seed + t);
    if (r.equal) ++equal;
    checks += r.raster_checks;
    agreements += r.raster_agreements;
    for (const auto& m : r.mismatches) std::cerr << "trial " << t << ": " << m << '\n';
  }
  std::cout << equal << '/' << a.trials << " oracle-equal\n";
  std::cout << agreements << '/' << checks << " raster agreements\n";
  return equal == a.trials ? kOk : kInternalError;
}

int run_infer(const std::string& path) {
  const Diagram d = run_hoctop(load_cloud(path));
  const HoleCountInference inf = infer_hole_count(d);
  const HoleProbabilityTable table = hole_probabilities(d);
  std::cout << "holes " << inf.holes << " (gap " << std::setprecision(6) << inf.gap << ")\n";
  for (const auto& [k, p] : table.ranked()) {
    std::cout << "  P(" << k << ") = " << std::fixed << std::setprecision(4) << p << std::defaultfloat << '\n';
  }
  return kOk;
}

int run_bottleneck(const std::string& a, const std::string& b) {
  std::cout << std::setprecision(15) << bottleneck_distance(read_pairs_csv(a), read_pairs_csv(b)) << '\n';
  return kOk;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Counts persistent holes in planar point clouds."};
  app.require_subcommand(1);
  std::function<int()> action;

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Persistence pairs, hole probabilities and timings for a cloud");
  c->add_option("cloud", compute.input, "CSV file of x,y rows")->required();
  auto* json_flag = c->add_flag("--json", compute.json, "Print the report as JSON");
  c->add_flag("--csv", compute.csv, "Print the pairs as birth,death CSV")->excludes(json_flag);
  c->add_option("--svg-dir", compute.svg_dir, "Write diagram, barcode and staircase SVGs here");
  c->callback([&] { action = [&] { return run_compute(compute); }; });

  SynthArgs synth;
  auto* s = app.add_subcommand("synth", "Noisy sample of a wheel, lattice or polygon");
  s->add_option("shape", synth.shape, "wheel | lattice | polygon")
      ->required()
      ->check(CLI::IsMember({"wheel", "lattice", "polygon"}));
  s->add_option("--spokes", synth.spokes, "Wheel spokes")->capture_default_str();
  s->add_option("--radius", synth.radius, "Wheel radius")->capture_default_str();
  s->add_option("--rows", synth.rows, "Lattice rows")->capture_default_str();
  s->add_option("--cols", synth.cols, "Lattice columns")->capture_default_str();
  s->add_option("--cell", synth.cell, "Lattice cell side")->capture_default_str();
  s->add_option("--poly", synth.poly, "CSV of polygon vertices");
  s->add_option("--points", synth.points, "Number of points")->required();
  s->add_option("--noise", synth.noise, "Displacement radius")->capture_default_str();
  s->add_option("--seed", synth.seed, "Random seed")->capture_default_str();
  s->add_option("--out", synth.out, "Output CSV (stdout when omitted)");
  s->callback([&] { action = [&] { return run_synth(synth); }; });

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Compare the sweep to the reduction and raster oracles");
  v->add_option("--n", verify.n, "Points per cloud")->capture_default_str();
  v->add_option("--trials", verify.trials, "Number of clouds")->capture_default_str();
  v->add_option("--seed", verify.seed, "First seed")->capture_default_str();
  v->callback([&] { action = [&] { return run_verify(verify); }; });

  std::string infer_input;
  auto* i = app.add_subcommand("infer", "Most likely number of holes");
  i->add_option("cloud", infer_input, "CSV file of x,y rows")->required();
  i->callback([&] { action = [&] { return run_infer(infer_input); }; });

  BenchOptions bench_opts;
  auto* b = app.add_subcommand("bench", "Scaling table over uniform clouds");
  b->add_option("--max-n", bench_opts.max_n, "Largest cloud size")->capture_default_str();
  b->add_option("--repeats", bench_opts.repeats, "Runs per size")->capture_default_str();
  b->add_option("--seed", bench_opts.seed, "Random seed")->capture_default_str();
  b->callback([&] {
    action = [&] {
      print_bench(std::cout, bench(bench_opts));
      return kOk;
    };
  });

  std::string diagram_a, diagram_b;
  auto* d = app.add_subcommand("bottleneck", "Bottleneck distance between two pair CSV files");
  d->add_option("first", diagram_a, "birth,death CSV")->required();
  d->add_option("second", diagram_b, "birth,death CSV")->required();
  d->callback([&] { action = [&] { return run_bottleneck(diagram_a, diagram_b); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ContractViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace hoctop
