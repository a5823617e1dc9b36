// Command-line front end.
//
//   geocover discretize --points F --shape G [--algorithm A] [--solver S]
//                       [--epsilon E] [--perturbation G] [--seed N] --out OUT [--svg SVG]
//   geocover selfcheck
//
// Exit status: 0 ok, 1 other failure, 2 unreadable input, 3 unresolved
// degeneracy, 4 instance above a solver or oracle cap.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "geocover.hpp"
#include "geocover/io.hpp"

namespace {

using namespace geocover;

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse: return 2;
    case ErrorCode::DegeneracyUnresolved: return 3;
    case ErrorCode::CapExceeded: return 4;
    default: return 1;
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Args {
  std::string points, shape, out, svg;
  Algorithm algorithm = Algorithm::Auto;
  Solver solver = Solver::None;
  double epsilon = Tolerance{}.epsilon;
  double perturbation = Tolerance{}.perturbation;
  std::uint64_t seed = 0;
};

int run_discretize(const Args& a) {
  const std::vector<Point> points = read_points(a.points);
  const ShapeSpec shape = read_shape(a.shape);
  DiscretizeOptions opt;
  opt.algorithm = a.algorithm;
  opt.solver = a.solver;
  opt.tol = Tolerance{a.epsilon, a.perturbation};
  opt.seed = a.seed;
  const DiscretizeResult res = discretize(points, shape, opt);
  const std::string json = dump_result(res);
  std::string svg;
  if (!a.svg.empty()) svg = emit_svg(res, points, shape);
  write_file(a.out, json);
  if (!a.svg.empty()) write_file(a.svg, svg);
  std::printf("%zu canonical translates", res.translates.size());
  if (res.solution) std::printf(", %s cover of size %zu", to_string(res.solution->solver).c_str(),
                                res.solution->cardinality());
  std::printf("\n");
  return 0;
}

int run_selfcheck() {
  bool ok = true;
  for (std::size_t a = 1; a <= 4; ++a) {
    const SpikedPair sp = spiked_pair(a);
    const PointInverseSet inv = build_inverses(sp.points, sp.prototype);
    const std::size_t direct = count_boundary_crossings(inv.inverses[0], inv.inverses[1]);
    const PolygonReport rep = report_canonical_simple_polygon(sp.points, sp.prototype);
    const bool good = direct == sp.expected_crossings && rep.intersections == sp.expected_crossings;
    ok = ok && good;
    std::printf("spiked pair a=%zu m=%zu crossings=%zu sweep=%zu expected=%zu %s\n", a, sp.prototype.vertex_count(),
                direct, rep.intersections, sp.expected_crossings, good ? "ok" : "MISMATCH");
  }
  for (std::size_t a : {3, 5, 8}) {
    const CircleGrid g = dense_circle_grid(a);
    const DiskSweepReport rep = report_canonical_disks(g.centers, g.radius);
    std::size_t large = 0;
    for (const auto& t : rep.translates)
      if (t.covered.size() >= 2 * a) ++large;
    const bool good = large >= a * a;
    ok = ok && good;
    std::printf("circle grid a=%zu n=%zu canonical=%zu with>=2a=%zu expected>=%zu %s\n", a, g.centers.size(),
                rep.translates.size(), large, a * a, good ? "ok" : "MISMATCH");
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical translates and set cover for planar geometric cover problems"};
  app.require_subcommand(1);
  Args args;

  const std::map<std::string, Algorithm> algorithms{{"sweep", Algorithm::Sweep},     {"traverse", Algorithm::Traverse},
                                                    {"polygon", Algorithm::Polygon}, {"oracle", Algorithm::Oracle},
                                                    {"auto", Algorithm::Auto}};
  const std::map<std::string, Solver> solvers{
      {"none", Solver::None}, {"greedy", Solver::Greedy}, {"exact", Solver::Exact}};

  auto* disc = app.add_subcommand("discretize", "report the canonical translates of a point set");
  disc->add_option("--points", args.points, "points file (.json or .csv)")->required();
  disc->add_option("--shape", args.shape, "prototype shape file (.json)")->required();
  disc->add_option("--algorithm", args.algorithm, "sweep, traverse, polygon, oracle or auto")
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
  disc->add_option("--solver", args.solver, "none, greedy or exact")
      ->transform(CLI::CheckedTransformer(solvers, CLI::ignore_case));
  disc->add_option("--epsilon", args.epsilon, "comparison tolerance")->check(CLI::PositiveNumber);
  disc->add_option("--perturbation", args.perturbation, "perturbation magnitude")->check(CLI::PositiveNumber);
  disc->add_option("--seed", args.seed, "perturbation seed");
  disc->add_option("--out", args.out, "result JSON path")->required();
  disc->add_option("--svg", args.svg, "optional SVG plot path");

  auto* self = app.add_subcommand("selfcheck", "run the extremal constructions and print the measured counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (self->parsed()) return run_selfcheck();
    if (disc->parsed()) return run_discretize(args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
