// lcsp: solve line-constrained placement instances and generate random ones.
//
//   lcsp solve INSTANCE [--method binsearch|envelope] [--lists naive|sweep]
//              [--split halves|one-off] [--eps E] [--verify] [--plot F.svg] [--out F.json]
//   lcsp gen KIND N [--seed S] [--p P] [--range R] [--L L] [--K K] [--out F.json]
//
// Exit codes: 0 ok, 1 usage, 2 unreadable or schema-invalid instance,
// 3 solver error, 4 unwritable --plot / --out path.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gen.hpp"
#include "instance.hpp"
#include "svg.hpp"

namespace {

using namespace lcsp;
using namespace lcsp::cli;

constexpr int kUsage = 1;
constexpr int kSchema = 2;
constexpr int kSolver = 3;
constexpr int kOutput = 4;

// Results are reported to 12 significant digits: the solvers are accurate to
// about eps = 1e-9 anyway, and it keeps golden files stable against last-bit noise.
double r12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double out = std::strtod(buf, nullptr);
  return out == 0.0 ? 0.0 : out;
}

json point_json(Point q) { return json::array({r12(q.x), r12(q.y)}); }

struct Failure {
  int code;
  std::string name;
  std::string detail;
};

json failure_json(const Failure& f) {
  json j;
  j["ok"] = false;
  j["error"] = {{"name", f.name}, {"detail", f.detail}};
  return j;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) return false;
  os << text;
  os.flush();
  return static_cast<bool>(os);
}

struct SolveOptions {
  std::string instance;
  std::string method = "envelope";
  std::string lists = "naive";
  std::string split = "halves";
  double eps = 1e-9;
  bool verify = false;
  std::string plot;
  std::string out;
  bool method_set = false, lists_set = false, split_set = false;
};

// Records oracle comparisons; "within" covers the checks that actually ran.
class Verification {
 public:
  void check(json entry, double value, double reference, double tolerance) {
    const double delta = std::abs(value - reference);
    entry["value"] = r12(reference);
    // Deltas below 1e-12 are rounding noise.
    entry["delta"] = r12(std::round(delta * 1e12) / 1e12);
    entry["tolerance"] = tolerance;
    entry["within"] = delta <= tolerance;
    within_ = within_ && delta <= tolerance;
    ++checked_;
    checks_.push_back(std::move(entry));
  }
  void skip(json entry, const std::string& why) {
    entry["skipped"] = why;
    checks_.push_back(std::move(entry));
  }
  json to_json() const {
    return {{"checks", checks_}, {"checked", checked_}, {"within", within_}};
  }

 private:
  json checks_ = json::array();
  int checked_ = 0;
  bool within_ = true;
};

// Grid oracles cost N distance evaluations per sample.
constexpr double kGridBudget = 1e7;
constexpr double kGridStep = 1e-3;
constexpr double kGridTolerance = 2e-3;

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  const auto dt = std::chrono::steady_clock::now() - t0;
  return std::round(std::chrono::duration<double, std::milli>(dt).count() * 1000.0) / 1000.0;
}

struct Solved {
  json result;
  std::vector<Ball> balls;
  Segment line;
};

Solved solve_center(const Instance& inst, const SolveOptions& opt, const Tolerance& tol) {
  const NormP norm(inst.p);
  const AxisFrame frame = transform_to_axis(*inst.constraint, norm);
  const double L = frame.length();
  std::vector<Segment> segs;
  segs.reserve(inst.segments.size());
  for (const Segment& s : inst.segments) segs.push_back(frame.forward(s));

  const bool obnoxious = inst.problem == Problem::Obnoxious;
  const bool envelope = obnoxious && opt.method == "envelope";
  const SplitStrategy split = opt.split == "one-off" ? SplitStrategy::OneOff : SplitStrategy::Halves;

  const auto t0 = std::chrono::steady_clock::now();
  PlacedCircle c;
  std::size_t pieces = 0;
  if (!obnoxious) {
    c = min_enclosing(segs, L, norm, tol);
  } else if (envelope) {
    const LowerEnvelope le = compute_lower_envelope(segs, L, norm, tol, split);
    pieces = le.size();
    c = largest_empty_from_envelope(le, segs, norm, tol);
  } else {
    c = max_empty_binsearch(segs, L, norm, tol);
  }
  const double ms = elapsed_ms(t0);
  const Point centre = frame.inverse(Point{c.cx, 0.0});

  json r;
  r["problem"] = problem_name(inst.problem);
  r["p"] = inst.p;
  r["n"] = inst.segments.size();
  r["L"] = r12(L);
  r["method"] = obnoxious ? opt.method : "binsearch";
  if (envelope) {
    r["split"] = opt.split;
    r["envelope_pieces"] = pieces;
  }
  r["eps"] = opt.eps;
  r["radius"] = r12(c.radius);
  r["center_x"] = r12(c.cx);
  r["center"] = point_json(centre);

  if (opt.verify) {
    Verification v;
    const json grid_entry = {{"oracle", "grid"}, {"step", kGridStep}};
    const double samples = std::floor(L / kGridStep) + 2.0;
    if (static_cast<double>(segs.size()) * samples > kGridBudget) {
      v.skip(grid_entry, "N * grid samples exceeds 1e7");
    } else if (segs.empty()) {
      v.skip(grid_entry, "no segments");
    } else {
      const oracle::GridSpec grid(kGridStep, Interval::closed(0.0, L));
      const PlacedCircle g = obnoxious ? oracle::grid_obnoxious_center(segs, norm, grid, tol)
                                       : oracle::grid_one_center(segs, norm, grid, tol);
      v.check(grid_entry, c.radius, g.radius, kGridTolerance);
    }
    if (obnoxious) {
      const PlacedCircle other =
          envelope ? max_empty_binsearch(segs, L, norm, tol)
                   : largest_empty_from_envelope(compute_lower_envelope(segs, L, norm, tol), segs, norm, tol);
      v.check({{"oracle", envelope ? "binsearch" : "envelope"}}, c.radius, other.radius, 2.0 * opt.eps);
    }
    r["verify"] = v.to_json();
  }
  r["wall_time_ms"] = ms;

  Solved out{std::move(r), {}, *inst.constraint};
  out.balls.push_back({centre, c.radius});
  return out;
}

Solved solve_k_cover(const Instance& inst, const SolveOptions& opt, const Tolerance& tol) {
  const NormP norm(inst.p);
  const AggSpec spec(inst.q, inst.agg);
  const PointSet ps(inst.points);

  auto run = [&](const std::string& lists) {
    const CandidateLists cl = lists == "sweep" ? build_lists_sweep(ps, norm, tol) : build_lists_naive(ps, norm, tol);
    return dp_solve(ps, inst.K, spec, cl, norm, tol);
  };
  const auto t0 = std::chrono::steady_clock::now();
  const CoverSolution sol = run(opt.lists);
  const double ms = elapsed_ms(t0);

  json r;
  r["problem"] = problem_name(inst.problem);
  r["p"] = inst.p;
  r["n"] = inst.points.size();
  r["K"] = inst.K;
  r["q"] = inst.q;
  r["agg"] = inst.agg == Aggregate::Sum ? "sum" : "max";
  r["lists"] = opt.lists;
  r["eps"] = opt.eps;
  r["objective"] = r12(sol.objective);
  json circles = json::array(), centres = json::array(), groups = json::array();
  Solved out;
  for (std::size_t k = 0; k < sol.circles.size(); ++k) {
    const PlacedCircle& c = sol.circles[k];
    circles.push_back(json::array({r12(c.cx), r12(c.radius)}));
    centres.push_back(point_json({c.cx, 0.0}));
    std::vector<std::size_t> g;
    for (std::size_t i = sol.intervals[k].first; i <= sol.intervals[k].second; ++i) g.push_back(ps.original(i));
    std::sort(g.begin(), g.end());
    groups.push_back(g);
    out.balls.push_back({{c.cx, 0.0}, c.radius});
  }
  r["circles"] = circles;
  r["centers"] = centres;
  r["groups"] = groups;

  if (opt.verify) {
    Verification v;
    if (ps.size() <= 10 && inst.K <= 4) {
      const auto oracle = oracle::set_partition_oracle(ps, inst.K, spec, norm);
      v.check({{"oracle", "set-partition"}, {"contiguous", oracle.contiguous}}, sol.objective, oracle.objective, 1e-6);
    } else {
      v.skip({{"oracle", "set-partition"}}, "needs N <= 10 and K <= 4");
    }
    if (norm.euclidean()) {
      const std::string other = opt.lists == "sweep" ? "naive" : "sweep";
      v.check({{"oracle", other + "-lists"}}, sol.objective, run(other).objective, 1e-6);
    }
    r["verify"] = v.to_json();
  }
  r["wall_time_ms"] = ms;

  double lo = 0.0, hi = 0.0;
  if (!ps.empty()) {
    lo = ps[0].x;
    hi = ps[ps.size() - 1].x;
  }
  out.result = std::move(r);
  out.line = {{lo, 0.0}, {hi, 0.0}};
  return out;
}

std::optional<Failure> usage_conflicts(const Instance& inst, const SolveOptions& opt) {
  const std::string kind = problem_name(inst.problem);
  if (opt.method_set && inst.problem != Problem::Obnoxious) {
    return Failure{kUsage, "UsageError", "--method applies to obnoxious-center only, instance is " + kind};
  }
  if (opt.lists_set && inst.problem != Problem::KCover) {
    return Failure{kUsage, "UsageError", "--lists applies to k-cover only, instance is " + kind};
  }
  if (opt.split_set && !(inst.problem == Problem::Obnoxious && opt.method == "envelope")) {
    return Failure{kUsage, "UsageError", "--split applies to obnoxious-center with --method envelope only"};
  }
  return std::nullopt;
}

int emit_failure(const Failure& f) {
  std::cout << failure_json(f).dump(2) << "\n";
  return f.code;
}

int run_solve(const SolveOptions& opt) {
  std::ifstream in(opt.instance, std::ios::binary);
  if (!in) return emit_failure({kSchema, "UnreadableInput", "cannot open " + opt.instance});
  Instance inst;
  try {
    inst = parse_instance(json::parse(in));
  } catch (const json::parse_error& e) {
    return emit_failure({kSchema, "SchemaViolation", std::string("(root): invalid JSON: ") + e.what()});
  } catch (const SchemaError& e) {
    return emit_failure({kSchema, "SchemaViolation", e.what()});
  }
  if (auto conflict = usage_conflicts(inst, opt)) return emit_failure(*conflict);

  Solved solved;
  try {
    const Tolerance tol(opt.eps);
    solved = inst.problem == Problem::KCover ? solve_k_cover(inst, opt, tol) : solve_center(inst, opt, tol);
  } catch (const Error& e) {
    return emit_failure({kSolver, std::string(e.name()), e.detail()});
  }

  if (!opt.plot.empty()) {
    std::ostringstream svg;
    SvgPlot(inst, solved.balls, solved.line).write(svg);
    if (!write_text(opt.plot, svg.str())) return emit_failure({kOutput, "UnwritableOutput", "cannot write " + opt.plot});
  }
  json env;
  env["ok"] = true;
  env["result"] = std::move(solved.result);
  const std::string text = env.dump(2) + "\n";
  if (opt.out.empty()) {
    std::cout << text;
  } else if (!write_text(opt.out, text)) {
    return emit_failure({kOutput, "UnwritableOutput", "cannot write " + opt.out});
  }
  return 0;
}

int run_gen(const GenOptions& gen, const std::string& out) {
  std::ostringstream os;
  write_instance(os, generate(gen));
  if (out.empty()) {
    std::cout << os.str();
  } else if (!write_text(out, os.str())) {
    return emit_failure({kOutput, "UnwritableOutput", "cannot write " + out});
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-constrained center and K-cover solver"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Solve an instance file");
  s->add_option("instance", solve.instance, "Instance JSON file")->required();
  auto* m = s->add_option("--method", solve.method, "obnoxious-center solver")
                ->check(CLI::IsMember({"binsearch", "envelope"}));
  auto* l = s->add_option("--lists", solve.lists, "k-cover candidate list builder")
                ->check(CLI::IsMember({"naive", "sweep"}));
  auto* sp = s->add_option("--split", solve.split, "envelope split strategy")
                 ->check(CLI::IsMember({"halves", "one-off"}));
  s->add_option("--eps", solve.eps, "bisection tolerance")->check(CLI::PositiveNumber);
  s->add_flag("--verify", solve.verify, "also run the matching oracle and report the delta");
  s->add_option("--plot", solve.plot, "write an SVG plot");
  s->add_option("--out", solve.out, "write the JSON result here instead of stdout");

  GenOptions gen;
  std::string kind, gen_out;
  auto* g = app.add_subcommand("gen", "Generate a random instance");
  g->add_option("kind", kind, "one-center | obnoxious-center | k-cover")
      ->required()
      ->check(CLI::IsMember({"one-center", "obnoxious-center", "obnoxious", "k-cover"}));
  g->add_option("n", gen.n, "number of segments or points")->required()->check(CLI::PositiveNumber);
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("--p", gen.p, "norm exponent")->check(CLI::Range(1.0, 1e300));
  g->add_option("--range", gen.range, "coordinates uniform in [-range, range]^2")->check(CLI::PositiveNumber);
  g->add_option("--L", gen.L, "constraint length")->check(CLI::NonNegativeNumber);
  g->add_option("--K", gen.K, "circle budget (k-cover)")->check(CLI::PositiveNumber);
  g->add_option("--out", gen_out, "write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return emit_failure({kUsage, "UsageError", e.what()});
  }

  if (s->parsed()) {
    solve.method_set = m->count() > 0;
    solve.lists_set = l->count() > 0;
    solve.split_set = sp->count() > 0;
    return run_solve(solve);
  }
  gen.kind = kind == "k-cover" ? Problem::KCover : kind == "one-center" ? Problem::OneCenter : Problem::Obnoxious;
  return run_gen(gen, gen_out);
}
