// heiskit command line: wires the constructions to the experiments and
// writes plot-ready comma tables plus a key-value run manifest next to each
// output (<out>.manifest.txt). Exit codes: 0 success, 1 validation/usage,
// 2 resource/budget, 3 numerical non-convergence.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "heiskit/curvature.hpp"
#include "heiskit/io.hpp"
#include "heiskit/kernels.hpp"
#include "heiskit/koch.hpp"
#include "heiskit/lifts.hpp"
#include "heiskit/measure.hpp"
#include "heiskit/parallel.hpp"
#include "heiskit/sio.hpp"
#include "heiskit/simd.hpp"

using namespace heiskit;

namespace {

struct CommonOpts {
  std::uint64_t seed = 2024;
  unsigned workers = 0;  // 0 = all available
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_out) {
  opts.out = default_out;
  cmd->add_option("--seed", opts.seed, "64-bit seed for every random draw");
  cmd->add_option("--workers", opts.workers, "worker threads (0 = all available)");
  cmd->add_option("--out", opts.out, "output table path");
}

// Angle expressions: "0.35", "pi", "pi/3", "2*pi/7".
double parse_angle(const std::string& text) {
  const auto fail = [&]() -> double {
    throw ValidationError("cannot parse angle expression: " + text);
  };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) return fail();

  const std::size_t pos = s.find("pi");
  const auto to_number = [&](const std::string& part) {
    try {
      std::size_t used = 0;
      const double v = std::stod(part, &used);
      if (used != part.size()) return fail();
      return v;
    } catch (const std::exception&) {
      return fail();
    }
  };
  if (pos == std::string::npos) return to_number(s);

  double numerator = 1.0;
  double denominator = 1.0;
  std::string head = s.substr(0, pos);
  std::string tail = s.substr(pos + 2);
  if (!head.empty()) {
    if (head.back() != '*') return fail();
    head.pop_back();
    numerator = to_number(head);
  }
  if (!tail.empty()) {
    if (tail.front() != '/') return fail();
    tail.erase(tail.begin());
    denominator = to_number(tail);
  }
  return numerator * M_PI / denominator;
}

KernelSpec parse_kernel(const std::string& text) {
  if (text == "b" || text == "B") return KernelSpec::b();
  const std::string prefix = "alpha:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      return KernelSpec::alpha(std::stod(text.substr(prefix.size())));
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("cannot parse kernel (expected \"b\" or \"alpha:<a>\"): " + text);
}

struct ScheduleOpts {
  double theta_c = 0.2;
  double theta_exp = 2.0;
  std::string theta;  // explicit constant angle; overrides the power law
};

void add_schedule(CLI::App* cmd, ScheduleOpts& opts) {
  cmd->add_option("--theta-c", opts.theta_c, "power-law angle coefficient");
  cmd->add_option("--theta-exp", opts.theta_exp, "power-law angle exponent");
  cmd->add_option("--theta", opts.theta,
                  "constant angle for every stage (e.g. \"pi/3\"); overrides the power law");
}

AngleSchedule make_schedule(const ScheduleOpts& opts, int stages_needed, Manifest& man) {
  if (!opts.theta.empty()) {
    const double theta = parse_angle(opts.theta);
    const AngleSchedule s = AngleSchedule::explicit_list(
        std::vector<double>(static_cast<std::size_t>(std::max(stages_needed, 1)), theta));
    man.set("schedule", s.describe());
    return s;
  }
  const AngleSchedule s = AngleSchedule::power_law(opts.theta_c, opts.theta_exp);
  man.set("schedule", s.describe());
  return s;
}

struct SourceOpts {
  std::string source = "koch";
  int stages = 3;
  int subdivisions = 1;
  int depth = 8;
  ScheduleOpts schedule;
  // Atom budget. Measure construction caches all pairwise distances, so the
  // default keeps the quadratic scan around a second; raise it deliberately.
  std::size_t budget = 16384;
};

void add_source(CLI::App* cmd, SourceOpts& opts) {
  cmd->add_option("--source", opts.source, "measure source: koch | cantor");
  cmd->add_option("--stages", opts.stages, "koch stage to materialize");
  cmd->add_option("--subdivisions", opts.subdivisions, "atoms per koch segment");
  cmd->add_option("--depth", opts.depth, "cantor depth");
  cmd->add_option("--budget", opts.budget, "atom budget for the measure");
  add_schedule(cmd, opts.schedule);
}

DiscreteMeasure build_source(const SourceOpts& opts, unsigned workers, Manifest& man) {
  man.set("source", opts.source);
  man.set("budget", static_cast<std::uint64_t>(opts.budget));
  if (opts.source == "koch") {
    if (opts.stages < 0) throw ValidationError("negative stage");
    if (opts.subdivisions < 1) throw ValidationError("need at least one subdivision");
    double atoms = static_cast<double>(opts.subdivisions);
    for (int i = 0; i < opts.stages; ++i) atoms *= 6.0;
    if (atoms > static_cast<double>(opts.budget)) {
      throw BudgetError("koch source would exceed the atom budget");
    }
    const AngleSchedule sched = make_schedule(opts.schedule, opts.stages, man);
    man.set("stages", static_cast<std::int64_t>(opts.stages));
    man.set("subdivisions", static_cast<std::int64_t>(opts.subdivisions));
    const PolygonStage stage = build_stage(opts.stages, sched, {0, 0}, {1, 0},
                                           kDefaultVertexBudget, workers);
    return measure_from_polyline(lift_stage(stage, 0.0), opts.subdivisions, workers);
  }
  if (opts.source == "cantor") {
    man.set("depth", static_cast<std::int64_t>(opts.depth));
    return measure_from_cantor(cantor_build(opts.depth, opts.budget), workers);
  }
  throw ValidationError("unknown source: " + opts.source);
}

void finish(const CommonOpts& common, Manifest& man, const std::string& table) {
  std::ofstream table_file(common.out, std::ios::binary);
  if (!table_file) throw ValidationError("cannot open output file: " + common.out);
  table_file << table;
  table_file.close();

  man.set("seed", common.seed);
  man.set("workers", static_cast<std::uint64_t>(common.workers));
  man.set("simd_backend", std::string(simd::active_backend().name));
  man.set("rows", static_cast<std::uint64_t>(
                      std::count(table.begin(), table.end(), '\n') - 1));
  std::ofstream manifest_file(common.out + ".manifest.txt", std::ios::binary);
  if (!manifest_file) {
    throw ValidationError("cannot open manifest file: " + common.out + ".manifest.txt");
  }
  man.write(manifest_file);
}

// ---- subcommands ----

void cmd_koch_build(CLI::App& app) {
  auto* cmd = app.add_subcommand("koch-build", "materialize a polygonal stage");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto opts = std::make_shared<SourceOpts>();
  add_common(cmd, *common, "koch-build.csv");
  cmd->add_option("--stages", opts->stages, "stage to materialize");
  cmd->add_option("--budget", opts->budget, "vertex budget");
  add_schedule(cmd, opts->schedule);
  cmd->callback([common, opts] {
    Manifest man;
    man.set("command", std::string("koch-build"));
    const AngleSchedule sched = make_schedule(opts->schedule, opts->stages, man);
    man.set("stages", static_cast<std::int64_t>(opts->stages));
    const PolygonStage stage =
        build_stage(opts->stages, sched, {0, 0}, {1, 0}, opts->budget, common->workers);
    man.set("segment_length", stage.segment_length);
    std::ostringstream table;
    write_stage(table, stage);
    finish(*common, man, table.str());
  });
}

void cmd_lift(CLI::App& app) {
  auto* cmd = app.add_subcommand("lift", "horizontal lift of a polygonal stage");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto opts = std::make_shared<SourceOpts>();
  auto z0 = std::make_shared<double>(0.0);
  add_common(cmd, *common, "lift.csv");
  cmd->add_option("--stages", opts->stages, "stage to materialize");
  cmd->add_option("--budget", opts->budget, "vertex budget");
  cmd->add_option("--z0", *z0, "lift base height");
  add_schedule(cmd, opts->schedule);
  cmd->callback([common, opts, z0] {
    Manifest man;
    man.set("command", std::string("lift"));
    const AngleSchedule sched = make_schedule(opts->schedule, opts->stages, man);
    man.set("stages", static_cast<std::int64_t>(opts->stages));
    man.set("z0", *z0);
    const PolygonStage stage =
        build_stage(opts->stages, sched, {0, 0}, {1, 0}, opts->budget, common->workers);
    const LiftedPolyline lifted = lift_stage(stage, *z0);

    std::vector<LiftedPointRecord> records(lifted.vertices.size());
    for (std::size_t i = 0; i < lifted.vertices.size(); ++i) {
      records[i].p = lifted.vertices[i];
      if (i + 1 < lifted.vertices.size()) {
        records[i].weight = dist(lifted.vertices[i + 1], lifted.vertices[i]);
        records[i].word = lifted.segment_word(i).str();
      }
    }
    std::ostringstream table;
    write_lifted_points(table, records);
    finish(*common, man, table.str());
  });
}

void cmd_regularity(CLI::App& app) {
  auto* cmd = app.add_subcommand("regularity", "Ahlfors ball-ratio audit");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto opts = std::make_shared<SourceOpts>();
  auto centers = std::make_shared<std::size_t>(64);
  auto radius_count = std::make_shared<int>(8);
  add_common(cmd, *common, "regularity.csv");
  add_source(cmd, *opts);
  cmd->add_option("--centers", *centers, "sampled ball centers");
  cmd->add_option("--radius-count", *radius_count, "dyadic radii, halving from the diameter");
  cmd->callback([common, opts, centers, radius_count] {
    Manifest man;
    man.set("command", std::string("regularity"));
    const DiscreteMeasure m = build_source(*opts, common->workers, man);
    const double floor = 4.0 * m.max_nearest_gap();
    std::vector<double> radii;
    for (double r = m.diameter();
         r >= floor && radii.size() < static_cast<std::size_t>(*radius_count); r *= 0.5) {
      radii.push_back(r);
    }
    if (radii.empty()) {
      throw ValidationError("regularity: no radius clears the discretization floor");
    }
    man.set("centers", static_cast<std::uint64_t>(*centers));
    man.set("radius_floor", floor);
    man.set("radii", static_cast<std::uint64_t>(radii.size()));
    const RegularityReport report =
        ahlfors_check(m, *centers, radii, floor, common->seed, common->workers);
    man.set("min_ratio", report.min_ratio);
    man.set("max_ratio", report.max_ratio);
    std::ostringstream table;
    write_regularity_report(table, report);
    finish(*common, man, table.str());
  });
}

void cmd_quadform(CLI::App& app) {
  auto* cmd = app.add_subcommand("quadform", "truncated quadratic form");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto opts = std::make_shared<SourceOpts>();
  auto kernel = std::make_shared<std::string>("alpha:4");
  auto epsilon = std::make_shared<double>(0.0);
  add_common(cmd, *common, "quadform.csv");
  add_source(cmd, *opts);
  cmd->add_option("--kernel", *kernel, "kernel: b | alpha:<a>");
  cmd->add_option("--epsilon", *epsilon, "truncation radius");
  cmd->callback([common, opts, kernel, epsilon] {
    Manifest man;
    man.set("command", std::string("quadform"));
    const KernelSpec spec = parse_kernel(*kernel);
    man.set("kernel", spec.name());
    man.set("epsilon", *epsilon);
    const DiscreteMeasure m = build_source(*opts, common->workers, man);
    const QuadFormResult result = quadratic_form(spec, m, *epsilon, common->workers);
    man.set("measure", result.measure);
    std::ostringstream table;
    TableWriter writer(table, {"epsilon", "value", "points"});
    writer.row_values(std::vector<double>{result.epsilon, result.value,
                                          static_cast<double>(result.point_count)});
    finish(*common, man, table.str());
  });
}

void cmd_l1scan(CLI::App& app) {
  auto* cmd = app.add_subcommand("l1scan", "log-curve interval scan of the alpha(4) kernel");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto s = std::make_shared<double>(1.0);
  auto n_lo = std::make_shared<int>(3);
  auto n_hi = std::make_shared<int>(20);
  auto quad_points = std::make_shared<int>(160);
  add_common(cmd, *common, "l1scan.csv");
  cmd->add_option("--s", *s, "pole parameter along the curve");
  cmd->add_option("--n-lo", *n_lo, "first interval index");
  cmd->add_option("--n-hi", *n_hi, "last interval index");
  cmd->add_option("--quad-points", *quad_points, "Gauss-Legendre nodes per interval");
  cmd->callback([common, s, n_lo, n_hi, quad_points] {
    Manifest man;
    man.set("command", std::string("l1scan"));
    man.set("s", *s);
    man.set("n_lo", static_cast<std::int64_t>(*n_lo));
    man.set("n_hi", static_cast<std::int64_t>(*n_hi));
    man.set("quad_points", static_cast<std::int64_t>(*quad_points));
    const L1ScanResult result = l1_divergence_scan(*s, *n_lo, *n_hi, *quad_points);
    const double floor = result.integral.empty() ? 0.0 : 0.5 * result.integral.front();
    std::ostringstream table;
    TableWriter writer(table, {"n", "value", "partial_sum", "comparator"});
    for (std::size_t i = 0; i < result.n.size(); ++i) {
      writer.row_values(std::vector<double>{static_cast<double>(result.n[i]),
                                            result.integral[i], result.partial_sum[i],
                                            floor});
    }
    finish(*common, man, table.str());
  });
}

void cmd_lemma54(CLI::App& app) {
  auto* cmd = app.add_subcommand("lemma54", "vertical-gauge lower-bound scan");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto sched = std::make_shared<ScheduleOpts>();
  auto n_lo = std::make_shared<int>(1);
  auto n_hi = std::make_shared<int>(8);
  auto samples = std::make_shared<std::size_t>(12000);
  add_common(cmd, *common, "lemma54.csv");
  add_schedule(cmd, *sched);
  cmd->add_option("--n-lo", *n_lo, "first stage");
  cmd->add_option("--n-hi", *n_hi, "last stage");
  cmd->add_option("--samples", *samples, "pair samples per stage (exhaustive when covering)");
  cmd->callback([common, sched, n_lo, n_hi, samples] {
    Manifest man;
    man.set("command", std::string("lemma54"));
    if (*n_lo < 1 || *n_hi < *n_lo) throw ValidationError("lemma54: bad stage range");
    const AngleSchedule schedule = make_schedule(*sched, *n_hi + 2, man);
    man.set("n_lo", static_cast<std::int64_t>(*n_lo));
    man.set("n_hi", static_cast<std::int64_t>(*n_hi));
    man.set("samples", static_cast<std::uint64_t>(*samples));
    std::ostringstream table;
    TableWriter writer(table, {"n", "min_ratio", "pairs", "theta_n", "r_n"});
    for (int n = *n_lo; n <= *n_hi; ++n) {
      const Lemma54Report report = lemma54_scan(schedule, n, *samples, common->seed);
      writer.row_values(std::vector<double>{
          static_cast<double>(n), report.min_ratio,
          static_cast<double>(report.pair_count), report.theta_n, report.r_n});
    }
    finish(*common, man, table.str());
  });
}

void cmd_stagewise(CLI::App& app) {
  auto* cmd = app.add_subcommand("stagewise", "stage-resolved quadratic-form growth");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto sched = std::make_shared<ScheduleOpts>();
  auto alpha = std::make_shared<double>(0.5);
  auto stage_lo = std::make_shared<int>(1);
  auto stages = std::make_shared<int>(8);
  auto samples = std::make_shared<std::size_t>(280000);
  add_common(cmd, *common, "stagewise.csv");
  add_schedule(cmd, *sched);
  cmd->add_option("--alpha", *alpha, "exponent half: the scan uses the alpha(2a) kernel");
  cmd->add_option("--stage-lo", *stage_lo, "first stage");
  cmd->add_option("--stages", *stages, "last stage");
  cmd->add_option("--samples", *samples, "pair samples per stage");
  cmd->callback([common, sched, alpha, stage_lo, stages, samples] {
    Manifest man;
    man.set("command", std::string("stagewise"));
    if (*stage_lo < 1 || *stages < *stage_lo) {
      throw ValidationError("stagewise: bad stage range");
    }
    const AngleSchedule schedule = make_schedule(*sched, *stages + 2, man);
    man.set("alpha", *alpha);
    man.set("stage_lo", static_cast<std::int64_t>(*stage_lo));
    man.set("stages", static_cast<std::int64_t>(*stages));
    man.set("samples", static_cast<std::uint64_t>(*samples));
    const StagewiseResult result = koch_stagewise_form(
        schedule, *alpha, *stage_lo, *stages, *samples, common->seed);
    std::ostringstream table;
    TableWriter writer(table, {"n", "value", "partial_sum", "comparator"});
    for (std::size_t i = 0; i < result.stage.size(); ++i) {
      writer.row_values(std::vector<double>{static_cast<double>(result.stage[i]),
                                            result.contribution[i],
                                            result.partial_sum[i],
                                            result.comparator[i]});
    }
    finish(*common, man, table.str());
  });
}

void cmd_cantor_rowsup(CLI::App& app) {
  auto* cmd = app.add_subcommand("cantor-rowsup", "sup row sums on the lifted cantor set");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto depth = std::make_shared<int>(8);
  auto kernel = std::make_shared<std::string>("b");
  auto epsilon = std::make_shared<double>(0.0);
  auto budget = std::make_shared<std::size_t>(16384);
  add_common(cmd, *common, "cantor-rowsup.csv");
  cmd->add_option("--depth", *depth, "deepest cantor level");
  cmd->add_option("--kernel", *kernel, "kernel: b | alpha:<a>");
  cmd->add_option("--epsilon", *epsilon, "truncation radius");
  cmd->add_option("--budget", *budget, "atom budget for the deepest level");
  cmd->callback([common, depth, kernel, epsilon, budget] {
    Manifest man;
    man.set("command", std::string("cantor-rowsup"));
    const KernelSpec spec = parse_kernel(*kernel);
    man.set("kernel", spec.name());
    man.set("depth", static_cast<std::int64_t>(*depth));
    man.set("epsilon", *epsilon);
    man.set("budget", static_cast<std::uint64_t>(*budget));
    if (*depth < 0) throw ValidationError("cantor-rowsup: negative depth");
    cantor_build(*depth, *budget);  // fail fast before the per-depth loop
    std::ostringstream table;
    TableWriter writer(table, {"depth", "row_sup", "increment"});
    double previous = 0.0;
    for (int k = 0; k <= *depth; ++k) {
      const DiscreteMeasure m =
          measure_from_cantor(cantor_build(k, *budget), common->workers);
      const double sup = row_sup(spec, m, *epsilon, common->workers);
      writer.row_values(std::vector<double>{static_cast<double>(k), sup, sup - previous});
      previous = sup;
    }
    finish(*common, man, table.str());
  });
}

void cmd_curvature(CLI::App& app) {
  auto* cmd = app.add_subcommand("curvature", "Menger curvature energy over distance-window triples");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto opts = std::make_shared<SourceOpts>();
  auto alpha = std::make_shared<double>(0.5);
  auto radius = std::make_shared<double>(0.0);
  auto doublings = std::make_shared<int>(0);
  auto triple_budget = std::make_shared<std::size_t>(std::size_t{1} << 24);
  auto center_index = std::make_shared<std::int64_t>(-1);
  add_common(cmd, *common, "curvature.csv");
  add_source(cmd, *opts);
  cmd->add_option("--alpha", *alpha, "distance-window ratio in (0,1)");
  cmd->add_option("--radius", *radius, "largest ball radius (default: diameter)");
  cmd->add_option("--doublings", *doublings, "extra halved radii below --radius");
  cmd->add_option("--triple-budget", *triple_budget, "exhaustive/sampling budget");
  cmd->add_option("--center-index", *center_index, "ball center atom (default: middle)");
  cmd->callback([common, opts, alpha, radius, doublings, triple_budget, center_index] {
    Manifest man;
    man.set("command", std::string("curvature"));
    const DiscreteMeasure m = build_source(*opts, common->workers, man);
    const std::size_t center_atom =
        *center_index < 0 ? m.size() / 2 : static_cast<std::size_t>(*center_index);
    if (center_atom >= m.size()) throw ValidationError("curvature: center index out of range");
    if (*doublings < 0) throw ValidationError("curvature: negative doublings");
    const HPoint center = m.point(center_atom);
    const double top = (*radius > 0.0) ? *radius : m.diameter();
    man.set("alpha", *alpha);
    man.set("radius", top);
    man.set("doublings", static_cast<std::int64_t>(*doublings));
    man.set("center_index", static_cast<std::uint64_t>(center_atom));
    man.set("triple_budget", static_cast<std::uint64_t>(*triple_budget));

    std::ostringstream table;
    TableWriter writer(table, {"radius", "energy", "triples", "exhaustive", "std_error"});
    for (int d = *doublings; d >= 0; --d) {
      const double r = top / static_cast<double>(std::size_t{1} << d);
      const CurvatureSumReport report = curvature_energy(
          m, *alpha, center, r, *triple_budget, common->seed, common->workers);
      writer.row_values(std::vector<double>{
          r, report.energy, static_cast<double>(report.triple_count),
          report.exhaustive ? 1.0 : 0.0, report.standard_error});
    }
    finish(*common, man, table.str());
  });
}

void cmd_czcheck(CLI::App& app) {
  auto* cmd = app.add_subcommand("czcheck", "growth/Hoelder/homogeneity kernel audit");
  cmd->fallthrough();
  auto common = std::make_shared<CommonOpts>();
  auto kernel = std::make_shared<std::string>("alpha:4");
  auto kappa = std::make_shared<double>(0.1);
  auto beta = std::make_shared<double>(1.0);
  auto ck = std::make_shared<double>(3.0);
  auto samples = std::make_shared<std::size_t>(100000);
  add_common(cmd, *common, "czcheck.csv");
  cmd->add_option("--kernel", *kernel, "kernel: b | alpha:<a>");
  cmd->add_option("--kappa", *kappa, "Hoelder proximity factor");
  cmd->add_option("--beta", *beta, "Hoelder exponent");
  cmd->add_option("--ck", *ck, "bound under test");
  cmd->add_option("--samples", *samples, "audit samples per check");
  cmd->callback([common, kernel, kappa, beta, ck, samples] {
    Manifest man;
    man.set("command", std::string("czcheck"));
    const KernelSpec spec = parse_kernel(*kernel);
    const CZParams params(*kappa, *beta, *ck);
    man.set("kernel", spec.name());
    man.set("kappa", *kappa);
    man.set("beta", *beta);
    man.set("c_k", *ck);
    man.set("samples", static_cast<std::uint64_t>(*samples));

    const double homogeneity =
        check_homogeneity(spec, *samples, 1e-3, 1e3, common->seed);
    const AuditReport growth = check_growth(spec, params, *samples, common->seed);
    const AuditReport hoelder = check_hoelder(spec, params, *samples, common->seed);
    man.set("homogeneity_max_rel_deviation", homogeneity);
    man.set("growth_max", growth.max_measured);
    man.set("growth_violations", static_cast<std::uint64_t>(growth.violations.size()));
    man.set("hoelder_max", hoelder.max_measured);
    man.set("hoelder_violations",
            static_cast<std::uint64_t>(hoelder.violations.size()));

    std::ostringstream table;
    table << "check,p1x,p1y,p1z,p2x,p2y,p2z,measured,bound\n";
    write_audit_report(table, growth);
    write_audit_report(table, hoelder);
    finish(*common, man, table.str());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heisenberg-group kernels, lifts and singular-integral experiments"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI config file; command-line flags win");

  cmd_koch_build(app);
  cmd_lift(app);
  cmd_regularity(app);
  cmd_quadform(app);
  cmd_l1scan(app);
  cmd_lemma54(app);
  cmd_stagewise(app);
  cmd_cantor_rowsup(app);
  cmd_curvature(app);
  cmd_czcheck(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 1;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
