/**
 * @file gsa_cli.cpp
 * @brief Batch front-end: bound/achievability tables, DoF-plane curve export,
 *        construction reports and simulation sweeps.
 */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gsalign/dof_achievable.hpp"
#include "gsalign/dof_bounds.hpp"
#include "gsalign/gsa.hpp"
#include "gsalign/io_json.hpp"
#include "gsalign/sim.hpp"

namespace {

using namespace gsalign;

struct CliOptions {
  std::string model = "y";
  int K = 4, M = 1, N = 1;
  int streams = 1;
  int L = 1;
  int seeds = 1;
  int extension = 1;
  double noise = 0.0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out;
  std::string format = "json";
  std::string config_path;
  std::string forced_route;
  double ratio_min = 0.5, ratio_max = 6.0;
  int samples = 100;
  TolerancePolicy tol;
};

std::uint64_t env_seed() {
  if (const char* s = std::getenv("GSA_LAB_SEED")) {
    return std::strtoull(s, nullptr, 10);
  }
  return 0;
}

/// Open the output stream: file when --out is given, stdout otherwise.
std::ostream& open_out(const CliOptions& opt, std::ofstream& file) {
  if (opt.out.empty()) return std::cout;
  file.open(opt.out);
  if (!file) throw std::runtime_error("cannot open output file: " + opt.out);
  return file;
}

void apply_config_file(CliOptions& opt) {
  if (opt.config_path.empty()) return;
  const RunConfig rc = load_run_config(opt.config_path);
  opt.K = rc.system.K;
  opt.M = rc.system.M;
  opt.N = rc.system.N;
  if (rc.pattern) opt.model = pattern_to_string(*rc.pattern);
  opt.streams = rc.streams_per_pair;
  opt.L = rc.clusters;
  if (rc.seed_given && !opt.seed_set) {
    opt.seed = rc.seed;
    opt.seed_set = true;
  }
}

DataSwitchMatrix resolve_streams(const CliOptions& opt) {
  if (!opt.config_path.empty()) {
    RunConfig rc = load_run_config(opt.config_path);
    if (rc.explicit_streams) return *rc.explicit_streams;
  }
  return make_pattern(pattern_from_string(opt.model), opt.K, opt.streams, opt.L);
}

void emit(const CliOptions& opt, const Json& j,
          const std::vector<std::string>& header,
          const std::vector<std::vector<double>>& rows) {
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  if (opt.format == "csv") {
    write_csv(os, header, rows);
  } else {
    os << j.dump(2) << "\n";
  }
}

int cmd_bounds(const CliOptions& opt) {
  const Pattern model = pattern_from_string(opt.model);
  const double upper = model_bound(model, opt.K, opt.M, opt.N);
  const double cut = cutset_bound(opt.K, opt.M, opt.N);
  const double ach = achievable_dof(model_points(model, opt.K), opt.M, opt.N);
  Json j{{"model", opt.model}, {"K", opt.K}, {"M", opt.M}, {"N", opt.N},
         {"cutset", cut}, {"upper_bound", upper}, {"achievable", ach}};
  emit(opt, j, {"K", "M", "N", "cutset", "upper_bound", "achievable"},
       {{double(opt.K), double(opt.M), double(opt.N), cut, upper, ach}});
  return 0;
}

int cmd_points(const CliOptions& opt) {
  const auto points = model_points(pattern_from_string(opt.model), opt.K);
  Json arr = Json::array();
  std::vector<std::vector<double>> rows;
  for (const auto& p : points) {
    Json e{{"ratio", p.ratio_d}, {"dof_per_m", p.dof_per_m_d}};
    if (p.ratio.exact) e["ratio_fraction"] = {p.ratio.num, p.ratio.den};
    if (p.dof_per_m.exact) e["dof_per_m_fraction"] = {p.dof_per_m.num, p.dof_per_m.den};
    arr.push_back(std::move(e));
    rows.push_back({p.ratio_d, p.dof_per_m_d});
  }
  emit(opt, Json{{"model", opt.model}, {"K", opt.K}, {"points", arr}},
       {"ratio", "dof_per_m"}, rows);
  return 0;
}

int cmd_achievable(const CliOptions& opt) {
  const double ach =
      achievable_dof(model_points(pattern_from_string(opt.model), opt.K), opt.M, opt.N);
  emit(opt, Json{{"model", opt.model}, {"K", opt.K}, {"M", opt.M}, {"N", opt.N},
                 {"achievable", ach}},
       {"K", "M", "N", "achievable"},
       {{double(opt.K), double(opt.M), double(opt.N), ach}});
  return 0;
}

int cmd_dofplane(const CliOptions& opt) {
  if (opt.samples < 2) throw std::invalid_argument("dofplane: --samples must be >= 2");
  const Pattern model = pattern_from_string(opt.model);
  const auto points = model_points(model, opt.K);
  std::vector<std::vector<double>> rows;
  Json arr = Json::array();
  for (int i = 0; i < opt.samples; ++i) {
    const double r = opt.ratio_min +
                     (opt.ratio_max - opt.ratio_min) * i / (opt.samples - 1);
    const double upper = model_bound(model, opt.K, 1.0, r);
    const double ach = achievable_dof(points, 1.0, r);
    const double tight = (std::abs(upper - ach) < 1e-9) ? 1.0 : 0.0;
    rows.push_back({r, upper, ach, tight});
    arr.push_back({{"ratio", r}, {"upper_dof_per_M", upper},
                   {"achievable_dof_per_M", ach}, {"tight", tight > 0.5}});
  }
  emit(opt, Json{{"model", opt.model}, {"K", opt.K}, {"curve", arr}},
       {"ratio", "upper_dof_per_M", "achievable_dof_per_M", "tight_flag"}, rows);
  return 0;
}

int cmd_construct(const CliOptions& opt) {
  const Pattern model = pattern_from_string(opt.model);
  const DataSwitchMatrix D = resolve_streams(opt);
  const SystemConfig cfg{opt.K, opt.M, opt.N};
  cfg.validate();
  const ChannelRealization ch =
      symbol_extend(sample_channels(cfg, opt.seed), opt.extension);
  std::ofstream file;
  std::ostream& os = open_out(opt, file);
  try {
    const GsaDesign de = design_for_target(ch, D, opt.M * opt.extension,
                                           opt.N * opt.extension, model, opt.tol);
    Json j = to_json(de);
    const AlignmentReport rep = check_theorem4(de.P, ch, de.served, opt.tol);
    Json checks = Json::array();
    for (const auto& c : rep.pairs) {
      checks.push_back({{"pair", {c.pair.first, c.pair.second}},
                        {"rank", c.rank}, {"required_max", c.required_max},
                        {"null_dim", c.null_dim}, {"satisfied", c.satisfied}});
    }
    j["alignment_checks"] = std::move(checks);
    j["alignment_feasible"] = rep.feasible;
    os << j.dump(2) << "\n";
    return 0;
  } catch (const GsaError& e) {
    Json j{{"feasible", false}, {"error", e.what()}};
    if (e.pair.first != 0) j["pair"] = {e.pair.first, e.pair.second};
    os << j.dump(2) << "\n";
    return 1;
  }
}

int cmd_simulate(const CliOptions& opt) {
  const Pattern model = pattern_from_string(opt.model);
  const DataSwitchMatrix D = resolve_streams(opt);
  const SystemConfig cfg{opt.K, opt.M, opt.N};
  cfg.validate();
  const BatchReport batch = run_batch(cfg, D, model, opt.seed, opt.seeds, opt.noise,
                                      opt.tol, opt.extension);
  int unexpected = 0;
  Json summary = to_json(batch);
  for (const auto& r : batch.runs) {
    bool bad = !r.feasible;
    if (!opt.forced_route.empty() && r.route != opt.forced_route) bad = true;
    if (opt.noise == 0.0 && r.feasible && r.streams_delivered < r.streams_served) {
      bad = true;
    }
    if (bad) ++unexpected;
  }
  summary["unexpected_failures"] = unexpected;
  if (!opt.forced_route.empty()) summary["forced_route"] = opt.forced_route;

  std::vector<std::vector<double>> rows;
  for (const auto& r : batch.runs) {
    rows.push_back({double(r.seed), r.feasible ? 1.0 : 0.0,
                    double(r.streams_served), double(r.streams_delivered),
                    r.dof_per_channel_use, r.relay_error, r.user_error_max,
                    r.b_condition});
  }
  emit(opt, summary,
       {"seed", "feasible", "streams_served", "streams_delivered",
        "dof_per_channel_use", "relay_error", "user_error_max", "b_condition"},
       rows);
  return unexpected == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signal-alignment workbench for multi-user MIMO two-way relaying"};
  app.require_subcommand(1);

  CliOptions opt;
  opt.seed = env_seed();

  auto add_common = [&](CLI::App* sub, bool system, bool traffic) {
    sub->add_option("--model", opt.model, "traffic model: y, pairwise, x, l-cluster");
    sub->add_option("--K", opt.K, "number of user nodes");
    if (system) {
      sub->add_option("--M", opt.M, "antennas per user");
      sub->add_option("--N", opt.N, "antennas at the relay");
    }
    if (traffic) {
      sub->add_option("--streams", opt.streams, "streams per exchanging pair");
      sub->add_option("--L", opt.L, "cluster count (l-cluster model)");
      sub->add_option("--config", opt.config_path, "JSON run configuration file");
      sub->add_option("--extension", opt.extension, "symbol extension factor");
      sub->add_option("--seed", opt.seed, "base RNG seed (default: $GSA_LAB_SEED)")
          ->each([&](const std::string&) { opt.seed_set = true; });
    }
    sub->add_option("--out", opt.out, "output file (default: stdout)");
    sub->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol-rank", opt.tol.rank_tol, "relative rank threshold");
    sub->add_option("--tol-residual", opt.tol.residual_tol, "residual threshold");
  };

  auto* bounds = app.add_subcommand("bounds", "total-DoF upper bounds at (K, M, N)");
  add_common(bounds, true, false);
  auto* points = app.add_subcommand("points", "corner points of the DoF plane");
  add_common(points, false, false);
  auto* achievable = app.add_subcommand("achievable", "achievable total DoF at (K, M, N)");
  add_common(achievable, true, false);
  auto* dofplane = app.add_subcommand("dofplane", "bound vs achievable curve over N/M");
  add_common(dofplane, false, false);
  dofplane->add_option("--ratio-min", opt.ratio_min, "smallest N/M ratio");
  dofplane->add_option("--ratio-max", opt.ratio_max, "largest N/M ratio");
  dofplane->add_option("--samples", opt.samples, "number of grid points");
  auto* construct = app.add_subcommand("construct", "build and report one alignment design");
  add_common(construct, true, true);
  auto* simulate = app.add_subcommand("simulate", "seeded end-to-end simulation sweep");
  add_common(simulate, true, true);
  simulate->add_option("--seeds", opt.seeds, "number of seeds in the batch");
  simulate->add_option("--noise", opt.noise, "relay/user noise variance");
  simulate->add_option("--route", opt.forced_route,
                       "require this construction route (generic, beta, deactivation)");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config_file(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (points->parsed()) return cmd_points(opt);
    if (achievable->parsed()) return cmd_achievable(opt);
    if (dofplane->parsed()) return cmd_dofplane(opt);
    if (construct->parsed()) return cmd_construct(opt);
    if (simulate->parsed()) return cmd_simulate(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
