#include "thermobound/cli.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thermobound/bounds.hpp"
#include "thermobound/cycle.hpp"
#include "thermobound/gassim.hpp"
#include "thermobound/report_json.hpp"

namespace thermobound::cli {

namespace {

constexpr int kMinSampledParticles = 100;

struct AngleArgs {
  std::optional<double> theta;
  std::optional<double> cos_theta;

  void add(CLI::App& app) {
    auto* t = app.add_option("--theta", theta, "Overlap angle in radians, [0, pi/2]");
    auto* c = app.add_option("--cos-theta", cos_theta, "Overlap |<psi1|psi2>|, [0, 1]");
    t->excludes(c);
    c->excludes(t);
  }

  // Normalized to theta immediately.
  double resolve() const {
    if (theta.has_value() == cos_theta.has_value()) {
      throw std::invalid_argument("exactly one of --theta / --cos-theta is required");
    }
    return theta ? *theta : bounds::theta_from_cos(*cos_theta);
  }
};

struct Output {
  std::string path;
  std::string format = "json";

  void add(CLI::App& app, const std::string& default_format) {
    format = default_format;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", path, "Output file (default: standard output)");
  }
};

void emit(const Output& target, const std::string& text, std::ostream& out) {
  if (target.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(target.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + target.path + " for writing");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermodynamic bound on two-state discrimination: bound curves, work ledgers, "
               "and gas-cycle simulations"};
  app.require_subcommand(1);

  // bounds
  double cos_min = 0.0;
  double cos_max = 1.0;
  int steps = 101;
  Output bounds_out;
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate delta_th, delta_qi, delta_hol over cos(theta)");
  bounds_cmd->add_option("--cos-min", cos_min)->capture_default_str();
  bounds_cmd->add_option("--cos-max", cos_max)->capture_default_str();
  bounds_cmd->add_option("--steps", steps, "Grid points, >= 2")->capture_default_str();
  bounds_out.add(*bounds_cmd, "csv");

  // ledger
  AngleArgs ledger_angle;
  cycle::CycleParams ledger_params;
  Output ledger_out;
  auto* ledger_cmd = app.add_subcommand("ledger", "Analytic per-step work ledger");
  ledger_angle.add(*ledger_cmd);
  ledger_cmd->add_option("--delta", ledger_params.delta, "Demon accuracy in [0, 1]")->required();
  ledger_cmd->add_option("--n", ledger_params.n_particles, "Particle count N")->capture_default_str();
  ledger_cmd->add_option("--v", ledger_params.volume, "Total volume V")->capture_default_str();
  ledger_cmd->add_option("--t", ledger_params.temperature, "Temperature T")->capture_default_str();
  ledger_cmd->add_option("--kb", ledger_params.boltzmann, "Boltzmann constant")->capture_default_str();
  ledger_out.add(*ledger_cmd, "json");

  // simulate
  AngleArgs sim_angle;
  double sim_delta = 1.0;
  double particles = 100000;
  int substeps = 4096;
  int n_seeds = 16;
  std::uint64_t seed_base = 1;
  bool exact_counts = false;
  Output sim_out;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo run of the demon cycle");
  sim_angle.add(*sim_cmd);
  sim_cmd->add_option("--delta", sim_delta, "Demon accuracy in [0, 1]")->required();
  sim_cmd->add_option("--particles", particles, "Particle count N")->capture_default_str();
  sim_cmd->add_option("--substeps", substeps, "Quadrature panels per moving wall")->capture_default_str();
  sim_cmd->add_option("--seeds", n_seeds, "Number of independent seeds")->capture_default_str();
  sim_cmd->add_option("--seed-base", seed_base, "First seed; seeds are consecutive")->capture_default_str();
  sim_cmd->add_flag("--exact-counts", exact_counts, "Use expected counts instead of sampling");
  sim_out.add(*sim_cmd, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidArguments;
  }

  try {
    if (*bounds_cmd) {
      if (steps < 2 || !(cos_min >= 0.0 && cos_max <= 1.0 && cos_min < cos_max)) {
        err << "bounds: need 0 <= --cos-min < --cos-max <= 1 and --steps >= 2\n";
        return kInvalidArguments;
      }
      std::vector<bounds::BoundResult> rows;
      try {
        rows = bounds::bound_table(cos_min, cos_max, steps);
      } catch (const bounds::TableError& e) {
        err << "bounds: solver failed at " << e.what() << "\n";
        return kSolverFailure;
      }
      emit(bounds_out,
           bounds_out.format == "csv" ? bounds_to_csv(rows) : dump(bounds_to_json(rows)), out);
      return kOk;
    }

    if (*ledger_cmd) {
      if (ledger_out.format != "json") {
        err << "ledger: only --format json is supported\n";
        return kInvalidArguments;
      }
      cycle::CycleParams params = ledger_params;
      try {
        params.theta = ledger_angle.resolve();
        params.validate();
      } catch (const std::exception& e) {
        err << "ledger: " << e.what() << "\n";
        return kInvalidArguments;
      }
      const cycle::WorkLedger l = cycle::ledger(params);
      Json j = ledger_to_json(l);
      j["second_law"] = std::string(to_string(cycle::classify(params, l.total)));
      emit(ledger_out, dump(j), out);
      return kOk;
    }

    if (*sim_cmd) {
      if (sim_out.format != "json") {
        err << "simulate: only --format json is supported\n";
        return kInvalidArguments;
      }
      gassim::SimConfig config;
      try {
        config.params.theta = sim_angle.resolve();
        config.params.delta = sim_delta;
        config.params.n_particles = particles;
        config.wall_substeps = substeps;
        config.sample_measurements = !exact_counts;
        if (n_seeds < 1) throw std::invalid_argument("--seeds must be >= 1");
        if (!exact_counts && particles < kMinSampledParticles) {
          throw std::invalid_argument("sampled mode needs --particles >= " +
                                      std::to_string(kMinSampledParticles));
        }
        config.seeds.clear();
        for (int i = 0; i < n_seeds; ++i) config.seeds.push_back(seed_base + static_cast<std::uint64_t>(i));
        config.validate();
      } catch (const std::exception& e) {
        err << "simulate: " << e.what() << "\n";
        return kInvalidArguments;
      }
      gassim::SimReport report;
      try {
        report = gassim::simulate_cycle(config);
      } catch (const gassim::DegenerateError& e) {
        err << "simulate: " << e.what() << "\n";
        return kSolverFailure;
      }
      emit(sim_out, dump(sim_report_to_json(report)), out);
      if (!report.passed) {
        err << "simulate: simulated works disagree with the analytic ledger\n";
        return kToleranceFailure;
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kSolverFailure;
  }
  return kInvalidArguments;
}

}  // namespace thermobound::cli
