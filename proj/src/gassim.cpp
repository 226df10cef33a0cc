#include "thermobound/gassim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "thermobound/qstate.hpp"

namespace thermobound::gassim {

namespace {

constexpr double kConservationSlack = 1e-9;

bool is_even_integer(double n) { return std::floor(n) == n && std::fmod(n, 2.0) == 0.0; }

std::int64_t as_count(double n) { return static_cast<std::int64_t>(std::llround(n)); }

double draw_binomial(std::mt19937_64& rng, double n, double p) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return n;
  std::binomial_distribution<std::int64_t> dist(as_count(n), p);
  return static_cast<double>(dist(rng));
}

void check_conservation(double counted, double n, int step) {
  if (std::abs(counted - n) > kConservationSlack * n) {
    throw std::logic_error("step " + std::to_string(step) + ": particle count " +
                           std::to_string(counted) + " != " + std::to_string(n));
  }
}

// Work done by a wall moving from fraction w_from to w_to of the cylinder,
// against n_left particles confined to its left and n_right to its right.
double wall_work(double n_left, double n_right, double w_from, double w_to, double volume,
                 int substeps, double kT) {
  return isothermal_work(n_left, w_from * volume, w_to * volume, substeps, kT) +
         isothermal_work(n_right, (1.0 - w_from) * volume, (1.0 - w_to) * volume, substeps, kT);
}

struct StepWorks {
  std::array<double, 5> work{};
  double x = 0.0;
  double y = 0.0;
  HomogeneityReport homogeneity;
};

StepWorks run_steps(const SimConfig& config, std::uint64_t seed, int substeps) {
  const cycle::CycleParams& p = config.params;
  const double n = p.n_particles;
  const double v = p.volume;
  const double kT = p.boltzmann * p.temperature;
  const double half = n / 2.0;
  StepWorks out;

  // Step 1: each half expands from V/4 to V/2.
  out.work[0] = 2.0 * isothermal_work(half, v / 4.0, v / 2.0, substeps, kT);

  // Step 2: demon walls start together at the centre and move to balance.
  PopulationState pop = sample_measurements(p, seed, config.sample_measurements);
  check_conservation(pop.total(), n, 2);
  const auto [x, y] = find_wall_equilibrium(pop);
  pop.x = x;
  pop.y = y;
  const double red = wall_work(pop.at(Label::psi1, Record::two), pop.at(Label::psi2, Record::two),
                               0.5, x, v, substeps, kT);
  // Blue wall, mirrored: its "left" population is the one confined right of it.
  const double blue = wall_work(pop.at(Label::psi2, Record::one), pop.at(Label::psi1, Record::one),
                                0.5, y, v, substeps, kT);
  out.work[1] = red + blue;
  out.x = x;
  out.y = y;
  std::mt19937_64 placement = make_stream(seed, Stream::placement);
  out.homogeneity = homogeneity_check(pop, config.sample_measurements ? &placement : nullptr);

  // Measurement/reset bracket is reversible: the memory is cleared and every
  // particle returns to the even psi1/psi2 ensemble at zero net work.
  pop = PopulationState{};
  pop.at(Label::psi1, Record::none) = half;
  pop.at(Label::psi2, Record::none) = n - half;

  // Step 3: projective collapse onto phi1 with probability c, then membranes
  // compress each portion from V to V/2.
  const double c = qstate::mixture_spectrum(p.theta).c;
  double n_phi1 = n * c;
  if (config.sample_measurements) {
    std::mt19937_64 collapse = make_stream(seed, Stream::collapse);
    n_phi1 = draw_binomial(collapse, n, c);
  }
  const double n_phi2 = config.sample_measurements ? n - n_phi1 : n * (1.0 - c);
  pop = PopulationState{};
  pop.at(Label::phi1, Record::none) = n_phi1;
  pop.at(Label::phi2, Record::none) = n_phi2;
  check_conservation(pop.total(), n, 3);
  out.work[2] = isothermal_work(n_phi1, v, v / 2.0, substeps, kT) +
                isothermal_work(n_phi2, v, v / 2.0, substeps, kT);

  // Step 4: compress each portion to the initial pressure P0 = 2 N k_B T / V.
  const double p0 = 2.0 * n * kT / v;
  out.work[3] = isothermal_work(n_phi1, v / 2.0, n_phi1 * kT / p0, substeps, kT) +
                isothermal_work(n_phi2, v / 2.0, n_phi2 * kT / p0, substeps, kT);

  // Step 5: quasistatic unitaries.
  out.work[4] = 0.0;
  return out;
}

struct MeanStderr {
  double mean;
  double stderr_;
};

MeanStderr aggregate(const std::vector<double>& xs) {
  const double k = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double v : xs) sum += v;
  const double mean = sum / k;
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : xs) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (k - 1.0) / k)};
}

}  // namespace

void SimConfig::validate() const {
  params.validate();
  if (wall_substeps < 16) throw std::invalid_argument("wall_substeps must be >= 16");
  if (seeds.empty()) throw std::invalid_argument("at least one seed is required");
  if (sample_measurements && !is_even_integer(params.n_particles)) {
    throw std::invalid_argument("sampled mode needs an even integer particle count");
  }
}

double PopulationState::total() const {
  double t = 0.0;
  for (const auto& row : counts) {
    for (double v : row) t += v;
  }
  return t;
}

std::mt19937_64 make_stream(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

PopulationState sample_measurements(const cycle::CycleParams& params, std::uint64_t seed,
                                    bool sample) {
  params.validate();
  const double half = params.n_particles / 2.0;
  const double p_wrong = 0.5 * (1.0 - params.delta);
  PopulationState pop;
  double wrong1 = half * p_wrong;
  double wrong2 = half * p_wrong;
  if (sample) {
    std::mt19937_64 rng = make_stream(seed, Stream::measurement);
    wrong1 = draw_binomial(rng, half, p_wrong);
    wrong2 = draw_binomial(rng, half, p_wrong);
  }
  pop.at(Label::psi1, Record::one) = half - wrong1;
  pop.at(Label::psi1, Record::two) = wrong1;
  pop.at(Label::psi2, Record::two) = half - wrong2;
  pop.at(Label::psi2, Record::one) = wrong2;
  if (!sample) {
    // (1 +- delta) N/4 directly, so the delta = 0 cells are exactly equal.
    pop.at(Label::psi1, Record::one) = pop.at(Label::psi2, Record::two) =
        0.25 * (1.0 + params.delta) * params.n_particles;
  }
  return pop;
}

std::pair<double, double> find_wall_equilibrium(const PopulationState& pop) {
  const double red_left = pop.at(Label::psi1, Record::two);
  const double red_right = pop.at(Label::psi2, Record::two);
  const double blue_right = pop.at(Label::psi2, Record::one);
  const double blue_left = pop.at(Label::psi1, Record::one);
  if (red_left + red_right <= 0.0) {
    throw DegenerateError(2, "red wall has no particles on either side");
  }
  if (blue_left + blue_right <= 0.0) {
    throw DegenerateError(2, "blue wall has no particles on either side");
  }
  return {red_left / (red_left + red_right), blue_right / (blue_right + blue_left)};
}

double isothermal_work(double n, double v_from, double v_to, int substeps, double kT) {
  if (n == 0.0) return 0.0;
  if (!(v_from > 0.0) || !(v_to > 0.0)) {
    throw std::domain_error("isothermal_work: nonpositive volume with " + std::to_string(n) +
                            " particles");
  }
  if (substeps < 1) throw std::invalid_argument("isothermal_work: substeps must be >= 1");
  if (v_from == v_to) return 0.0;
  // Panel edges grow geometrically, v_i = v_from * ratio^(i/substeps), so a
  // portion squeezed by orders of magnitude is resolved as well as a mild one.
  const double step_ratio = std::pow(v_to / v_from, 1.0 / substeps);
  double integral = 0.0;
  double left = v_from;
  for (int i = 1; i <= substeps; ++i) {
    const double right = i == substeps ? v_to : v_from * std::pow(step_ratio, i);
    integral += (right - left) / (0.5 * (left + right));
    left = right;
  }
  return -n * kT * integral;
}

HomogeneityReport homogeneity_check(const PopulationState& pop, std::mt19937_64* rng) {
  const double x = pop.x;
  const double y = pop.y;
  // Free particles: record 1 roams [0, 1 - y], record 2 roams [x, 1].
  const double free1 = pop.at(Label::psi1, Record::one);
  const double free2 = pop.at(Label::psi2, Record::two);
  const double share1_left = 1.0 - y > 0.0 ? x / (1.0 - y) : 0.0;
  const double share2_right = 1.0 - x > 0.0 ? y / (1.0 - x) : 0.0;
  double free1_left = free1 * share1_left;
  double free2_right = free2 * share2_right;
  if (rng != nullptr) {
    free1_left = draw_binomial(*rng, free1, share1_left);
    free2_right = draw_binomial(*rng, free2, share2_right);
  }

  const std::array<std::pair<double, double>, 3> record_counts{{
      {free1_left, pop.at(Label::psi1, Record::two)},
      {free1 - free1_left, free2 - free2_right},
      {pop.at(Label::psi2, Record::one), free2_right},
  }};

  HomogeneityReport report;
  for (std::size_t i = 0; i < record_counts.size(); ++i) {
    const auto [r1, r2] = record_counts[i];
    HomogeneityRegion& region = report.regions[i];
    region.count = r1 + r2;
    if (region.count <= 0.0) continue;
    region.fraction_record1 = r1 / region.count;
    region.deviation = region.fraction_record1 - 0.5;
    region.stderr_ = std::sqrt(0.25 / region.count);
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(region.deviation));
    report.max_z = std::max(report.max_z, std::abs(region.deviation) / region.stderr_);
  }
  return report;
}

SeedRun run_seed(const SimConfig& config, std::uint64_t seed) {
  const StepWorks fine = run_steps(config, seed, config.wall_substeps);
  const StepWorks coarse = run_steps(config, seed, config.wall_substeps / 2);
  SeedRun run;
  run.seed = seed;
  run.work = fine.work;
  run.work_coarse = coarse.work;
  run.meas_reset = 0.0;
  run.total = run.meas_reset;
  for (double w : run.work) run.total += w;
  run.x = fine.x;
  run.y = fine.y;
  run.homogeneity = fine.homogeneity;
  return run;
}

SimReport simulate_cycle(const SimConfig& config) {
  config.validate();
  SimReport report;
  report.config = config;
  report.analytic = cycle::ledger(config.params);

  const std::size_t n_seeds = config.seeds.size();
  report.runs.resize(n_seeds);
  unsigned workers = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(n_seeds));
  if (workers == 1) {
    for (std::size_t i = 0; i < n_seeds; ++i) report.runs[i] = run_seed(config, config.seeds[i]);
  } else {
    // Seeds are striped across workers; each result lands in its own slot.
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < n_seeds; i += workers) {
          report.runs[i] = run_seed(config, config.seeds[i]);
        }
      }));
    }
    for (auto& j : jobs) j.get();
  }

  const double energy = config.params.thermal_energy();
  const std::array<double, 5> analytic{report.analytic.w1, report.analytic.w2, report.analytic.w3,
                                       report.analytic.w4, report.analytic.w5};
  auto compare = [&](StepEstimate& est, const std::vector<double>& fine,
                     const std::vector<double>& coarse, double exact) {
    const MeanStderr ms = aggregate(fine);
    est.sim_mean = ms.mean;
    est.sim_stderr = ms.stderr_;
    est.analytic = exact;
    est.abs_dev = std::abs(ms.mean - exact);
    est.rel_dev = est.abs_dev / (exact != 0.0 ? std::abs(exact) : energy);
    est.quad_error = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      est.quad_error = std::max(est.quad_error, std::abs(fine[i] - coarse[i]));
    }
    est.passed = config.sample_measurements
                     ? est.abs_dev <= kSampledSigmas * est.sim_stderr + est.quad_error
                     : est.rel_dev <= kExactRelTolerance;
  };

  std::vector<double> fine(n_seeds);
  std::vector<double> coarse(n_seeds);
  for (int s = 0; s < 5; ++s) {
    for (std::size_t i = 0; i < n_seeds; ++i) {
      fine[i] = report.runs[i].work[s];
      coarse[i] = report.runs[i].work_coarse[s];
    }
    report.steps[s].step = s + 1;
    compare(report.steps[s], fine, coarse, analytic[s]);
  }
  for (std::size_t i = 0; i < n_seeds; ++i) {
    fine[i] = report.runs[i].total;
    coarse[i] = report.runs[i].meas_reset;
    for (double w : report.runs[i].work_coarse) coarse[i] += w;
  }
  report.total.step = 0;
  compare(report.total, fine, coarse, report.analytic.total);
  report.meas_reset = 0.0;

  std::vector<double> xs(n_seeds);
  std::vector<double> ys(n_seeds);
  for (std::size_t i = 0; i < n_seeds; ++i) {
    xs[i] = report.runs[i].x;
    ys[i] = report.runs[i].y;
    report.homogeneity_max_abs_deviation =
        std::max(report.homogeneity_max_abs_deviation, report.runs[i].homogeneity.max_abs_deviation);
    report.homogeneity_max_z = std::max(report.homogeneity_max_z, report.runs[i].homogeneity.max_z);
  }
  const MeanStderr xm = aggregate(xs);
  const MeanStderr ym = aggregate(ys);
  EquilibriumEstimate& eq = report.equilibrium;
  eq.x_mean = xm.mean;
  eq.x_stderr = xm.stderr_;
  eq.y_mean = ym.mean;
  eq.y_stderr = ym.stderr_;
  eq.expected = cycle::equilibrium_fraction(config.params.delta);
  const double x_dev = std::abs(eq.x_mean - eq.expected);
  const double y_dev = std::abs(eq.y_mean - eq.expected);
  eq.passed = config.sample_measurements
                  ? x_dev <= kSampledSigmas * eq.x_stderr && y_dev <= kSampledSigmas * eq.y_stderr
                  : x_dev <= kExactEquilibriumTolerance && y_dev <= kExactEquilibriumTolerance;

  report.passed = eq.passed && report.total.passed;
  for (const StepEstimate& s : report.steps) report.passed = report.passed && s.passed;
  return report;
}

}  // namespace thermobound::gassim
