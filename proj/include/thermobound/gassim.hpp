#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thermobound/cycle.hpp"

namespace thermobound::gassim {

// Raised when a wall has no particles pushing on either side.
class DegenerateError : public std::runtime_error {
 public:
  DegenerateError(int step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

struct SimConfig {
  cycle::CycleParams params;
  int wall_substeps = 4096;
  std::vector<std::uint64_t> seeds{1};
  // false: use exact expected counts (non-integer allowed) instead of draws.
  bool sample_measurements = true;
  // Worker threads for independent seeds; 0 picks hardware concurrency.
  unsigned threads = 0;

  void validate() const;
};

enum class Label { psi1 = 0, psi2 = 1, phi1 = 2, phi2 = 3 };
enum class Record { one = 0, two = 1, none = 2 };

// Particle counts per (internal state, memory record) plus the two demon
// wall positions: x is the volume fraction left of the red wall, y the
// fraction right of the blue wall.
struct PopulationState {
  std::array<std::array<double, 3>, 4> counts{};
  double x = 0.5;
  double y = 0.5;

  double& at(Label l, Record r) { return counts[static_cast<int>(l)][static_cast<int>(r)]; }
  double at(Label l, Record r) const {
    return counts[static_cast<int>(l)][static_cast<int>(r)];
  }
  double total() const;
};

// Independent RNG substreams of one seed, in the fixed order the cycle uses them.
enum class Stream : std::uint32_t { measurement = 1, placement = 2, collapse = 3 };

std::mt19937_64 make_stream(std::uint64_t seed, Stream stream);

/// Demon measurement of the N/2 psi1 and N/2 psi2 particles. Each is
/// recorded correctly with probability (1 + delta)/2. With sample == false
/// the cells hold the expected counts (1 +- delta) N/4.
PopulationState sample_measurements(const cycle::CycleParams& params, std::uint64_t seed,
                                    bool sample = true);

/// Pressure balance on each wall from the actual counts:
///   x = n(psi1, record 2) / (n(psi1, record 2) + n(psi2, record 2))
///   y = n(psi2, record 1) / (n(psi2, record 1) + n(psi1, record 1))
/// Throws DegenerateError (step 2) if a wall has no particles on either side.
std::pair<double, double> find_wall_equilibrium(const PopulationState& pop);

/// -n k_B T * integral(dv/v) from v_from to v_to, midpoint rule on `substeps`
/// geometrically graded panels (constant volume ratio per panel).
/// n == 0 returns 0 for any volumes (including 0).
double isothermal_work(double n, double v_from, double v_to, int substeps, double kT = 1.0);

struct HomogeneityRegion {
  double count = 0.0;          // particles in the region
  double fraction_record1 = 0.0;  // share carrying post-measurement label 1
  double deviation = 0.0;      // fraction_record1 - 1/2
  double stderr_ = 0.0;        // sqrt(1/(4 count))
};

// Left [0, x], centre [x, 1 - y], right [1 - y, 1].
struct HomogeneityReport {
  std::array<HomogeneityRegion, 3> regions{};
  double max_abs_deviation = 0.0;
  double max_z = 0.0;  // largest |deviation| / stderr over non-empty regions
};

/// Places the free particles of a post-step-2 population uniformly over
/// their accessible volume (binomially, or by expectation when `rng` is null)
/// and reports each region's label composition. Empty regions are skipped.
HomogeneityReport homogeneity_check(const PopulationState& pop, std::mt19937_64* rng);

struct StepEstimate {
  int step = 0;
  double sim_mean = 0.0;
  double sim_stderr = 0.0;
  double analytic = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;       // abs_dev/|analytic|, or abs_dev/(N k_B T) when analytic == 0
  double quad_error = 0.0;    // |Q(n) - Q(n/2)| bound on discretization error
  bool passed = false;
};

struct EquilibriumEstimate {
  double x_mean = 0.0;
  double x_stderr = 0.0;
  double y_mean = 0.0;
  double y_stderr = 0.0;
  double expected = 0.0;
  bool passed = false;
};

struct SeedRun {
  std::uint64_t seed = 0;
  std::array<double, 5> work{};
  std::array<double, 5> work_coarse{};  // same run at substeps/2
  double meas_reset = 0.0;
  double total = 0.0;
  double x = 0.0;
  double y = 0.0;
  HomogeneityReport homogeneity;
};

struct SimReport {
  SimConfig config;
  std::array<StepEstimate, 5> steps{};
  StepEstimate total;
  double meas_reset = 0.0;
  EquilibriumEstimate equilibrium;
  cycle::WorkLedger analytic;
  double homogeneity_max_abs_deviation = 0.0;
  double homogeneity_max_z = 0.0;
  std::vector<SeedRun> runs;
  bool passed = false;
};

// Pass thresholds applied by simulate_cycle.
inline constexpr double kExactRelTolerance = 1e-3;
inline constexpr double kSampledSigmas = 3.0;
inline constexpr double kExactEquilibriumTolerance = 1e-12;

/// One full pass of steps 1-5 for a single seed.
SeedRun run_seed(const SimConfig& config, std::uint64_t seed);

/// Runs every seed, aggregates mean and standard error in seed order and
/// compares against the analytic ledger. Exact-count runs pass when every
/// rel_dev <= 1e-3; sampled runs pass when every deviation is within three
/// standard errors plus the quadrature bound.
SimReport simulate_cycle(const SimConfig& config);

}  // namespace thermobound::gassim
