#pragma once

#include <string_view>

namespace thermobound::cycle {

// Work is positive when delivered to the gas.
struct CycleParams {
  double n_particles = 1.0;
  double volume = 1.0;
  double temperature = 1.0;
  double boltzmann = 1.0;
  double theta = 0.0;
  double delta = 1.0;

  // Throws std::domain_error on nonpositive N, V, T, k_B or theta/delta out of range.
  void validate() const;
  double thermal_energy() const { return n_particles * boltzmann * temperature; }  // N k_B T
};

struct WorkLedger {
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;
  double w4 = 0.0;
  double w5 = 0.0;
  double w_meas = 0.0;
  double w_reset = 0.0;
  double p0 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double c = 0.0;
  double total = 0.0;
};

// Isothermal expansion of both halves from V/4 to V/2: -N k_B T ln 2.
double work_step1(const CycleParams& p);

// Demon-driven wall expansion: -N k_B T ln 2 [1 - H((1 + delta)/2)].
double work_step2(const CycleParams& p);

// Volume fraction behind each demon wall once its two pressures balance.
double equilibrium_fraction(double delta);

// Membrane compression of the phi1/phi2 portions from V to V/2.
double work_step3(const CycleParams& p);

// Compression of each portion back to P0: N k_B T ln 2 S(rho).
double work_step4(const CycleParams& p);

// Quasistatic unitaries on the internal state.
double work_step5(const CycleParams& p);

/// Full per-step accounting, plus the geometry P0 = 2 N k_B T / V,
/// V1 = c V/2 and V2 = (1 - c) V/2. The measurement/reset bracket is taken
/// to be reversible, so w_meas + w_reset = 0.
WorkLedger ledger(const CycleParams& p);

/// -N k_B T ln 2 [1 - H((1 + delta)/2) - S(rho)], evaluated directly.
double closed_form_total(const CycleParams& p);

// Ledger total; >= 0 means the cycle does not extract net work.
double second_law_margin(const CycleParams& p);

enum class SecondLaw { satisfied, violated, marginal };

/// Classifies a margin with |margin| <= tolerance * N k_B T as marginal.
SecondLaw classify(const CycleParams& p, double margin, double tolerance = 1e-10);

std::string_view to_string(SecondLaw s);

}  // namespace thermobound::cycle
