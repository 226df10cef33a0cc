#include "thermobound/cycle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "thermobound/bounds.hpp"
#include "thermobound/qstate.hpp"

namespace thermobound::cycle {

using std::numbers::ln2;

void CycleParams::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::domain_error(std::string(name) + " must be positive and finite");
    }
  };
  positive(n_particles, "particle count");
  positive(volume, "volume");
  positive(temperature, "temperature");
  positive(boltzmann, "Boltzmann constant");
  qstate::require_valid_theta(theta);
  bounds::Accuracy{delta};
}

double work_step1(const CycleParams& p) {
  p.validate();
  return -p.thermal_energy() * ln2;
}

double work_step2(const CycleParams& p) {
  p.validate();
  const double h = bounds::binary_entropy(bounds::Accuracy(p.delta).success_probability());
  return -p.thermal_energy() * ln2 * (1.0 - h) + 0.0;  // + 0.0 folds -0
}

double equilibrium_fraction(double delta) {
  bounds::Accuracy{delta};
  return 0.5 * (1.0 - delta);
}

double work_step3(const CycleParams& p) {
  p.validate();
  return p.thermal_energy() * ln2;
}

double work_step4(const CycleParams& p) {
  p.validate();
  return p.thermal_energy() * ln2 * qstate::von_neumann_entropy_even_mixture(p.theta);
}

double work_step5(const CycleParams& p) {
  p.validate();
  return 0.0;
}

WorkLedger ledger(const CycleParams& p) {
  WorkLedger l;
  l.w1 = work_step1(p);
  l.w2 = work_step2(p);
  l.w3 = work_step3(p);
  l.w4 = work_step4(p);
  l.w5 = work_step5(p);
  l.w_meas = 0.0;
  l.w_reset = 0.0 - l.w_meas;
  l.c = qstate::mixture_spectrum(p.theta).c;
  l.p0 = 2.0 * p.thermal_energy() / p.volume;
  l.v1 = l.c * p.volume / 2.0;
  l.v2 = (1.0 - l.c) * p.volume / 2.0;
  l.total = l.w1 + l.w2 + l.w3 + l.w4 + l.w5 + l.w_meas + l.w_reset;
  return l;
}

double closed_form_total(const CycleParams& p) {
  p.validate();
  const double h = bounds::binary_entropy(0.5 * (1.0 + p.delta));
  const double s = qstate::von_neumann_entropy_even_mixture(p.theta);
  return -p.thermal_energy() * ln2 * (1.0 - h - s);
}

double second_law_margin(const CycleParams& p) { return ledger(p).total; }

SecondLaw classify(const CycleParams& p, double margin, double tolerance) {
  if (std::abs(margin) <= tolerance * p.thermal_energy()) return SecondLaw::marginal;
  return margin > 0.0 ? SecondLaw::satisfied : SecondLaw::violated;
}

std::string_view to_string(SecondLaw s) {
  switch (s) {
    case SecondLaw::satisfied: return "satisfied";
    case SecondLaw::violated: return "violated";
    case SecondLaw::marginal: return "marginal";
  }
  return "unknown";
}

}  // namespace thermobound::cycle
