#include "thermobound/bounds.hpp"

#include <cmath>
#include <string>

#include "thermobound/qstate.hpp"

namespace thermobound::bounds {

namespace {

struct Root {
  double x;
  int iterations;
  double residual;
};

// Root of a monotone f on [lo, hi] with a sign change. Halves the bracket
// until the midpoint coincides with an endpoint, so the answer is resolved
// to the last representable bit rather than to a residual threshold.
template <typename F>
Root bisect(F&& f, double lo, double hi) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return {lo, 0, 0.0};
  if (f_hi == 0.0) return {hi, 0, 0.0};
  const bool lo_negative = f_lo < 0.0;
  int it = 0;
  while (it < kSolverMaxIterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++it;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, it, 0.0};
    if ((f_mid < 0.0) == lo_negative) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  if (std::abs(f_lo) <= std::abs(f_hi)) return {lo, it, std::abs(f_lo)};
  return {hi, it, std::abs(f_hi)};
}

double clamp_unit(double v, const char* name) {
  if (!(v >= -kSolverTolerance && v <= 1.0 + kSolverTolerance)) {
    throw std::domain_error(std::string(name) + " " + std::to_string(v) + " outside [0, 1]");
  }
  return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

}  // namespace

Accuracy::Accuracy(double delta) : delta_(delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::domain_error("accuracy " + std::to_string(delta) + " outside [0, 1]");
  }
}

double theta_from_cos(double cos_theta) {
  if (!(cos_theta >= 0.0 && cos_theta <= 1.0)) {
    throw std::domain_error("cos(theta) " + std::to_string(cos_theta) + " outside [0, 1]");
  }
  if (cos_theta == 0.0) return qstate::kHalfPi;
  return std::acos(cos_theta);
}

Inversion inverse_binary_entropy_upper(double h) {
  h = clamp_unit(h, "entropy");
  if (h == 1.0) return {0.5, 0, 0.0};
  if (h == 0.0) return {1.0, 0, 0.0};
  const Root r = bisect([h](double p) { return binary_entropy(p) - h; }, 0.5, 1.0);
  if (r.residual > kSolverTolerance) {
    throw ConvergenceError("entropy inversion did not converge for h=" + std::to_string(h) +
                               " (residual " + std::to_string(r.residual) + ")",
                           r.residual, r.iterations);
  }
  return {r.x, r.iterations, r.residual};
}

BoundSolve delta_th(double theta) {
  const double s = qstate::von_neumann_entropy_even_mixture(theta);
  const Inversion inv = inverse_binary_entropy_upper(1.0 - s);
  return {clamp_unit(2.0 * inv.p - 1.0, "delta_th"), inv.iterations, inv.residual};
}

Accuracy delta_qi(double theta) {
  qstate::require_valid_theta(theta);
  return Accuracy(std::sin(theta));
}

MutualInformation mutual_information_gas_memory(Accuracy delta) {
  const double d = delta.value();
  MutualInformation mi{};
  const std::array<double, 2> p_gas{0.5, 0.5};
  mi.h_gas = shannon_entropy(p_gas);

  // Bayes: P(record 1) = P(1|psi1) P(psi1) + P(1|psi2) P(psi2)
  const double p_right = delta.success_probability();
  const double p_wrong = 0.5 * (1.0 - d);
  mi.p_memory_1 = p_right * p_gas[0] + p_wrong * p_gas[1];
  const std::array<double, 2> p_memory{mi.p_memory_1, 1.0 - mi.p_memory_1};
  mi.h_memory = shannon_entropy(p_memory);

  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      mi.joint[j][k] = 0.25 * (j == k ? 1.0 + d : 1.0 - d);
    }
  }
  const std::array<double, 4> flat{mi.joint[0][0], mi.joint[0][1], mi.joint[1][0],
                                   mi.joint[1][1]};
  mi.h_joint = shannon_entropy(flat);

  mi.value = mi.h_gas + mi.h_memory - mi.h_joint;
  mi.closed_form = 1.0 - binary_entropy(p_right);
  return mi;
}

BoundSolve delta_hol(double theta) {
  const auto [rho1, rho2] = qstate::build_density_pair(qstate::StatePair(theta));
  const double s = qstate::von_neumann_entropy_oracle(0.5 * (rho1 + rho2));
  const Root r = bisect(
      [s](double d) { return mutual_information_gas_memory(Accuracy(d)).value - s; }, 0.0, 1.0);
  if (r.residual > kSolverTolerance) {
    throw ConvergenceError("Holevo bound did not converge at theta=" + std::to_string(theta) +
                               " (residual " + std::to_string(r.residual) + ")",
                           r.residual, r.iterations);
  }
  return {r.x, r.iterations, r.residual};
}

BoundResult bound_row(double cos_theta) {
  const double theta = theta_from_cos(cos_theta);
  const BoundSolve th = delta_th(theta);
  const BoundSolve hol = delta_hol(theta);
  const double qi = delta_qi(theta).value();
  BoundResult row{};
  row.cos_theta = cos_theta;
  row.theta = theta;
  row.delta_th = th.delta;
  row.delta_qi = qi;
  row.delta_hol = hol.delta;
  row.relative_gap = th.delta > 0.0 ? (th.delta - qi) / th.delta : 0.0;
  row.solver_iterations = th.iterations;
  row.solver_residual = th.residual;
  return row;
}

std::vector<BoundResult> bound_table(double cos_min, double cos_max, int steps) {
  if (!(cos_min >= 0.0 && cos_max <= 1.0 && cos_min < cos_max) || steps < 2) {
    throw std::invalid_argument("bound_table needs 0 <= cos_min < cos_max <= 1 and steps >= 2");
  }
  std::vector<BoundResult> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  const double span = cos_max - cos_min;
  for (int i = 0; i < steps; ++i) {
    // Last point pinned to cos_max so the endpoint is exact.
    const double c = i + 1 == steps ? cos_max : cos_min + span * i / (steps - 1);
    try {
      rows.push_back(bound_row(c));
    } catch (const std::exception& e) {
      throw TableError(static_cast<std::size_t>(i), e.what());
    }
  }
  return rows;
}

}  // namespace thermobound::bounds
