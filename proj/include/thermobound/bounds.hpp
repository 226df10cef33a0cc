#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "thermobound/entropy.hpp"

namespace thermobound::bounds {

using thermobound::binary_entropy;

// Discrimination accuracy delta in [0, 1]; success probability (1 + delta)/2.
class Accuracy {
 public:
  // Throws std::domain_error outside [0, 1].
  explicit Accuracy(double delta);

  double value() const { return delta_; }
  double success_probability() const { return 0.5 * (1.0 + delta_); }

 private:
  double delta_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), residual_(residual), iterations_(iterations) {}
  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

// A bound_table row failed; row() is the zero-based grid index.
class TableError : public std::runtime_error {
 public:
  TableError(std::size_t row, const std::string& what)
      : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

inline constexpr double kSolverTolerance = 1e-12;
inline constexpr int kSolverMaxIterations = 200;

struct Inversion {
  double p;
  int iterations;
  double residual;  // |H(p) - h|
};

/// The p in [1/2, 1] with H(p) = h, by bisection on the decreasing branch.
/// Bisection runs until the bracket cannot shrink further (or the iteration
/// cap), then the residual is checked against kSolverTolerance.
Inversion inverse_binary_entropy_upper(double h);

struct BoundSolve {
  double delta;
  int iterations;
  double residual;
};

/// Thermodynamic bound: H((1 + delta)/2) = 1 - H((1 + cos theta)/2).
BoundSolve delta_th(double theta);

/// Holevo-Helstrom optimum for pure states, sin(theta).
Accuracy delta_qi(double theta);

/// I(gas:memory) for one particle, built from the gas prior, the memory
/// marginal and the 2x2 joint table.
struct MutualInformation {
  double h_gas;
  double h_memory;
  double h_joint;
  double p_memory_1;
  std::array<std::array<double, 2>, 2> joint;  // joint[state][record]
  double value;        // h_gas + h_memory - h_joint
  double closed_form;  // 1 - H((1 + delta)/2)
};

MutualInformation mutual_information_gas_memory(Accuracy delta);

/// Holevo accessible-information bound: the delta at which I(gas:memory)
/// reaches S(rho). Solved on the explicit mutual-information chain against
/// the eigenvalue entropy of the mixture, independently of delta_th.
BoundSolve delta_hol(double theta);

struct BoundResult {
  double cos_theta;
  double theta;
  double delta_th;
  double delta_qi;
  double delta_hol;
  double relative_gap;  // (delta_th - delta_qi)/delta_th, 0 when delta_th == 0
  int solver_iterations;
  double solver_residual;
};

BoundResult bound_row(double cos_theta);

/// Uniform cos(theta) grid from cos_min to cos_max inclusive.
/// Throws std::invalid_argument on a bad grid and TableError if a row fails.
std::vector<BoundResult> bound_table(double cos_min, double cos_max, int steps);

// cos(theta) in [0, 1] -> theta in [0, pi/2]. Throws std::domain_error.
double theta_from_cos(double cos_theta);

}  // namespace thermobound::bounds
