#pragma once

#include <span>

namespace thermobound {

/// Binary Shannon entropy in bits, with 0 log 0 = 0.
/// Throws std::domain_error if p lies outside [0, 1] by more than 1e-12.
double binary_entropy(double p);

/// -sum(w log2 w) over a probability vector; zero weights contribute nothing.
/// Weights in [-1e-12, 0) are treated as zero (round-off from eigen-solvers).
double shannon_entropy(std::span<const double> weights);

}  // namespace thermobound
