#include "thermobound/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace thermobound {

namespace {

constexpr double kDomainSlack = 1e-12;

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double binary_entropy(double p) {
  if (!(p >= -kDomainSlack && p <= 1.0 + kDomainSlack)) {
    throw std::domain_error("binary_entropy: probability " + std::to_string(p) +
                            " outside [0, 1]");
  }
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -plogp(p) - plogp(1.0 - p);
}

double shannon_entropy(std::span<const double> weights) {
  double h = 0.0;
  for (double w : weights) {
    if (w < -kDomainSlack) {
      throw std::domain_error("shannon_entropy: negative weight " + std::to_string(w));
    }
    h -= plogp(w);
  }
  return h;
}

}  // namespace thermobound
