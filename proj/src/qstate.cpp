#include "thermobound/qstate.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "thermobound/entropy.hpp"

namespace thermobound::qstate {

void require_valid_theta(double theta) {
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw std::domain_error("theta " + std::to_string(theta) + " outside [0, pi/2]");
  }
}

StatePair::StatePair(double theta, double phi) : theta_(theta), phi_(phi) {
  require_valid_theta(theta);
  if (!(phi >= 0.0 && phi < 2.0 * kPi)) {
    throw std::domain_error("phi " + std::to_string(phi) + " outside [0, 2 pi)");
  }
}

StatePair StatePair::from_amplitudes(std::complex<double> a0, std::complex<double> a1,
                                     std::complex<double> b0, std::complex<double> b1) {
  const double na = std::sqrt(std::norm(a0) + std::norm(a1));
  const double nb = std::sqrt(std::norm(b0) + std::norm(b1));
  if (na == 0.0 || nb == 0.0) {
    throw std::domain_error("from_amplitudes: zero state vector");
  }
  const std::complex<double> inner = std::conj(a0) * b0 + std::conj(a1) * b1;
  // |a0 b1 - a1 b0| = |a||b| sin(theta) in two dimensions; atan2 keeps
  // precision at both ends of the range.
  const double wedge = std::abs(a0 * b1 - a1 * b0);
  double theta = std::atan2(wedge, std::abs(inner));
  if (theta > kHalfPi) theta = kHalfPi;
  double phi = std::abs(inner) > 0.0 ? std::arg(inner) : 0.0;
  if (phi < 0.0) phi += 2.0 * kPi;
  if (phi >= 2.0 * kPi) phi = 0.0;
  return StatePair(theta, phi);
}

double StatePair::overlap() const { return std::cos(theta_); }

std::pair<Hermitian2, Hermitian2> build_density_pair(const StatePair& pair) {
  const double c = std::cos(pair.theta());
  const double s = std::sin(pair.theta());
  const Hermitian2 rho1{1.0, 0.0, 0.0, 0.0};
  // psi2 = exp(i phi) cos(theta) psi1 + sin(theta) v
  const Hermitian2 rho2{c * c, s * s, c * s * std::cos(pair.phi()), c * s * std::sin(pair.phi())};
  return {rho1, rho2};
}

std::pair<double, double> eig2(const Hermitian2& h) {
  const double mean = 0.5 * (h.a + h.d);
  const double half_gap = 0.5 * (h.a - h.d);
  const double radius = std::hypot(half_gap, std::hypot(h.re, h.im));
  return {mean + radius, mean - radius};
}

double trace_distance_closed(double theta) {
  require_valid_theta(theta);
  return 2.0 * std::sin(theta);
}

double trace_distance_oracle(const Hermitian2& rho1, const Hermitian2& rho2) {
  const auto [hi, lo] = eig2(rho1 - rho2);
  return std::abs(hi) + std::abs(lo);
}

MixtureSpectrum mixture_spectrum(double theta) {
  require_valid_theta(theta);
  const double c = 0.5 * (1.0 + std::cos(theta));
  return {c, 1.0 - c};
}

double von_neumann_entropy_even_mixture(double theta) {
  return binary_entropy(mixture_spectrum(theta).c);
}

double von_neumann_entropy_oracle(const Hermitian2& rho) {
  const auto [hi, lo] = eig2(rho);
  const std::array<double, 2> spectrum{hi, lo};
  return shannon_entropy(spectrum);
}

bool check_orthogonality_lemma(double theta) {
  const bool maximally_mixed = std::abs(mixture_spectrum(theta).c - 0.5) <= 1e-12;
  const bool orthogonal = std::abs(theta - kHalfPi) <= 1e-9;
  return maximally_mixed == orthogonal;
}

}  // namespace thermobound::qstate
