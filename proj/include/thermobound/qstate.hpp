#pragma once

#include <complex>
#include <utility>

namespace thermobound::qstate {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

// Two pure qubit states with |<psi1|psi2>| = cos(theta) and
// <psi1|psi2> = exp(i phi) cos(theta).
class StatePair {
 public:
  // Throws std::domain_error unless 0 <= theta <= pi/2 and 0 <= phi < 2 pi.
  StatePair(double theta, double phi = 0.0);

  // Builds the pair from raw (unnormalized) amplitude vectors. phi is the
  // argument of the overlap, wrapped into [0, 2 pi).
  static StatePair from_amplitudes(std::complex<double> a0, std::complex<double> a1,
                                   std::complex<double> b0, std::complex<double> b1);

  double theta() const { return theta_; }
  double phi() const { return phi_; }
  double overlap() const;  // |<psi1|psi2>|

 private:
  double theta_;
  double phi_;
};

// 2x2 complex Hermitian matrix
//   [ a          re + i im ]
//   [ re - i im  d         ]
struct Hermitian2 {
  double a = 0.0;
  double d = 0.0;
  double re = 0.0;
  double im = 0.0;

  double trace() const { return a + d; }
  double det() const { return a * d - (re * re + im * im); }

  friend Hermitian2 operator+(const Hermitian2& x, const Hermitian2& y) {
    return {x.a + y.a, x.d + y.d, x.re + y.re, x.im + y.im};
  }
  friend Hermitian2 operator-(const Hermitian2& x, const Hermitian2& y) {
    return {x.a - y.a, x.d - y.d, x.re - y.re, x.im - y.im};
  }
  friend Hermitian2 operator*(double s, const Hermitian2& x) {
    return {s * x.a, s * x.d, s * x.re, s * x.im};
  }
};

// Eigenvalues of the even mixture: c = (1 + cos theta)/2 and 1 - c.
struct MixtureSpectrum {
  double c;
  double one_minus_c;
};

/// Projectors onto psi1 and psi2, written in the orthonormal basis
/// {psi1, v} where v is the unit vector orthogonal to psi1 in span{psi1, psi2}
/// (any unit vector orthogonal to psi1 when theta = 0).
std::pair<Hermitian2, Hermitian2> build_density_pair(const StatePair& pair);

// Both eigenvalues, largest first.
std::pair<double, double> eig2(const Hermitian2& h);

/// ||rho1 - rho2||_1 for two pure states at overlap angle theta.
double trace_distance_closed(double theta);

/// Sum of absolute eigenvalues of rho1 - rho2, via eig2.
double trace_distance_oracle(const Hermitian2& rho1, const Hermitian2& rho2);

MixtureSpectrum mixture_spectrum(double theta);

/// S(rho) in bits for rho = (|psi1><psi1| + |psi2><psi2|)/2, closed form
/// H((1 + cos theta)/2).
double von_neumann_entropy_even_mixture(double theta);

/// Entropy oracle: -sum(lambda log2 lambda) over eig2 of the density matrix.
double von_neumann_entropy_oracle(const Hermitian2& rho);

/// True when "c == 1/2" (within 1e-12) and "theta == pi/2" (within 1e-9)
/// agree, i.e. the mixture is maximally mixed exactly for orthogonal states.
bool check_orthogonality_lemma(double theta);

// Throws std::domain_error unless 0 <= theta <= pi/2.
void require_valid_theta(double theta);

}  // namespace thermobound::qstate
