// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "thermobound/bounds.hpp"
#include "thermobound/cycle.hpp"
#include "thermobound/gassim.hpp"
#include "thermobound/qstate.hpp"

using namespace thermobound;
using qstate::kHalfPi;
using qstate::kPi;
using cd = std::complex<double>;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v{false, ""};
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::printf("[%s] AC%-2d %s: %s (%.3f s)\n", v.pass ? "PASS" : "FAIL", id, name,
              v.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Independent 1e-6 grid scan of H((1 + d)/2) for the d nearest to target.
double grid_scan_delta(double target) {
  double best = 0.0;
  double best_err = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 1000000; ++i) {
    const double d = i * 1e-6;
    const double p = 0.5 * (1.0 + d);
    const double h = p >= 1.0 ? 0.0 : -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
    if (std::abs(h - target) < best_err) {
      best_err = std::abs(h - target);
      best = d;
    }
  }
  return best;
}

double theta_grid(int i) { return kHalfPi * i / 999.0; }

cycle::CycleParams params(double theta, double delta) {
  cycle::CycleParams p;
  p.theta = theta;
  p.delta = delta;
  return p;
}

}  // namespace

int main() {
  criterion(1, "closed forms vs eigen-oracle", [] {
    const auto t0 = std::chrono::steady_clock::now();
    double max_td = 0.0;
    double max_s = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double theta = theta_grid(i);
      const auto [r1, r2] = qstate::build_density_pair(qstate::StatePair(theta, std::fmod(0.7 * i, 2 * kPi)));
      max_td = std::max(max_td, std::abs(qstate::trace_distance_closed(theta) -
                                         qstate::trace_distance_oracle(r1, r2)));
      max_s = std::max(max_s, std::abs(qstate::von_neumann_entropy_even_mixture(theta) -
                                       qstate::von_neumann_entropy_oracle(0.5 * (r1 + r2))));
    }
    const double secs = elapsed_since(t0);
    return Verdict{max_td <= 1e-12 && max_s <= 1e-12 && secs < 1.0,
                   fmt("max |dTD|=%.2e", max_td) + fmt(", max |dS|=%.2e", max_s) +
                       fmt(", runtime %.3f s < 1 s", secs)};
  });

  criterion(2, "bound endpoints", [] {
    const double th0 = bounds::bound_row(0.0).delta_th;
    const double th1 = bounds::bound_row(1.0).delta_th;
    const double qi0 = bounds::bound_row(0.0).delta_qi;
    const double qi1 = bounds::bound_row(1.0).delta_qi;
    const double worst = std::max({std::abs(th0 - 1), std::abs(th1), std::abs(qi0 - 1), std::abs(qi1)});
    return Verdict{worst <= 1e-10, fmt("worst endpoint error %.2e <= 1e-10", worst)};
  });

  criterion(3, "delta_Hol == delta_th", [] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double theta = theta_grid(i);
      worst = std::max(worst, std::abs(bounds::delta_hol(theta).delta - bounds::delta_th(theta).delta));
    }
    return Verdict{worst <= 1e-10, fmt("max |dHol - dth| = %.2e <= 1e-10", worst)};
  });

  criterion(4, "bound ordering, gap shape, spot value", [] {
    bool ordered = true;
    for (int i = 0; i < 1000; ++i) {
      const double theta = theta_grid(i);
      ordered = ordered && bounds::delta_th(theta).delta >= bounds::delta_qi(theta).value() - 1e-12;
    }
    // gap -> 0 as cos -> 0, and decreases along the approach
    bool gap_to_zero = bounds::bound_row(0.0).relative_gap == 0.0;
    double previous = bounds::bound_row(0.1).relative_gap;
    for (double c : {0.03, 0.01, 0.003, 0.001}) {
      const double g = bounds::bound_row(c).relative_gap;
      gap_to_zero = gap_to_zero && g < previous;
      previous = g;
    }
    gap_to_zero = gap_to_zero && previous <= 1e-5;
    // both bounds -> 0 as cos -> 1
    bool vanish = true;
    double prev_th = 1.0;
    double prev_qi = 1.0;
    for (double c : {0.9, 0.99, 0.9999, 0.999999, 1.0}) {
      const auto row = bounds::bound_row(c);
      vanish = vanish && row.delta_th < prev_th && row.delta_qi < prev_qi;
      prev_th = row.delta_th;
      prev_qi = row.delta_qi;
    }
    vanish = vanish && prev_th == 0.0 && prev_qi == 0.0 &&
             bounds::bound_row(0.999999).delta_th < 1e-2;
    const double oracle = grid_scan_delta(1.0 - binary_entropy(0.75));
    const double spot = bounds::bound_row(0.5).delta_th;
    const bool spot_ok = std::abs(spot - oracle) <= 1e-3 && std::abs(spot - 0.9422) <= 1e-3;
    return Verdict{ordered && gap_to_zero && vanish && spot_ok,
                   std::string(ordered ? "ordered" : "ORDER VIOLATED") + ", gap(cos=0.001)=" +
                       fmt("%.2e", previous) + (vanish ? ", bounds vanish at cos=1" : ", NO VANISH") +
                       fmt(", dth(0.5)=%.7f", spot) + fmt(" vs grid-scan %.6f", oracle)};
  });

  criterion(5, "ledger closed form and sign change", [] {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      for (int j = 0; j < 50; ++j) {
        cycle::CycleParams p = params(kHalfPi * i / 49.0, j / 49.0);
        p.n_particles = 1e3;
        p.temperature = 2.0;
        worst = std::max(worst, std::abs(cycle::ledger(p).total - cycle::closed_form_total(p)) /
                                    p.thermal_energy());
      }
    }
    bool brackets = true;
    for (int k = 1; k <= 10; ++k) {
      const double theta = kHalfPi * k / 11.0;
      const double d = bounds::delta_th(theta).delta;
      brackets = brackets && cycle::ledger(params(theta, d - 1e-6)).total > 0.0 &&
                 cycle::ledger(params(theta, d + 1e-6)).total < 0.0;
    }
    return Verdict{worst <= 1e-12 && brackets,
                   fmt("max |total - closed|/NkT = %.2e <= 1e-12", worst) +
                       (brackets ? ", sign change brackets dth +-1e-6 (10 thetas)" : ", BRACKET FAILED")};
  });

  criterion(6, "Peres violation at delta = 1", [] {
    bool negative = true;
    for (int i = 1; i < 200; ++i) {
      negative = negative && cycle::ledger(params(kHalfPi * i / 200.0, 1.0)).total < 0.0;
    }
    const double ortho = std::abs(cycle::ledger(params(kHalfPi, 1.0)).total);
    return Verdict{negative && ortho <= 1e-12,
                   std::string(negative ? "total < 0 on 199 interior thetas" : "NONNEGATIVE TOTAL") +
                       fmt(", |total(pi/2)|/NkT = %.2e", ortho)};
  });

  criterion(7, "simulator vs analytic, expected counts", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240607);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      gassim::SimConfig c;
      c.params = params(kHalfPi * u(rng), u(rng));
      c.params.n_particles = 1e5;
      c.wall_substeps = 4096;
      c.sample_measurements = false;
      const auto report = gassim::simulate_cycle(c);
      for (const auto& s : report.steps) worst = std::max(worst, s.rel_dev);
    }
    const double secs = elapsed_since(t0);
    return Verdict{worst <= 1e-3 && secs < 5.0,
                   fmt("worst per-step rel dev %.2e <= 1e-3", worst) + fmt(", runtime %.3f s < 5 s", secs)};
  });

  criterion(8, "simulator vs analytic, sampled", [] {
    const auto t0 = std::chrono::steady_clock::now();
    int comparisons = 0;
    int misses = 0;
    double worst_sigma = 0.0;
    std::string missed;
    for (double delta : {0.25, 0.5, 0.9}) {
      for (double cos_theta : {0.2, 0.5, 0.8}) {
        gassim::SimConfig c;
        c.params = params(std::acos(cos_theta), delta);
        c.params.n_particles = 1e5;
        c.seeds.clear();
        for (std::uint64_t s = 1; s <= 16; ++s) c.seeds.push_back(s);
        const auto report = gassim::simulate_cycle(c);
        auto check = [&](const gassim::StepEstimate& s, const char* what) {
          ++comparisons;
          const double tol = 3.0 * s.sim_stderr + s.quad_error;
          worst_sigma = std::max(worst_sigma, s.abs_dev / tol);
          if (s.abs_dev > tol) {
            ++misses;
            missed += fmt(" [d=%.2f", delta) + fmt(" c=%.1f ", cos_theta) + what + "]";
          }
        };
        for (const auto& s : report.steps) check(s, ("W" + std::to_string(s.step)).c_str());
        check(report.total, "total");
        const auto& eq = report.equilibrium;
        comparisons += 2;
        if (std::abs(eq.x_mean - eq.expected) > 3.0 * eq.x_stderr) ++misses, missed += " x";
        if (std::abs(eq.y_mean - eq.expected) > 3.0 * eq.y_stderr) ++misses, missed += " y";
        worst_sigma = std::max({worst_sigma, std::abs(eq.x_mean - eq.expected) / (3.0 * eq.x_stderr),
                                std::abs(eq.y_mean - eq.expected) / (3.0 * eq.y_stderr)});
      }
    }
    const double secs = elapsed_since(t0);
    return Verdict{misses == 0 && secs < 60.0,
                   std::to_string(comparisons - misses) + "/" + std::to_string(comparisons) +
                       " within 3 SE (+quad bound)" + fmt(", worst dev/tol %.2f", worst_sigma) + missed +
                       fmt(", runtime %.3f s < 60 s", secs)};
  });

  criterion(9, "c = 1/2 iff orthogonal", [] {
    bool closed_ok = qstate::mixture_spectrum(kHalfPi).c == 0.5;
    for (int i = 0; i < 999; ++i) closed_ok = closed_ok && qstate::mixture_spectrum(theta_grid(i)).c != 0.5;

    // Random states in the computational basis; the mixture is assembled from
    // raw outer products and diagonalized with eig2.
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g;
    auto mixture_c = [](cd a0, cd a1, cd b0, cd b1) {
      const double na = std::norm(a0) + std::norm(a1);
      const double nb = std::norm(b0) + std::norm(b1);
      const cd off = 0.5 * (a0 * std::conj(a1) / na + b0 * std::conj(b1) / nb);
      const qstate::Hermitian2 rho{0.5 * (std::norm(a0) / na + std::norm(b0) / nb),
                                   0.5 * (std::norm(a1) / na + std::norm(b1) / nb), off.real(),
                                   off.imag()};
      return qstate::eig2(rho).first;
    };
    int orth = 0;
    int generic = 0;
    bool oracle_ok = true;
    for (int i = 0; i < 2000; ++i) {
      const cd a0(g(rng), g(rng)), a1(g(rng), g(rng));
      cd b0(g(rng), g(rng)), b1(g(rng), g(rng));
      const bool make_orthogonal = i % 2 == 0;
      if (make_orthogonal) {
        const cd phase = std::polar(1.0 + std::abs(g(rng)), g(rng));
        b0 = -std::conj(a1) * phase;
        b1 = std::conj(a0) * phase;
      }
      const double c = mixture_c(a0, a1, b0, b1);
      const bool half = std::abs(c - 0.5) <= 1e-12;
      const double theta = qstate::StatePair::from_amplitudes(a0, a1, b0, b1).theta();
      const bool orthogonal = std::abs(theta - kHalfPi) <= 1e-9;
      oracle_ok = oracle_ok && half == make_orthogonal && orthogonal == make_orthogonal &&
                  std::abs(c - qstate::mixture_spectrum(theta).c) <= 1e-12;
      (make_orthogonal ? orth : generic)++;
    }
    return Verdict{closed_ok && oracle_ok,
                   std::string(closed_ok ? "closed form exact on 1000-pt grid" : "CLOSED FORM FAILED") +
                       ", eigen-oracle on " + std::to_string(orth) + " orthogonal + " +
                       std::to_string(generic) + " random pairs" + (oracle_ok ? "" : " FAILED")};
  });

  criterion(10, "entropy inversion round trip", [] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double h = i / 999.0;
      worst = std::max(worst, std::abs(binary_entropy(bounds::inverse_binary_entropy_upper(h).p) - h));
    }
    return Verdict{worst <= 1e-12, fmt("max |H(Hinv(h)) - h| = %.2e <= 1e-12", worst)};
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
