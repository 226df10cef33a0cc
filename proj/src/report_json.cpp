#include "thermobound/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace thermobound {

namespace {

Json step_to_json(const gassim::StepEstimate& s, bool with_step) {
  Json j;
  if (with_step) j["step"] = s.step;
  j["sim_mean"] = s.sim_mean;
  j["sim_stderr"] = s.sim_stderr;
  j["analytic"] = s.analytic;
  j["abs_dev"] = s.abs_dev;
  j["rel_dev"] = s.rel_dev;
  j["quad_error"] = s.quad_error;
  j["passed"] = s.passed;
  return j;
}

double round12(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Json ledger_to_json(const cycle::WorkLedger& l) {
  Json j;
  j["w1"] = l.w1;
  j["w2"] = l.w2;
  j["w3"] = l.w3;
  j["w4"] = l.w4;
  j["w5"] = l.w5;
  j["w_meas"] = l.w_meas;
  j["w_reset"] = l.w_reset;
  j["p0"] = l.p0;
  j["v1"] = l.v1;
  j["v2"] = l.v2;
  j["c"] = l.c;
  j["total"] = l.total;
  return j;
}

Json sim_report_to_json(const gassim::SimReport& r) {
  const auto& p = r.config.params;
  Json config;
  config["theta"] = p.theta;
  config["cos_theta"] = std::cos(p.theta);
  config["delta"] = p.delta;
  config["particles"] = p.n_particles;
  config["volume"] = p.volume;
  config["temperature"] = p.temperature;
  config["boltzmann"] = p.boltzmann;
  config["substeps"] = r.config.wall_substeps;
  config["seeds"] = r.config.seeds;
  config["exact_counts"] = !r.config.sample_measurements;

  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(step_to_json(s, true));

  Json eq;
  eq["x_mean"] = r.equilibrium.x_mean;
  eq["x_stderr"] = r.equilibrium.x_stderr;
  eq["y_mean"] = r.equilibrium.y_mean;
  eq["y_stderr"] = r.equilibrium.y_stderr;
  eq["expected"] = r.equilibrium.expected;
  eq["passed"] = r.equilibrium.passed;

  Json homogeneity;
  homogeneity["max_abs_deviation"] = r.homogeneity_max_abs_deviation;
  homogeneity["max_z"] = r.homogeneity_max_z;

  Json j;
  j["config"] = std::move(config);
  j["steps"] = std::move(steps);
  j["meas_reset"] = r.meas_reset;
  j["equilibrium"] = std::move(eq);
  j["homogeneity"] = std::move(homogeneity);
  j["totals"] = step_to_json(r.total, false);
  j["analytic_ledger"] = ledger_to_json(r.analytic);
  j["passed"] = r.passed;
  return j;
}

std::string bounds_to_csv(const std::vector<bounds::BoundResult>& rows) {
  std::string out = kBoundsCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += format_number(r.cos_theta) + ',' + format_number(r.delta_th) + ',' +
           format_number(r.delta_qi) + ',' + format_number(r.delta_hol) + ',' +
           format_number(r.relative_gap) + '\n';
  }
  return out;
}

Json bounds_to_json(const std::vector<bounds::BoundResult>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["cos_theta"] = round12(r.cos_theta);
    j["delta_th"] = round12(r.delta_th);
    j["delta_qi"] = round12(r.delta_qi);
    j["delta_hol"] = round12(r.delta_hol);
    j["relative_gap"] = round12(r.relative_gap);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace thermobound
