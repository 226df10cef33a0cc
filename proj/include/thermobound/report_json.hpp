#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "thermobound/bounds.hpp"
#include "thermobound/cycle.hpp"
#include "thermobound/gassim.hpp"

namespace thermobound {

using Json = nlohmann::ordered_json;

// Keys: w1 w2 w3 w4 w5 w_meas w_reset p0 v1 v2 c total.
Json ledger_to_json(const cycle::WorkLedger& ledger);

Json sim_report_to_json(const gassim::SimReport& report);

inline constexpr const char* kBoundsCsvHeader = "cos_theta,delta_th,delta_qi,delta_hol,relative_gap";

// One line per row, 12 significant digits, '\n' terminated, header first.
std::string bounds_to_csv(const std::vector<bounds::BoundResult>& rows);

Json bounds_to_json(const std::vector<bounds::BoundResult>& rows);

// printf("%.12g") formatting shared by the CSV writer.
std::string format_number(double v);

}  // namespace thermobound
