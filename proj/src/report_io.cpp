// Copyright 2026 The unient Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unient/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace unient {

using nlohmann::json;

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_header() {
  return "state_id,mode,theorem,q,s,exponent,lhs,rhs,slack,verdict,condition_met,permutation";
}

std::string csv_row(std::string_view state_id, const InequalityReport& report) {
  std::ostringstream row;
  row << state_id << ',' << to_string(report.mode) << ',' << to_string(report.theorem) << ','
      << format_number(report.q) << ',' << format_number(report.s) << ','
      << format_number(report.exponent) << ',' << format_number(report.lhs) << ','
      << format_number(report.rhs) << ',' << format_number(report.slack) << ','
      << to_string(report.verdict) << ',';
  if (report.condition_met) row << (*report.condition_met ? "true" : "false");
  row << ',';
  for (std::size_t j = 0; j < report.permutation.size(); ++j)
    row << (j ? ";" : "") << report.permutation[j];
  return row.str();
}

json roof_to_json(const RoofResult& roof, bool include_witness) {
  json out = {{"value", roof.value},
              {"mode", to_string(roof.mode)},
              {"restarts_used", roof.restarts_used},
              {"converged", roof.converged},
              {"exact", roof.exact},
              {"ensemble_size", roof.ensemble_size},
              {"at_ensemble_cap", roof.at_ensemble_cap}};
  if (include_witness) {
    json members = json::array();
    for (const auto& m : roof.witness.members()) {
      json amps = json::array();
      for (Eigen::Index i = 0; i < m.state.dim(); ++i)
        amps.push_back({m.state.amplitudes()(i).real(), m.state.amplitudes()(i).imag()});
      members.push_back({{"probability", m.probability}, {"amplitudes", std::move(amps)}});
    }
    out["witness"] = std::move(members);
  }
  return out;
}

json report_to_json(std::string_view state_id, const InequalityReport& report, bool include_witness) {
  json terms = json::array();
  for (const auto& t : report.rhs_terms)
    terms.push_back({{"party", t.party}, {"position", t.position}, {"pairwise", t.pairwise}, {"weight", t.weight}});
  json out = {{"state_id", state_id},
              {"mode", to_string(report.mode)},
              {"theorem", to_string(report.theorem)},
              {"q", report.q},
              {"s", report.s},
              {"exponent", report.exponent},
              {"lhs", report.lhs},
              {"lhs_value", report.lhs_value},
              {"lhs_bound", to_string(report.lhs_bound)},
              {"rhs_terms", std::move(terms)},
              {"rhs", report.rhs},
              {"slack", report.slack},
              {"permutation", report.permutation},
              {"verdict", to_string(report.verdict)},
              {"in_region", report.in_region},
              {"zero_power_convention", report.zero_power_convention},
              {"all_converged", report.all_converged},
              {"any_at_ensemble_cap", report.any_at_cap}};
  out["condition_met"] = report.condition_met ? json(*report.condition_met) : json(nullptr);
  if (report.profile) {
    if (report.profile->lhs_roof) out["lhs_roof"] = roof_to_json(*report.profile->lhs_roof, include_witness);
    json pairs = json::array();
    for (const auto& roof : report.profile->pair_roofs) pairs.push_back(roof_to_json(roof, include_witness));
    out["pair_roofs"] = std::move(pairs);
  }
  return out;
}

}  // namespace unient
