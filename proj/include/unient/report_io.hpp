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

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "unient/inequality.hpp"

namespace unient {

// Columns: state_id,mode,theorem,q,s,exponent,lhs,rhs,slack,verdict,
// condition_met,permutation. The permutation is ';'-separated.
std::string csv_header();
std::string csv_row(std::string_view state_id, const InequalityReport& report);

nlohmann::json report_to_json(std::string_view state_id, const InequalityReport& report,
                              bool include_witness = false);
nlohmann::json roof_to_json(const RoofResult& roof, bool include_witness = false);

// Shortest round-trip-stable rendering used in every report ("%.12g").
std::string format_number(double value);

}  // namespace unient
