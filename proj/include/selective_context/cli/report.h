// Copyright 2026 The Selective Context Authors.
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

#ifndef SELECTIVE_CONTEXT_CLI_REPORT_H_
#define SELECTIVE_CONTEXT_CLI_REPORT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "selective_context/selection/compression.h"

namespace selective_context {

inline constexpr int kReportSchemaVersion = 1;

// Rounds to `digits` significant decimal digits.
double RoundSignificant(double value, int digits = 6);

// Schema v1 report:
//   {"schema", "id", "requested_ratio", "achieved_token_ratio",
//    "achieved_unit_ratio", "threshold_bits", "level",
//    "units": [{"text", "self_info", "retained"}], "retained_text"}
// Reals are rounded to 6 significant digits; threshold_bits is null for the
// random baseline. Keys keep this order so a parse/dump cycle is
// byte-identical.
nlohmann::ordered_json ReportJson(std::string_view id,
                                  const CompressionResult& result,
                                  std::string_view retained_text);

std::string DumpReport(const nlohmann::ordered_json& report);

// Min-max normalized self-information per unit: the maximum maps to 1, the
// minimum to 0, and a constant list maps to all zeros.
std::vector<double> UnitIntensities(std::span<const double> values);

// Self-contained HTML page with an "Original" panel (removed units struck
// through) and a "Filtered" panel (retained units only). One span per unit
// per panel, background darkness proportional to UnitIntensities.
std::string RenderHtml(std::string_view title, const CompressionResult& result);

std::string EscapeHtml(std::string_view text);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_CLI_REPORT_H_
