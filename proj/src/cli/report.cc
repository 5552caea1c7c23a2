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

#include "selective_context/cli/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "selective_context/string_view_compat.h"

namespace selective_context {
namespace {

using nlohmann::ordered_json;

// Single-hue ramp; alpha carries the intensity.
constexpr char kRampRgb[] = "178, 34, 34";

void AppendSpan(std::string& out, const LexicalUnit& unit, double intensity,
                bool struck) {
  absl::StrAppendFormat(
      &out,
      "<span class=\"unit%s\" data-self-info=\"%.6g\" "
      "style=\"background-color: rgba(%s, %.4f);%s\">%s</span>",
      struck ? " removed" : "", unit.self_info, kRampRgb, intensity,
      struck ? " text-decoration: line-through;" : "", EscapeHtml(unit.text));
}

}  // namespace

double RoundSignificant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value + 0.0;
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

ordered_json ReportJson(std::string_view id, const CompressionResult& result,
                        std::string_view retained_text) {
  ordered_json report;
  report["schema"] = kReportSchemaVersion;
  report["id"] = std::string(id);
  report["requested_ratio"] = RoundSignificant(result.requested_ratio);
  report["achieved_token_ratio"] =
      RoundSignificant(result.achieved_token_ratio);
  report["achieved_unit_ratio"] = RoundSignificant(result.achieved_unit_ratio);
  report["threshold_bits"] =
      result.threshold.has_value()
          ? ordered_json(RoundSignificant(*result.threshold))
          : ordered_json(nullptr);
  report["level"] = std::string(UnitLevelName(result.level));
  ordered_json units = ordered_json::array();
  for (const auto& [unit, retained] : result.UnitsInOrder()) {
    ordered_json entry;
    entry["text"] = unit->text;
    entry["self_info"] = RoundSignificant(unit->self_info);
    entry["retained"] = retained;
    units.push_back(std::move(entry));
  }
  report["units"] = std::move(units);
  report["retained_text"] = std::string(retained_text);
  return report;
}

std::string DumpReport(const ordered_json& report) {
  return report.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

std::vector<double> UnitIntensities(std::span<const double> values) {
  std::vector<double> out(values.size(), 0.0);
  if (values.empty()) return out;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  for (size_t i = 0; i < values.size(); ++i) {
    out[i] = (values[i] - *lo) / range;
  }
  return out;
}

std::string EscapeHtml(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&#39;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string RenderHtml(std::string_view title,
                       const CompressionResult& result) {
  const auto units = result.UnitsInOrder();
  std::vector<double> values;
  values.reserve(units.size());
  for (const auto& [unit, retained] : units) values.push_back(unit->self_info);
  const std::vector<double> intensity = UnitIntensities(values);

  std::string out;
  absl::StrAppend(
      &out,
      "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\"/>\n"
      "<title>",
      EscapeHtml(title),
      "</title>\n<style>\n"
      "body { font-family: Georgia, serif; max-width: 60em; margin: 2em auto; "
      "line-height: 1.7; }\n"
      ".panel { border: 1px solid #444; padding: 0.8em 1em; margin-bottom: "
      "1.5em; }\n"
      ".unit { border-radius: 2px; }\n"
      "</style>\n</head>\n<body>\n");
  absl::StrAppendFormat(
      &out,
      "<p class=\"summary\">level: %s, requested ratio: %.6g, removed units: "
      "%.6g, removed tokens: %.6g</p>\n",
      AsAbsl(UnitLevelName(result.level)), result.requested_ratio,
      result.achieved_unit_ratio, result.achieved_token_ratio);

  out +=
      "<div class=\"panel\" id=\"original\">\n<p><strong>Original:</strong> ";
  for (size_t i = 0; i < units.size(); ++i) {
    if (i > 0 && NeedsSeparator(*units[i - 1].first, *units[i].first)) {
      out.push_back(' ');
    }
    AppendSpan(out, *units[i].first, intensity[i], !units[i].second);
  }
  out += "</p>\n</div>\n";

  out +=
      "<div class=\"panel\" id=\"filtered\">\n<p><strong>Filtered:</strong> ";
  const LexicalUnit* previous = nullptr;
  for (size_t i = 0; i < units.size(); ++i) {
    if (!units[i].second) continue;
    if (previous != nullptr && NeedsSeparator(*previous, *units[i].first)) {
      out.push_back(' ');
    }
    AppendSpan(out, *units[i].first, intensity[i], false);
    previous = units[i].first;
  }
  out += "</p>\n</div>\n</body>\n</html>\n";
  return out;
}

}  // namespace selective_context
