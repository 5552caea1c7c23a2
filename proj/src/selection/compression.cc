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

#include "selective_context/selection/compression.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "selective_context/segmentation/unicode_text.h"
#include "selective_context/selection/percentile.h"
#include "selective_context/selection/splitmix64.h"
#include "selective_context/status_macros.h"

namespace selective_context {
namespace {

absl::Status ValidateRatio(double ratio) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("compression ratio must be in [0, 1], got ", ratio));
  }
  return absl::OkStatus();
}

size_t TokenCount(std::span<const LexicalUnit> units) {
  size_t count = 0;
  for (const LexicalUnit& unit : units) count += unit.tokens.size();
  return count;
}

CompressionResult Partition(std::span<const LexicalUnit> units,
                            const std::vector<bool>& keep) {
  CompressionResult result;
  result.level = units.front().kind;
  for (size_t i = 0; i < units.size(); ++i) {
    (keep[i] ? result.retained : result.removed).push_back(units[i]);
  }
  result.achieved_unit_ratio = static_cast<double>(result.removed.size()) /
                               static_cast<double>(units.size());
  const size_t total = TokenCount(units);
  result.achieved_token_ratio =
      total == 0 ? 0.0
                 : static_cast<double>(result.RemovedTokenCount()) /
                       static_cast<double>(total);
  return result;
}

bool IsOpeningOnly(std::string_view text) {
  if (!IsAllPunctuation(text)) return false;
  for (size_t i = 0; i < text.size();) {
    const CodePoint cp = DecodeAt(text, i);
    if (!IsOpeningPunctuation(cp.value)) return false;
    i = cp.end;
  }
  return true;
}

bool IsClosingOnly(std::string_view text) {
  return IsAllPunctuation(text) &&
         !IsOpeningPunctuation(DecodeAt(text, 0).value);
}

bool NeedsSpace(std::string_view previous, std::string_view current) {
  return !IsClosingOnly(current) && !IsOpeningOnly(previous);
}

}  // namespace

absl::Status CompressionConfig::Validate() const {
  return ValidateRatio(ratio);
}

size_t CompressionResult::RetainedTokenCount() const {
  return TokenCount(retained);
}

size_t CompressionResult::RemovedTokenCount() const {
  return TokenCount(removed);
}

std::vector<std::pair<const LexicalUnit*, bool>>
CompressionResult::UnitsInOrder() const {
  std::vector<std::pair<const LexicalUnit*, bool>> out;
  out.reserve(unit_count());
  size_t r = 0;
  size_t d = 0;
  while (r < retained.size() || d < removed.size()) {
    const bool take_retained =
        d == removed.size() ||
        (r < retained.size() &&
         retained[r].tokens.begin < removed[d].tokens.begin);
    if (take_retained) {
      out.emplace_back(&retained[r++], true);
    } else {
      out.emplace_back(&removed[d++], false);
    }
  }
  return out;
}

absl::StatusOr<CompressionResult> FilterUnits(
    std::span<const LexicalUnit> units, double p) {
  if (units.empty()) {
    return absl::InvalidArgumentError("no lexical units to filter");
  }
  std::vector<double> values;
  values.reserve(units.size());
  for (const LexicalUnit& unit : units) values.push_back(unit.self_info);
  SC_ASSIGN_OR_RETURN(double threshold, PercentileThreshold(values, p));

  std::vector<bool> keep(units.size());
  for (size_t i = 0; i < units.size(); ++i) {
    keep[i] = units[i].self_info >= threshold;
  }
  CompressionResult result = Partition(units, keep);
  result.threshold = threshold;
  result.requested_ratio = p / 100.0;
  return result;
}

absl::StatusOr<CompressionResult> RandomCompress(
    std::span<const LexicalUnit> units, double ratio, uint64_t seed) {
  SC_RETURN_IF_ERROR(ValidateRatio(ratio));
  if (units.empty()) {
    return absl::InvalidArgumentError("no lexical units to filter");
  }
  const size_t n = units.size();
  const size_t remove =
      static_cast<size_t>(std::llround(ratio * static_cast<double>(n)));

  // Partial Fisher-Yates: the first `remove` slots end up a uniform sample.
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  for (size_t i = 0; i < remove; ++i) {
    const size_t j = i + static_cast<size_t>(rng.Below(n - i));
    std::swap(order[i], order[j]);
  }
  std::vector<bool> keep(n, true);
  for (size_t i = 0; i < remove; ++i) keep[order[i]] = false;

  CompressionResult result = Partition(units, keep);
  result.requested_ratio = ratio;
  return result;
}

absl::StatusOr<CompressedDocument> Compress(
    std::string_view text, const ScorerBackend& backend,
    const CompressionConfig& config, const AbbreviationList& abbreviations) {
  SC_RETURN_IF_ERROR(config.Validate());
  CompressedDocument out;
  out.document = Segment(text, abbreviations);
  if (out.document.tokens.empty()) {
    return absl::InvalidArgumentError("text is empty after normalization");
  }
  SC_ASSIGN_OR_RETURN(out.scored,
                      ScoreTokens(out.document, backend, config.mode));
  SC_ASSIGN_OR_RETURN(std::vector<LexicalUnit> units,
                      MergeUnits(out.scored, config.level, out.document));
  if (config.baseline == Baseline::kRandom) {
    SC_ASSIGN_OR_RETURN(out.result,
                        RandomCompress(units, config.ratio, config.seed));
  } else {
    SC_ASSIGN_OR_RETURN(out.result, FilterUnits(units, 100.0 * config.ratio));
    out.result.requested_ratio = config.ratio;
  }
  return out;
}

std::string JoinUnitTexts(std::span<const std::string_view> texts) {
  std::string out;
  for (size_t i = 0; i < texts.size(); ++i) {
    if (i > 0 && NeedsSpace(texts[i - 1], texts[i])) out.push_back(' ');
    out += texts[i];
  }
  return out;
}

bool NeedsSeparator(const LexicalUnit& previous, const LexicalUnit& current) {
  if (previous.tokens.end == current.tokens.begin && !current.tokens.empty()) {
    return previous.span.end != current.span.begin;
  }
  return NeedsSpace(previous.text, current.text);
}

std::string RenderRetained(const CompressionResult& result) {
  std::string out;
  const std::vector<LexicalUnit>& units = result.retained;
  for (size_t i = 0; i < units.size(); ++i) {
    if (i > 0 && NeedsSeparator(units[i - 1], units[i])) out.push_back(' ');
    out += units[i].text;
  }
  return out;
}

}  // namespace selective_context
