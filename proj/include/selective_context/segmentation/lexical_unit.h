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

#ifndef SELECTIVE_CONTEXT_SEGMENTATION_LEXICAL_UNIT_H_
#define SELECTIVE_CONTEXT_SEGMENTATION_LEXICAL_UNIT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "selective_context/scoring/scored_token.h"
#include "selective_context/segmentation/segmented_document.h"

namespace selective_context {

// Granularity at which content is kept or dropped.
enum class UnitLevel { kToken, kPhrase, kSentence };

std::string_view UnitLevelName(UnitLevel level);
absl::StatusOr<UnitLevel> ParseUnitLevel(std::string_view name);

// A contiguous run of tokens whose self-information is the sum of its
// tokens' values.
struct LexicalUnit {
  UnitLevel kind = UnitLevel::kToken;
  TokenRange tokens;
  ByteSpan span;
  std::string text;
  double self_info = 0.0;
};

// Groups scored tokens into units of `level`. `scored` must be aligned
// one-to-one with doc.tokens (same count, same spans).
absl::StatusOr<std::vector<LexicalUnit>> MergeUnits(
    std::span<const ScoredToken> scored, UnitLevel level,
    const SegmentedDocument& doc);

// Unit ranges for `level` without scores.
std::vector<TokenRange> UnitRanges(const SegmentedDocument& doc,
                                   UnitLevel level);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SEGMENTATION_LEXICAL_UNIT_H_
