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

#ifndef SELECTIVE_CONTEXT_SELECTION_COMPRESSION_H_
#define SELECTIVE_CONTEXT_SELECTION_COMPRESSION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "selective_context/scoring/scorer_backend.h"
#include "selective_context/scoring/self_information.h"
#include "selective_context/segmentation/lexical_unit.h"
#include "selective_context/segmentation/sentence_splitter.h"

namespace selective_context {

enum class Baseline {
  kSelfInformation,  // percentile filtering
  kRandom,           // uniform random deletion of the same unit count
};

struct CompressionConfig {
  double ratio =
      0.5;  // fraction of units targeted for removal; p = 100 * ratio
  UnitLevel level = UnitLevel::kPhrase;
  ScoringMode mode = ScoringMode::kPerSentence;
  Baseline baseline = Baseline::kSelfInformation;
  uint64_t seed = 0;  // random baseline only

  absl::Status Validate() const;
};

struct CompressionResult {
  UnitLevel level = UnitLevel::kPhrase;
  std::vector<LexicalUnit> retained;  // document order
  std::vector<LexicalUnit> removed;   // document order
  // Percentile threshold in bits; absent for the random baseline.
  std::optional<double> threshold;
  double requested_ratio = 0.0;
  double achieved_unit_ratio = 0.0;   // removed units / all units
  double achieved_token_ratio = 0.0;  // removed tokens / all tokens

  size_t unit_count() const { return retained.size() + removed.size(); }
  size_t RetainedTokenCount() const;
  size_t RemovedTokenCount() const;
  size_t TotalTokenCount() const {
    return RetainedTokenCount() + RemovedTokenCount();
  }

  // Every unit in document order, paired with whether it was kept.
  std::vector<std::pair<const LexicalUnit*, bool>> UnitsInOrder() const;
};

// Keeps units whose self-information is >= the p-th percentile of all unit
// values.
absl::StatusOr<CompressionResult> FilterUnits(
    std::span<const LexicalUnit> units, double p);

// Removes exactly round(ratio * n) units chosen uniformly without replacement
// by a SplitMix64 stream seeded with `seed`. Halves round away from zero.
absl::StatusOr<CompressionResult> RandomCompress(
    std::span<const LexicalUnit> units, double ratio, uint64_t seed);

// Everything the renderers need about one compressed document.
struct CompressedDocument {
  SegmentedDocument document;
  std::vector<ScoredToken> scored;
  CompressionResult result;
};

// tokenize -> split sentences -> score -> merge units -> filter.
absl::StatusOr<CompressedDocument> Compress(
    std::string_view text, const ScorerBackend& backend,
    const CompressionConfig& config,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

// Joins retained unit texts with single spaces, except that no space goes
// before a unit made only of non-opening punctuation and none after a unit
// made only of opening punctuation.
std::string RenderRetained(const CompressionResult& result);

// Whether a space goes between two units of the rendered text. Units that
// were neighbours in the document keep their original joint.
bool NeedsSeparator(const LexicalUnit& previous, const LexicalUnit& current);

// Same joining rule over an arbitrary unit text sequence.
std::string JoinUnitTexts(std::span<const std::string_view> texts);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SELECTION_COMPRESSION_H_
