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

#ifndef SELECTIVE_CONTEXT_SCORING_SELF_INFORMATION_H_
#define SELECTIVE_CONTEXT_SCORING_SELF_INFORMATION_H_

#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "selective_context/scoring/scored_token.h"
#include "selective_context/scoring/scorer_backend.h"
#include "selective_context/segmentation/segmented_document.h"

namespace selective_context {

enum class ScoringMode {
  // Context resets at every sentence start.
  kPerSentence,
  // One running context over the whole document (chunked when the backend
  // bounds request size).
  kWholeDocument,
};

std::string_view ScoringModeName(ScoringMode mode);

// Self-information of every token of `doc`, in document order. Each context
// starts from a begin-of-sequence marker.
absl::StatusOr<std::vector<ScoredToken>> ScoreTokens(
    const SegmentedDocument& doc, const ScorerBackend& backend,
    ScoringMode mode = ScoringMode::kPerSentence);

// Self-information of the target tokens of one segment, conditioned on its
// context tokens.
absl::StatusOr<std::vector<ScoredToken>> ScoreSegment(
    const SegmentedDocument& doc, const ScorerBackend& backend,
    const ScoringSegment& segment);

// Mean self-information in bits per token.
absl::StatusOr<double> SentenceEntropy(std::span<const ScoredToken> scored);

// 2 raised to SentenceEntropy.
absl::StatusOr<double> SentencePerplexity(std::span<const ScoredToken> scored);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SCORING_SELF_INFORMATION_H_
