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

#ifndef SELECTIVE_CONTEXT_SCORING_SCORER_BACKEND_H_
#define SELECTIVE_CONTEXT_SCORING_SCORER_BACKEND_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "selective_context/segmentation/segmented_document.h"

namespace selective_context {

enum class ScorerKind { kNgram, kRemote, kUniform };

std::string_view ScorerKindName(ScorerKind kind);

// One scoring request: the tokens of `target` are scored after a
// begin-of-sequence marker followed by the tokens of `context`. The context
// immediately precedes the target (context.end == target.begin) and may be
// empty.
struct ScoringSegment {
  TokenRange context;
  TokenRange target;

  static ScoringSegment Of(TokenRange target) {
    return ScoringSegment{TokenRange{target.begin, target.begin}, target};
  }
};

// A causal language model seen as a source of token log-probabilities.
//
// Implementations are immutable after construction and safe to share between
// threads. Scoring the same segment twice yields identical values; remote
// implementations only ever request echo scoring of the supplied text.
class ScorerBackend {
 public:
  virtual ~ScorerBackend() = default;

  virtual ScorerKind kind() const = 0;

  // Natural-log probability of every target token of `segment`, in order.
  virtual absl::StatusOr<std::vector<double>> LogProbs(
      const SegmentedDocument& doc, const ScoringSegment& segment) const = 0;

  // Scores several independent segments; results keep the input order. The
  // default runs LogProbs sequentially and stops at the first failure.
  virtual absl::StatusOr<std::vector<std::vector<double>>> LogProbsBatch(
      const SegmentedDocument& doc,
      std::span<const ScoringSegment> segments) const;

  // Upper bound on the text bytes of one request, 0 for unbounded.
  virtual size_t max_request_bytes() const { return 0; }
};

// Prefixes `status` with the byte span of the failing segment.
absl::Status AnnotateSegmentError(const absl::Status& status,
                                  const SegmentedDocument& doc,
                                  const ScoringSegment& segment);

// Every token scores -ln(vocab_size); handy for calibration and smoke runs.
class UniformScorer final : public ScorerBackend {
 public:
  static absl::StatusOr<UniformScorer> Create(size_t vocab_size);

  ScorerKind kind() const override { return ScorerKind::kUniform; }
  absl::StatusOr<std::vector<double>> LogProbs(
      const SegmentedDocument& doc,
      const ScoringSegment& segment) const override;

  size_t vocab_size() const { return vocab_size_; }

 private:
  explicit UniformScorer(size_t vocab_size) : vocab_size_(vocab_size) {}
  size_t vocab_size_;
};

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SCORING_SCORER_BACKEND_H_
