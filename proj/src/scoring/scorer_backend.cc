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

#include "selective_context/scoring/scorer_backend.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace selective_context {

std::string_view ScorerKindName(ScorerKind kind) {
  switch (kind) {
    case ScorerKind::kNgram:
      return "ngram";
    case ScorerKind::kRemote:
      return "remote";
    case ScorerKind::kUniform:
      return "uniform";
  }
  return "?";
}

absl::StatusOr<std::vector<std::vector<double>>> ScorerBackend::LogProbsBatch(
    const SegmentedDocument& doc,
    std::span<const ScoringSegment> segments) const {
  std::vector<std::vector<double>> out;
  out.reserve(segments.size());
  for (const ScoringSegment& segment : segments) {
    absl::StatusOr<std::vector<double>> logprobs = LogProbs(doc, segment);
    if (!logprobs.ok()) {
      return AnnotateSegmentError(logprobs.status(), doc, segment);
    }
    out.push_back(*std::move(logprobs));
  }
  return out;
}

absl::Status AnnotateSegmentError(const absl::Status& status,
                                  const SegmentedDocument& doc,
                                  const ScoringSegment& segment) {
  const ByteSpan span = doc.SpanOfTokens(segment.target);
  return absl::Status(
      status.code(),
      absl::StrCat("scoring tokens [", segment.target.begin, ", ",
                   segment.target.end, ") at bytes [", span.begin, ", ",
                   span.end, "): ", status.message()));
}

absl::StatusOr<UniformScorer> UniformScorer::Create(size_t vocab_size) {
  if (vocab_size < 1) {
    return absl::InvalidArgumentError("uniform scorer needs vocab size >= 1");
  }
  return UniformScorer(vocab_size);
}

absl::StatusOr<std::vector<double>> UniformScorer::LogProbs(
    const SegmentedDocument& /*doc*/, const ScoringSegment& segment) const {
  return std::vector<double>(segment.target.size(),
                             -std::log(static_cast<double>(vocab_size_)));
}

}  // namespace selective_context
