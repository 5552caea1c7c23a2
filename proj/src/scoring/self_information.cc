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

#include "selective_context/scoring/self_information.h"

#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "selective_context/status_macros.h"

namespace selective_context {
namespace {

absl::Status AppendScored(const SegmentedDocument& doc,
                          const ScoringSegment& segment,
                          const std::vector<double>& logprobs,
                          std::vector<ScoredToken>& out) {
  if (logprobs.size() != segment.target.size()) {
    return AnnotateSegmentError(
        absl::InternalError(absl::StrCat("backend returned ", logprobs.size(),
                                         " log-probabilities for ",
                                         segment.target.size(), " tokens")),
        doc, segment);
  }
  for (size_t i = 0; i < logprobs.size(); ++i) {
    const double lp = logprobs[i];
    if (!std::isfinite(lp) || lp > 0.0) {
      return AnnotateSegmentError(
          absl::DataLossError(
              absl::StrCat("invalid log-probability ", lp, " for token \"",
                           doc.tokens[segment.target.begin + i].text, "\"")),
          doc, segment);
    }
    const Token& token = doc.tokens[segment.target.begin + i];
    out.push_back(ScoredToken::FromLogProb(token.text, token.span, lp));
  }
  return absl::OkStatus();
}

std::vector<ScoringSegment> PackSentences(const SegmentedDocument& doc,
                                          size_t budget) {
  std::vector<ScoringSegment> segments;
  TokenRange chunk{0, 0};
  for (const TokenRange& sentence : doc.sentence_tokens) {
    if (sentence.empty()) continue;
    const TokenRange grown{chunk.empty() ? sentence.begin : chunk.begin,
                           sentence.end};
    if (!chunk.empty() && doc.SpanOfTokens(grown).size() > budget) {
      segments.push_back(ScoringSegment::Of(chunk));
      chunk = sentence;
    } else {
      chunk = grown;
    }
  }
  if (!chunk.empty()) segments.push_back(ScoringSegment::Of(chunk));
  return segments;
}

}  // namespace

std::string_view ScoringModeName(ScoringMode mode) {
  return mode == ScoringMode::kPerSentence ? "sentence" : "document";
}

absl::StatusOr<std::vector<ScoredToken>> ScoreTokens(
    const SegmentedDocument& doc, const ScorerBackend& backend,
    ScoringMode mode) {
  if (doc.tokens.empty()) {
    return absl::InvalidArgumentError("nothing to score: no tokens");
  }
  std::vector<ScoringSegment> segments;
  if (mode == ScoringMode::kPerSentence) {
    for (const TokenRange& sentence : doc.sentence_tokens) {
      if (!sentence.empty()) segments.push_back(ScoringSegment::Of(sentence));
    }
  } else if (backend.max_request_bytes() == 0) {
    segments.push_back(ScoringSegment::Of(TokenRange{0, doc.tokens.size()}));
  } else {
    segments = PackSentences(doc, backend.max_request_bytes());
  }

  size_t expected = 0;
  for (const ScoringSegment& segment : segments) {
    if (segment.target.begin != expected) break;
    expected = segment.target.end;
  }
  if (expected != doc.tokens.size()) {
    return absl::InvalidArgumentError(
        "sentence ranges do not cover the document tokens in order");
  }

  SC_ASSIGN_OR_RETURN(auto logprobs, backend.LogProbsBatch(doc, segments));
  if (logprobs.size() != segments.size()) {
    return absl::InternalError("backend dropped scoring segments");
  }
  std::vector<ScoredToken> scored;
  scored.reserve(doc.tokens.size());
  for (size_t s = 0; s < segments.size(); ++s) {
    SC_RETURN_IF_ERROR(AppendScored(doc, segments[s], logprobs[s], scored));
  }
  return scored;
}

absl::StatusOr<std::vector<ScoredToken>> ScoreSegment(
    const SegmentedDocument& doc, const ScorerBackend& backend,
    const ScoringSegment& segment) {
  if (segment.target.empty()) {
    return absl::InvalidArgumentError("nothing to score: empty segment");
  }
  if (segment.context.end != segment.target.begin ||
      segment.target.end > doc.tokens.size()) {
    return absl::InvalidArgumentError("malformed scoring segment");
  }
  absl::StatusOr<std::vector<double>> logprobs = backend.LogProbs(doc, segment);
  if (!logprobs.ok()) {
    return AnnotateSegmentError(logprobs.status(), doc, segment);
  }
  std::vector<ScoredToken> scored;
  SC_RETURN_IF_ERROR(AppendScored(doc, segment, *logprobs, scored));
  return scored;
}

absl::StatusOr<double> SentenceEntropy(std::span<const ScoredToken> scored) {
  if (scored.empty()) {
    return absl::InvalidArgumentError("entropy of an empty token sequence");
  }
  double sum = 0.0;
  for (const ScoredToken& token : scored) sum += token.self_info;
  return sum / static_cast<double>(scored.size());
}

absl::StatusOr<double> SentencePerplexity(std::span<const ScoredToken> scored) {
  SC_ASSIGN_OR_RETURN(double entropy, SentenceEntropy(scored));
  return std::exp2(entropy);
}

}  // namespace selective_context
