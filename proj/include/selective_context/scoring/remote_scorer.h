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

#ifndef SELECTIVE_CONTEXT_SCORING_REMOTE_SCORER_H_
#define SELECTIVE_CONTEXT_SCORING_REMOTE_SCORER_H_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "selective_context/scoring/scorer_backend.h"

namespace selective_context {

// Wire dialect spoken by the remote endpoint.
enum class RemoteProfile {
  // POST <endpoint>/score  {"text": ..., "echo": true}
  //   -> {"tokens": [...], "token_logprobs": [...], "byte_offsets": [[b, e]]}
  kNative,
  // POST <endpoint>/completions with echo=true, max_tokens=0, logprobs=0;
  // reads choices[0].logprobs.{tokens, token_logprobs, text_offset}.
  kOpenAiCompletions,
};

// Environment variable holding the bearer token for remote scoring.
inline constexpr char kRemoteAuthEnvVar[] = "SELECTIVE_CONTEXT_API_KEY";

struct RemoteScorerOptions {
  std::string endpoint;  // scheme://host[:port][/base/path]
  RemoteProfile profile = RemoteProfile::kNative;
  std::string model;       // completions profile only
  std::string auth_token;  // sent as "Authorization: Bearer ..." when set
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds timeout{30000};
  size_t max_in_flight = 4;
  size_t max_request_bytes = 8 * 1024;
};

// Sub-token scores as returned by an endpoint, offsets relative to the
// request text. A missing logprob is std::nullopt.
struct EchoResponse {
  std::vector<std::string> tokens;
  std::vector<std::optional<double>> logprobs;
  std::vector<ByteSpan> offsets;
};

absl::StatusOr<EchoResponse> ParseNativeResponse(std::string_view body);
absl::StatusOr<EchoResponse> ParseCompletionsResponse(std::string_view body,
                                                      std::string_view text);

// Maps backend sub-tokens onto caller tokens (spans relative to the same
// request text) and sums the log-probabilities inside each caller token.
// Whitespace-only sub-tokens carry their mass to the next caller token. A
// sub-token straddling two caller tokens, a caller token left partly
// uncovered, or a null logprob after position 0 is an error. `null_heads`
// counts the position-0 nulls that were read as certain.
absl::StatusOr<std::vector<double>> RealignLogProbs(
    std::string_view text, std::span<const ByteSpan> caller_tokens,
    const EchoResponse& response, int* null_heads = nullptr);

// Scores text through an HTTP echo-logprobs endpoint. Transport failures,
// 429 and 5xx responses are retried with exponential backoff up to
// max_attempts; malformed or misaligned responses fail immediately.
// LogProbsBatch keeps at most max_in_flight requests open at once.
class RemoteScorer final : public ScorerBackend {
 public:
  static absl::StatusOr<std::unique_ptr<RemoteScorer>> Create(
      RemoteScorerOptions options);

  ScorerKind kind() const override { return ScorerKind::kRemote; }
  absl::StatusOr<std::vector<double>> LogProbs(
      const SegmentedDocument& doc,
      const ScoringSegment& segment) const override;
  absl::StatusOr<std::vector<std::vector<double>>> LogProbsBatch(
      const SegmentedDocument& doc,
      std::span<const ScoringSegment> segments) const override;
  size_t max_request_bytes() const override {
    return options_.max_request_bytes;
  }

  const RemoteScorerOptions& options() const { return options_; }
  // Counters since construction.
  int retry_count() const { return retries_.load(); }
  int request_count() const { return requests_.load(); }
  int null_logprob_warnings() const { return null_heads_.load(); }

 private:
  RemoteScorer(RemoteScorerOptions options, std::string scheme_host_port,
               std::string base_path);

  absl::StatusOr<std::string> Post(const std::string& text) const;

  RemoteScorerOptions options_;
  std::string scheme_host_port_;
  std::string base_path_;
  mutable std::atomic<int> retries_{0};
  mutable std::atomic<int> requests_{0};
  mutable std::atomic<int> null_heads_{0};
};

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SCORING_REMOTE_SCORER_H_
