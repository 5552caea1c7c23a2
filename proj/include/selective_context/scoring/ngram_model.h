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

#ifndef SELECTIVE_CONTEXT_SCORING_NGRAM_MODEL_H_
#define SELECTIVE_CONTEXT_SCORING_NGRAM_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "selective_context/scoring/scorer_backend.h"

namespace selective_context {

// Count-based n-gram model with add-k smoothing:
//
//   P(w | ctx) = (count(ctx -> w) + k) / (count(ctx -> .) + k * (|V| + 1))
//
// where the extra slot is the reserved unknown token. Contexts shorter than
// order - 1 are padded on the left with a begin-of-sequence marker that never
// occurs in training windows, so sequence heads see the uniform distribution.
//
// On disk ("SCNG" v1, little-endian):
//   char[4] "SCNG" | u32 version | u32 order | f64 k | u32 vocab count
//   vocab count x (u32 byte length, UTF-8 bytes), sorted bytewise
//   u64 record count
//   record count x (order - 1 x u32 context index, u32 successor index,
//                   u64 count), sorted by index tuple
// Indices refer to the vocab list, so record order is lexicographic in the
// token strings.
class NgramModel {
 public:
  static constexpr uint32_t kFormatVersion = 1;
  static constexpr double kDefaultSmoothing = 0.1;

  // Counts every window of `order` consecutive tokens once.
  static absl::StatusOr<NgramModel> Train(std::span<const std::string> corpus,
                                          int order, double k);

  static absl::StatusOr<NgramModel> Deserialize(std::string_view bytes);
  static absl::StatusOr<NgramModel> Load(const std::filesystem::path& path);

  std::string Serialize() const;
  absl::Status Save(const std::filesystem::path& path) const;

  // Only the last order - 1 entries of `context` are used.
  double Probability(std::span<const std::string> context,
                     std::string_view next) const;
  double Probability(std::span<const std::string_view> context,
                     std::string_view next) const;

  uint64_t Count(std::span<const std::string> context,
                 std::string_view next) const;
  uint64_t ContextTotal(std::span<const std::string> context) const;

  int order() const { return order_; }
  double k() const { return k_; }
  size_t vocab_size() const { return vocab_.size(); }
  const std::vector<std::string>& vocab() const { return vocab_; }
  uint64_t window_count() const { return window_count_; }

  // Id-level access for the scorer. Id 0 is the unknown token, 1..|V| index
  // vocab() and BeginOfSequenceId() == |V| + 1.
  uint32_t IdOf(std::string_view token) const;
  uint32_t BeginOfSequenceId() const {
    return static_cast<uint32_t>(vocab_.size()) + 1;
  }
  // `context` holds exactly order - 1 ids.
  double ProbabilityOfIds(std::span<const uint32_t> context,
                          uint32_t next) const;

 private:
  struct Successors {
    uint64_t total = 0;
    absl::flat_hash_map<uint32_t, uint64_t> counts;
  };

  NgramModel() = default;
  void BuildIndex();
  std::vector<uint32_t> ContextIds(
      std::span<const std::string_view> context) const;

  int order_ = 1;
  double k_ = kDefaultSmoothing;
  uint64_t window_count_ = 0;
  std::vector<std::string> vocab_;
  absl::flat_hash_map<std::string, uint32_t> ids_;
  absl::flat_hash_map<std::vector<uint32_t>, Successors> table_;
};

// ScorerBackend over a shared, immutable NgramModel.
class NgramScorer final : public ScorerBackend {
 public:
  explicit NgramScorer(std::shared_ptr<const NgramModel> model)
      : model_(std::move(model)) {}

  ScorerKind kind() const override { return ScorerKind::kNgram; }
  absl::StatusOr<std::vector<double>> LogProbs(
      const SegmentedDocument& doc,
      const ScoringSegment& segment) const override;

  const NgramModel& model() const { return *model_; }

 private:
  std::shared_ptr<const NgramModel> model_;
};

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SCORING_NGRAM_MODEL_H_
