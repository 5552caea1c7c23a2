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

#ifndef SELECTIVE_CONTEXT_METRICS_OVERLAP_H_
#define SELECTIVE_CONTEXT_METRICS_OVERLAP_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace selective_context {

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // f1 is the harmonic mean, 0 when precision + recall == 0.
  static PrecisionRecall Of(double precision, double recall);
};

struct OverlapReport {
  double bleu = 0.0;
  PrecisionRecall rouge1;
  PrecisionRecall rouge2;
  PrecisionRecall rouge_l;
};

struct BleuOptions {
  int max_n = 4;
  // Add one to matches and totals for n >= 2. Off by default.
  bool smoothing = false;
};

// Tokens used for scoring overlap: lowercased, then split by the document
// tokenizer.
std::vector<std::string> MetricTokens(std::string_view text);

// Sentence BLEU against one or more references: geometric mean of clipped
// n-gram precisions times exp(1 - r / c) when c < r, r being the reference
// length closest to c (shorter wins ties).
absl::StatusOr<double> Bleu(
    std::span<const std::string> candidate,
    std::span<const std::vector<std::string>> references,
    const BleuOptions& options = {});

absl::StatusOr<PrecisionRecall> RougeN(std::span<const std::string> candidate,
                                       std::span<const std::string> reference,
                                       int n);

// Longest-common-subsequence ROUGE.
absl::StatusOr<PrecisionRecall> RougeL(std::span<const std::string> candidate,
                                       std::span<const std::string> reference);

size_t LongestCommonSubsequence(std::span<const std::string> a,
                                std::span<const std::string> b);

// BLEU over all references; ROUGE computed per reference and max-pooled by f1.
absl::StatusOr<OverlapReport> Overlap(
    std::span<const std::string> candidate,
    std::span<const std::vector<std::string>> references,
    const BleuOptions& options = {});

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_METRICS_OVERLAP_H_
