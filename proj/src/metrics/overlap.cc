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

#include "selective_context/metrics/overlap.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "absl/container/flat_hash_map.h"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "selective_context/segmentation/tokenizer.h"
#include "selective_context/segmentation/unicode_text.h"
#include "selective_context/status_macros.h"
#include "selective_context/string_view_compat.h"

namespace selective_context {
namespace {

using NgramCounts = absl::flat_hash_map<std::vector<std::string_view>, size_t>;

NgramCounts CountNgrams(std::span<const std::string> tokens, size_t n) {
  NgramCounts counts;
  if (tokens.size() < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + i,
                                       tokens.begin() + i + n);
    ++counts[gram];
  }
  return counts;
}

size_t NgramTotal(size_t length, size_t n) {
  return length >= n ? length - n + 1 : 0;
}

double Ratio(size_t numerator, size_t denominator) {
  return denominator == 0 ? 0.0
                          : static_cast<double>(numerator) /
                                static_cast<double>(denominator);
}

absl::Status RequireNonEmpty(std::span<const std::string> tokens,
                             std::string_view what) {
  if (tokens.empty()) {
    return absl::InvalidArgumentError(absl::StrCat(AsAbsl(what), " is empty"));
  }
  return absl::OkStatus();
}

}  // namespace

PrecisionRecall PrecisionRecall::Of(double precision, double recall) {
  const double sum = precision + recall;
  return PrecisionRecall{precision, recall,
                         sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum};
}

std::vector<std::string> MetricTokens(std::string_view text) {
  TokenizedText tokenized = Tokenize(ToLowerUtf8(text));
  std::vector<std::string> out;
  out.reserve(tokenized.tokens.size());
  for (Token& token : tokenized.tokens) out.push_back(std::move(token.text));
  return out;
}

absl::StatusOr<double> Bleu(
    std::span<const std::string> candidate,
    std::span<const std::vector<std::string>> references,
    const BleuOptions& options) {
  SC_RETURN_IF_ERROR(RequireNonEmpty(candidate, "BLEU candidate"));
  if (references.empty()) {
    return absl::InvalidArgumentError("BLEU needs at least one reference");
  }
  for (const auto& reference : references) {
    SC_RETURN_IF_ERROR(RequireNonEmpty(reference, "BLEU reference"));
  }
  if (options.max_n < 1) {
    return absl::InvalidArgumentError("BLEU max_n must be >= 1");
  }

  // Orders longer than the candidate have no n-grams to score and are left
  // out of the geometric mean.
  const size_t c = candidate.size();
  const size_t orders = std::min(static_cast<size_t>(options.max_n), c);
  double log_sum = 0.0;
  for (size_t n = 1; n <= orders; ++n) {
    const NgramCounts candidate_counts = CountNgrams(candidate, n);
    NgramCounts max_reference;
    for (const auto& reference : references) {
      for (const auto& [gram, count] : CountNgrams(reference, n)) {
        size_t& best = max_reference[gram];
        best = std::max(best, count);
      }
    }
    size_t matches = 0;
    for (const auto& [gram, count] : candidate_counts) {
      auto it = max_reference.find(gram);
      if (it != max_reference.end()) matches += std::min(count, it->second);
    }
    size_t total = NgramTotal(c, n);
    if (options.smoothing && n >= 2) {
      ++matches;
      ++total;
    }
    if (matches == 0) return 0.0;
    log_sum +=
        std::log(static_cast<double>(matches) / static_cast<double>(total));
  }
  const double precision = std::exp(log_sum / static_cast<double>(orders));

  size_t closest = references.front().size();
  for (const auto& reference : references) {
    const size_t r = reference.size();
    const auto distance = [c](size_t len) {
      return len > c ? len - c : c - len;
    };
    if (distance(r) < distance(closest) ||
        (distance(r) == distance(closest) && r < closest)) {
      closest = r;
    }
  }
  const double brevity = c < closest
                             ? std::exp(1.0 - static_cast<double>(closest) /
                                                  static_cast<double>(c))
                             : 1.0;
  return brevity * precision;
}

absl::StatusOr<PrecisionRecall> RougeN(std::span<const std::string> candidate,
                                       std::span<const std::string> reference,
                                       int n) {
  SC_RETURN_IF_ERROR(RequireNonEmpty(candidate, "ROUGE candidate"));
  SC_RETURN_IF_ERROR(RequireNonEmpty(reference, "ROUGE reference"));
  if (n < 1) return absl::InvalidArgumentError("ROUGE-N needs n >= 1");
  const size_t order = static_cast<size_t>(n);
  const NgramCounts candidate_counts = CountNgrams(candidate, order);
  const NgramCounts reference_counts = CountNgrams(reference, order);
  size_t overlap = 0;
  for (const auto& [gram, count] : candidate_counts) {
    auto it = reference_counts.find(gram);
    if (it != reference_counts.end()) overlap += std::min(count, it->second);
  }
  return PrecisionRecall::Of(
      Ratio(overlap, NgramTotal(candidate.size(), order)),
      Ratio(overlap, NgramTotal(reference.size(), order)));
}

size_t LongestCommonSubsequence(std::span<const std::string> a,
                                std::span<const std::string> b) {
  std::vector<size_t> previous(b.size() + 1, 0);
  std::vector<size_t> current(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      current[j] = a[i - 1] == b[j - 1] ? previous[j - 1] + 1
                                        : std::max(previous[j], current[j - 1]);
    }
    std::swap(previous, current);
  }
  return previous[b.size()];
}

absl::StatusOr<PrecisionRecall> RougeL(std::span<const std::string> candidate,
                                       std::span<const std::string> reference) {
  SC_RETURN_IF_ERROR(RequireNonEmpty(candidate, "ROUGE candidate"));
  SC_RETURN_IF_ERROR(RequireNonEmpty(reference, "ROUGE reference"));
  const size_t lcs = LongestCommonSubsequence(candidate, reference);
  return PrecisionRecall::Of(Ratio(lcs, candidate.size()),
                             Ratio(lcs, reference.size()));
}

absl::StatusOr<OverlapReport> Overlap(
    std::span<const std::string> candidate,
    std::span<const std::vector<std::string>> references,
    const BleuOptions& options) {
  OverlapReport report;
  SC_ASSIGN_OR_RETURN(report.bleu, Bleu(candidate, references, options));
  bool first = true;
  for (const auto& reference : references) {
    SC_ASSIGN_OR_RETURN(PrecisionRecall r1, RougeN(candidate, reference, 1));
    SC_ASSIGN_OR_RETURN(PrecisionRecall r2, RougeN(candidate, reference, 2));
    SC_ASSIGN_OR_RETURN(PrecisionRecall rl, RougeL(candidate, reference));
    if (first || r1.f1 > report.rouge1.f1) report.rouge1 = r1;
    if (first || r2.f1 > report.rouge2.f1) report.rouge2 = r2;
    if (first || rl.f1 > report.rouge_l.f1) report.rouge_l = rl;
    first = false;
  }
  return report;
}

}  // namespace selective_context
