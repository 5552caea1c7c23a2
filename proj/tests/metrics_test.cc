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

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "selective_context/metrics/overlap.h"
#include "selective_context/metrics/savings.h"
#include "selective_context/selection/compression.h"
#include "test_support.h"

namespace selective_context {
namespace {

using Tokens = std::vector<std::string>;

Tokens Split(std::string_view text) {
  Tokens out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(' ', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

double BleuOf(std::string_view c, std::vector<std::string_view> refs,
              BleuOptions options = {}) {
  std::vector<Tokens> r;
  for (std::string_view ref : refs) r.push_back(Split(ref));
  absl::StatusOr<double> b = Bleu(Split(c), r, options);
  EXPECT_TRUE(b.ok()) << b.status();
  return b.value_or(-1);
}

TEST(BleuTest, PerfectMatch) {
  EXPECT_DOUBLE_EQ(BleuOf("the cat sat on the mat", {"the cat sat on the mat"}),
                   1.0);
}

TEST(BleuTest, ClippingCase) {
  BleuOptions unigram;
  unigram.max_n = 1;
  EXPECT_DOUBLE_EQ(BleuOf("the the the the", {"the cat"}, unigram), 0.25);
}

TEST(BleuTest, DisjointIsZero) { EXPECT_EQ(BleuOf("a b c", {"d e f"}), 0.0); }

TEST(BleuTest, BrevityPenalty) {
  BleuOptions unigram;
  unigram.max_n = 1;
  // c = 2, closest r = 4: exp(1 - 4/2).
  EXPECT_DOUBLE_EQ(BleuOf("the cat", {"the cat sat down"}, unigram),
                   std::exp(-1.0));
  // Closest reference length is 3 here (|2-3| < |2-6|).
  EXPECT_DOUBLE_EQ(BleuOf("the cat", {"a b c d e f", "the cat sat"}, unigram),
                   std::exp(1.0 - 3.0 / 2.0));
}

TEST(BleuTest, GeometricMeanWithHandCounts) {
  // Candidate "a b c d" vs "a b c e": p1 = 3/4, p2 = 2/3, no penalty.
  BleuOptions bigram;
  bigram.max_n = 2;
  EXPECT_NEAR(BleuOf("a b c d", {"a b c e"}, bigram),
              std::sqrt(0.75 * (2.0 / 3.0)), 1e-15);
}

TEST(BleuTest, SmoothingRescuesZeroHigherOrders) {
  BleuOptions options;
  EXPECT_EQ(BleuOf("a x b y", {"a q b r"}, options), 0.0);
  options.smoothing = true;
  // p1 = 2/4; n >= 2 add-one: (0+1)/(3+1), (0+1)/(2+1), (0+1)/(1+1).
  const double expected = std::pow(0.5 * 0.25 * (1.0 / 3.0) * 0.5, 0.25);
  EXPECT_NEAR(BleuOf("a x b y", {"a q b r"}, options), expected, 1e-15);
}

TEST(BleuTest, EmptyInputsAreInvalid) {
  const Tokens empty, some = {"a"};
  const std::vector<Tokens> refs = {some};
  EXPECT_EQ(Bleu(empty, refs).status().code(),
            absl::StatusCode::kInvalidArgument);
  const std::vector<Tokens> empty_ref = {empty};
  EXPECT_FALSE(Bleu(some, empty_ref).ok());
  EXPECT_FALSE(Bleu(some, std::vector<Tokens>{}).ok());
}

TEST(BleuTest, Properties) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    Tokens c = testing::RandomWords(rng, 1 + rng() % 12, 6);
    const std::vector<Tokens> self = {c};
    EXPECT_DOUBLE_EQ(*Bleu(c, self), 1.0);

    Tokens r = testing::RandomWords(rng, 1 + rng() % 12, 6);
    std::map<std::string, std::string> relabel;
    for (int i = 0; i < 6; ++i) {
      relabel["w" + std::to_string(i)] = "v" + std::to_string((i * 5 + 1) % 6);
    }
    Tokens c2, r2;
    for (const auto& t : c) c2.push_back(relabel[t]);
    for (const auto& t : r) r2.push_back(relabel[t]);
    const std::vector<Tokens> refs = {r}, refs2 = {r2};
    EXPECT_EQ(*Bleu(c, refs), *Bleu(c2, refs2));
    EXPECT_EQ(RougeL(c, r)->f1, RougeL(c2, r2)->f1);

    Tokens disjoint;
    for (const auto& t : c) disjoint.push_back("z" + t);
    EXPECT_EQ(*Bleu(disjoint, refs), 0.0);
  }
}

TEST(RougeNTest, Examples) {
  const Tokens ref = Split("the cat sat"), cand = Split("the cat");
  PrecisionRecall r1 = *RougeN(cand, ref, 1);
  EXPECT_DOUBLE_EQ(r1.precision, 1.0);
  EXPECT_DOUBLE_EQ(r1.recall, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r1.f1, 0.8);

  PrecisionRecall same = *RougeN(ref, ref, 2);
  EXPECT_EQ(same.precision, 1.0);
  EXPECT_EQ(same.recall, 1.0);
  EXPECT_EQ(same.f1, 1.0);

  PrecisionRecall none = *RougeN(Split("a b"), Split("c d"), 1);
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.recall, 0.0);
  EXPECT_EQ(none.f1, 0.0);

  EXPECT_FALSE(RougeN({}, ref, 1).ok());
  EXPECT_FALSE(RougeN(ref, ref, 0).ok());
}

TEST(RougeNTest, ClipsRepeatedGrams) {
  PrecisionRecall r = *RougeN(Split("the the the"), Split("the cat the"), 1);
  EXPECT_DOUBLE_EQ(r.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.recall, 2.0 / 3.0);
}

TEST(RougeNTest, F1IsHarmonicMean) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Tokens c = testing::RandomWords(rng, 1 + rng() % 10, 5);
    Tokens r = testing::RandomWords(rng, 1 + rng() % 10, 5);
    for (int n : {1, 2}) {
      absl::StatusOr<PrecisionRecall> pr = RougeN(c, r, n);
      ASSERT_TRUE(pr.ok());
      const double expected =
          pr->precision + pr->recall == 0.0
              ? 0.0
              : 2 * pr->precision * pr->recall / (pr->precision + pr->recall);
      EXPECT_EQ(pr->f1, expected);
    }
  }
}

TEST(RougeLTest, Examples) {
  PrecisionRecall r = *RougeL(Split("a c d b"), Split("a b c d"));
  EXPECT_DOUBLE_EQ(r.recall, 0.75);
  EXPECT_DOUBLE_EQ(r.precision, 0.75);
  EXPECT_EQ(RougeL(Split("a b"), Split("a b"))->f1, 1.0);
  EXPECT_EQ(RougeL(Split("a b"), Split("c d"))->f1, 0.0);
  EXPECT_FALSE(RougeL(Split("a"), {}).ok());
}

TEST(RougeLTest, MatchesExhaustiveSubsequenceSearch) {
  // Lengths <= 5 here; the acceptance binary covers every pair up to 7.
  static const testing::ExhaustiveLcs oracle;
  const auto& seqs = oracle.sequences();
  for (size_t a = 0; a < seqs.size() && seqs[a].size() <= 5; ++a) {
    const Tokens ta = testing::Symbols(seqs[a]);
    for (size_t b = 0; b < seqs.size() && seqs[b].size() <= 5; ++b) {
      const Tokens tb = testing::Symbols(seqs[b]);
      const size_t expected = oracle.Lcs(a, b);
      ASSERT_EQ(LongestCommonSubsequence(ta, tb), expected);
      if (ta.empty() || tb.empty()) continue;
      PrecisionRecall r = *RougeL(ta, tb);
      ASSERT_EQ(r.precision, static_cast<double>(expected) / ta.size());
      ASSERT_EQ(r.recall, static_cast<double>(expected) / tb.size());
    }
  }
}

TEST(RougeLTest, Symmetry) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    Tokens c = testing::RandomWords(rng, 1 + rng() % 15, 4);
    Tokens r = testing::RandomWords(rng, 1 + rng() % 15, 4);
    EXPECT_EQ(RougeL(c, r)->recall, RougeL(r, c)->precision);
  }
}

TEST(OverlapTest, MaxPoolsRougeOverReferences) {
  const std::vector<Tokens> refs = {Split("x y z"), Split("the cat sat")};
  absl::StatusOr<OverlapReport> report = Overlap(Split("the cat"), refs);
  ASSERT_TRUE(report.ok());
  EXPECT_DOUBLE_EQ(report->rouge1.f1, 0.8);
  EXPECT_DOUBLE_EQ(report->rouge_l.recall, 2.0 / 3.0);
}

TEST(MetricTokensTest, LowercasesAndTokenizes) {
  EXPECT_EQ(MetricTokens("Hello, World"), (Tokens{"hello", ",", "world"}));
}

TEST(SavingsTest, Examples) {
  EXPECT_EQ(Savings(100, 100, 10, 10).token_savings, 0.0);
  EXPECT_DOUBLE_EQ(Savings(1000, 572, 10, 5).token_savings, 0.428);
  EXPECT_EQ(Savings(1000, 0, 10, 0).token_savings, 1.0);
  EXPECT_EQ(Savings(1000, 0, 10, 0).unit_savings, 1.0);

  CompressionResult result;
  result.retained = testing::UnitsWithValues({1, 2}, {3, 1});
  result.removed = testing::UnitsWithValues({0}, {4});
  SavingsReport s = Savings(result);
  EXPECT_EQ(s.original_tokens, 8u);
  EXPECT_EQ(s.retained_tokens, 4u);
  EXPECT_DOUBLE_EQ(s.token_savings, 0.5);
  EXPECT_DOUBLE_EQ(s.unit_savings, 1.0 / 3.0);
}

}  // namespace
}  // namespace selective_context
