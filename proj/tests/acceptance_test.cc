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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit status
// when any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "oracles.h"
#include "selective_context/cli/ingest.h"
#include "selective_context/cli/report.h"
#include "selective_context/metrics/overlap.h"
#include "selective_context/metrics/savings.h"
#include "selective_context/scoring/ngram_model.h"
#include "selective_context/scoring/remote_scorer.h"
#include "selective_context/scoring/self_information.h"
#include "selective_context/segmentation/tokenizer.h"
#include "selective_context/selection/compression.h"
#include "selective_context/selection/percentile.h"
#include "selective_context/selection/splitmix64.h"
#include "selective_context/string_view_compat.h"
#include "test_support.h"

namespace selective_context {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only; later checks keep the original reason.
  void Check(bool ok, std::string_view why) {
    if (!ok && pass) {
      pass = false;
      detail = std::string(why);
    }
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> TokenTexts(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& t : Tokenize(text).tokens) out.push_back(t.text);
  return out;
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::shared_ptr<const NgramScorer> TrainScorer(std::string_view text, int order,
                                               double k) {
  std::vector<std::string> corpus = TokenTexts(text);
  return std::make_shared<const NgramScorer>(
      std::make_shared<const NgramModel>(*NgramModel::Train(corpus, order, k)));
}

double SumBits(const absl::StatusOr<std::vector<ScoredToken>>& scored) {
  double sum = 0.0;
  for (const ScoredToken& t : *scored) sum += t.self_info;
  return sum;
}

Outcome Additivity() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  std::vector<std::string> corpus = testing::RandomWords(rng, 2000, 30);
  NgramScorer scorer(
      std::make_shared<const NgramModel>(*NgramModel::Train(corpus, 3, 0.1)));
  size_t splits = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    auto doc =
        DocumentFromTokens({testing::RandomWords(rng, 2 + rng() % 40, 34)});
    const size_t n = doc->tokens.size();
    auto whole = ScoreTokens(*doc, scorer, ScoringMode::kWholeDocument);
    if (!whole.ok()) {
      out.Check(false, whole.status().ToString());
      break;
    }
    const double total = SumBits(whole);
    for (size_t t = 1; t < n; ++t) {
      const double head =
          SumBits(ScoreSegment(*doc, scorer, ScoringSegment::Of({0, t})));
      const double tail =
          SumBits(ScoreSegment(*doc, scorer, ScoringSegment{{0, t}, {t, n}}));
      const double rel = std::abs(head + tail - total) / total;
      worst = std::max(worst, rel);
      ++splits;
    }
  }
  const double elapsed = Seconds(start);
  out.Check(worst <= 1e-9, absl::StrCat("relative error ", worst));
  out.Check(elapsed < 1.0, absl::StrCat("took ", elapsed, " s"));
  if (out.pass) {
    out.detail = absl::StrCat("200 sequences, ", splits,
                              " split points, worst relative error ", worst,
                              ", ", elapsed, " s");
  }
  return out;
}

Outcome PercentileOracle() {
  Outcome out;
  const auto start = Clock::now();
  std::mt19937_64 rng(102);
  std::uniform_int_distribution<int> size(1, 50);
  std::uniform_int_distribution<int> coarse(0, 20);
  std::uniform_real_distribution<double> fine(0.0, 30.0);
  std::uniform_real_distribution<double> pct(0.0, 100.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> v(size(rng));
    for (double& x : v) x = trial % 2 ? fine(rng) : coarse(rng);
    const double p = trial % 5 == 0 ? 5.0 * (trial % 21) : pct(rng);
    const double expected = testing::BruteForcePercentile(v, p);
    const double got = *PercentileThreshold(v, p);
    worst = std::max(worst, std::abs(got - expected));

    auto result = FilterUnits(testing::UnitsWithValues(v), p);
    size_t r = 0, d = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      // Exhaustive scan against the library's own threshold.
      const bool keep = v[i] >= *result->threshold;
      if (keep) {
        out.Check(r < result->retained.size() &&
                      result->retained[r++].self_info == v[i],
                  "retained set differs from scan");
      } else {
        out.Check(d < result->removed.size() &&
                      result->removed[d++].self_info == v[i],
                  "removed set differs from scan");
      }
    }
  }
  const double elapsed = Seconds(start);
  out.Check(worst <= 1e-12, absl::StrCat("max abs error ", worst));
  out.Check(elapsed < 1.0, absl::StrCat("took ", elapsed, " s"));
  if (out.pass) {
    out.detail =
        absl::StrCat("1000 lists, max abs error ", worst, ", ", elapsed, " s");
  }
  return out;
}

Outcome RatioTargeting() {
  Outcome out;
  std::mt19937_64 rng(103);
  double worst = 0.0;
  for (size_t n : {5, 20, 100}) {
    for (double ratio : {0.2, 0.35, 0.5, 0.65, 0.8}) {
      std::vector<double> v(n);
      std::uniform_real_distribution<double> value(0.0, 50.0);
      for (double& x : v) x = value(rng);  // distinct with probability 1
      auto result = FilterUnits(testing::UnitsWithValues(v), 100 * ratio);
      const double removed =
          static_cast<double>(result->removed.size()) / static_cast<double>(n);
      const double gap = std::abs(removed - ratio);
      worst = std::max(worst, gap * static_cast<double>(n));
      out.Check(gap <= 1.0 / static_cast<double>(n),
                absl::StrCat("n=", n, " ratio=", ratio, " removed ", removed));
    }
  }
  if (out.pass) {
    out.detail =
        absl::StrCat("15 cases, worst |removed - ratio| = ", worst, "/n");
  }
  return out;
}

Outcome MonotonicityAndOrder() {
  Outcome out;
  std::mt19937_64 rng(104);
  std::string corpus;
  for (int i = 0; i < 30; ++i) corpus += testing::RandomDocument(rng) + " ";
  auto scorer = TrainScorer(corpus, 2, 0.1);
  const double ratios[] = {0.0, 0.2, 0.35, 0.5, 0.65, 0.8, 1.0};
  for (int d = 0; d < 50 && out.pass; ++d) {
    const std::string text = testing::RandomDocument(rng);
    for (UnitLevel level :
         {UnitLevel::kToken, UnitLevel::kPhrase, UnitLevel::kSentence}) {
      size_t previous = SIZE_MAX;
      for (double ratio : ratios) {
        CompressionConfig config;
        config.ratio = ratio;
        config.level = level;
        auto c = Compress(text, *scorer, config);
        if (!c.ok()) {
          out.Check(false, c.status().ToString());
          break;
        }
        const size_t kept = c->result.RetainedTokenCount();
        out.Check(kept <= previous, "retained tokens grew with ratio");
        previous = kept;
        // Ordered subsequence of the full unit list.
        auto all = UnitRanges(c->document, level);
        size_t j = 0;
        for (const LexicalUnit& u : c->result.retained) {
          while (j < all.size() && !(all[j] == u.tokens)) ++j;
          out.Check(j < all.size(), "retained units out of order");
          ++j;
        }
      }
    }
  }
  if (out.pass) out.detail = "50 documents x 3 levels x 7 ratios";
  return out;
}

Outcome MetricOracles() {
  Outcome out;
  const std::vector<std::string> clip = {"the", "the", "the", "the"};
  const std::vector<std::vector<std::string>> the_cat = {{"the", "cat"}};
  BleuOptions unigram;
  unigram.max_n = 1;
  const double bleu = *Bleu(clip, the_cat, unigram);
  out.Check(bleu == 0.25, absl::StrCat("BLEU clipping ", bleu));

  const std::vector<std::string> ref = {"the", "cat", "sat"};
  const std::vector<std::string> cand = {"the", "cat"};
  const PrecisionRecall r1 = *RougeN(cand, ref, 1);
  out.Check(std::abs(r1.recall - 2.0 / 3.0) < 1e-15 &&
                std::abs(r1.f1 - 0.8) < 1e-15 && r1.precision == 1.0,
            absl::StrCat("ROUGE-1 p=", r1.precision, " r=", r1.recall,
                         " f1=", r1.f1));

  const testing::ExhaustiveLcs oracle;
  const auto& seqs = oracle.sequences();
  std::vector<std::vector<std::string>> symbols;
  for (const auto& s : seqs) symbols.push_back(testing::Symbols(s));
  size_t pairs = 0;
  for (size_t a = 1; a < seqs.size() && out.pass; ++a) {  // skip empty
    for (size_t b = 1; b < seqs.size(); ++b) {
      const double lcs = static_cast<double>(oracle.Lcs(a, b));
      const PrecisionRecall l = *RougeL(symbols[a], symbols[b]);
      if (l.precision != lcs / static_cast<double>(seqs[a].size()) ||
          l.recall != lcs / static_cast<double>(seqs[b].size())) {
        out.Check(false, absl::StrCat("ROUGE-L disagrees on pair ", a, ",", b));
        break;
      }
      ++pairs;
    }
  }
  if (out.pass) {
    out.detail = absl::StrCat(
        "BLEU 0.25, ROUGE-1 r=2/3 f1=0.8, ROUGE-L exact "
        "on ",
        pairs, " sequence pairs");
  }
  return out;
}

Outcome NgramModelChecks() {
  Outcome out;
  std::mt19937_64 rng(106);
  std::vector<std::string> corpus = testing::RandomWords(rng, 3000, 40);
  auto model = *NgramModel::Train(corpus, 3, 0.1);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> context = testing::RandomWords(rng, 2, 44);
    double sum = model.Probability(context, "<never-seen>");
    for (const std::string& w : model.vocab()) {
      sum += model.Probability(context, w);
    }
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  out.Check(worst <= 1e-9, absl::StrCat("normalization error ", worst));

  auto loaded = NgramModel::Deserialize(model.Serialize());
  out.Check(loaded.ok(), "reload failed");
  if (loaded.ok()) {
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<std::string> context = testing::RandomWords(rng, 2, 44);
      const std::string next = testing::RandomWords(rng, 1, 44)[0];
      const double a = model.Probability(context, next);
      const double b = loaded->Probability(context, next);
      out.Check(std::memcmp(&a, &b, sizeof a) == 0,
                "probabilities differ after reload");
    }
  }

  const std::vector<std::string> memorized = {"a", "a", "a", "a"};
  NgramScorer scorer(std::make_shared<const NgramModel>(
      *NgramModel::Train(memorized, 2, 1e-6)));
  auto doc = DocumentFromTokens({{"a", "a", "a", "a"}});
  auto scored = ScoreTokens(*doc, scorer);
  double successor = 0.0;
  for (size_t i = 1; i < scored->size(); ++i) {
    successor = std::max(successor, (*scored)[i].self_info);
  }
  out.Check(successor < 1e-3,
            absl::StrCat("memorized successor ", successor, " bits"));
  if (out.pass) {
    out.detail = absl::StrCat("normalization error ", worst,
                              ", bit-identical reload, memorized successor ",
                              successor, " bits");
  }
  return out;
}

// Test-side SplitMix64 and partial Fisher-Yates, written from the published
// generator constants.
std::vector<bool> ExpectedRandomKeep(size_t n, double ratio, uint64_t seed) {
  uint64_t state = seed;
  auto next = [&state] {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  auto below = [&next](uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  };
  const size_t remove = static_cast<size_t>(std::llround(ratio * n));
  std::vector<size_t> slots(n);
  for (size_t i = 0; i < n; ++i) slots[i] = i;
  for (size_t i = 0; i < remove; ++i) {
    std::swap(slots[i], slots[i + below(n - i)]);
  }
  std::vector<bool> keep(n, true);
  for (size_t i = 0; i < remove; ++i) keep[slots[i]] = false;
  return keep;
}

Outcome RandomBaseline() {
  Outcome out;
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = 1 + rng() % 80;
    const double ratio = static_cast<double>(rng() % 1001) / 1000.0;
    const uint64_t seed = rng();
    std::vector<double> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = static_cast<double>(i);
    auto units = testing::UnitsWithValues(v);
    auto first = RandomCompress(units, ratio, seed);
    auto second = RandomCompress(units, ratio, seed);
    const size_t expected_removed =
        static_cast<size_t>(std::llround(ratio * static_cast<double>(n)));
    out.Check(first->removed.size() == expected_removed,
              absl::StrCat("removed ", first->removed.size(), " expected ",
                           expected_removed));
    std::vector<bool> keep(n, false);
    for (const LexicalUnit& u : first->retained) keep[u.tokens.begin] = true;
    out.Check(keep == ExpectedRandomKeep(n, ratio, seed),
              "selection differs from reference generator");
    out.Check(second->retained.size() == first->retained.size(),
              "second run differs");
    for (size_t i = 0; i < first->retained.size() && out.pass; ++i) {
      out.Check(first->retained[i].tokens == second->retained[i].tokens,
                "second run differs");
    }
  }
  SplitMix64 reference(0);
  out.Check(reference.Next() == 0xe220a8397b1dcdafULL,
            "SplitMix64 reference vector mismatch");
  if (out.pass) {
    out.detail =
        "100 trials: exact round(ratio*n) removals, repeatable, "
        "matches reference SplitMix64 selection";
  }
  return out;
}

Outcome RemoteContract() {
  Outcome out;
  // Sub-tokens: each word is split after its first two bytes.
  auto serve = [](const httplib::Request& req, httplib::Response& res) {
    const std::string text = json::parse(req.body)["text"];
    json tokens = json::array(), logprobs = json::array(),
         offsets = json::array();
    size_t i = 0;
    while (i < text.size()) {
      size_t start = i;
      while (i < text.size() && text[i] == ' ') ++i;
      size_t word_end = text.find(' ', i);
      if (word_end == std::string::npos) word_end = text.size();
      const size_t cut = std::min(i + 2, word_end);
      tokens.push_back(text.substr(start, cut - start));
      logprobs.push_back(-1.0);
      offsets.push_back({start, cut});
      if (cut < word_end) {
        tokens.push_back(text.substr(cut, word_end - cut));
        logprobs.push_back(-0.25);
        offsets.push_back({cut, word_end});
      }
      i = word_end;
    }
    res.set_content(json{{"tokens", tokens},
                         {"token_logprobs", logprobs},
                         {"byte_offsets", offsets}}
                        .dump(),
                    "application/json");
  };

  testing::MockServer server;
  std::atomic<int> calls{0};
  std::atomic<bool> fail_first_two{false};
  std::atomic<bool> misalign{false};
  server.Post("/score",
              [&](const httplib::Request& req, httplib::Response& res) {
                if (fail_first_two && calls++ < 2) {
                  res.status = 500;
                  return;
                }
                if (misalign) {
                  const std::string text = json::parse(req.body)["text"];
                  res.set_content(json{{"tokens", {text}},
                                       {"token_logprobs", {-1.0}},
                                       {"byte_offsets", {{0, text.size()}}}}
                                      .dump(),
                                  "application/json");
                  return;
                }
                serve(req, res);
              });
  server.Start();

  RemoteScorerOptions options;
  options.endpoint = server.url();
  options.initial_backoff = std::chrono::milliseconds(1);
  const std::string text = "Learning is fun";
  // Hand totals: "Learning" = Le + arning = -1.25, "is" = -1, "fun" = -1.25.
  const std::vector<double> expected = {-1.25, -1.0, -1.25};

  auto check_sums = [&](const RemoteScorer& scorer, std::string_view what) {
    auto scored = ScoreTokens(Segment(text), scorer);
    out.Check(scored.ok(),
              absl::StrCat(AsAbsl(what), ": ", scored.status().ToString()));
    if (!scored.ok()) return;
    for (size_t i = 0; i < expected.size(); ++i) {
      out.Check((*scored)[i].logprob == expected[i],
                absl::StrCat(AsAbsl(what), ": token ", i, " logprob ",
                             (*scored)[i].logprob));
    }
  };

  auto plain = RemoteScorer::Create(options);
  check_sums(**plain, "summation");

  fail_first_two = true;
  auto retrying = RemoteScorer::Create(options);
  check_sums(**retrying, "retry path");
  out.Check((*retrying)->retry_count() == 2,
            absl::StrCat("retries ", (*retrying)->retry_count()));
  fail_first_two = false;

  misalign = true;
  auto strict = RemoteScorer::Create(options);
  auto bad = ScoreTokens(Segment(text), **strict);
  out.Check(
      !bad.ok() && bad.status().code() == absl::StatusCode::kFailedPrecondition,
      "misaligned offsets were accepted");
  if (out.pass) {
    out.detail =
        "sub-token sums match hand totals, 2 retries then success, "
        "misalignment rejected";
  }
  return out;
}

int RunCli(const std::string& args, const fs::path& dir, std::string* out) {
  const fs::path out_path = dir / "stdout.txt";
  const std::string command = std::string(SC_CLI_PATH) + " " + args + " >" +
                              out_path.string() + " 2>" +
                              (dir / "stderr.txt").string();
  const int status = std::system(command.c_str());
  if (out != nullptr) *out = ReadText(out_path);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome EndToEndSmoke() {
  Outcome out;
  const fs::path dir = testing::ScratchDir("acceptance_e2e");
  const fs::path page = testing::DataPath("one_page.txt");
  const fs::path model = dir / "m.scng";
  out.Check(RunCli("train-ngram " + page.string() + " -o " + model.string(),
                   dir, nullptr) == 0,
            "train-ngram failed");

  std::string text;
  out.Check(RunCli("compress --ratio 0 --scorer ngram:" + model.string() + " " +
                       page.string(),
                   dir, &text) == 0,
            "compress --ratio 0 failed");
  out.Check(TokenTexts(text) == TokenTexts(ReadText(page)),
            "ratio 0 output differs from input tokens");

  const auto start = Clock::now();
  std::string report;
  const int code = RunCli(
      "compress --ratio 0.5 --level phrase --scorer ngram:" + model.string() +
          " --format json " + page.string(),
      dir, &report);
  const double elapsed = Seconds(start);
  out.Check(code == 0, "compress --format json failed");
  out.Check(elapsed < 2.0, absl::StrCat("took ", elapsed, " s"));
  json parsed = json::parse(report, nullptr, /*allow_exceptions=*/false);
  out.Check(!parsed.is_discarded() && parsed.value("schema", 0) == 1,
            "report is not schema-v1 JSON");
  if (out.pass) {
    out.detail = absl::StrCat("ratio 0 reproduces ", TokenTexts(text).size(),
                              " tokens; phrase/0.5 JSON in ", elapsed, " s");
  }
  return out;
}

Outcome FigureTwoQualitative() {
  Outcome out;
  const std::string paragraph =
      ReadText(testing::DataPath("continual_learning_paragraph.txt"));
  auto scorer =
      TrainScorer(ReadText(testing::DataPath("one_page.txt")), 2, 0.1);
  CompressionConfig config;
  config.ratio = 0.5;
  config.level = UnitLevel::kPhrase;
  auto compressed = Compress(paragraph, *scorer, config);
  if (!compressed.ok()) {
    out.Check(false, compressed.status().ToString());
    return out;
  }
  const CompressionResult& result = compressed->result;
  const std::string html = RenderHtml("fig2", result);
  out.Check(html.find("id=\"original\"") != std::string::npos &&
                html.find("id=\"filtered\"") != std::string::npos,
            "HTML lacks a panel");
  const double kept_units = 1.0 - result.achieved_unit_ratio;
  out.Check(std::abs(kept_units - 0.5) <= 0.1,
            absl::StrCat("retained unit fraction ", kept_units));
  const SavingsReport savings = Savings(result);
  out.Check(savings.token_savings > 0.0 && savings.token_savings < 1.0,
            absl::StrCat("token savings ", savings.token_savings));
  if (out.pass) {
    out.detail = absl::StrCat(result.retained.size(), "/", result.unit_count(),
                              " phrase units kept, token "
                              "savings ",
                              savings.token_savings, " (scorer-dependent)");
  }
  return out;
}

}  // namespace
}  // namespace selective_context

int main() {
  using selective_context::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"additivity", selective_context::Additivity},
          {"percentile oracle", selective_context::PercentileOracle},
          {"ratio targeting", selective_context::RatioTargeting},
          {"monotonicity and order", selective_context::MonotonicityAndOrder},
          {"metric oracles", selective_context::MetricOracles},
          {"n-gram model", selective_context::NgramModelChecks},
          {"random baseline", selective_context::RandomBaseline},
          {"remote contract", selective_context::RemoteContract},
          {"end-to-end smoke", selective_context::EndToEndSmoke},
          {"figure 2 qualitative", selective_context::FigureTwoQualitative},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome = criteria[i].second();
    std::printf("%s criterion %zu (%s): %s\n", outcome.pass ? "PASS" : "FAIL",
                i + 1, criteria[i].first, outcome.detail.c_str());
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
