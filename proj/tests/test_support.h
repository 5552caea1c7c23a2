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

#ifndef SELECTIVE_CONTEXT_TESTS_TEST_SUPPORT_H_
#define SELECTIVE_CONTEXT_TESTS_TEST_SUPPORT_H_

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "httplib.h"
#include "selective_context/scoring/scorer_backend.h"
#include "selective_context/segmentation/lexical_unit.h"
#include "selective_context/segmentation/segmented_document.h"

namespace selective_context::testing {

inline std::filesystem::path DataPath(std::string_view name) {
  return std::filesystem::path(SC_TEST_DATA_DIR) / std::string(name);
}

// Fresh per-process scratch directory.
inline std::filesystem::path ScratchDir(std::string_view name) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("sc_test_" + std::to_string(::getpid())) /
                              std::string(name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Units with one token each, spaced like "u0 u1 u2 ...".
inline std::vector<LexicalUnit> UnitsWithValues(
    const std::vector<double>& values,
    const std::vector<size_t>& token_counts = {}) {
  std::vector<LexicalUnit> units;
  size_t token = 0;
  size_t byte = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    const size_t n = token_counts.empty() ? 1 : token_counts[i];
    LexicalUnit unit;
    unit.kind = UnitLevel::kPhrase;
    unit.tokens = TokenRange{token, token + n};
    unit.text = "u" + std::to_string(i);
    unit.span = ByteSpan{byte, byte + unit.text.size()};
    unit.self_info = values[i];
    units.push_back(unit);
    token += n;
    byte = unit.span.end + 1;
  }
  return units;
}

inline std::vector<std::string> RandomWords(std::mt19937_64& rng, size_t n,
                                            int alphabet) {
  std::uniform_int_distribution<int> pick(0, alphabet - 1);
  std::vector<std::string> words;
  for (size_t i = 0; i < n; ++i) {
    words.push_back("w" + std::to_string(pick(rng)));
  }
  return words;
}

// A generated document: sentences of random lowercase words drawn from a
// small vocabulary, each ending in a period.
inline std::string RandomDocument(std::mt19937_64& rng) {
  static const char* const kWords[] = {
      "the",   "a",      "river", "quick", "model", "runs",  "over",
      "data",  "green",  "town",  "fish",  "boat",  "sells", "bread",
      "large", "slowly", "and",   "of",    "in",    "map"};
  std::uniform_int_distribution<int> sentences(1, 6);
  std::uniform_int_distribution<int> length(2, 12);
  std::uniform_int_distribution<int> word(0, std::size(kWords) - 1);
  std::string text;
  const int count = sentences(rng);
  for (int s = 0; s < count; ++s) {
    if (s > 0) text += ' ';
    const int n = length(rng);
    for (int i = 0; i < n; ++i) {
      std::string w = kWords[word(rng)];
      if (i == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
      if (i > 0) text += ' ';
      text += w;
    }
    text += '.';
  }
  return text;
}

// Scores every token with -ln(value) taken from a caller-supplied table,
// cycling through it; handy for hand-checkable values.
class TableScorer final : public ScorerBackend {
 public:
  explicit TableScorer(std::vector<double> logprobs)
      : logprobs_(std::move(logprobs)) {}
  ScorerKind kind() const override { return ScorerKind::kUniform; }
  absl::StatusOr<std::vector<double>> LogProbs(
      const SegmentedDocument&, const ScoringSegment& segment) const override {
    std::vector<double> out;
    for (size_t i = segment.target.begin; i < segment.target.end; ++i) {
      out.push_back(logprobs_[i % logprobs_.size()]);
    }
    return out;
  }

 private:
  std::vector<double> logprobs_;
};

// Local HTTP server on an ephemeral port, torn down on destruction.
class MockServer {
 public:
  using Handler =
      std::function<void(const httplib::Request&, httplib::Response&)>;

  MockServer() { port_ = server_.bind_to_any_port("127.0.0.1"); }
  ~MockServer() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  void Post(const std::string& path, Handler handler) {
    server_.Post(path, std::move(handler));
  }

  void Start() {
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  std::string url() const {
    return "http://127.0.0.1:" + std::to_string(port_);
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace selective_context::testing

#endif  // SELECTIVE_CONTEXT_TESTS_TEST_SUPPORT_H_
