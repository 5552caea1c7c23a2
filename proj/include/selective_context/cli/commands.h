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

#ifndef SELECTIVE_CONTEXT_CLI_COMMANDS_H_
#define SELECTIVE_CONTEXT_CLI_COMMANDS_H_

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "selective_context/cli/ingest.h"
#include "selective_context/metrics/overlap.h"
#include "selective_context/scoring/remote_scorer.h"
#include "selective_context/scoring/scorer_backend.h"
#include "selective_context/selection/compression.h"

namespace selective_context {

// --scorer ngram:<path> | remote:<url> | uniform:<vocab size>
struct ScorerSpec {
  ScorerKind kind = ScorerKind::kUniform;
  std::string argument;
};

absl::StatusOr<ScorerSpec> ParseScorerSpec(std::string_view spec);

struct RemoteSettings {
  RemoteProfile profile = RemoteProfile::kNative;
  std::string model;
  size_t max_in_flight = 4;
  size_t max_request_bytes = 8 * 1024;
};

// Remote scorers read their bearer token from kRemoteAuthEnvVar.
absl::StatusOr<std::shared_ptr<const ScorerBackend>> MakeScorer(
    const ScorerSpec& spec, const RemoteSettings& remote = {});

enum class OutputFormat { kText, kJson, kHtml };

absl::StatusOr<OutputFormat> ParseOutputFormat(std::string_view name);

struct CompressRunConfig {
  std::vector<std::filesystem::path> inputs;
  InputFormat input_format = InputFormat::kAuto;
  std::string scorer;
  RemoteSettings remote;
  CompressionConfig compression;
  OutputFormat format = OutputFormat::kText;
  // One file per document (<id>.txt|.json|.html) when set, stdout otherwise.
  // HTML output defaults to the working directory.
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::filesystem::path> abbreviations;
  int jobs = 1;

  absl::Status Validate() const;
};

// Output of one input document. For conversations only the history is
// compressed and the final turn is carried through verbatim as `suffix`.
struct DocumentOutput {
  std::string id;
  CompressionResult result;
  std::string suffix;

  std::string RetainedText() const;
};

absl::StatusOr<DocumentOutput> CompressDocument(
    const InputDocument& input, const ScorerBackend& backend,
    const CompressionConfig& config, const AbbreviationList& abbreviations);

std::string FormatDocument(const DocumentOutput& output, OutputFormat format);

// Returns the process exit status: 0 when every document succeeded, 1 when
// any failed (one line per failure on `err`), 2 for configuration errors.
int RunCompress(const CompressRunConfig& config, std::ostream& out,
                std::ostream& err);

enum class TableFormat { kTsv, kJson };

struct EvaluateRunConfig {
  std::filesystem::path candidates;
  std::vector<std::filesystem::path> references;
  TableFormat format = TableFormat::kTsv;
  BleuOptions bleu;
};

struct EvaluationTable {
  std::vector<OverlapReport> pairs;
  OverlapReport aggregate;  // arithmetic mean over pairs
};

// Line i of the candidate file is scored against line i of every reference
// file.
absl::StatusOr<EvaluationTable> Evaluate(
    const std::vector<std::string>& candidates,
    const std::vector<std::vector<std::string>>& references,
    const BleuOptions& bleu);

std::string FormatEvaluation(const EvaluationTable& table, TableFormat format);

int RunEvaluate(const EvaluateRunConfig& config, std::ostream& out,
                std::ostream& err);

struct TrainNgramRunConfig {
  std::filesystem::path corpus;
  std::filesystem::path output;
  int order = 3;
  double k = 0.1;
};

int RunTrainNgram(const TrainNgramRunConfig& config, std::ostream& out,
                  std::ostream& err);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_CLI_COMMANDS_H_
