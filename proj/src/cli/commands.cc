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

#include "selective_context/cli/commands.h"

#include <atomic>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "selective_context/cli/report.h"
#include "selective_context/scoring/ngram_model.h"
#include "selective_context/segmentation/tokenizer.h"
#include "selective_context/status_macros.h"
#include "selective_context/string_view_compat.h"

namespace selective_context {
namespace {

std::string FileNameForId(std::string_view id) {
  std::string name;
  for (char c : id) {
    const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '_' ||
                      c == '.';
    name.push_back(safe ? c : '_');
  }
  if (name.empty() || name == "." || name == "..") name = "document";
  return name;
}

std::string_view Extension(OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return ".txt";
    case OutputFormat::kJson:
      return ".json";
    case OutputFormat::kHtml:
      return ".html";
  }
  return "";
}

absl::StatusOr<std::vector<std::string>> ReadLines(
    const std::filesystem::path& path) {
  SC_ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  std::vector<std::string> lines = absl::StrSplit(contents, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (std::string& line : lines) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
  }
  return lines;
}

void AddInto(PrecisionRecall& sum, const PrecisionRecall& value) {
  sum.precision += value.precision;
  sum.recall += value.recall;
  sum.f1 += value.f1;
}

void Scale(PrecisionRecall& value, double factor) {
  value.precision *= factor;
  value.recall *= factor;
  value.f1 *= factor;
}

nlohmann::ordered_json PrecisionRecallJson(const PrecisionRecall& value) {
  nlohmann::ordered_json out;
  out["precision"] = RoundSignificant(value.precision);
  out["recall"] = RoundSignificant(value.recall);
  out["f1"] = RoundSignificant(value.f1);
  return out;
}

nlohmann::ordered_json OverlapJson(const OverlapReport& report) {
  nlohmann::ordered_json out;
  out["bleu"] = RoundSignificant(report.bleu);
  out["rouge1"] = PrecisionRecallJson(report.rouge1);
  out["rouge2"] = PrecisionRecallJson(report.rouge2);
  out["rougeL"] = PrecisionRecallJson(report.rouge_l);
  return out;
}

void AppendTsvRow(std::string& out, std::string_view label,
                  const OverlapReport& r) {
  absl::StrAppendFormat(
      &out, "%s\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\n",
      AsAbsl(label), r.bleu, r.rouge1.precision, r.rouge1.recall, r.rouge1.f1,
      r.rouge2.precision, r.rouge2.recall, r.rouge2.f1, r.rouge_l.precision,
      r.rouge_l.recall, r.rouge_l.f1);
}

}  // namespace

absl::StatusOr<ScorerSpec> ParseScorerSpec(std::string_view spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string_view::npos || colon + 1 == spec.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "scorer must be ngram:<path>, remote:<url> or uniform:<vocab>, got \"",
        AsAbsl(spec), "\""));
  }
  const std::string_view kind = spec.substr(0, colon);
  ScorerSpec out;
  out.argument = std::string(spec.substr(colon + 1));
  if (kind == "ngram") {
    out.kind = ScorerKind::kNgram;
  } else if (kind == "remote") {
    out.kind = ScorerKind::kRemote;
  } else if (kind == "uniform") {
    out.kind = ScorerKind::kUniform;
    size_t vocab = 0;
    if (!absl::SimpleAtoi(out.argument, &vocab) || vocab < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("uniform scorer needs a positive vocab size, got \"",
                       out.argument, "\""));
    }
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown scorer kind \"", AsAbsl(kind), "\""));
  }
  return out;
}

absl::StatusOr<std::shared_ptr<const ScorerBackend>> MakeScorer(
    const ScorerSpec& spec, const RemoteSettings& remote) {
  switch (spec.kind) {
    case ScorerKind::kNgram: {
      SC_ASSIGN_OR_RETURN(NgramModel model, NgramModel::Load(spec.argument));
      return std::make_shared<const NgramScorer>(
          std::make_shared<const NgramModel>(std::move(model)));
    }
    case ScorerKind::kUniform: {
      size_t vocab = 0;
      if (!absl::SimpleAtoi(spec.argument, &vocab)) {
        return absl::InvalidArgumentError("bad uniform vocab size");
      }
      SC_ASSIGN_OR_RETURN(UniformScorer scorer, UniformScorer::Create(vocab));
      return std::make_shared<const UniformScorer>(scorer);
    }
    case ScorerKind::kRemote: {
      RemoteScorerOptions options;
      options.endpoint = spec.argument;
      options.profile = remote.profile;
      options.model = remote.model;
      options.max_in_flight = remote.max_in_flight;
      options.max_request_bytes = remote.max_request_bytes;
      if (const char* token = std::getenv(kRemoteAuthEnvVar)) {
        options.auth_token = token;
      }
      SC_ASSIGN_OR_RETURN(std::unique_ptr<RemoteScorer> scorer,
                          RemoteScorer::Create(std::move(options)));
      return std::shared_ptr<const ScorerBackend>(std::move(scorer));
    }
  }
  return absl::InternalError("unhandled scorer kind");
}

absl::StatusOr<OutputFormat> ParseOutputFormat(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "html") return OutputFormat::kHtml;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown output format \"", AsAbsl(name),
                   "\" (expected text, json or html)"));
}

absl::Status CompressRunConfig::Validate() const {
  if (inputs.empty()) return absl::InvalidArgumentError("no input files");
  SC_RETURN_IF_ERROR(compression.Validate());
  SC_RETURN_IF_ERROR(ParseScorerSpec(scorer).status());
  if (jobs < 1) return absl::InvalidArgumentError("--jobs must be >= 1");
  if (remote.max_in_flight < 1) {
    return absl::InvalidArgumentError("remote in-flight cap must be >= 1");
  }
  if (output_dir.has_value() && std::filesystem::exists(*output_dir) &&
      !std::filesystem::is_directory(*output_dir)) {
    return absl::InvalidArgumentError(
        absl::StrCat(output_dir->string(), " is not a directory"));
  }
  return absl::OkStatus();
}

std::string DocumentOutput::RetainedText() const {
  std::string text = RenderRetained(result);
  if (!suffix.empty()) {
    if (!text.empty()) text.push_back('\n');
    text += suffix;
  }
  return text;
}

absl::StatusOr<DocumentOutput> CompressDocument(
    const InputDocument& input, const ScorerBackend& backend,
    const CompressionConfig& config, const AbbreviationList& abbreviations) {
  DocumentOutput output;
  output.id = input.id;
  output.result.level = config.level;
  output.result.requested_ratio = config.ratio;

  std::string body = input.body;
  if (input.kind == DocumentKind::kConversation) {
    if (input.turns.empty()) {
      return absl::InvalidArgumentError("conversation has no turns");
    }
    const std::vector<ConversationTurn> history(input.turns.begin(),
                                                input.turns.end() - 1);
    output.suffix = ConversationBody({input.turns.back()});
    if (history.empty()) return output;
    body = ConversationBody(history);
  }
  SC_ASSIGN_OR_RETURN(CompressedDocument compressed,
                      Compress(body, backend, config, abbreviations));
  output.result = std::move(compressed.result);
  return output;
}

std::string FormatDocument(const DocumentOutput& output, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText:
      return output.RetainedText() + "\n";
    case OutputFormat::kJson:
      return DumpReport(
                 ReportJson(output.id, output.result, output.RetainedText())) +
             "\n";
    case OutputFormat::kHtml:
      return RenderHtml(output.id, output.result);
  }
  return "";
}

int RunCompress(const CompressRunConfig& config, std::ostream& out,
                std::ostream& err) {
  if (absl::Status status = config.Validate(); !status.ok()) {
    err << "error: " << status.message() << "\n";
    return 2;
  }
  absl::StatusOr<ScorerSpec> spec = ParseScorerSpec(config.scorer);
  absl::StatusOr<std::shared_ptr<const ScorerBackend>> backend =
      MakeScorer(*spec, config.remote);
  if (!backend.ok()) {
    err << "error: " << backend.status().message() << "\n";
    return 2;
  }
  AbbreviationList abbreviations = AbbreviationList::Default();
  if (config.abbreviations.has_value()) {
    absl::StatusOr<AbbreviationList> loaded =
        AbbreviationList::Load(*config.abbreviations);
    if (!loaded.ok()) {
      err << "error: " << loaded.status().message() << "\n";
      return 2;
    }
    abbreviations = *std::move(loaded);
  }
  // HTML is always one file per document; it lands in the working directory
  // when no --output-dir is given.
  std::optional<std::filesystem::path> output_dir = config.output_dir;
  if (!output_dir.has_value() && config.format == OutputFormat::kHtml) {
    output_dir = std::filesystem::path(".");
  }
  if (output_dir.has_value()) {
    std::error_code error;
    std::filesystem::create_directories(*output_dir, error);
    if (error) {
      err << "error: cannot create " << output_dir->string() << ": "
          << error.message() << "\n";
      return 2;
    }
  }

  bool failed = false;
  std::vector<InputDocument> documents;
  for (const std::filesystem::path& path : config.inputs) {
    absl::StatusOr<std::vector<InputDocument>> batch =
        Ingest(path, config.input_format);
    if (!batch.ok()) {
      err << "error: " << batch.status().message() << "\n";
      failed = true;
      continue;
    }
    for (InputDocument& doc : *batch) documents.push_back(std::move(doc));
  }

  std::vector<absl::StatusOr<std::string>> rendered(
      documents.size(), absl::UnknownError("not processed"));
  absl::flat_hash_set<std::string_view> seen;
  for (size_t i = 0; i < documents.size(); ++i) {
    if (!seen.insert(documents[i].id).second) {
      rendered[i] = absl::InvalidArgumentError("duplicate document id");
    }
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < documents.size(); i = next++) {
      if (rendered[i].status().code() == absl::StatusCode::kInvalidArgument) {
        continue;
      }
      absl::StatusOr<DocumentOutput> output = CompressDocument(
          documents[i], **backend, config.compression, abbreviations);
      rendered[i] = output.ok() ? absl::StatusOr<std::string>(
                                      FormatDocument(*output, config.format))
                                : absl::StatusOr<std::string>(output.status());
    }
  };
  {
    std::vector<std::jthread> workers;
    const size_t count =
        std::min(static_cast<size_t>(config.jobs), documents.size());
    for (size_t w = 1; w < count; ++w) workers.emplace_back(worker);
    worker();
  }

  for (size_t i = 0; i < documents.size(); ++i) {
    const std::string& id = documents[i].id;
    if (!rendered[i].ok()) {
      err << "error: document " << id << ": " << rendered[i].status().message()
          << "\n";
      failed = true;
      continue;
    }
    if (output_dir.has_value()) {
      const std::filesystem::path path =
          *output_dir /
          absl::StrCat(FileNameForId(id), AsAbsl(Extension(config.format)));
      if (absl::Status status = WriteFileAtomically(path, *rendered[i]);
          !status.ok()) {
        err << "error: document " << id << ": " << status.message() << "\n";
        failed = true;
      }
    } else {
      out << *rendered[i];
    }
  }
  out.flush();
  return failed ? 1 : 0;
}

absl::StatusOr<EvaluationTable> Evaluate(
    const std::vector<std::string>& candidates,
    const std::vector<std::vector<std::string>>& references,
    const BleuOptions& bleu) {
  if (references.empty()) {
    return absl::InvalidArgumentError("no reference texts");
  }
  for (const auto& file : references) {
    if (file.size() != candidates.size()) {
      return absl::InvalidArgumentError(absl::StrCat(
          candidates.size(), " candidates but ", file.size(), " references"));
    }
  }
  EvaluationTable table;
  for (size_t i = 0; i < candidates.size(); ++i) {
    const std::vector<std::string> candidate = MetricTokens(candidates[i]);
    std::vector<std::vector<std::string>> refs;
    for (const auto& file : references) refs.push_back(MetricTokens(file[i]));
    absl::StatusOr<OverlapReport> report = Overlap(candidate, refs, bleu);
    if (!report.ok()) {
      return absl::Status(
          report.status().code(),
          absl::StrCat("pair ", i + 1, ": ", report.status().message()));
    }
    table.pairs.push_back(*report);
  }
  OverlapReport& mean = table.aggregate;
  for (const OverlapReport& pair : table.pairs) {
    mean.bleu += pair.bleu;
    AddInto(mean.rouge1, pair.rouge1);
    AddInto(mean.rouge2, pair.rouge2);
    AddInto(mean.rouge_l, pair.rouge_l);
  }
  if (!table.pairs.empty()) {
    const double factor = 1.0 / static_cast<double>(table.pairs.size());
    mean.bleu *= factor;
    Scale(mean.rouge1, factor);
    Scale(mean.rouge2, factor);
    Scale(mean.rouge_l, factor);
  }
  return table;
}

std::string FormatEvaluation(const EvaluationTable& table, TableFormat format) {
  if (format == TableFormat::kJson) {
    nlohmann::ordered_json out;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const OverlapReport& pair : table.pairs) {
      pairs.push_back(OverlapJson(pair));
    }
    out["pairs"] = std::move(pairs);
    out["aggregate"] = OverlapJson(table.aggregate);
    return out.dump() + "\n";
  }
  std::string out =
      "pair\tbleu\trouge1_p\trouge1_r\trouge1_f1\trouge2_p\trouge2_r\t"
      "rouge2_f1\trougeL_p\trougeL_r\trougeL_f1\n";
  for (size_t i = 0; i < table.pairs.size(); ++i) {
    AppendTsvRow(out, absl::StrCat(i + 1), table.pairs[i]);
  }
  AppendTsvRow(out, "mean", table.aggregate);
  return out;
}

int RunEvaluate(const EvaluateRunConfig& config, std::ostream& out,
                std::ostream& err) {
  if (config.references.empty()) {
    err << "error: at least one references file is required\n";
    return 2;
  }
  absl::StatusOr<std::vector<std::string>> candidates =
      ReadLines(config.candidates);
  if (!candidates.ok()) {
    err << "error: " << candidates.status().message() << "\n";
    return 1;
  }
  std::vector<std::vector<std::string>> references;
  for (const std::filesystem::path& path : config.references) {
    absl::StatusOr<std::vector<std::string>> lines = ReadLines(path);
    if (!lines.ok()) {
      err << "error: " << lines.status().message() << "\n";
      return 1;
    }
    if (lines->size() != candidates->size()) {
      err << "error: " << config.candidates.string() << " has "
          << candidates->size() << " lines but " << path.string() << " has "
          << lines->size() << "\n";
      return 1;
    }
    references.push_back(*std::move(lines));
  }
  absl::StatusOr<EvaluationTable> table =
      Evaluate(*candidates, references, config.bleu);
  if (!table.ok()) {
    err << "error: " << config.candidates.string() << ": "
        << table.status().message() << "\n";
    return 1;
  }
  out << FormatEvaluation(*table, config.format);
  out.flush();
  return 0;
}

int RunTrainNgram(const TrainNgramRunConfig& config, std::ostream& out,
                  std::ostream& err) {
  absl::StatusOr<std::string> corpus = ReadFile(config.corpus);
  if (!corpus.ok()) {
    err << "error: " << corpus.status().message() << "\n";
    return 1;
  }
  std::vector<std::string> tokens;
  for (Token& token : Tokenize(*corpus).tokens) {
    tokens.push_back(std::move(token.text));
  }
  absl::StatusOr<NgramModel> model =
      NgramModel::Train(tokens, config.order, config.k);
  if (!model.ok()) {
    err << "error: " << config.corpus.string() << ": "
        << model.status().message() << "\n";
    return 1;
  }
  if (absl::Status status =
          WriteFileAtomically(config.output, model->Serialize());
      !status.ok()) {
    err << "error: " << status.message() << "\n";
    return 1;
  }
  out << "vocab_size=" << model->vocab_size() << " tokens=" << tokens.size()
      << " windows=" << model->window_count() << "\n";
  return 0;
}

}  // namespace selective_context
