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

// selective-context: compress documents by pruning low self-information
// units, train n-gram scorers, and compute overlap metrics.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "selective_context/cli/commands.h"
#include "selective_context/segmentation/lexical_unit.h"

namespace sc = selective_context;

namespace {

struct CompressFlags {
  std::vector<std::string> inputs;
  std::string input_format = "auto";
  std::string scorer;
  double ratio = 0.5;
  std::string level = "phrase";
  std::string mode = "sentence";
  std::string format = "text";
  uint64_t seed = 0;
  std::string baseline = "self-info";
  int jobs = 1;
  std::string abbrev;
  std::string output_dir;
  std::string remote_profile = "native";
  std::string remote_model;
  size_t remote_max_in_flight = 4;
  size_t remote_max_request_bytes = 8 * 1024;
};

void AddCompressFlags(CLI::App* cmd, CompressFlags& f, bool with_format) {
  cmd->add_option("inputs", f.inputs, "Input files")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--input-format", f.input_format,
                  "Input format; auto picks by extension (.jsonl, .json)")
      ->check(CLI::IsMember({"auto", "txt", "jsonl", "convo-json"}))
      ->capture_default_str();
  cmd->add_option("--scorer", f.scorer,
                  "Scoring backend: ngram:<path>, remote:<url> or "
                  "uniform:<vocab size>")
      ->required();
  cmd->add_option("--ratio", f.ratio, "Fraction of units to remove, in [0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--level", f.level, "Lexical unit granularity")
      ->check(CLI::IsMember({"token", "phrase", "sentence"}))
      ->capture_default_str();
  cmd->add_option("--mode", f.mode,
                  "Score each sentence independently or the whole document "
                  "as one sequence")
      ->check(CLI::IsMember({"sentence", "document"}))
      ->capture_default_str();
  if (with_format) {
    cmd->add_option("--format", f.format,
                    "Output format; html writes one file per document")
        ->check(CLI::IsMember({"text", "json", "html"}))
        ->capture_default_str();
  }
  cmd->add_option("--seed", f.seed, "Seed for the random baseline")
      ->capture_default_str();
  cmd->add_option("--baseline", f.baseline,
                  "Selection strategy; random drops round(ratio * n) units "
                  "uniformly")
      ->check(CLI::IsMember({"self-info", "random"}))
      ->capture_default_str();
  cmd->add_option("--jobs", f.jobs, "Documents processed concurrently")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--abbrev", f.abbrev,
                  "Abbreviation list for sentence splitting, one entry per "
                  "line ending in '.'")
      ->check(CLI::ExistingFile);
  cmd->add_option("--output-dir", f.output_dir,
                  "Write <id>.<ext> per document here instead of stdout");
  cmd->add_option("--remote-profile", f.remote_profile,
                  "Wire protocol of a remote scorer")
      ->check(CLI::IsMember({"native", "openai"}))
      ->capture_default_str();
  cmd->add_option("--remote-model", f.remote_model,
                  "Model name sent to a remote scorer");
  cmd->add_option("--remote-max-in-flight", f.remote_max_in_flight,
                  "Concurrent requests to a remote scorer")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--remote-max-request-bytes", f.remote_max_request_bytes,
                  "Byte budget per remote request in document mode")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int RunCompressFlags(const CompressFlags& f, std::string_view format) {
  sc::CompressRunConfig config;
  for (const std::string& input : f.inputs) config.inputs.emplace_back(input);
  config.input_format = *sc::ParseInputFormat(f.input_format);
  config.scorer = f.scorer;
  config.remote.profile = f.remote_profile == "openai"
                              ? sc::RemoteProfile::kOpenAiCompletions
                              : sc::RemoteProfile::kNative;
  config.remote.model = f.remote_model;
  config.remote.max_in_flight = f.remote_max_in_flight;
  config.remote.max_request_bytes = f.remote_max_request_bytes;
  config.compression.ratio = f.ratio;
  config.compression.level = *sc::ParseUnitLevel(f.level);
  config.compression.mode = f.mode == "document"
                                ? sc::ScoringMode::kWholeDocument
                                : sc::ScoringMode::kPerSentence;
  config.compression.baseline = f.baseline == "random"
                                    ? sc::Baseline::kRandom
                                    : sc::Baseline::kSelfInformation;
  config.compression.seed = f.seed;
  config.format = *sc::ParseOutputFormat(format);
  if (!f.output_dir.empty()) config.output_dir = f.output_dir;
  if (!f.abbrev.empty()) config.abbreviations = f.abbrev;
  config.jobs = f.jobs;
  return sc::RunCompress(config, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Compress long inputs for language models by dropping the least "
      "informative tokens, phrases or sentences."};
  app.set_config("--config", "",
                 "TOML file supplying flag values; unknown keys are errors");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  sc::TrainNgramRunConfig train;
  std::string train_corpus, train_output;
  CLI::App* train_cmd =
      app.add_subcommand("train-ngram", "Train an add-k n-gram scorer");
  train_cmd->add_option("corpus", train_corpus, "Training text")
      ->required()
      ->check(CLI::ExistingFile);
  train_cmd->add_option("-o,--output", train_output, "Model file to write")
      ->required();
  train_cmd->add_option("--order", train.order, "n-gram order (>= 2)")
      ->capture_default_str();
  train_cmd->add_option("--k", train.k, "Add-k smoothing constant (> 0)")
      ->capture_default_str();

  CompressFlags compress;
  CLI::App* compress_cmd = app.add_subcommand(
      "compress", "Prune low self-information units from each document");
  AddCompressFlags(compress_cmd, compress, /*with_format=*/true);

  CompressFlags visualize;
  CLI::App* visualize_cmd = app.add_subcommand(
      "visualize",
      "Write an HTML page per document shading units by self-information");
  AddCompressFlags(visualize_cmd, visualize, /*with_format=*/false);

  sc::EvaluateRunConfig evaluate;
  std::string candidates;
  std::vector<std::string> references;
  std::string table_format = "tsv";
  CLI::App* evaluate_cmd = app.add_subcommand(
      "evaluate", "BLEU and ROUGE of candidate lines against references");
  evaluate_cmd->add_option("candidates", candidates, "One candidate per line")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate_cmd
      ->add_option("references", references,
                   "Reference files, line-aligned with the candidates")
      ->required()
      ->check(CLI::ExistingFile);
  evaluate_cmd->add_option("--format", table_format, "Table format")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  evaluate_cmd
      ->add_option("--max-n", evaluate.bleu.max_n, "Highest BLEU n-gram order")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  evaluate_cmd->add_flag("--smoothing", evaluate.bleu.smoothing,
                         "Add-one smoothing for BLEU orders n >= 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*train_cmd) {
    train.corpus = train_corpus;
    train.output = train_output;
    return sc::RunTrainNgram(train, std::cout, std::cerr);
  }
  if (*compress_cmd) return RunCompressFlags(compress, compress.format);
  if (*visualize_cmd) return RunCompressFlags(visualize, "html");
  if (*evaluate_cmd) {
    evaluate.candidates = candidates;
    for (const std::string& r : references) evaluate.references.emplace_back(r);
    evaluate.format =
        table_format == "json" ? sc::TableFormat::kJson : sc::TableFormat::kTsv;
    return sc::RunEvaluate(evaluate, std::cout, std::cerr);
  }
  return 2;
}
