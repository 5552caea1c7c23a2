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

#ifndef SELECTIVE_CONTEXT_CLI_INGEST_H_
#define SELECTIVE_CONTEXT_CLI_INGEST_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace selective_context {

enum class InputFormat { kAuto, kTxt, kJsonl, kConvoJson };

absl::StatusOr<InputFormat> ParseInputFormat(std::string_view name);

enum class DocumentKind { kArticle, kConversation };

struct ConversationTurn {
  std::string speaker;
  std::string text;
};

struct InputDocument {
  std::string id;
  std::string body;
  DocumentKind kind = DocumentKind::kArticle;
  std::vector<ConversationTurn> turns;  // conversations only
};

// "speaker: text" per turn, one turn per line.
std::string ConversationBody(const std::vector<ConversationTurn>& turns);

// txt: the whole file is one document whose id is the file stem.
// jsonl: one {"id", "body"} object per non-blank line.
// convo-json: one {"id", "turns": [{"speaker", "text"}]} object or an array
// of them.
// kAuto picks by extension: .jsonl, .json, anything else is txt. Ids must be
// unique within the batch; an empty file is an empty batch.
absl::StatusOr<std::vector<InputDocument>> Ingest(
    const std::filesystem::path& path, InputFormat format = InputFormat::kAuto);

absl::StatusOr<std::vector<InputDocument>> ParseJsonl(
    std::string_view contents);
absl::StatusOr<std::vector<InputDocument>> ParseConvoJson(
    std::string_view contents);

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);

// Writes through a temporary file in the same directory and renames it over
// `path`.
absl::Status WriteFileAtomically(const std::filesystem::path& path,
                                 std::string_view contents);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_CLI_INGEST_H_
