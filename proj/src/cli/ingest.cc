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

#include "selective_context/cli/ingest.h"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "absl/container/flat_hash_set.h"
#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "selective_context/status_macros.h"
#include "selective_context/string_view_compat.h"

namespace selective_context {
namespace {

using nlohmann::json;

bool IsBlank(std::string_view text) {
  return absl::StripAsciiWhitespace(AsAbsl(text)).empty();
}

absl::Status CheckUniqueIds(const std::vector<InputDocument>& documents) {
  absl::flat_hash_set<std::string_view> seen;
  for (const InputDocument& doc : documents) {
    if (!seen.insert(doc.id).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate document id \"", doc.id, "\""));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<InputDocument> ConversationFromJson(const json& value,
                                                   std::string_view where) {
  if (!value.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat(AsAbsl(where), ": conversation is not an object"));
  }
  if (!value.contains("id") || !value["id"].is_string()) {
    return absl::InvalidArgumentError(
        absl::StrCat(AsAbsl(where), ": missing string field \"id\""));
  }
  if (!value.contains("turns") || !value["turns"].is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat(AsAbsl(where), ": missing array field \"turns\""));
  }
  InputDocument doc;
  doc.id = value["id"].get<std::string>();
  doc.kind = DocumentKind::kConversation;
  size_t index = 0;
  for (const json& turn : value["turns"]) {
    if (!turn.is_object() || !turn.contains("speaker") ||
        !turn["speaker"].is_string() || !turn.contains("text") ||
        !turn["text"].is_string()) {
      return absl::InvalidArgumentError(
          absl::StrCat(AsAbsl(where), ": turn ", index,
                       " needs string fields speaker and text"));
    }
    doc.turns.push_back(ConversationTurn{turn["speaker"].get<std::string>(),
                                         turn["text"].get<std::string>()});
    ++index;
  }
  doc.body = ConversationBody(doc.turns);
  return doc;
}

}  // namespace

absl::StatusOr<InputFormat> ParseInputFormat(std::string_view name) {
  if (name == "auto") return InputFormat::kAuto;
  if (name == "txt") return InputFormat::kTxt;
  if (name == "jsonl") return InputFormat::kJsonl;
  if (name == "convo-json") return InputFormat::kConvoJson;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown input format \"", AsAbsl(name),
                   "\" (expected auto, txt, jsonl or convo-json)"));
}

std::string ConversationBody(const std::vector<ConversationTurn>& turns) {
  std::string body;
  for (size_t i = 0; i < turns.size(); ++i) {
    if (i > 0) body.push_back('\n');
    absl::StrAppend(&body, turns[i].speaker, ": ", turns[i].text);
  }
  return body;
}

absl::StatusOr<std::vector<InputDocument>> ParseJsonl(
    std::string_view contents) {
  std::vector<InputDocument> documents;
  int line_number = 0;
  for (absl::string_view piece : absl::StrSplit(AsAbsl(contents), '\n')) {
    const std::string_view line = AsStd(piece);
    ++line_number;
    if (IsBlank(line)) continue;
    json value = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": invalid JSON"));
    }
    if (!value.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_number, ": expected a JSON object"));
    }
    for (const char* field : {"id", "body"}) {
      if (!value.contains(field) || !value[field].is_string()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_number, ": missing string field \"", field, "\""));
      }
    }
    documents.push_back(InputDocument{value["id"].get<std::string>(),
                                      value["body"].get<std::string>(),
                                      DocumentKind::kArticle,
                                      {}});
  }
  SC_RETURN_IF_ERROR(CheckUniqueIds(documents));
  return documents;
}

absl::StatusOr<std::vector<InputDocument>> ParseConvoJson(
    std::string_view contents) {
  if (IsBlank(contents)) return std::vector<InputDocument>{};
  json value;
  try {
    value = json::parse(contents);
  } catch (const json::parse_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid JSON at byte ", e.byte, ": ", e.what()));
  }
  std::vector<InputDocument> documents;
  if (value.is_array()) {
    for (size_t i = 0; i < value.size(); ++i) {
      SC_ASSIGN_OR_RETURN(
          InputDocument doc,
          ConversationFromJson(value[i], absl::StrCat("conversation ", i)));
      documents.push_back(std::move(doc));
    }
  } else {
    SC_ASSIGN_OR_RETURN(InputDocument doc,
                        ConversationFromJson(value, "conversation"));
    documents.push_back(std::move(doc));
  }
  SC_RETURN_IF_ERROR(CheckUniqueIds(documents));
  return documents;
}

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    return absl::DataLossError(absl::StrCat("read failed: ", path.string()));
  }
  return buffer.str();
}

absl::StatusOr<std::vector<InputDocument>> Ingest(
    const std::filesystem::path& path, InputFormat format) {
  SC_ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  if (format == InputFormat::kAuto) {
    const std::string extension = path.extension().string();
    format = extension == ".jsonl"  ? InputFormat::kJsonl
             : extension == ".json" ? InputFormat::kConvoJson
                                    : InputFormat::kTxt;
  }
  absl::StatusOr<std::vector<InputDocument>> documents;
  switch (format) {
    case InputFormat::kJsonl:
      documents = ParseJsonl(contents);
      break;
    case InputFormat::kConvoJson:
      documents = ParseConvoJson(contents);
      break;
    default:
      documents = std::vector<InputDocument>{};
      if (!IsBlank(contents)) {
        documents->push_back(InputDocument{path.stem().string(),
                                           std::move(contents),
                                           DocumentKind::kArticle,
                                           {}});
      }
      break;
  }
  if (!documents.ok()) {
    return absl::Status(
        documents.status().code(),
        absl::StrCat(path.string(), ": ", documents.status().message()));
  }
  return documents;
}

absl::Status WriteFileAtomically(const std::filesystem::path& path,
                                 std::string_view contents) {
  static std::atomic<int> counter{0};
  std::filesystem::path temp = path;
  temp += absl::StrCat(".tmp-", ::getpid(), "-", counter++);
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      return absl::PermissionDeniedError(
          absl::StrCat("cannot write ", temp.string()));
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      return absl::DataLossError(absl::StrCat("write failed: ", temp.string()));
    }
  }
  std::error_code error;
  std::filesystem::rename(temp, path, error);
  if (error) {
    std::filesystem::remove(temp, error);
    return absl::PermissionDeniedError(
        absl::StrCat("cannot rename into ", path.string()));
  }
  return absl::OkStatus();
}

}  // namespace selective_context
