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

#include "selective_context/segmentation/lexical_unit.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "selective_context/segmentation/noun_chunker.h"
#include "selective_context/string_view_compat.h"

namespace selective_context {

std::string_view UnitLevelName(UnitLevel level) {
  switch (level) {
    case UnitLevel::kToken:
      return "token";
    case UnitLevel::kPhrase:
      return "phrase";
    case UnitLevel::kSentence:
      return "sentence";
  }
  return "?";
}

absl::StatusOr<UnitLevel> ParseUnitLevel(std::string_view name) {
  if (name == "token") return UnitLevel::kToken;
  if (name == "phrase") return UnitLevel::kPhrase;
  if (name == "sentence") return UnitLevel::kSentence;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown unit level \"", AsAbsl(name),
                   "\" (expected token, phrase or sentence)"));
}

std::vector<TokenRange> UnitRanges(const SegmentedDocument& doc,
                                   UnitLevel level) {
  switch (level) {
    case UnitLevel::kToken: {
      std::vector<TokenRange> ranges;
      ranges.reserve(doc.tokens.size());
      for (size_t t = 0; t < doc.tokens.size(); ++t) {
        ranges.push_back(TokenRange{t, t + 1});
      }
      return ranges;
    }
    case UnitLevel::kPhrase:
      return PhraseRanges(doc);
    case UnitLevel::kSentence: {
      std::vector<TokenRange> ranges;
      for (const TokenRange& range : doc.sentence_tokens) {
        if (!range.empty()) ranges.push_back(range);
      }
      return ranges;
    }
  }
  return {};
}

absl::StatusOr<std::vector<LexicalUnit>> MergeUnits(
    std::span<const ScoredToken> scored, UnitLevel level,
    const SegmentedDocument& doc) {
  const size_t common = std::min(scored.size(), doc.tokens.size());
  for (size_t i = 0; i < common; ++i) {
    if (scored[i].span != doc.tokens[i].span) {
      return absl::InvalidArgumentError(absl::StrCat(
          "scored tokens do not match the document at index ", i, ": \"",
          scored[i].text, "\" vs \"", doc.tokens[i].text, "\""));
    }
  }
  if (scored.size() != doc.tokens.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "scored tokens do not match the document at index ", common, ": ",
        scored.size(), " scored vs ", doc.tokens.size(), " document tokens"));
  }

  std::vector<LexicalUnit> units;
  for (const TokenRange& range : UnitRanges(doc, level)) {
    LexicalUnit unit;
    unit.kind = level;
    unit.tokens = range;
    unit.span = doc.SpanOfTokens(range);
    unit.text = std::string(doc.Slice(unit.span));
    for (size_t t = range.begin; t < range.end; ++t) {
      unit.self_info += scored[t].self_info;
    }
    units.push_back(std::move(unit));
  }
  return units;
}

}  // namespace selective_context
