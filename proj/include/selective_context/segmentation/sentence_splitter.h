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

#ifndef SELECTIVE_CONTEXT_SEGMENTATION_SENTENCE_SPLITTER_H_
#define SELECTIVE_CONTEXT_SEGMENTATION_SENTENCE_SPLITTER_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "selective_context/segmentation/segmented_document.h"

namespace selective_context {

// Abbreviations that end in a period and must not close a sentence
// ("Dr.", "e.g.", "et al."). Matching is case-sensitive and anchored at a
// whitespace boundary.
class AbbreviationList {
 public:
  AbbreviationList() = default;
  explicit AbbreviationList(std::vector<std::string> entries);

  static const AbbreviationList& Default();

  // One abbreviation per line, '#' starts a comment, blank lines ignored.
  static absl::StatusOr<AbbreviationList> Parse(std::string_view contents);
  static absl::StatusOr<AbbreviationList> Load(
      const std::filesystem::path& path);

  // True when text[0, end) ends with a listed abbreviation that starts at the
  // beginning of the text or right after whitespace.
  bool EndsWithAbbreviation(std::string_view text, size_t end) const;

  const std::vector<std::string>& entries() const { return entries_; }

 private:
  std::vector<std::string> entries_;
};

// Rule-based sentence boundaries. A sentence ends after a run of '.', '!' or
// '?' (plus any closing quotes or brackets) when whitespace follows and the
// next character is uppercase or an opening quote/bracket, unless the run is
// a single period closing a listed abbreviation. Returned spans are trimmed
// of whitespace; text without a boundary is one sentence.
std::vector<ByteSpan> SplitSentences(std::string_view text,
                                     const AbbreviationList& abbreviations);
std::vector<ByteSpan> SplitSentences(std::string_view text);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SEGMENTATION_SENTENCE_SPLITTER_H_
