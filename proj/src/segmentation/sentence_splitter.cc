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

#include "selective_context/segmentation/sentence_splitter.h"

#include <unicode/uchar.h>

#include <fstream>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "selective_context/segmentation/unicode_text.h"
#include "selective_context/string_view_compat.h"

namespace selective_context {
namespace {

bool IsTerminator(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

// Quotes and brackets that may trail a terminator: "Stop." she said / (Yes!)
bool IsClosingMark(char32_t c) {
  if (c == U'"' || c == U'\'') return true;
  const int8_t type = u_charType(static_cast<UChar32>(c));
  return type == U_END_PUNCTUATION || type == U_FINAL_PUNCTUATION;
}

bool CanOpenSentence(char32_t c) {
  return IsUppercase(c) || IsOpeningPunctuation(c) || c == U'"' || c == U'\'';
}

}  // namespace

AbbreviationList::AbbreviationList(std::vector<std::string> entries)
    : entries_(std::move(entries)) {}

const AbbreviationList& AbbreviationList::Default() {
  static const AbbreviationList* const kDefault = new AbbreviationList(
      {"Dr.",  "Mr.",  "Mrs.", "Ms.",    "Prof.", "Fig.", "Figs.",
       "Eq.",  "Eqs.", "Sec.", "Tab.",   "No.",   "Vol.", "vs.",
       "cf.",  "e.g.", "i.e.", "et al.", "St.",   "Jr.",  "Sr.",
       "Inc.", "Ltd.", "Co.",  "approx."});
  return *kDefault;
}

absl::StatusOr<AbbreviationList> AbbreviationList::Parse(
    std::string_view contents) {
  std::vector<std::string> entries;
  int line_number = 0;
  for (absl::string_view piece : absl::StrSplit(AsAbsl(contents), '\n')) {
    std::string_view line = AsStd(piece);
    ++line_number;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = AsStd(absl::StripAsciiWhitespace(AsAbsl(line)));
    if (line.empty()) continue;
    if (line.back() != '.') {
      return absl::InvalidArgumentError(
          absl::StrCat("abbreviation on line ", line_number,
                       " does not end with a period: ", AsAbsl(line)));
    }
    entries.emplace_back(line);
  }
  return AbbreviationList(std::move(entries));
}

absl::StatusOr<AbbreviationList> AbbreviationList::Load(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("cannot open abbreviation list ", path.string()));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

bool AbbreviationList::EndsWithAbbreviation(std::string_view text,
                                            size_t end) const {
  const std::string_view head = text.substr(0, end);
  for (const std::string& entry : entries_) {
    if (!head.ends_with(entry)) continue;
    const size_t start = head.size() - entry.size();
    if (start == 0) return true;
    const char32_t before = DecodeBefore(head, start).value;
    if (IsWhitespace(before) || IsOpeningPunctuation(before)) return true;
  }
  return false;
}

std::vector<ByteSpan> SplitSentences(std::string_view text,
                                     const AbbreviationList& abbreviations) {
  std::vector<ByteSpan> sentences;
  size_t i = 0;
  auto skip_whitespace = [&](size_t pos) {
    while (pos < text.size()) {
      const CodePoint cp = DecodeAt(text, pos);
      if (!IsWhitespace(cp.value)) break;
      pos = cp.end;
    }
    return pos;
  };

  size_t start = skip_whitespace(0);
  i = start;
  while (i < text.size()) {
    const CodePoint cp = DecodeAt(text, i);
    if (!IsTerminator(cp.value)) {
      i = cp.end;
      continue;
    }
    // Run of terminators, then closing quotes or brackets.
    size_t run_end = cp.end;
    int terminators = 1;
    while (run_end < text.size()) {
      const CodePoint next = DecodeAt(text, run_end);
      if (!IsTerminator(next.value)) break;
      ++terminators;
      run_end = next.end;
    }
    const size_t terminators_end = run_end;
    while (run_end < text.size()) {
      const CodePoint next = DecodeAt(text, run_end);
      if (!IsClosingMark(next.value)) break;
      run_end = next.end;
    }
    i = run_end;
    if (run_end >= text.size() ||
        !IsWhitespace(DecodeAt(text, run_end).value)) {
      continue;
    }
    const size_t next_start = skip_whitespace(run_end);
    if (next_start >= text.size()) break;
    if (!CanOpenSentence(DecodeAt(text, next_start).value)) continue;
    if (terminators == 1 && cp.value == U'.' &&
        abbreviations.EndsWithAbbreviation(text, terminators_end)) {
      continue;
    }
    sentences.push_back(ByteSpan{start, run_end});
    start = next_start;
    i = next_start;
  }

  if (start < text.size()) {
    size_t end = text.size();
    while (end > start) {
      const CodePoint cp = DecodeBefore(text, end);
      if (!IsWhitespace(cp.value)) break;
      end = cp.begin;
    }
    if (end > start) sentences.push_back(ByteSpan{start, end});
  }
  return sentences;
}

std::vector<ByteSpan> SplitSentences(std::string_view text) {
  return SplitSentences(text, AbbreviationList::Default());
}

}  // namespace selective_context
