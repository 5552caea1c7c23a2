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

#include "selective_context/segmentation/segmented_document.h"

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "selective_context/segmentation/sentence_splitter.h"
#include "selective_context/segmentation/tokenizer.h"
#include "selective_context/segmentation/unicode_text.h"

namespace selective_context {

std::string_view SegmentedDocument::SliceTokens(TokenRange range) const {
  return Slice(SpanOfTokens(range));
}

ByteSpan SegmentedDocument::SpanOfTokens(TokenRange range) const {
  if (range.empty()) return ByteSpan{};
  return ByteSpan{tokens[range.begin].span.begin,
                  tokens[range.end - 1].span.end};
}

SegmentedDocument Segment(std::string_view text,
                          const AbbreviationList& abbreviations) {
  SegmentedDocument doc;
  doc.text = NormalizeNfc(text);
  doc.tokens = TokenizeNormalized(doc.text);
  doc.sentences = SplitSentences(doc.text, abbreviations);

  size_t t = 0;
  for (size_t s = 0; s < doc.sentences.size(); ++s) {
    const size_t first = t;
    while (t < doc.tokens.size() &&
           doc.tokens[t].span.end <= doc.sentences[s].end) {
      doc.tokens[t].sentence = s;
      ++t;
    }
    doc.sentence_tokens.push_back(TokenRange{first, t});
  }
  return doc;
}

SegmentedDocument Segment(std::string_view text) {
  return Segment(text, AbbreviationList::Default());
}

absl::StatusOr<SegmentedDocument> DocumentFromTokens(
    const std::vector<std::vector<std::string>>& sentences) {
  SegmentedDocument doc;
  for (size_t s = 0; s < sentences.size(); ++s) {
    if (sentences[s].empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("sentence ", s, " has no tokens"));
    }
    if (s > 0) doc.text.push_back('\n');
    const size_t first_token = doc.tokens.size();
    const size_t sentence_begin = doc.text.size();
    for (size_t i = 0; i < sentences[s].size(); ++i) {
      const std::string& token = sentences[s][i];
      if (token.empty()) {
        return absl::InvalidArgumentError(
            absl::StrCat("empty token at sentence ", s, ", position ", i));
      }
      for (size_t b = 0; b < token.size();) {
        const CodePoint cp = DecodeAt(token, b);
        if (IsWhitespace(cp.value)) {
          return absl::InvalidArgumentError(
              absl::StrCat("token contains whitespace: \"", token, "\""));
        }
        b = cp.end;
      }
      if (i > 0) doc.text.push_back(' ');
      const size_t begin = doc.text.size();
      doc.text += token;
      doc.tokens.push_back(Token{token, ByteSpan{begin, doc.text.size()}, s});
    }
    doc.sentences.push_back(ByteSpan{sentence_begin, doc.text.size()});
    doc.sentence_tokens.push_back(TokenRange{first_token, doc.tokens.size()});
  }
  return doc;
}

}  // namespace selective_context
