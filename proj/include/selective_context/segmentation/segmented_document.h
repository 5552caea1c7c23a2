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

#ifndef SELECTIVE_CONTEXT_SEGMENTATION_SEGMENTED_DOCUMENT_H_
#define SELECTIVE_CONTEXT_SEGMENTATION_SEGMENTED_DOCUMENT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace selective_context {

// Half-open byte range [begin, end) into a document's normalized text.
struct ByteSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool Contains(const ByteSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

// Half-open range [begin, end) of token indices.
struct TokenRange {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

struct Token {
  std::string text;
  ByteSpan span;
  size_t sentence = 0;
};

class AbbreviationList;

// A document broken into sentences and tokens. `text` is the NFC-normalized
// input and every span indexes into it. Sentence spans cover the
// non-whitespace extent of the text in order; each token lies in exactly one
// sentence and `sentence_tokens[i]` lists the tokens of sentence i.
struct SegmentedDocument {
  std::string text;
  std::vector<ByteSpan> sentences;
  std::vector<TokenRange> sentence_tokens;
  std::vector<Token> tokens;

  std::string_view Slice(ByteSpan span) const {
    return std::string_view(text).substr(span.begin, span.size());
  }
  // Text from the first to the last token of `range`, original spacing kept.
  std::string_view SliceTokens(TokenRange range) const;
  ByteSpan SpanOfTokens(TokenRange range) const;
};

// Normalizes, tokenizes and sentence-splits `text`.
SegmentedDocument Segment(std::string_view text,
                          const AbbreviationList& abbreviations);
SegmentedDocument Segment(std::string_view text);

// Builds a document from pre-tokenized sentences by joining tokens with single
// spaces and sentences with a newline. Tokens must be non-empty and free of
// whitespace; this is the entry point for callers that already have tokens.
absl::StatusOr<SegmentedDocument> DocumentFromTokens(
    const std::vector<std::vector<std::string>>& sentences);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SEGMENTATION_SEGMENTED_DOCUMENT_H_
