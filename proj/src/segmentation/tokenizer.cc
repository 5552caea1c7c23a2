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

#include "selective_context/segmentation/tokenizer.h"

#include "selective_context/segmentation/unicode_text.h"

namespace selective_context {
namespace {

void EmitChunk(std::string_view text, size_t begin, size_t end,
               std::vector<Token>& out) {
  // Peel leading punctuation.
  size_t word_begin = begin;
  while (word_begin < end) {
    const CodePoint cp = DecodeAt(text, word_begin);
    if (!IsPunctuation(cp.value)) break;
    out.push_back(Token{std::string(text.substr(cp.begin, cp.end - cp.begin)),
                        ByteSpan{cp.begin, cp.end}, 0});
    word_begin = cp.end;
  }
  if (word_begin == end) return;

  // Find trailing punctuation, emitted after the word.
  size_t word_end = end;
  while (word_end > word_begin) {
    const CodePoint cp = DecodeBefore(text, word_end);
    if (!IsPunctuation(cp.value)) break;
    word_end = cp.begin;
  }
  out.push_back(
      Token{std::string(text.substr(word_begin, word_end - word_begin)),
            ByteSpan{word_begin, word_end}, 0});
  for (size_t i = word_end; i < end;) {
    const CodePoint cp = DecodeAt(text, i);
    out.push_back(Token{std::string(text.substr(cp.begin, cp.end - cp.begin)),
                        ByteSpan{cp.begin, cp.end}, 0});
    i = cp.end;
  }
}

}  // namespace

std::vector<Token> TokenizeNormalized(std::string_view normalized) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < normalized.size()) {
    CodePoint cp = DecodeAt(normalized, i);
    if (IsWhitespace(cp.value)) {
      i = cp.end;
      continue;
    }
    const size_t chunk_begin = i;
    while (i < normalized.size()) {
      cp = DecodeAt(normalized, i);
      if (IsWhitespace(cp.value)) break;
      i = cp.end;
    }
    EmitChunk(normalized, chunk_begin, i, tokens);
  }
  return tokens;
}

TokenizedText Tokenize(std::string_view text) {
  TokenizedText result;
  result.normalized = NormalizeNfc(text);
  result.tokens = TokenizeNormalized(result.normalized);
  return result;
}

}  // namespace selective_context
