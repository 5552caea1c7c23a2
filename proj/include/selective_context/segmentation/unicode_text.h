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

#ifndef SELECTIVE_CONTEXT_SEGMENTATION_UNICODE_TEXT_H_
#define SELECTIVE_CONTEXT_SEGMENTATION_UNICODE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace selective_context {

// Thin wrappers over ICU used by the tokenizer, splitter and tagger. All
// offsets are UTF-8 byte offsets.

// Returns the NFC form of `text`. Ill-formed UTF-8 sequences are replaced
// with U+FFFD before normalization.
std::string NormalizeNfc(std::string_view text);

// Unicode lowercase of a UTF-8 string.
std::string ToLowerUtf8(std::string_view text);

struct CodePoint {
  char32_t value = 0;
  size_t begin = 0;  // byte offset of the first byte
  size_t end = 0;    // one past the last byte
};

// Decodes the code point starting at byte `offset`. Ill-formed bytes decode
// as U+FFFD spanning one byte.
CodePoint DecodeAt(std::string_view text, size_t offset);

// Decodes the code point ending right before byte `offset` (offset > 0).
CodePoint DecodeBefore(std::string_view text, size_t offset);

bool IsWhitespace(char32_t c);
bool IsPunctuation(char32_t c);
// Ps (open) and Pi (initial quote) categories.
bool IsOpeningPunctuation(char32_t c);
bool IsUppercase(char32_t c);
bool IsDigit(char32_t c);

// True when every code point of `text` is punctuation. False for "".
bool IsAllPunctuation(std::string_view text);

// True when the first code point of `text` is uppercase.
bool StartsUppercase(std::string_view text);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SEGMENTATION_UNICODE_TEXT_H_
