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

#include "selective_context/segmentation/unicode_text.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>

namespace selective_context {

std::string NormalizeNfc(std::string_view text) {
  UErrorCode error = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(error);
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  if (U_FAILURE(error)) {
    std::string out;
    source.toUTF8String(out);
    return out;
  }
  icu::UnicodeString normalized = nfc->normalize(source, error);
  std::string out;
  (U_FAILURE(error) ? source : normalized).toUTF8String(out);
  return out;
}

std::string ToLowerUtf8(std::string_view text) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

CodePoint DecodeAt(std::string_view text, size_t offset) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = static_cast<int32_t>(offset);
  const int32_t length = static_cast<int32_t>(text.size());
  UChar32 c;
  U8_NEXT(bytes, i, length, c);
  if (c < 0) return CodePoint{0xFFFD, offset, offset + 1};
  return CodePoint{static_cast<char32_t>(c), offset, static_cast<size_t>(i)};
}

CodePoint DecodeBefore(std::string_view text, size_t offset) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  int32_t i = static_cast<int32_t>(offset);
  UChar32 c;
  U8_PREV(bytes, 0, i, c);
  if (c < 0) return CodePoint{0xFFFD, offset - 1, offset};
  return CodePoint{static_cast<char32_t>(c), static_cast<size_t>(i), offset};
}

bool IsWhitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool IsPunctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

bool IsOpeningPunctuation(char32_t c) {
  const int8_t type = u_charType(static_cast<UChar32>(c));
  return type == U_START_PUNCTUATION || type == U_INITIAL_PUNCTUATION;
}

bool IsUppercase(char32_t c) { return u_isupper(static_cast<UChar32>(c)); }

bool IsDigit(char32_t c) { return u_isdigit(static_cast<UChar32>(c)); }

bool IsAllPunctuation(std::string_view text) {
  if (text.empty()) return false;
  for (size_t i = 0; i < text.size();) {
    const CodePoint cp = DecodeAt(text, i);
    if (!IsPunctuation(cp.value)) return false;
    i = cp.end;
  }
  return true;
}

bool StartsUppercase(std::string_view text) {
  return !text.empty() && IsUppercase(DecodeAt(text, 0).value);
}

}  // namespace selective_context
