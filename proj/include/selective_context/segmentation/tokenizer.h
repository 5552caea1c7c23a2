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

#ifndef SELECTIVE_CONTEXT_SEGMENTATION_TOKENIZER_H_
#define SELECTIVE_CONTEXT_SEGMENTATION_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "selective_context/segmentation/segmented_document.h"

namespace selective_context {

struct TokenizedText {
  std::string normalized;  // NFC form of the input; token spans index here
  std::vector<Token> tokens;
};

// Splits on Unicode whitespace, then peels leading and trailing punctuation
// off each chunk, one token per punctuation code point. Inner punctuation
// ("e.g", "VOC/CUB", "don't") stays inside the word.
TokenizedText Tokenize(std::string_view text);

// Same rules over text that is already NFC.
std::vector<Token> TokenizeNormalized(std::string_view normalized);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SEGMENTATION_TOKENIZER_H_
