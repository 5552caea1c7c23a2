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

#ifndef SELECTIVE_CONTEXT_SEGMENTATION_NOUN_CHUNKER_H_
#define SELECTIVE_CONTEXT_SEGMENTATION_NOUN_CHUNKER_H_

#include <span>
#include <vector>

#include "selective_context/segmentation/pos_tagger.h"
#include "selective_context/segmentation/segmented_document.h"

namespace selective_context {

// Greedy longest match of `DET? ADJ* NOUN+ | PROPN+` from left to right.
// Matches become phrase ranges and every other token a singleton range, so
// the result partitions [0, tags.size()). Verbs are never merged.
std::vector<TokenRange> ChunkNounPhrases(std::span<const PosTag> tags);

// Folds punctuation singletons into a neighbouring unit of the same sentence.
// A punctuation token joins the side it is written against (no whitespace in
// between); when attached to both or neither side, opening brackets and
// quotes join the following unit and everything else the preceding one.
// `ranges` must partition the tokens of one sentence of `doc`.
std::vector<TokenRange> AttachPunctuation(const SegmentedDocument& doc,
                                          std::span<const TokenRange> ranges,
                                          std::span<const PosTag> tags);

// Phrase-level ranges for the whole document: chunking plus punctuation
// attachment, sentence by sentence. Never crosses a sentence boundary.
std::vector<TokenRange> PhraseRanges(const SegmentedDocument& doc);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SEGMENTATION_NOUN_CHUNKER_H_
