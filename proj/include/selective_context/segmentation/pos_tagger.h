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

#ifndef SELECTIVE_CONTEXT_SEGMENTATION_POS_TAGGER_H_
#define SELECTIVE_CONTEXT_SEGMENTATION_POS_TAGGER_H_

#include <string_view>
#include <vector>

#include "selective_context/segmentation/segmented_document.h"

namespace selective_context {

// Coarse universal part-of-speech tags.
enum class PosTag {
  kNoun,
  kPropn,
  kVerb,
  kAux,
  kAdj,
  kAdv,
  kAdp,
  kDet,
  kPron,
  kCconj,
  kSconj,
  kPart,
  kNum,
  kPunct,
};

std::string_view PosTagName(PosTag tag);

// Lexicon tagger: closed-class word lists, a small open-class lexicon and
// suffix rules. Unknown words default to NOUN. Deterministic; tags depend only
// on the token texts and sentence boundaries of `doc`.
std::vector<PosTag> TagDocument(const SegmentedDocument& doc);

// Tags one sentence given as token texts.
std::vector<PosTag> TagSentence(const std::vector<std::string_view>& tokens);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SEGMENTATION_POS_TAGGER_H_
