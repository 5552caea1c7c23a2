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

#include "selective_context/segmentation/noun_chunker.h"

#include <algorithm>

#include "selective_context/segmentation/unicode_text.h"

namespace selective_context {
namespace {

// Length of `DET? ADJ* NOUN+` starting at i, 0 when absent.
size_t MatchCommonNounPhrase(std::span<const PosTag> tags, size_t i) {
  size_t j = i;
  if (j < tags.size() && tags[j] == PosTag::kDet) ++j;
  while (j < tags.size() && tags[j] == PosTag::kAdj) ++j;
  size_t k = j;
  while (k < tags.size() && tags[k] == PosTag::kNoun) ++k;
  return k > j ? k - i : 0;
}

// Length of `PROPN+` starting at i.
size_t MatchProperNounPhrase(std::span<const PosTag> tags, size_t i) {
  size_t j = i;
  while (j < tags.size() && tags[j] == PosTag::kPropn) ++j;
  return j - i;
}

// True when the punctuation token `t` should join the unit after it.
bool LeansRight(const SegmentedDocument& doc, TokenRange sentence, size_t t) {
  const Token& token = doc.tokens[t];
  const bool glued_left =
      t > sentence.begin && doc.tokens[t - 1].span.end == token.span.begin;
  const bool glued_right =
      t + 1 < sentence.end && doc.tokens[t + 1].span.begin == token.span.end;
  if (glued_right != glued_left) return glued_right;
  return IsOpeningPunctuation(DecodeAt(token.text, 0).value);
}

}  // namespace

std::vector<TokenRange> ChunkNounPhrases(std::span<const PosTag> tags) {
  std::vector<TokenRange> ranges;
  size_t i = 0;
  while (i < tags.size()) {
    const size_t length = std::max(MatchCommonNounPhrase(tags, i),
                                   MatchProperNounPhrase(tags, i));
    const size_t end = i + std::max<size_t>(length, 1);
    ranges.push_back(TokenRange{i, end});
    i = end;
  }
  return ranges;
}

std::vector<TokenRange> AttachPunctuation(const SegmentedDocument& doc,
                                          std::span<const TokenRange> ranges,
                                          std::span<const PosTag> tags) {
  if (ranges.empty()) return {};
  const TokenRange sentence{ranges.front().begin, ranges.back().end};

  std::vector<TokenRange> anchors;
  for (const TokenRange& range : ranges) {
    const bool all_punct =
        std::all_of(tags.begin() + range.begin, tags.begin() + range.end,
                    [](PosTag tag) { return tag == PosTag::kPunct; });
    if (!all_punct) anchors.push_back(range);
  }
  if (anchors.empty()) return {sentence};

  anchors.front().begin = sentence.begin;
  anchors.back().end = sentence.end;
  for (size_t k = 0; k + 1 < anchors.size(); ++k) {
    const size_t run_begin = anchors[k].end;
    const size_t run_end = anchors[k + 1].begin;
    size_t split = run_begin;
    while (split < run_end && !LeansRight(doc, sentence, split)) ++split;
    anchors[k].end = split;
    anchors[k + 1].begin = split;
  }
  return anchors;
}

std::vector<TokenRange> PhraseRanges(const SegmentedDocument& doc) {
  const std::vector<PosTag> tags = TagDocument(doc);
  std::vector<TokenRange> phrases;
  for (const TokenRange& sentence : doc.sentence_tokens) {
    if (sentence.empty()) continue;
    std::vector<TokenRange> chunks = ChunkNounPhrases(
        std::span<const PosTag>(tags).subspan(sentence.begin, sentence.size()));
    for (TokenRange& chunk : chunks) {
      chunk.begin += sentence.begin;
      chunk.end += sentence.begin;
    }
    for (const TokenRange& unit : AttachPunctuation(doc, chunks, tags)) {
      phrases.push_back(unit);
    }
  }
  return phrases;
}

}  // namespace selective_context
