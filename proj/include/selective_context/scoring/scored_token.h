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

#ifndef SELECTIVE_CONTEXT_SCORING_SCORED_TOKEN_H_
#define SELECTIVE_CONTEXT_SCORING_SCORED_TOKEN_H_

#include <numbers>
#include <string>

#include "selective_context/segmentation/segmented_document.h"

namespace selective_context {

// Converts a natural-log probability into self-information in bits.
inline double SelfInformationBits(double natural_logprob) {
  // + 0.0 turns -0.0 into 0.0 for certain tokens.
  return -natural_logprob / std::numbers::ln2 + 0.0;
}

// A surface token with its context-conditional self-information.
struct ScoredToken {
  std::string text;
  ByteSpan span;
  double self_info = 0.0;  // bits, >= 0
  double logprob = 0.0;    // natural log, <= 0

  static ScoredToken FromLogProb(std::string text, ByteSpan span,
                                 double natural_logprob) {
    return ScoredToken{std::move(text), span,
                       SelfInformationBits(natural_logprob), natural_logprob};
  }
};

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SCORING_SCORED_TOKEN_H_
