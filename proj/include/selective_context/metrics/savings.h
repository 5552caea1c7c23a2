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

#ifndef SELECTIVE_CONTEXT_METRICS_SAVINGS_H_
#define SELECTIVE_CONTEXT_METRICS_SAVINGS_H_

#include <cstddef>

#include "selective_context/selection/compression.h"

namespace selective_context {

struct SavingsReport {
  size_t original_tokens = 0;
  size_t retained_tokens = 0;
  double token_savings = 0.0;  // 1 - retained / original
  double unit_savings = 0.0;   // removed units / all units
};

SavingsReport Savings(const CompressionResult& result);
SavingsReport Savings(size_t original_tokens, size_t retained_tokens,
                      size_t original_units, size_t retained_units);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_METRICS_SAVINGS_H_
