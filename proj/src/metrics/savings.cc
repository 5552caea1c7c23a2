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

#include "selective_context/metrics/savings.h"

namespace selective_context {

SavingsReport Savings(size_t original_tokens, size_t retained_tokens,
                      size_t original_units, size_t retained_units) {
  SavingsReport report;
  report.original_tokens = original_tokens;
  report.retained_tokens = retained_tokens;
  if (original_tokens > 0) {
    report.token_savings = 1.0 - static_cast<double>(retained_tokens) /
                                     static_cast<double>(original_tokens);
  }
  if (original_units > 0) {
    report.unit_savings = static_cast<double>(original_units - retained_units) /
                          static_cast<double>(original_units);
  }
  return report;
}

SavingsReport Savings(const CompressionResult& result) {
  return Savings(result.TotalTokenCount(), result.RetainedTokenCount(),
                 result.unit_count(), result.retained.size());
}

}  // namespace selective_context
