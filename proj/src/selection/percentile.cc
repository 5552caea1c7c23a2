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

#include "selective_context/selection/percentile.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace selective_context {

absl::StatusOr<double> PercentileThreshold(std::span<const double> values,
                                           double p) {
  if (values.empty()) {
    return absl::InvalidArgumentError("percentile of an empty list");
  }
  if (!(p >= 0.0 && p <= 100.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("percentile must be in [0, 100], got ", p));
  }
  std::vector<double> sorted(values.begin(), values.end());
  if (std::any_of(sorted.begin(), sorted.end(),
                  [](double v) { return std::isnan(v); })) {
    return absl::InvalidArgumentError("percentile over NaN values");
  }
  std::sort(sorted.begin(), sorted.end());

  const double rank = p * static_cast<double>(sorted.size() - 1) / 100.0;
  const size_t lo = static_cast<size_t>(std::floor(rank));
  const size_t hi =
      std::min(static_cast<size_t>(std::ceil(rank)), sorted.size() - 1);
  const double fraction = rank - static_cast<double>(lo);
  const double value = sorted[lo] + (sorted[hi] - sorted[lo]) * fraction;
  // Keeps the result monotone in p despite rounding.
  return std::clamp(value, sorted[lo], sorted[hi]);
}

}  // namespace selective_context
