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

#ifndef SELECTIVE_CONTEXT_SELECTION_PERCENTILE_H_
#define SELECTIVE_CONTEXT_SELECTION_PERCENTILE_H_

#include <span>

#include "absl/status/statusor.h"

namespace selective_context {

// p-th percentile (p in [0, 100]) with linear interpolation over the
// inclusive range: sort ascending, take rank r = p * (n - 1) / 100 and
// interpolate between the floor(r) and ceil(r) entries. Same convention as
// numpy.percentile's default.
absl::StatusOr<double> PercentileThreshold(std::span<const double> values,
                                           double p);

}  // namespace selective_context

#endif  // SELECTIVE_CONTEXT_SELECTION_PERCENTILE_H_
