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

#ifndef SELECTIVE_CONTEXT_STATUS_MACROS_H_
#define SELECTIVE_CONTEXT_STATUS_MACROS_H_

#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define SC_STATUS_CONCAT_INNER_(a, b) a##b
#define SC_STATUS_CONCAT_(a, b) SC_STATUS_CONCAT_INNER_(a, b)

#define SC_RETURN_IF_ERROR(expr)             \
  do {                                       \
    ::absl::Status sc_status_ = (expr);      \
    if (!sc_status_.ok()) return sc_status_; \
  } while (false)

#define SC_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, expr) \
  auto tmp = (expr);                              \
  if (!tmp.ok()) return std::move(tmp).status();  \
  lhs = std::move(tmp).value()

// Usage: SC_ASSIGN_OR_RETURN(auto value, FunctionReturningStatusOr());
#define SC_ASSIGN_OR_RETURN(lhs, expr)                                      \
  SC_ASSIGN_OR_RETURN_IMPL_(SC_STATUS_CONCAT_(sc_statusor_, __LINE__), lhs, \
                            expr)

#endif  // SELECTIVE_CONTEXT_STATUS_MACROS_H_
