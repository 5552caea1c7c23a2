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

#include "selective_context/scoring/remote_scorer.h"

#include <iostream>
#include <regex>
#include <sstream>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "json.hpp"
#include "selective_context/segmentation/unicode_text.h"
#include "selective_context/status_macros.h"
#include "selective_context/string_view_compat.h"

namespace selective_context {
namespace {

using nlohmann::json;

absl::Status Malformed(std::string_view what) {
  return absl::DataLossError(
      absl::StrCat("malformed scoring response: ", AsAbsl(what)));
}

absl::StatusOr<json> ParseJson(std::string_view body) {
  json parsed = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (parsed.is_discarded()) return Malformed("body is not valid JSON");
  return parsed;
}

absl::StatusOr<std::vector<std::string>> ReadTokens(const json& array) {
  if (!array.is_array()) return Malformed("\"tokens\" is not an array");
  std::vector<std::string> tokens;
  for (const json& t : array) {
    if (!t.is_string()) return Malformed("token is not a string");
    tokens.push_back(t.get<std::string>());
  }
  return tokens;
}

absl::StatusOr<std::vector<std::optional<double>>> ReadLogProbs(
    const json& array) {
  if (!array.is_array()) return Malformed("\"token_logprobs\" is not an array");
  std::vector<std::optional<double>> logprobs;
  for (const json& v : array) {
    if (v.is_null()) {
      logprobs.push_back(std::nullopt);
    } else if (v.is_number()) {
      logprobs.push_back(v.get<double>());
    } else {
      return Malformed("log-probability is neither a number nor null");
    }
  }
  return logprobs;
}

// Byte offset of every code point index of `text`, plus one past the end.
std::vector<size_t> CodePointByteOffsets(std::string_view text) {
  std::vector<size_t> offsets;
  for (size_t i = 0; i < text.size();) {
    offsets.push_back(i);
    i = DecodeAt(text, i).end;
  }
  offsets.push_back(text.size());
  return offsets;
}

ByteSpan TrimWhitespace(std::string_view text, ByteSpan span) {
  while (span.begin < span.end) {
    const CodePoint cp = DecodeAt(text, span.begin);
    if (!IsWhitespace(cp.value)) break;
    span.begin = cp.end;
  }
  while (span.end > span.begin) {
    const CodePoint cp = DecodeBefore(text, span.end);
    if (!IsWhitespace(cp.value)) break;
    span.end = cp.begin;
  }
  return span;
}

}  // namespace

absl::StatusOr<EchoResponse> ParseNativeResponse(std::string_view body) {
  SC_ASSIGN_OR_RETURN(json parsed, ParseJson(body));
  if (!parsed.is_object() || !parsed.contains("tokens") ||
      !parsed.contains("token_logprobs") || !parsed.contains("byte_offsets")) {
    return Malformed(
        "expected an object with tokens, token_logprobs and byte_offsets");
  }
  EchoResponse response;
  SC_ASSIGN_OR_RETURN(response.tokens, ReadTokens(parsed["tokens"]));
  SC_ASSIGN_OR_RETURN(response.logprobs,
                      ReadLogProbs(parsed["token_logprobs"]));
  const json& offsets = parsed["byte_offsets"];
  if (!offsets.is_array()) return Malformed("\"byte_offsets\" is not an array");
  for (const json& pair : offsets) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
        !pair[1].is_number_unsigned()) {
      return Malformed("byte offset is not a pair of non-negative integers");
    }
    response.offsets.push_back(
        ByteSpan{pair[0].get<size_t>(), pair[1].get<size_t>()});
  }
  if (response.logprobs.size() != response.tokens.size() ||
      response.offsets.size() != response.tokens.size()) {
    return Malformed(
        "tokens, token_logprobs and byte_offsets differ in length");
  }
  return response;
}

absl::StatusOr<EchoResponse> ParseCompletionsResponse(std::string_view body,
                                                      std::string_view text) {
  SC_ASSIGN_OR_RETURN(json parsed, ParseJson(body));
  if (!parsed.is_object() || !parsed.contains("choices") ||
      !parsed["choices"].is_array() || parsed["choices"].empty()) {
    return Malformed("expected a non-empty \"choices\" array");
  }
  const json& choice = parsed["choices"][0];
  if (!choice.is_object() || !choice.contains("logprobs") ||
      !choice["logprobs"].is_object()) {
    return Malformed("choice has no \"logprobs\" object");
  }
  const json& lp = choice["logprobs"];
  if (!lp.contains("tokens") || !lp.contains("token_logprobs") ||
      !lp.contains("text_offset")) {
    return Malformed("logprobs lacks tokens, token_logprobs or text_offset");
  }
  EchoResponse response;
  SC_ASSIGN_OR_RETURN(response.tokens, ReadTokens(lp["tokens"]));
  SC_ASSIGN_OR_RETURN(response.logprobs, ReadLogProbs(lp["token_logprobs"]));
  const json& starts = lp["text_offset"];
  if (!starts.is_array() || starts.size() != response.tokens.size() ||
      response.logprobs.size() != response.tokens.size()) {
    return Malformed("tokens, token_logprobs and text_offset differ in length");
  }
  // text_offset counts characters; convert to bytes and close each span at
  // the next token's start. Echo may run past the prompt with generated
  // tokens, which are dropped.
  const std::vector<size_t> bytes_at = CodePointByteOffsets(text);
  const size_t characters = bytes_at.size() - 1;
  std::vector<size_t> char_starts;
  for (const json& s : starts) {
    if (!s.is_number_unsigned()) return Malformed("text_offset entry");
    char_starts.push_back(s.get<size_t>());
  }
  size_t kept = 0;
  while (kept < char_starts.size() && char_starts[kept] < characters) ++kept;
  response.tokens.resize(kept);
  response.logprobs.resize(kept);
  for (size_t i = 0; i < kept; ++i) {
    const size_t end_char = i + 1 < kept ? char_starts[i + 1] : characters;
    if (end_char < char_starts[i] || end_char > characters) {
      return Malformed("text_offset is not increasing");
    }
    response.offsets.push_back(
        ByteSpan{bytes_at[char_starts[i]], bytes_at[end_char]});
  }
  return response;
}

absl::StatusOr<std::vector<double>> RealignLogProbs(
    std::string_view text, std::span<const ByteSpan> caller_tokens,
    const EchoResponse& response, int* null_heads) {
  const size_t n = caller_tokens.size();
  std::vector<double> sums(n, 0.0);
  std::vector<size_t> covered(n);
  for (size_t i = 0; i < n; ++i) covered[i] = caller_tokens[i].begin;

  double pending = 0.0;  // mass of whitespace-only sub-tokens
  size_t current = 0;
  size_t previous_end = 0;
  for (size_t j = 0; j < response.tokens.size(); ++j) {
    const ByteSpan span = response.offsets[j];
    if (span.begin > span.end || span.end > text.size() ||
        span.begin < previous_end) {
      return absl::FailedPreconditionError(absl::StrCat(
          "offset misalignment: sub-token ", j, " has byte offsets [",
          span.begin, ", ", span.end, ") out of order or outside the ",
          text.size(), "-byte request"));
    }
    previous_end = span.end;

    double lp = 0.0;
    if (response.logprobs[j].has_value()) {
      lp = *response.logprobs[j];
    } else if (j == 0) {
      if (null_heads != nullptr) ++*null_heads;
    } else {
      return Malformed(absl::StrCat("null log-probability at position ", j));
    }

    const ByteSpan trimmed = TrimWhitespace(text, span);
    if (trimmed.begin == trimmed.end) {
      pending += lp;
      continue;
    }
    while (current < n && caller_tokens[current].end <= trimmed.begin) {
      ++current;
    }
    if (current == n || !caller_tokens[current].Contains(trimmed) ||
        trimmed.begin != covered[current]) {
      return absl::FailedPreconditionError(
          absl::StrCat("offset misalignment: sub-token ", j, " \"",
                       AsAbsl(text.substr(trimmed.begin, trimmed.size())),
                       "\" at bytes [", trimmed.begin, ", ", trimmed.end,
                       ") does not continue exactly one caller token"));
    }
    covered[current] = trimmed.end;
    sums[current] += pending + lp;
    pending = 0.0;
  }
  if (pending != 0.0 && n > 0) sums[n - 1] += pending;

  for (size_t i = 0; i < n; ++i) {
    if (covered[i] != caller_tokens[i].end) {
      return absl::FailedPreconditionError(absl::StrCat(
          "offset misalignment: caller token ", i, " \"",
          AsAbsl(text.substr(caller_tokens[i].begin, caller_tokens[i].size())),
          "\" is not fully covered by backend sub-tokens"));
    }
  }
  return sums;
}

RemoteScorer::RemoteScorer(RemoteScorerOptions options,
                           std::string scheme_host_port, std::string base_path)
    : options_(std::move(options)),
      scheme_host_port_(std::move(scheme_host_port)),
      base_path_(std::move(base_path)) {}

absl::StatusOr<std::unique_ptr<RemoteScorer>> RemoteScorer::Create(
    RemoteScorerOptions options) {
  static const std::regex kUrl(R"(^(https?://[^/?#]+)(/[^?#]*)?$)");
  std::smatch match;
  if (!std::regex_match(options.endpoint, match, kUrl)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "remote endpoint must look like http(s)://host[:port][/path], got \"",
        options.endpoint, "\""));
  }
  std::string base_path = match[2].matched ? match[2].str() : "";
  while (!base_path.empty() && base_path.back() == '/') base_path.pop_back();
  if (options.max_attempts < 1) {
    return absl::InvalidArgumentError("max_attempts must be >= 1");
  }
  if (options.max_in_flight < 1) {
    return absl::InvalidArgumentError("max_in_flight must be >= 1");
  }
  if (options.profile == RemoteProfile::kOpenAiCompletions &&
      options.model.empty()) {
    return absl::InvalidArgumentError(
        "the completions profile needs a model name");
  }
  return std::unique_ptr<RemoteScorer>(
      new RemoteScorer(std::move(options), match[1].str(), base_path));
}

absl::StatusOr<std::string> RemoteScorer::Post(const std::string& text) const {
  json body;
  std::string path = base_path_;
  if (options_.profile == RemoteProfile::kNative) {
    path += "/score";
    body = {{"text", text}, {"echo", true}};
  } else {
    path += "/completions";
    body = {{"model", options_.model}, {"prompt", text},
            {"max_tokens", 0},         {"echo", true},
            {"logprobs", 0},           {"temperature", 0}};
  }
  const std::string payload = body.dump();
  httplib::Headers headers;
  if (!options_.auth_token.empty()) {
    headers.emplace("Authorization", "Bearer " + options_.auth_token);
  }

  absl::Status last_error;
  for (int attempt = 0; attempt < options_.max_attempts; ++attempt) {
    if (attempt > 0) {
      ++retries_;
      std::this_thread::sleep_for(options_.initial_backoff *
                                  (1 << (attempt - 1)));
    }
    ++requests_;
    httplib::Client client(scheme_host_port_);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    client.set_write_timeout(options_.timeout);
    httplib::Result result =
        client.Post(path, headers, payload, "application/json");
    if (!result) {
      last_error = absl::UnavailableError(
          absl::StrCat("transport error talking to ", scheme_host_port_, path,
                       ": ", httplib::to_string(result.error())));
      continue;
    }
    if (result->status == 200) return result->body;
    const std::string message =
        absl::StrCat("HTTP ", result->status, " from ", scheme_host_port_, path,
                     ": ", result->body.substr(0, 200));
    if (result->status == 429 || result->status >= 500) {
      last_error = absl::UnavailableError(message);
      continue;
    }
    return absl::FailedPreconditionError(message);
  }
  return absl::UnavailableError(
      absl::StrCat("giving up after ", options_.max_attempts,
                   " attempts: ", last_error.message()));
}

absl::StatusOr<std::vector<double>> RemoteScorer::LogProbs(
    const SegmentedDocument& doc, const ScoringSegment& segment) const {
  if (segment.target.empty()) return std::vector<double>{};
  if (segment.context.end != segment.target.begin ||
      segment.target.end > doc.tokens.size()) {
    return absl::InvalidArgumentError("malformed scoring segment");
  }
  const size_t first = segment.context.begin;
  const size_t start = doc.tokens[first].span.begin;
  const size_t end = doc.tokens[segment.target.end - 1].span.end;
  const std::string text = doc.text.substr(start, end - start);

  std::vector<ByteSpan> caller;
  for (size_t t = first; t < segment.target.end; ++t) {
    caller.push_back(ByteSpan{doc.tokens[t].span.begin - start,
                              doc.tokens[t].span.end - start});
  }

  SC_ASSIGN_OR_RETURN(std::string body, Post(text));
  EchoResponse response;
  if (options_.profile == RemoteProfile::kNative) {
    SC_ASSIGN_OR_RETURN(response, ParseNativeResponse(body));
  } else {
    SC_ASSIGN_OR_RETURN(response, ParseCompletionsResponse(body, text));
  }
  int null_heads = 0;
  SC_ASSIGN_OR_RETURN(std::vector<double> sums,
                      RealignLogProbs(text, caller, response, &null_heads));
  if (null_heads > 0) {
    null_heads_ += null_heads;
    std::ostringstream line;
    line << "warning: remote scorer returned a null log-probability for the "
            "first sub-token at byte "
         << start << "; scoring it as 0 bits\n";
    std::cerr << line.str() << std::flush;
  }
  return std::vector<double>(sums.begin() + segment.context.size(), sums.end());
}

absl::StatusOr<std::vector<std::vector<double>>> RemoteScorer::LogProbsBatch(
    const SegmentedDocument& doc,
    std::span<const ScoringSegment> segments) const {
  std::vector<absl::StatusOr<std::vector<double>>> results(
      segments.size(), absl::UnknownError("not scored"));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < segments.size(); i = next++) {
      results[i] = LogProbs(doc, segments[i]);
    }
  };
  {
    std::vector<std::jthread> workers;
    const size_t count = std::min(options_.max_in_flight, segments.size());
    for (size_t w = 1; w < count; ++w) workers.emplace_back(worker);
    worker();
  }
  std::vector<std::vector<double>> out;
  out.reserve(segments.size());
  for (size_t i = 0; i < segments.size(); ++i) {
    if (!results[i].ok()) {
      return AnnotateSegmentError(results[i].status(), doc, segments[i]);
    }
    out.push_back(*std::move(results[i]));
  }
  return out;
}

}  // namespace selective_context
