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

#include "selective_context/scoring/ngram_model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "selective_context/status_macros.h"
#include "selective_context/string_view_compat.h"

namespace selective_context {
namespace {

constexpr char kMagic[4] = {'S', 'C', 'N', 'G'};

void PutU32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

void PutU64(std::string& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

// Sequential little-endian reader over a byte buffer.
class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  absl::StatusOr<uint64_t> Uint(int width, std::string_view what) {
    if (bytes_.size() - pos_ < static_cast<size_t>(width)) {
      return absl::DataLossError(absl::StrCat("truncated model file reading ",
                                              AsAbsl(what), " at byte ", pos_));
    }
    uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += width;
    return v;
  }

  absl::StatusOr<std::string_view> Bytes(size_t n, std::string_view what) {
    if (bytes_.size() - pos_ < n) {
      return absl::DataLossError(absl::StrCat("truncated model file reading ",
                                              AsAbsl(what), " at byte ", pos_));
    }
    std::string_view out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  bool AtEnd() const { return pos_ == bytes_.size(); }
  size_t position() const { return pos_; }

 private:
  std::string_view bytes_;
  size_t pos_ = 0;
};

}  // namespace

absl::StatusOr<NgramModel> NgramModel::Train(
    std::span<const std::string> corpus, int order, double k) {
  if (order < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("n-gram order must be >= 1, got ", order));
  }
  if (!(k > 0.0) || !std::isfinite(k)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "smoothing constant must be a positive finite number, got ", k));
  }
  if (corpus.size() < static_cast<size_t>(order)) {
    return absl::InvalidArgumentError(
        absl::StrCat("corpus has ", corpus.size(),
                     " tokens, fewer than the model order ", order));
  }

  NgramModel model;
  model.order_ = order;
  model.k_ = k;
  model.vocab_.assign(corpus.begin(), corpus.end());
  std::sort(model.vocab_.begin(), model.vocab_.end());
  model.vocab_.erase(std::unique(model.vocab_.begin(), model.vocab_.end()),
                     model.vocab_.end());
  model.BuildIndex();

  std::vector<uint32_t> ids;
  ids.reserve(corpus.size());
  for (const std::string& token : corpus) ids.push_back(model.IdOf(token));

  const size_t context_length = static_cast<size_t>(order) - 1;
  for (size_t end = context_length; end < ids.size(); ++end) {
    std::vector<uint32_t> context(ids.begin() + (end - context_length),
                                  ids.begin() + end);
    Successors& successors = model.table_[context];
    ++successors.total;
    ++successors.counts[ids[end]];
    ++model.window_count_;
  }
  return model;
}

void NgramModel::BuildIndex() {
  ids_.clear();
  for (size_t i = 0; i < vocab_.size(); ++i) {
    ids_.emplace(vocab_[i], static_cast<uint32_t>(i + 1));
  }
}

uint32_t NgramModel::IdOf(std::string_view token) const {
  auto it = ids_.find(AsAbsl(token));
  return it == ids_.end() ? 0 : it->second;
}

std::vector<uint32_t> NgramModel::ContextIds(
    std::span<const std::string_view> context) const {
  const size_t context_length = static_cast<size_t>(order_) - 1;
  std::vector<uint32_t> ids(context_length, BeginOfSequenceId());
  const size_t used = std::min(context_length, context.size());
  for (size_t i = 0; i < used; ++i) {
    ids[context_length - used + i] = IdOf(context[context.size() - used + i]);
  }
  return ids;
}

double NgramModel::ProbabilityOfIds(std::span<const uint32_t> context,
                                    uint32_t next) const {
  const double slots = static_cast<double>(vocab_.size() + 1);
  uint64_t count = 0;
  uint64_t total = 0;
  // Unknown successors are never counted, so they only get the k share.
  auto it = table_.find(std::vector<uint32_t>(context.begin(), context.end()));
  if (it != table_.end()) {
    total = it->second.total;
    if (auto c = it->second.counts.find(next); c != it->second.counts.end()) {
      count = c->second;
    }
  }
  return (static_cast<double>(count) + k_) /
         (static_cast<double>(total) + k_ * slots);
}

double NgramModel::Probability(std::span<const std::string_view> context,
                               std::string_view next) const {
  const std::vector<uint32_t> ids = ContextIds(context);
  return ProbabilityOfIds(ids, IdOf(next));
}

double NgramModel::Probability(std::span<const std::string> context,
                               std::string_view next) const {
  std::vector<std::string_view> views(context.begin(), context.end());
  return Probability(std::span<const std::string_view>(views), next);
}

uint64_t NgramModel::Count(std::span<const std::string> context,
                           std::string_view next) const {
  std::vector<std::string_view> views(context.begin(), context.end());
  auto it = table_.find(ContextIds(views));
  if (it == table_.end()) return 0;
  auto c = it->second.counts.find(IdOf(next));
  return c == it->second.counts.end() ? 0 : c->second;
}

uint64_t NgramModel::ContextTotal(std::span<const std::string> context) const {
  std::vector<std::string_view> views(context.begin(), context.end());
  auto it = table_.find(ContextIds(views));
  return it == table_.end() ? 0 : it->second.total;
}

std::string NgramModel::Serialize() const {
  std::string out(kMagic, sizeof(kMagic));
  PutU32(out, kFormatVersion);
  PutU32(out, static_cast<uint32_t>(order_));
  PutU64(out, std::bit_cast<uint64_t>(k_));
  PutU32(out, static_cast<uint32_t>(vocab_.size()));
  for (const std::string& token : vocab_) {
    PutU32(out, static_cast<uint32_t>(token.size()));
    out += token;
  }

  struct Record {
    std::vector<uint32_t> key;  // context ids then successor id
    uint64_t count;
  };
  std::vector<Record> records;
  for (const auto& [context, successors] : table_) {
    for (const auto& [next, count] : successors.counts) {
      Record record{context, count};
      record.key.push_back(next);
      records.push_back(std::move(record));
    }
  }
  std::sort(records.begin(), records.end(),
            [](const Record& a, const Record& b) { return a.key < b.key; });
  PutU64(out, records.size());
  for (const Record& record : records) {
    // Stored indices are 0-based into the vocab list.
    for (uint32_t id : record.key) PutU32(out, id - 1);
    PutU64(out, record.count);
  }
  return out;
}

absl::StatusOr<NgramModel> NgramModel::Deserialize(std::string_view bytes) {
  Reader reader(bytes);
  SC_ASSIGN_OR_RETURN(std::string_view magic, reader.Bytes(4, "magic"));
  if (magic != std::string_view(kMagic, sizeof(kMagic))) {
    return absl::InvalidArgumentError("not an SCNG model file (bad magic)");
  }
  SC_ASSIGN_OR_RETURN(uint64_t version, reader.Uint(4, "version"));
  if (version != kFormatVersion) {
    return absl::InvalidArgumentError(absl::StrCat("unsupported SCNG version ",
                                                   version, " (expected ",
                                                   kFormatVersion, ")"));
  }
  NgramModel model;
  SC_ASSIGN_OR_RETURN(uint64_t order, reader.Uint(4, "order"));
  if (order < 1 || order > 64) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid n-gram order ", order));
  }
  model.order_ = static_cast<int>(order);
  SC_ASSIGN_OR_RETURN(uint64_t k_bits, reader.Uint(8, "smoothing"));
  model.k_ = std::bit_cast<double>(k_bits);
  if (!(model.k_ > 0.0) || !std::isfinite(model.k_)) {
    return absl::InvalidArgumentError("invalid smoothing constant");
  }
  SC_ASSIGN_OR_RETURN(uint64_t vocab_count, reader.Uint(4, "vocab count"));
  for (uint64_t i = 0; i < vocab_count; ++i) {
    SC_ASSIGN_OR_RETURN(uint64_t length, reader.Uint(4, "vocab entry length"));
    SC_ASSIGN_OR_RETURN(std::string_view token,
                        reader.Bytes(length, "vocab entry"));
    if (!model.vocab_.empty() && !(model.vocab_.back() < token)) {
      return absl::InvalidArgumentError(
          absl::StrCat("vocab entry ", i, " is out of order or duplicated"));
    }
    model.vocab_.emplace_back(token);
  }
  model.BuildIndex();

  SC_ASSIGN_OR_RETURN(uint64_t record_count, reader.Uint(8, "record count"));
  const size_t key_length = static_cast<size_t>(order);
  std::vector<uint32_t> previous;
  for (uint64_t r = 0; r < record_count; ++r) {
    std::vector<uint32_t> key(key_length);
    for (size_t i = 0; i < key_length; ++i) {
      SC_ASSIGN_OR_RETURN(uint64_t index, reader.Uint(4, "record index"));
      if (index >= vocab_count) {
        return absl::InvalidArgumentError(absl::StrCat(
            "record ", r, " refers to vocab index ", index, " out of range"));
      }
      key[i] = static_cast<uint32_t>(index + 1);
    }
    SC_ASSIGN_OR_RETURN(uint64_t count, reader.Uint(8, "record count"));
    if (count == 0 || (r > 0 && !(previous < key))) {
      return absl::InvalidArgumentError(
          absl::StrCat("record ", r, " is empty, unsorted or duplicated"));
    }
    const uint32_t next = key.back();
    std::vector<uint32_t> context(key.begin(), key.end() - 1);
    Successors& successors = model.table_[context];
    successors.total += count;
    successors.counts[next] = count;
    model.window_count_ += count;
    previous = std::move(key);
  }
  if (!reader.AtEnd()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "trailing bytes after the last record at byte ", reader.position()));
  }
  return model;
}

absl::Status NgramModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot open ", path.string(), " for writing"));
  }
  const std::string bytes = Serialize();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    return absl::DataLossError(absl::StrCat("write failed: ", path.string()));
  }
  return absl::OkStatus();
}

absl::StatusOr<NgramModel> NgramModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("cannot open model file ", path.string()));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  absl::StatusOr<NgramModel> model = Deserialize(buffer.str());
  if (!model.ok()) {
    return absl::Status(
        model.status().code(),
        absl::StrCat(path.string(), ": ", model.status().message()));
  }
  return model;
}

absl::StatusOr<std::vector<double>> NgramScorer::LogProbs(
    const SegmentedDocument& doc, const ScoringSegment& segment) const {
  if (segment.context.end != segment.target.begin ||
      segment.target.end > doc.tokens.size()) {
    return absl::InvalidArgumentError("malformed scoring segment");
  }
  const size_t context_length = static_cast<size_t>(model_->order()) - 1;
  // BOS padding, then the segment's tokens as ids.
  std::vector<uint32_t> ids(context_length, model_->BeginOfSequenceId());
  for (size_t t = segment.context.begin; t < segment.target.end; ++t) {
    ids.push_back(model_->IdOf(doc.tokens[t].text));
  }
  std::vector<double> out;
  out.reserve(segment.target.size());
  const size_t first = context_length + segment.context.size();
  for (size_t i = first; i < ids.size(); ++i) {
    const std::span<const uint32_t> context(ids.data() + (i - context_length),
                                            context_length);
    out.push_back(std::log(model_->ProbabilityOfIds(context, ids[i])));
  }
  return out;
}

}  // namespace selective_context
