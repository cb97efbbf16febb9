// Copyright 2026 asreval contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Word-level Levenshtein alignment with a deterministic backtrace, WER/CER
// computation, and pooled corpus counts.

#ifndef ASREVAL_ALIGN_HPP
#define ASREVAL_ALIGN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asreval/common.hpp"
#include "asreval/normalize.hpp"
#include "asreval/rational.hpp"
#include "asreval/unicode.hpp"

namespace asreval {

enum class OpKind { Match, Substitute, Delete, Insert };

inline const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Match: return "match";
    case OpKind::Substitute: return "substitute";
    case OpKind::Delete: return "delete";
    case OpKind::Insert: return "insert";
  }
  return "match";
}

inline std::optional<OpKind> parse_op_kind(std::string_view name) {
  if (name == "match") return OpKind::Match;
  if (name == "substitute") return OpKind::Substitute;
  if (name == "delete") return OpKind::Delete;
  if (name == "insert") return OpKind::Insert;
  return std::nullopt;
}

struct AlignOp {
  OpKind kind = OpKind::Match;
  std::optional<std::size_t> ref_index;  // absent for inserts
  std::optional<std::size_t> hyp_index;  // absent for deletes
};

struct ErrorCounts {
  std::int64_t substitutions = 0;
  std::int64_t deletions = 0;
  std::int64_t insertions = 0;
  std::int64_t ref_len = 0;

  std::int64_t total_errors() const { return substitutions + deletions + insertions; }

  ErrorCounts& operator+=(const ErrorCounts& other) {
    substitutions += other.substitutions;
    deletions += other.deletions;
    insertions += other.insertions;
    ref_len += other.ref_len;
    return *this;
  }
  friend bool operator==(const ErrorCounts&, const ErrorCounts&) = default;
};

struct Alignment {
  std::vector<AlignOp> ops;
  ErrorCounts counts;
};

// Minimal-cost alignment under unit costs. Among cost ties the backtrace
// prefers match, then substitute, then delete, then insert, applied backward
// from the end of both sequences; this makes the op list unique.
template <typename T>
Alignment align_sequences(const std::vector<T>& ref, const std::vector<T>& hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::int32_t> dp((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::int32_t& { return dp[i * (m + 1) + j]; };
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = std::int32_t(j);
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = std::int32_t(i);
    for (std::size_t j = 1; j <= m; ++j) {
      std::int32_t best = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      std::int32_t del = at(i - 1, j) + 1;
      std::int32_t ins = at(i, j - 1) + 1;
      if (del < best) best = del;
      if (ins < best) best = ins;
      at(i, j) = best;
    }
  }

  Alignment result;
  result.counts.ref_len = std::int64_t(n);
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && at(i, j) == at(i - 1, j - 1)) {
      result.ops.push_back({OpKind::Match, i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && j > 0 && at(i, j) == at(i - 1, j - 1) + 1) {
      result.ops.push_back({OpKind::Substitute, i - 1, j - 1});
      ++result.counts.substitutions;
      --i;
      --j;
    } else if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      result.ops.push_back({OpKind::Delete, i - 1, std::nullopt});
      ++result.counts.deletions;
      --i;
    } else {
      result.ops.push_back({OpKind::Insert, std::nullopt, j - 1});
      ++result.counts.insertions;
      --j;
    }
  }
  std::reverse(result.ops.begin(), result.ops.end());
  return result;
}

inline Alignment align_words(const std::vector<std::string>& ref,
                             const std::vector<std::string>& hyp) {
  return align_sequences(ref, hyp);
}

// Two-row distance for long sequences (no backtrace).
template <typename T>
std::int64_t edit_distance(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::int64_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = std::int64_t(j);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = std::int64_t(i);
    for (std::size_t j = 1; j <= m; ++j) {
      std::int64_t best = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      if (prev[j] + 1 < best) best = prev[j] + 1;
      if (cur[j - 1] + 1 < best) best = cur[j - 1] + 1;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

// (S + D + I) / N as an exact rational; callers render it as a percentage.
inline Ratio wer(const ErrorCounts& counts) {
  if (counts.ref_len < 1) throw_undefined("WER undefined: reference length is 0");
  return Ratio(counts.total_errors(), counts.ref_len);
}

struct CharCounts {
  std::int64_t distance = 0;
  std::int64_t ref_len = 0;

  CharCounts& operator+=(const CharCounts& other) {
    distance += other.distance;
    ref_len += other.ref_len;
    return *this;
  }
  friend bool operator==(const CharCounts&, const CharCounts&) = default;
};

// Character-level counts on wer-pipeline normalized, space-rejoined text.
// Spaces count as characters.
inline CharCounts char_counts(std::string_view ref_text, std::string_view hyp_text,
                              Locale locale) {
  NormalizationProfile profile{Pipeline::Wer, locale};
  std::string ref_joined = join_tokens(normalize_tokens(ref_text, profile));
  std::string hyp_joined = join_tokens(normalize_tokens(hyp_text, profile));
  std::vector<char32_t> ref_cps = uni::decode_utf8(ref_joined);
  std::vector<char32_t> hyp_cps = uni::decode_utf8(hyp_joined);
  CharCounts counts;
  counts.distance = edit_distance(ref_cps, hyp_cps);
  counts.ref_len = std::int64_t(ref_cps.size());
  return counts;
}

inline Ratio cer_rate(const CharCounts& counts) {
  if (counts.ref_len < 1) throw_undefined("CER undefined: reference is empty");
  return Ratio(counts.distance, counts.ref_len);
}

inline Ratio cer(std::string_view ref_text, std::string_view hyp_text, Locale locale) {
  return cer_rate(char_counts(ref_text, hyp_text, locale));
}

inline ErrorCounts pool_counts(const std::vector<ErrorCounts>& per_utterance) {
  ErrorCounts pooled;
  for (const auto& counts : per_utterance) pooled += counts;
  return pooled;
}

}  // namespace asreval

#endif  // ASREVAL_ALIGN_HPP
