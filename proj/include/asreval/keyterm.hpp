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
// Vocabulary-term tagging over token streams, TP/FP/FN accounting against an
// alignment, and the derived precision/recall/FNR/FDR/rFNR metrics.

#ifndef ASREVAL_KEYTERM_HPP
#define ASREVAL_KEYTERM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "asreval/align.hpp"
#include "asreval/common.hpp"
#include "asreval/rational.hpp"

namespace asreval {

enum class Category { Med, Fmt, Punct };

inline const char* to_string(Category category) {
  switch (category) {
    case Category::Med: return "med";
    case Category::Fmt: return "fmt";
    case Category::Punct: return "punct";
  }
  return "med";
}

inline std::optional<Category> parse_category(std::string_view name) {
  if (name == "med") return Category::Med;
  if (name == "fmt") return Category::Fmt;
  if (name == "punct") return Category::Punct;
  return std::nullopt;
}

inline const std::vector<Category>& all_categories() {
  static const std::vector<Category> cats = {Category::Med, Category::Fmt, Category::Punct};
  return cats;
}

struct TermSpan {
  Category category = Category::Med;
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::string canonical;

  friend bool operator==(const TermSpan&, const TermSpan&) = default;
};

struct KeytermCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  KeytermCounts& operator+=(const KeytermCounts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  friend bool operator==(const KeytermCounts&, const KeytermCounts&) = default;
};

// A term set indexed for greedy leftmost longest-match tagging. Terms are
// stored pre-tokenized under the keyterm pipeline; the canonical string is
// the tokens joined with single spaces.
class Vocabulary {
 public:
  void add(const std::vector<std::string>& term_tokens) {
    if (term_tokens.empty()) return;
    std::string canonical = join_tokens(term_tokens);
    if (!canonicals_.insert(canonical).second) return;
    auto& bucket = by_first_[term_tokens[0]];
    bucket.push_back(term_tokens);
    // Longest first so the greedy scan can take the first hit.
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
  }

  bool contains(const std::string& canonical) const { return canonicals_.count(canonical) != 0; }
  bool empty() const { return canonicals_.empty(); }
  std::size_t size() const { return canonicals_.size(); }
  const std::set<std::string>& canonicals() const { return canonicals_; }

  // Longest term matching tokens[pos..]; 0 when none matches.
  std::size_t longest_match(const std::vector<std::string>& tokens, std::size_t pos) const {
    auto it = by_first_.find(tokens[pos]);
    if (it == by_first_.end()) return 0;
    for (const auto& term : it->second) {
      if (pos + term.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t k = 1; k < term.size(); ++k) {
        if (tokens[pos + k] != term[k]) {
          ok = false;
          break;
        }
      }
      if (ok) return term.size();
    }
    return 0;
  }

 private:
  std::set<std::string> canonicals_;
  std::unordered_map<std::string, std::vector<std::vector<std::string>>> by_first_;
};

// The punct vocabulary is exactly the fixed spoken-punctuation symbol set.
inline const Vocabulary& punct_vocabulary() {
  static const Vocabulary vocab = [] {
    Vocabulary v;
    for (const auto& symbol : spoken_punct_symbols()) v.add({symbol});
    return v;
  }();
  return vocab;
}

// Greedy leftmost longest-match tagging across categories; at equal match
// length the category priority is med > fmt > punct. Spans never overlap.
inline std::vector<TermSpan> tag_all(const std::vector<std::string>& tokens,
                                     const std::map<Category, const Vocabulary*>& vocabs) {
  std::vector<TermSpan> spans;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    std::size_t best_len = 0;
    Category best_cat = Category::Med;
    for (Category cat : all_categories()) {
      auto it = vocabs.find(cat);
      if (it == vocabs.end() || it->second == nullptr) continue;
      std::size_t len = it->second->longest_match(tokens, pos);
      if (len > best_len) {
        best_len = len;
        best_cat = cat;
      }
    }
    if (best_len == 0) {
      ++pos;
      continue;
    }
    std::vector<std::string> slice(tokens.begin() + pos, tokens.begin() + pos + best_len);
    spans.push_back({best_cat, pos, pos + best_len, join_tokens(slice)});
    pos += best_len;
  }
  return spans;
}

inline std::vector<TermSpan> tag_terms(const std::vector<std::string>& tokens,
                                       const Vocabulary& vocabulary, Category category) {
  std::map<Category, const Vocabulary*> vocabs{{category, &vocabulary}};
  return tag_all(tokens, vocabs);
}

// Per-span outcomes backing the counts; used by reports to mark spans.
struct KeytermOutcome {
  std::map<Category, KeytermCounts> counts;
  std::vector<bool> ref_span_tp;
  std::vector<bool> hyp_span_tp;
};

// A reference span is TP iff every one of its tokens participates in a match
// op and the matched hypothesis tokens form exactly a hypothesis span with
// the same category and canonical term (which rules out interior
// insertions); otherwise FN. A hypothesis span is FP iff it is not the
// hypothesis side of some TP.
inline KeytermOutcome keyterm_outcomes(const Alignment& alignment,
                                       const std::vector<TermSpan>& ref_spans,
                                       const std::vector<TermSpan>& hyp_spans) {
  const std::size_t ref_len = std::size_t(alignment.counts.ref_len);
  std::size_t hyp_len = 0;
  for (const auto& op : alignment.ops) {
    if (op.hyp_index) ++hyp_len;
  }

  for (const auto& span : ref_spans) {
    if (span.start >= span.end || span.end > ref_len)
      throw_invalid("reference span out of bounds for the alignment");
  }
  for (const auto& span : hyp_spans) {
    if (span.start >= span.end || span.end > hyp_len)
      throw_invalid("hypothesis span out of bounds for the alignment");
  }

  std::vector<std::optional<std::size_t>> match_of_ref(ref_len);
  for (const auto& op : alignment.ops) {
    if (op.kind == OpKind::Match) match_of_ref[*op.ref_index] = *op.hyp_index;
  }

  // (start, end, category) -> hypothesis span index
  std::map<std::tuple<std::size_t, std::size_t, Category>, std::size_t> hyp_index;
  for (std::size_t s = 0; s < hyp_spans.size(); ++s) {
    hyp_index[{hyp_spans[s].start, hyp_spans[s].end, hyp_spans[s].category}] = s;
  }

  KeytermOutcome out;
  out.ref_span_tp.assign(ref_spans.size(), false);
  out.hyp_span_tp.assign(hyp_spans.size(), false);
  for (Category cat : all_categories()) out.counts[cat];  // ensure stable keys

  for (std::size_t s = 0; s < ref_spans.size(); ++s) {
    const TermSpan& span = ref_spans[s];
    bool tp = true;
    std::size_t first_hyp = 0;
    for (std::size_t r = span.start; r < span.end && tp; ++r) {
      if (!match_of_ref[r]) {
        tp = false;
      } else if (r == span.start) {
        first_hyp = *match_of_ref[r];
      } else if (*match_of_ref[r] != first_hyp + (r - span.start)) {
        tp = false;  // matched hypothesis tokens are not one contiguous block
      }
    }
    if (tp) {
      auto it = hyp_index.find({first_hyp, first_hyp + (span.end - span.start), span.category});
      if (it == hyp_index.end() || hyp_spans[it->second].canonical != span.canonical) {
        tp = false;
      } else {
        out.hyp_span_tp[it->second] = true;
      }
    }
    out.ref_span_tp[s] = tp;
    if (tp)
      ++out.counts[span.category].tp;
    else
      ++out.counts[span.category].fn;
  }
  for (std::size_t s = 0; s < hyp_spans.size(); ++s) {
    if (!out.hyp_span_tp[s]) ++out.counts[hyp_spans[s].category].fp;
  }
  return out;
}

inline std::map<Category, KeytermCounts> keyterm_counts(const Alignment& alignment,
                                                        const std::vector<TermSpan>& ref_spans,
                                                        const std::vector<TermSpan>& hyp_spans) {
  return keyterm_outcomes(alignment, ref_spans, hyp_spans).counts;
}

// Undefined values stay absent; they are never coerced to 0 or 1.
struct PrecisionRecall {
  std::optional<Ratio> precision;
  std::optional<Ratio> recall;
};

inline PrecisionRecall precision_recall(const KeytermCounts& counts) {
  PrecisionRecall pr;
  if (counts.tp + counts.fp > 0) pr.precision = Ratio(counts.tp, counts.tp + counts.fp);
  if (counts.tp + counts.fn > 0) pr.recall = Ratio(counts.tp, counts.tp + counts.fn);
  return pr;
}

struct FnrFdr {
  std::optional<Ratio> fnr;  // 1 - recall
  std::optional<Ratio> fdr;  // 1 - precision
};

inline FnrFdr fnr_fdr(const KeytermCounts& counts) {
  PrecisionRecall pr = precision_recall(counts);
  FnrFdr out;
  if (pr.recall) out.fnr = Ratio(1, 1) - *pr.recall;
  if (pr.precision) out.fdr = Ratio(1, 1) - *pr.precision;
  return out;
}

// Relative FNR reduction under biasing: (FNR_u - FNR_b) / FNR_u. Defined
// whenever the unbiased system makes at least one miss; may be negative when
// biasing hurts.
inline Ratio rfnr(const KeytermCounts& unbiased, const KeytermCounts& biased) {
  FnrFdr u = fnr_fdr(unbiased);
  FnrFdr b = fnr_fdr(biased);
  if (!u.fnr || !b.fnr) throw_undefined("rFNR undefined: recall undefined");
  if (u.fnr->num == 0)
    throw_undefined("rFNR undefined: unbiased FNR is 0 (no misses to reduce)");
  return (*u.fnr - *b.fnr) / *u.fnr;
}

}  // namespace asreval

#endif  // ASREVAL_KEYTERM_HPP
