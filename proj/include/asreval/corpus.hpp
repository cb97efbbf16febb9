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
// Evaluation-manifest ingestion and the reference-markup grammar.
//
// Manifest: UTF-8 JSON lines. Line 1 is a header record
//   {"locale": "EN", "vocab_med": "med.txt"?, "vocab_fmt": "fmt.txt"?}
// and every following line is an utterance record
//   {"id", "reference", "hypothesis", "biased_hypothesis"?, "audio"?, "duration_s"?}.
//
// Markup grammar: plain text interleaved with tags {kind:payload}; kinds are
// punct, date, time, num, ord, unit, range, med. Literal braces are escaped
// as "{{" and "}}".

#ifndef ASREVAL_CORPUS_HPP
#define ASREVAL_CORPUS_HPP

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "asreval/common.hpp"
#include "asreval/keyterm.hpp"
#include "asreval/locale.hpp"
#include "asreval/normalize.hpp"

namespace asreval {

struct Utterance {
  std::string id;
  Locale locale = Locale::EN;
  std::string reference_markup;
  std::string hypothesis;
  std::optional<std::string> biased_hypothesis;
  std::optional<std::string> audio_path;
  std::optional<double> duration_s;
};

// A reference span plus the markup tag it came from (the tag makes the
// round-trip property testable and lets reports show provenance).
struct RefSpan {
  Category category = Category::Med;
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::string canonical;
  std::string tag_kind;
  std::string tag_payload;
};

inline std::vector<TermSpan> to_term_spans(const std::vector<RefSpan>& spans) {
  std::vector<TermSpan> out;
  out.reserve(spans.size());
  for (const auto& s : spans) out.push_back({s.category, s.start, s.end, s.canonical});
  return out;
}

struct AnnotatedReference {
  std::vector<std::string> tokens;  // keyterm-pipeline token space
  std::vector<RefSpan> spans;       // non-overlapping, sorted by start
  std::string formatted_text;       // written form with original casing
};

struct Corpus {
  Locale locale = Locale::EN;
  std::vector<Utterance> utterances;
  std::vector<AnnotatedReference> annotated;  // parallel to utterances
  std::map<Category, Vocabulary> vocabularies;
};

struct DatasetStats {
  std::int64_t example_count = 0;
  std::optional<double> total_duration_s;
  std::int64_t med_term_count = 0;
  std::int64_t fmt_term_count = 0;
  std::int64_t punct_command_count = 0;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n'))
    --e;
  return std::string(s.substr(b, e - b));
}

inline long long parse_int_payload(std::string_view text, const std::string& what) {
  text = text.substr(0, text.size());
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw_parse("malformed " + what + " payload '" + std::string(text) + "'");
  return value;
}

// Splits "a-b" (hyphen or en-dash separator) into two integer payloads.
inline std::pair<long long, long long> parse_pair_payload(std::string_view text, char sep,
                                                          const std::string& what) {
  std::size_t pos = text.find(sep);
  std::size_t sep_len = 1;
  if (pos == std::string_view::npos && sep == '-') {
    pos = text.find("–");
    sep_len = 3;
  }
  if (pos == std::string_view::npos)
    throw_parse("malformed " + what + " payload '" + std::string(text) + "'");
  return {parse_int_payload(text.substr(0, pos), what),
          parse_int_payload(text.substr(pos + sep_len), what)};
}

inline Entity entity_from_tag(std::string_view kind, std::string_view payload) {
  if (kind == "date") {
    std::size_t p1 = payload.find('-');
    std::size_t p2 = p1 == std::string_view::npos ? std::string_view::npos
                                                  : payload.find('-', p1 + 1);
    if (p1 == std::string_view::npos || p2 == std::string_view::npos)
      throw_parse("malformed date payload '" + std::string(payload) + "' (expected Y-M-D)");
    return Entity::make_date(
        int(parse_int_payload(payload.substr(0, p1), "date")),
        int(parse_int_payload(payload.substr(p1 + 1, p2 - p1 - 1), "date")),
        int(parse_int_payload(payload.substr(p2 + 1), "date")));
  }
  if (kind == "time") {
    auto [h, m] = parse_pair_payload(payload, ':', "time");
    return Entity::make_time(int(h), int(m));
  }
  if (kind == "num") return Entity::make_num(parse_int_payload(payload, "num"));
  if (kind == "ord") return Entity::make_ord(parse_int_payload(payload, "ord"));
  if (kind == "unit") return Entity::make_unit(std::string(payload));
  if (kind == "range") {
    auto [lo, hi] = parse_pair_payload(payload, '-', "range");
    return Entity::make_range(lo, hi);
  }
  if (kind == "punct") {
    auto command = parse_punct_command(payload);
    if (!command) throw_parse("unknown punctuation command '" + std::string(payload) + "'");
    return Entity::make_punct(*command);
  }
  throw_parse("unknown tag kind '" + std::string(kind) + "'");
}

// Appends one written piece to the formatted text, honoring attachment.
class FormattedTextBuilder {
 public:
  void append(std::string_view written, Attach attach) {
    if (written.empty()) return;
    if (attach == Attach::LineBreak) {
      text_ += written;
      no_space_before_next_ = true;
      return;
    }
    if (!text_.empty() && text_.back() != '\n' && attach != Attach::Left &&
        !no_space_before_next_) {
      text_ += ' ';
    }
    text_ += written;
    no_space_before_next_ = (attach == Attach::Right);
  }

  std::string take() { return std::move(text_); }

 private:
  std::string text_;
  bool no_space_before_next_ = false;
};

}  // namespace detail

// Renders markup to formatted gold tokens (keyterm-pipeline space) plus
// category spans: med for {med:...}, punct for {punct:...}, fmt for every
// other tag kind. Plain text is tokenized verbatim and carries no spans.
inline AnnotatedReference parse_reference_markup(
    std::string_view markup, Locale locale,
    const UnitTable& units = default_unit_table()) {
  AnnotatedReference ann;
  detail::FormattedTextBuilder formatted;
  NormalizationProfile keyterm_profile{Pipeline::Keyterm, locale};

  std::string plain;
  auto flush_plain = [&] {
    if (plain.empty()) return;
    for (auto& tok : normalize_tokens(plain, keyterm_profile)) ann.tokens.push_back(std::move(tok));
    std::string display = detail::trim(plain);
    if (!display.empty()) formatted.append(display, Attach::Standalone);
    plain.clear();
  };

  std::size_t i = 0;
  while (i < markup.size()) {
    char c = markup[i];
    if (c == '{') {
      if (i + 1 < markup.size() && markup[i + 1] == '{') {
        plain += '{';
        i += 2;
        continue;
      }
      std::size_t close = markup.find('}', i + 1);
      if (close == std::string_view::npos) throw_parse("unbalanced '{' in reference markup");
      std::string_view content = markup.substr(i + 1, close - i - 1);
      if (content.find('{') != std::string_view::npos)
        throw_parse("unbalanced '{' in reference markup (nested tag)");
      std::size_t colon = content.find(':');
      if (colon == std::string_view::npos)
        throw_parse("malformed tag '{" + std::string(content) + "}' (expected {kind:payload})");
      std::string kind = detail::trim(content.substr(0, colon));
      std::string payload = detail::trim(content.substr(colon + 1));

      flush_plain();
      std::size_t start = ann.tokens.size();
      Category category;
      std::string written;
      Attach attach = Attach::Standalone;
      if (kind == "med") {
        if (payload.empty()) throw_parse("empty med payload");
        category = Category::Med;
        written = payload;
      } else {
        Entity entity = detail::entity_from_tag(kind, payload);
        category = (kind == "punct") ? Category::Punct : Category::Fmt;
        written = render_entity(entity, locale, units);
        if (kind == "punct") attach = punct_attach(entity.punct);
      }
      std::vector<std::string> rendered_tokens = normalize_tokens(written, keyterm_profile);
      if (rendered_tokens.empty())
        throw_parse("tag '{" + kind + ":" + payload + "}' renders to no tokens");
      for (auto& tok : rendered_tokens) ann.tokens.push_back(std::move(tok));
      std::size_t end = ann.tokens.size();
      std::vector<std::string> slice(ann.tokens.begin() + start, ann.tokens.begin() + end);
      ann.spans.push_back({category, start, end, join_tokens(slice), kind, payload});
      formatted.append(written, attach);
      i = close + 1;
      continue;
    }
    if (c == '}') {
      if (i + 1 < markup.size() && markup[i + 1] == '}') {
        plain += '}';
        i += 2;
        continue;
      }
      throw_parse("unbalanced '}' in reference markup");
    }
    plain += c;
    ++i;
  }
  flush_plain();
  ann.formatted_text = formatted.take();
  return ann;
}

namespace detail {

inline std::vector<std::string> read_term_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw_io("cannot open vocabulary file '" + path.string() + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::string term = trim(line);
    if (!term.empty()) lines.push_back(std::move(term));
  }
  return lines;
}

inline std::string require_string(const nlohmann::json& record, const char* key,
                                  const std::string& where) {
  if (!record.contains(key) || !record[key].is_string())
    throw_parse(where + ": missing or non-string field \"" + key + "\"");
  return record[key].get<std::string>();
}

}  // namespace detail

// Extends the unit table from a JSONL override file; records are
// {"key": "...", "en": "...", "de"?: "...", "fr"?: "..."} with absent locale
// forms defaulting to the "en" form.
inline void load_unit_overrides(const std::string& path, UnitTable& units) {
  std::ifstream in(path);
  if (!in) throw_io("cannot open unit table file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = detail::trim(line);
    if (text.empty()) continue;
    nlohmann::json record = nlohmann::json::parse(text, nullptr, false);
    if (record.is_discarded() || !record.is_object())
      throw_parse(path + ":" + std::to_string(line_no) + ": malformed unit record");
    std::string where = path + ":" + std::to_string(line_no);
    std::string key = detail::require_string(record, "key", where);
    std::string en = detail::require_string(record, "en", where);
    UnitTable::Forms forms{en, en, en};
    if (record.contains("de")) forms.de = record["de"].get<std::string>();
    if (record.contains("fr")) forms.fr = record["fr"].get<std::string>();
    units.add(key, forms);
  }
}

// Loads a manifest into a Corpus, preserving record order. Reference markup
// is parsed eagerly so manifest errors carry line numbers, and the med/fmt
// vocabularies are the union of markup-derived terms and any external lists
// named in the header.
inline Corpus load_manifest(const std::string& path,
                            const UnitTable& units = default_unit_table()) {
  std::ifstream in(path);
  if (!in) throw_io("cannot open manifest '" + path + "'");

  Corpus corpus;
  corpus.vocabularies[Category::Med];
  corpus.vocabularies[Category::Fmt];
  corpus.vocabularies[Category::Punct] = punct_vocabulary();

  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw_parse(path + ": empty manifest (missing header)");
  ++line_no;

  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.is_object())
    throw_parse(path + ":1: malformed manifest header");
  std::string locale_name = detail::require_string(header, "locale", path + ":1");
  std::optional<Locale> locale = parse_locale(locale_name);
  if (!locale) throw_parse(path + ":1: unsupported locale '" + locale_name + "'");
  corpus.locale = *locale;

  NormalizationProfile keyterm_profile{Pipeline::Keyterm, corpus.locale};
  auto add_terms_from_file = [&](const char* key, Category category) {
    if (!header.contains(key)) return;
    std::filesystem::path vocab_path = header[key].get<std::string>();
    if (vocab_path.is_relative())
      vocab_path = std::filesystem::path(path).parent_path() / vocab_path;
    for (const auto& term : detail::read_term_lines(vocab_path)) {
      corpus.vocabularies[category].add(normalize_tokens(term, keyterm_profile));
    }
  };
  add_terms_from_file("vocab_med", Category::Med);
  add_terms_from_file("vocab_fmt", Category::Fmt);

  std::set<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = detail::trim(line);
    if (text.empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);

    nlohmann::json record = nlohmann::json::parse(text, nullptr, false);
    if (record.is_discarded() || !record.is_object())
      throw_parse(where + ": malformed record (not a JSON object)");

    Utterance utt;
    utt.id = detail::require_string(record, "id", where);
    if (!seen_ids.insert(utt.id).second)
      throw_parse(where + ": duplicate id '" + utt.id + "'");
    utt.locale = corpus.locale;
    if (record.contains("locale")) {
      std::string rec_locale = record["locale"].get<std::string>();
      std::optional<Locale> parsed = parse_locale(rec_locale);
      if (!parsed)
        throw_parse(where + ": unsupported locale '" + rec_locale + "' in record '" + utt.id + "'");
      if (*parsed != corpus.locale)
        throw_parse(where + ": record '" + utt.id + "' locale " + to_string(*parsed) +
                    " does not match corpus locale " + to_string(corpus.locale));
    }
    utt.reference_markup = detail::require_string(record, "reference", where);
    utt.hypothesis = detail::require_string(record, "hypothesis", where);
    if (record.contains("biased_hypothesis"))
      utt.biased_hypothesis = record["biased_hypothesis"].get<std::string>();
    if (record.contains("audio")) utt.audio_path = record["audio"].get<std::string>();
    if (record.contains("duration_s")) {
      if (!record["duration_s"].is_number())
        throw_parse(where + ": non-numeric duration_s in record '" + utt.id + "'");
      utt.duration_s = record["duration_s"].get<double>();
    }

    AnnotatedReference ann;
    try {
      ann = parse_reference_markup(utt.reference_markup, corpus.locale, units);
    } catch (const Error& e) {
      throw Error(e.category(),
                  where + ": record '" + utt.id + "': " + std::string(e.what()));
    }
    for (const auto& span : ann.spans) {
      if (span.category == Category::Punct) continue;  // fixed symbol set
      std::vector<std::string> slice(ann.tokens.begin() + span.start,
                                     ann.tokens.begin() + span.end);
      corpus.vocabularies[span.category].add(slice);
    }
    corpus.utterances.push_back(std::move(utt));
    corpus.annotated.push_back(std::move(ann));
  }
  return corpus;
}

// Per-category span totals and example count; the duration total is absent
// whenever any utterance lacks a duration.
inline DatasetStats corpus_stats(const Corpus& corpus) {
  DatasetStats stats;
  stats.example_count = std::int64_t(corpus.utterances.size());
  double total = 0.0;
  bool all_durations = true;
  for (const auto& utt : corpus.utterances) {
    if (utt.duration_s)
      total += *utt.duration_s;
    else
      all_durations = false;
  }
  if (all_durations) stats.total_duration_s = total;
  for (const auto& ann : corpus.annotated) {
    for (const auto& span : ann.spans) {
      switch (span.category) {
        case Category::Med: ++stats.med_term_count; break;
        case Category::Fmt: ++stats.fmt_term_count; break;
        case Category::Punct: ++stats.punct_command_count; break;
      }
    }
  }
  return stats;
}

}  // namespace asreval

#endif  // ASREVAL_CORPUS_HPP
