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
// Text normalization: entity rendering to locale-correct written forms and
// the two token pipelines. The `wer` pipeline is case-insensitive and strips
// spoken-punctuation symbols; the `keyterm` pipeline is case-insensitive and
// keeps those symbols as standalone tokens.

#ifndef ASREVAL_NORMALIZE_HPP
#define ASREVAL_NORMALIZE_HPP

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asreval/common.hpp"
#include "asreval/locale.hpp"
#include "asreval/unicode.hpp"

namespace asreval {

// Line-break commands are carried as reserved tokens so alignment treats them
// as words; they render as literal line breaks in formatted text.
inline constexpr const char* kNewLineToken = "⟨nl⟩";
inline constexpr const char* kNewParagraphToken = "⟨np⟩";

enum class PunctCommand {
  Period, Comma, NewLine, NewParagraph, ExclamationMark, QuestionMark,
  Colon, Semicolon, Hyphen, Slash, OpenQuote, CloseQuote, OpenParen, CloseParen,
};

// How a written punctuation form joins neighboring text when rendering
// formatted references.
enum class Attach { Left, Right, Standalone, LineBreak };

namespace detail {

struct PunctInfo {
  PunctCommand command;
  const char* key;      // markup payload
  const char* symbol;   // token form
  const char* written;  // display form
  Attach attach;
};

inline constexpr std::array<PunctInfo, 14> kPunctTable = {{
    {PunctCommand::Period, "period", ".", ".", Attach::Left},
    {PunctCommand::Comma, "comma", ",", ",", Attach::Left},
    {PunctCommand::NewLine, "new_line", "⟨nl⟩", "\n", Attach::LineBreak},
    {PunctCommand::NewParagraph, "new_paragraph", "⟨np⟩", "\n\n", Attach::LineBreak},
    {PunctCommand::ExclamationMark, "exclamation_mark", "!", "!", Attach::Left},
    {PunctCommand::QuestionMark, "question_mark", "?", "?", Attach::Left},
    {PunctCommand::Colon, "colon", ":", ":", Attach::Left},
    {PunctCommand::Semicolon, "semicolon", ";", ";", Attach::Left},
    {PunctCommand::Hyphen, "hyphen", "-", "-", Attach::Standalone},
    {PunctCommand::Slash, "slash", "/", "/", Attach::Standalone},
    {PunctCommand::OpenQuote, "open_quote", "\"", "\"", Attach::Right},
    {PunctCommand::CloseQuote, "close_quote", "\"", "\"", Attach::Left},
    {PunctCommand::OpenParen, "open_paren", "(", "(", Attach::Right},
    {PunctCommand::CloseParen, "close_paren", ")", ")", Attach::Left},
}};

inline const PunctInfo& punct_info(PunctCommand command) {
  for (const auto& info : kPunctTable) {
    if (info.command == command) return info;
  }
  throw_invalid("unknown punctuation command");
}

}  // namespace detail

inline std::optional<PunctCommand> parse_punct_command(std::string_view key) {
  for (const auto& info : detail::kPunctTable) {
    if (key == info.key) return info.command;
  }
  return std::nullopt;
}

inline const char* punct_command_key(PunctCommand command) {
  return detail::punct_info(command).key;
}

inline const char* punct_symbol(PunctCommand command) {
  return detail::punct_info(command).symbol;
}

inline Attach punct_attach(PunctCommand command) {
  return detail::punct_info(command).attach;
}

// The fixed spoken-punctuation symbol set (token forms, deduplicated).
inline const std::vector<std::string>& spoken_punct_symbols() {
  static const std::vector<std::string> symbols = {
      ".", ",", kNewLineToken, kNewParagraphToken, "!", "?",
      ":", ";", "-", "/", "\"", "(", ")"};
  return symbols;
}

inline bool is_spoken_punct_symbol(std::string_view token) {
  const auto& symbols = spoken_punct_symbols();
  return std::find(symbols.begin(), symbols.end(), token) != symbols.end();
}

// ---------------------------------------------------------------------------
// Entities

enum class EntityKind { Date, Time, Num, Ord, Unit, Range, Punct };

struct Entity {
  EntityKind kind = EntityKind::Num;
  int year = 0, month = 0, day = 0;      // Date
  int hour = 0, minute = 0;              // Time
  long long number = 0;                  // Num / Ord
  std::string unit_key;                  // Unit
  long long range_low = 0, range_high = 0;  // Range
  PunctCommand punct = PunctCommand::Period;

  static Entity make_date(int year, int month, int day) {
    Entity e;
    e.kind = EntityKind::Date;
    e.year = year;
    e.month = month;
    e.day = day;
    return e;
  }
  static Entity make_time(int hour, int minute) {
    Entity e;
    e.kind = EntityKind::Time;
    e.hour = hour;
    e.minute = minute;
    return e;
  }
  static Entity make_num(long long value) {
    Entity e;
    e.kind = EntityKind::Num;
    e.number = value;
    return e;
  }
  static Entity make_ord(long long value) {
    Entity e;
    e.kind = EntityKind::Ord;
    e.number = value;
    return e;
  }
  static Entity make_unit(std::string key) {
    Entity e;
    e.kind = EntityKind::Unit;
    e.unit_key = std::move(key);
    return e;
  }
  static Entity make_range(long long low, long long high) {
    Entity e;
    e.kind = EntityKind::Range;
    e.range_low = low;
    e.range_high = high;
    return e;
  }
  static Entity make_punct(PunctCommand command) {
    Entity e;
    e.kind = EntityKind::Punct;
    e.punct = command;
    return e;
  }
};

namespace detail {

inline bool is_leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

inline int days_in_month(int y, int m) {
  static constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap_year(y)) return 29;
  return kDays[m - 1];
}

}  // namespace detail

inline void validate_entity(const Entity& e) {
  switch (e.kind) {
    case EntityKind::Date:
      if (e.month < 1 || e.month > 12)
        throw_parse("invalid date: month " + std::to_string(e.month));
      if (e.day < 1 || e.day > detail::days_in_month(e.year, e.month))
        throw_parse("invalid date: day " + std::to_string(e.day));
      break;
    case EntityKind::Time:
      if (e.hour < 0 || e.hour > 23 || e.minute < 0 || e.minute > 59)
        throw_parse("invalid time " + std::to_string(e.hour) + ":" + std::to_string(e.minute));
      break;
    case EntityKind::Num:
      if (e.number < 0) throw_parse("invalid cardinal " + std::to_string(e.number));
      break;
    case EntityKind::Ord:
      if (e.number < 1) throw_parse("invalid ordinal " + std::to_string(e.number));
      break;
    case EntityKind::Unit:
      if (e.unit_key.empty()) throw_parse("empty unit key");
      break;
    case EntityKind::Range:
      if (e.range_low < 0 || e.range_low > e.range_high)
        throw_parse("invalid range " + std::to_string(e.range_low) + "-" +
                    std::to_string(e.range_high));
      break;
    case EntityKind::Punct:
      break;
  }
}

// ---------------------------------------------------------------------------
// Locale tables

namespace detail {

inline const char* month_name(Locale locale, int month) {
  static constexpr const char* kEn[12] = {
      "January", "February", "March", "April", "May", "June", "July",
      "August", "September", "October", "November", "December"};
  static constexpr const char* kDe[12] = {
      "Januar", "Februar", "März", "April", "Mai", "Juni", "Juli",
      "August", "September", "Oktober", "November", "Dezember"};
  static constexpr const char* kFr[12] = {
      "janvier", "février", "mars", "avril", "mai", "juin", "juillet",
      "août", "septembre", "octobre", "novembre", "décembre"};
  switch (locale) {
    case Locale::EN: return kEn[month - 1];
    case Locale::DE: return kDe[month - 1];
    case Locale::FR: return kFr[month - 1];
  }
  return kEn[month - 1];
}

inline const char* cardinal_word(Locale locale, int n) {
  static constexpr const char* kEn[9] = {"one", "two", "three", "four", "five",
                                         "six", "seven", "eight", "nine"};
  static constexpr const char* kDe[9] = {"eins", "zwei", "drei", "vier", "fünf",
                                         "sechs", "sieben", "acht", "neun"};
  static constexpr const char* kFr[9] = {"un", "deux", "trois", "quatre", "cinq",
                                         "six", "sept", "huit", "neuf"};
  switch (locale) {
    case Locale::EN: return kEn[n - 1];
    case Locale::DE: return kDe[n - 1];
    case Locale::FR: return kFr[n - 1];
  }
  return kEn[n - 1];
}

inline const char* ordinal_word(Locale locale, int n) {
  static constexpr const char* kEn[9] = {"first", "second", "third", "fourth", "fifth",
                                         "sixth", "seventh", "eighth", "ninth"};
  static constexpr const char* kDe[9] = {"erste", "zweite", "dritte", "vierte", "fünfte",
                                         "sechste", "siebte", "achte", "neunte"};
  static constexpr const char* kFr[9] = {"premier", "deuxième", "troisième",
                                         "quatrième", "cinquième", "sixième",
                                         "septième", "huitième", "neuvième"};
  switch (locale) {
    case Locale::EN: return kEn[n - 1];
    case Locale::DE: return kDe[n - 1];
    case Locale::FR: return kFr[n - 1];
  }
  return kEn[n - 1];
}

}  // namespace detail

enum class NumberKind { Cardinal, Ordinal };

// Word form for 1..9 from the fixed per-locale table; values of 10 and above
// are rendered as numerals and rejected here.
inline std::string number_to_words(long long n, NumberKind kind, Locale locale) {
  if (n < 1 || n > 9)
    throw_invalid("number_to_words expects 1..9, got " + std::to_string(n));
  return kind == NumberKind::Cardinal ? detail::cardinal_word(locale, int(n))
                                      : detail::ordinal_word(locale, int(n));
}

// Numeral ordinal: EN "10th"/"21st", DE "10.", FR "1er"/"10e".
inline std::string ordinal_numeral(long long n, Locale locale) {
  std::string digits = std::to_string(n);
  switch (locale) {
    case Locale::EN: {
      long long mod100 = n % 100;
      long long mod10 = n % 10;
      const char* suffix = "th";
      if (mod100 < 11 || mod100 > 13) {
        if (mod10 == 1) suffix = "st";
        else if (mod10 == 2) suffix = "nd";
        else if (mod10 == 3) suffix = "rd";
      }
      return digits + suffix;
    }
    case Locale::DE:
      return digits + ".";
    case Locale::FR:
      return n == 1 ? "1er" : digits + "e";
  }
  return digits;
}

// ---------------------------------------------------------------------------
// Unit table

// Canonical unit keys map to written abbreviations. Forms are
// locale-independent SI abbreviations except where conventions genuinely
// differ (international units and rates thereof).
class UnitTable {
 public:
  struct Forms {
    std::string en, de, fr;
  };

  UnitTable() {
    add("mg", "mg");
    add("ml", "mL");
    add("mmhg", "mmHg");
    add("g", "g");
    add("kg", "kg");
    add("l", "L");
    add("cm", "cm");
    add("mm", "mm");
    add("mcg", "mcg");
    add("mg_per_dl", "mg/dL");
    add("mmol_per_l", "mmol/L");
    add("mg_per_ml", "mg/mL");
    add("percent", "%");
    add("celsius", "°C");
    add("iu", {"IU", "IE", "UI"});
    add("units_per_hour", {"U/h", "IE/h", "UI/h"});
  }

  void add(const std::string& key, const std::string& all_locales) {
    table_[lower(key)] = Forms{all_locales, all_locales, all_locales};
  }
  void add(const std::string& key, Forms forms) { table_[lower(key)] = std::move(forms); }

  bool has(std::string_view key) const { return table_.count(lower(key)) != 0; }

  const std::string& lookup(std::string_view key, Locale locale) const {
    auto it = table_.find(lower(key));
    if (it == table_.end()) throw_parse("unknown unit key '" + std::string(key) + "'");
    switch (locale) {
      case Locale::EN: return it->second.en;
      case Locale::DE: return it->second.de;
      case Locale::FR: return it->second.fr;
    }
    return it->second.en;
  }

 private:
  static std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
      if (c >= 'A' && c <= 'Z') c = char(c + 0x20);
    return out;
  }

  std::map<std::string, Forms> table_;
};

inline const UnitTable& default_unit_table() {
  static const UnitTable table;
  return table;
}

// ---------------------------------------------------------------------------
// Entity rendering

// Formatted written form of an entity: dates in locale long form, times per
// locale convention, cardinals/ordinals 1-9 as words and 10+ as numerals,
// ranges as numerals joined by en-dash, units as abbreviations, punctuation
// commands as their symbols.
inline std::string render_entity(const Entity& entity, Locale locale,
                                 const UnitTable& units = default_unit_table()) {
  validate_entity(entity);
  char buf[64];
  switch (entity.kind) {
    case EntityKind::Date:
      switch (locale) {
        case Locale::EN:
          std::snprintf(buf, sizeof(buf), "%s %d, %d",
                        detail::month_name(locale, entity.month), entity.day, entity.year);
          return buf;
        case Locale::DE:
          std::snprintf(buf, sizeof(buf), "%d. %s %d", entity.day,
                        detail::month_name(locale, entity.month), entity.year);
          return buf;
        case Locale::FR: {
          std::string day = entity.day == 1 ? "1er" : std::to_string(entity.day);
          return day + " " + detail::month_name(locale, entity.month) + " " +
                 std::to_string(entity.year);
        }
      }
      break;
    case EntityKind::Time:
      switch (locale) {
        case Locale::EN: {
          int h12 = entity.hour % 12 == 0 ? 12 : entity.hour % 12;
          std::snprintf(buf, sizeof(buf), "%d:%02d %s", h12, entity.minute,
                        entity.hour < 12 ? "AM" : "PM");
          return buf;
        }
        case Locale::DE:
          std::snprintf(buf, sizeof(buf), "%02d:%02d", entity.hour, entity.minute);
          return buf;
        case Locale::FR:
          std::snprintf(buf, sizeof(buf), "%dh%02d", entity.hour, entity.minute);
          return buf;
      }
      break;
    case EntityKind::Num:
      if (entity.number >= 1 && entity.number <= 9)
        return number_to_words(entity.number, NumberKind::Cardinal, locale);
      return std::to_string(entity.number);
    case EntityKind::Ord:
      if (entity.number <= 9)
        return number_to_words(entity.number, NumberKind::Ordinal, locale);
      return ordinal_numeral(entity.number, locale);
    case EntityKind::Unit:
      return units.lookup(entity.unit_key, locale);
    case EntityKind::Range:
      return std::to_string(entity.range_low) + "–" + std::to_string(entity.range_high);
    case EntityKind::Punct:
      return detail::punct_info(entity.punct).written;
  }
  throw_invalid("unreachable entity kind");
}

// ---------------------------------------------------------------------------
// Token pipelines

enum class Pipeline { Wer, Keyterm };

struct NormalizationProfile {
  Pipeline pipeline = Pipeline::Wer;
  Locale locale = Locale::EN;
};

namespace detail {

inline bool is_edge_punct(char32_t cp) {
  switch (cp) {
    case U'.': case U',': case U'!': case U'?': case U':': case U';':
    case U'-': case U'/': case U'"': case U'(': case U')':
      return true;
    default:
      return false;
  }
}

inline bool is_split_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\r' || cp == U'\v' || cp == U'\f';
}

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

// "4-15" / "4–15" -> "4–15". Applies only to full digits-dash-digits tokens.
inline void canonicalize_numeric_range(std::vector<char32_t>& token) {
  std::size_t dash = token.size();
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token[i] == U'-' || token[i] == 0x2013) {
      if (dash != token.size()) return;  // more than one dash
      dash = i;
    } else if (!is_ascii_digit(token[i])) {
      return;
    }
  }
  if (dash == token.size() || dash == 0 || dash == token.size() - 1) return;
  token[dash] = 0x2013;
}

}  // namespace detail

// Unicode-composed, case-folded, whitespace-tokenized. Line-break runs become
// the reserved tokens (one break -> ⟨nl⟩, two or more -> ⟨np⟩), and those
// reserved tokens pass through verbatim. Word-internal dashes and slashes are
// preserved in both pipelines.
inline std::vector<std::string> normalize_tokens(std::string_view text,
                                                 const NormalizationProfile& profile) {
  std::vector<char32_t> cps = uni::decode_utf8(text);
  uni::canonicalize(cps);
  uni::compose(cps);
  uni::fold(cps);

  // Raw token split; newline runs become reserved-token pseudo-words.
  std::vector<std::vector<char32_t>> raw;
  std::vector<char32_t> current;
  auto flush = [&] {
    if (!current.empty()) {
      raw.push_back(current);
      current.clear();
    }
  };
  const std::vector<char32_t> nl_token = uni::decode_utf8(kNewLineToken);
  const std::vector<char32_t> np_token = uni::decode_utf8(kNewParagraphToken);
  std::size_t i = 0;
  while (i < cps.size()) {
    char32_t cp = cps[i];
    if (cp == U'\n') {
      flush();
      int breaks = 0;
      while (i < cps.size() && (cps[i] == U'\n' || detail::is_split_space(cps[i]))) {
        if (cps[i] == U'\n') ++breaks;
        ++i;
      }
      raw.push_back(breaks >= 2 ? np_token : nl_token);
      continue;
    }
    if (detail::is_split_space(cp)) {
      flush();
    } else {
      current.push_back(cp);
    }
    ++i;
  }
  flush();

  const bool keyterm = profile.pipeline == Pipeline::Keyterm;
  std::vector<std::string> tokens;
  tokens.reserve(raw.size());
  auto emit = [&](std::vector<char32_t> tok) {
    if (tok.empty()) return;
    detail::canonicalize_numeric_range(tok);
    std::string encoded = uni::encode_utf8(tok);
    if (!keyterm && is_spoken_punct_symbol(encoded)) return;
    tokens.push_back(std::move(encoded));
  };

  for (auto& tok : raw) {
    if (tok == nl_token || tok == np_token) {
      if (keyterm) tokens.push_back(uni::encode_utf8(tok));
      continue;
    }
    std::size_t lo = 0, hi = tok.size();
    std::vector<char32_t> leading, trailing;
    while (lo < hi && detail::is_edge_punct(tok[lo])) leading.push_back(tok[lo++]);
    while (hi > lo && detail::is_edge_punct(tok[hi - 1])) trailing.push_back(tok[--hi]);
    if (keyterm) {
      for (char32_t cp : leading) emit({cp});
      emit(std::vector<char32_t>(tok.begin() + lo, tok.begin() + hi));
      for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) emit({*it});
    } else {
      emit(std::vector<char32_t>(tok.begin() + lo, tok.begin() + hi));
    }
  }
  return tokens;
}

// The wer-pipeline view of a keyterm-pipeline token list: standalone
// spoken-punctuation symbol tokens removed.
inline std::vector<std::string> drop_punct_tokens(const std::vector<std::string>& keyterm_tokens) {
  std::vector<std::string> out;
  out.reserve(keyterm_tokens.size());
  for (const auto& tok : keyterm_tokens) {
    if (!is_spoken_punct_symbol(tok)) out.push_back(tok);
  }
  return out;
}

// Joins tokens with single spaces (the canonical-string convention).
inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace asreval

#endif  // ASREVAL_NORMALIZE_HPP
