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

#ifndef ASREVAL_UNICODE_HPP
#define ASREVAL_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace asreval::uni {

// Decodes UTF-8; invalid sequences become U+FFFD.
inline std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 >> 5) == 0x6 && i + 1 < text.size()) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      if ((b1 & 0xC0) == 0x80) {
        cp = (char32_t(b0 & 0x1F) << 6) | (b1 & 0x3F);
        len = 2;
        if (cp < 0x80) cp = 0xFFFD;
      }
    } else if ((b0 >> 4) == 0xE && i + 2 < text.size()) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      unsigned char b2 = static_cast<unsigned char>(text[i + 2]);
      if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80) {
        cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(b1 & 0x3F) << 6) | (b2 & 0x3F);
        len = 3;
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
      }
    } else if ((b0 >> 3) == 0x1E && i + 3 < text.size()) {
      unsigned char b1 = static_cast<unsigned char>(text[i + 1]);
      unsigned char b2 = static_cast<unsigned char>(text[i + 2]);
      unsigned char b3 = static_cast<unsigned char>(text[i + 3]);
      if ((b1 & 0xC0) == 0x80 && (b2 & 0xC0) == 0x80 && (b3 & 0xC0) == 0x80) {
        cp = (char32_t(b0 & 0x07) << 18) | (char32_t(b1 & 0x3F) << 12) |
             (char32_t(b2 & 0x3F) << 6) | (b3 & 0x3F);
        len = 4;
        if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
      }
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

// Typographic punctuation and space variants are mapped to canonical ASCII
// forms before comparison. En-dash (U+2013) is intentionally preserved: it is
// the canonical range separator.
inline void canonicalize(std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    switch (cp) {
      case 0x2018: case 0x2019: case 0x201B: case 0x2039: case 0x203A:
        out.push_back(U'\'');
        break;
      case 0x201C: case 0x201D: case 0x201E: case 0x201F: case 0x00AB: case 0x00BB:
        out.push_back(U'"');
        break;
      case 0x2010: case 0x2011: case 0x2012: case 0x2014: case 0x2212:
        out.push_back(U'-');
        break;
      case 0x00A0: case 0x2000: case 0x2001: case 0x2002: case 0x2003:
      case 0x2004: case 0x2005: case 0x2006: case 0x2007: case 0x2008:
      case 0x2009: case 0x200A: case 0x202F: case 0x205F: case 0x3000:
        out.push_back(U' ');
        break;
      case 0x2028:
        out.push_back(U'\n');
        break;
      case 0x2029:
        out.push_back(U'\n');
        out.push_back(U'\n');
        break;
      default:
        out.push_back(cp);
    }
  }
  cps.swap(out);
}

namespace detail {

struct ComposePair {
  char32_t base;
  char32_t mark;
  char32_t composed;
};

// Latin letters + combining marks covering the EN/DE/FR repertoire.
inline constexpr ComposePair kComposeTable[] = {
    {U'a', 0x0300, 0x00E0}, {U'a', 0x0301, 0x00E1}, {U'a', 0x0302, 0x00E2},
    {U'a', 0x0303, 0x00E3}, {U'a', 0x0308, 0x00E4}, {U'a', 0x030A, 0x00E5},
    {U'e', 0x0300, 0x00E8}, {U'e', 0x0301, 0x00E9}, {U'e', 0x0302, 0x00EA},
    {U'e', 0x0308, 0x00EB},
    {U'i', 0x0300, 0x00EC}, {U'i', 0x0301, 0x00ED}, {U'i', 0x0302, 0x00EE},
    {U'i', 0x0308, 0x00EF},
    {U'o', 0x0300, 0x00F2}, {U'o', 0x0301, 0x00F3}, {U'o', 0x0302, 0x00F4},
    {U'o', 0x0303, 0x00F5}, {U'o', 0x0308, 0x00F6},
    {U'u', 0x0300, 0x00F9}, {U'u', 0x0301, 0x00FA}, {U'u', 0x0302, 0x00FB},
    {U'u', 0x0308, 0x00FC},
    {U'y', 0x0301, 0x00FD}, {U'y', 0x0308, 0x00FF},
    {U'c', 0x0327, 0x00E7}, {U'n', 0x0303, 0x00F1},
    {U'A', 0x0300, 0x00C0}, {U'A', 0x0301, 0x00C1}, {U'A', 0x0302, 0x00C2},
    {U'A', 0x0303, 0x00C3}, {U'A', 0x0308, 0x00C4}, {U'A', 0x030A, 0x00C5},
    {U'E', 0x0300, 0x00C8}, {U'E', 0x0301, 0x00C9}, {U'E', 0x0302, 0x00CA},
    {U'E', 0x0308, 0x00CB},
    {U'I', 0x0300, 0x00CC}, {U'I', 0x0301, 0x00CD}, {U'I', 0x0302, 0x00CE},
    {U'I', 0x0308, 0x00CF},
    {U'O', 0x0300, 0x00D2}, {U'O', 0x0301, 0x00D3}, {U'O', 0x0302, 0x00D4},
    {U'O', 0x0303, 0x00D5}, {U'O', 0x0308, 0x00D6},
    {U'U', 0x0300, 0x00D9}, {U'U', 0x0301, 0x00DA}, {U'U', 0x0302, 0x00DB},
    {U'U', 0x0308, 0x00DC},
    {U'Y', 0x0301, 0x00DD}, {U'Y', 0x0308, 0x0178},
    {U'C', 0x0327, 0x00C7}, {U'N', 0x0303, 0x00D1},
};

inline char32_t compose_pair(char32_t base, char32_t mark) {
  for (const auto& entry : kComposeTable) {
    if (entry.base == base && entry.mark == mark) return entry.composed;
  }
  return 0;
}

}  // namespace detail

// Composes decomposed base+mark pairs (NFC for the Latin repertoire above).
// Unknown combining marks are left in place.
inline void compose(std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!out.empty() && cp >= 0x0300 && cp <= 0x036F) {
      char32_t composed = detail::compose_pair(out.back(), cp);
      if (composed != 0) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  cps.swap(out);
}

// Full case folding for the Latin repertoire (ß -> ss, µ -> μ included).
inline void fold_append(std::vector<char32_t>& out, char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') {
    out.push_back(cp + 0x20);
    return;
  }
  if (cp == 0x00DF || cp == 0x1E9E) {  // ß / ẞ
    out.push_back(U's');
    out.push_back(U's');
    return;
  }
  if (cp == 0x00B5) {  // micro sign -> greek mu
    out.push_back(0x03BC);
    return;
  }
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) {  // Latin-1 uppercase
    out.push_back(cp + 0x20);
    return;
  }
  if (cp >= 0x0100 && cp <= 0x0137) {  // Latin Extended-A pairs
    out.push_back((cp % 2 == 0) ? cp + 1 : cp);
    return;
  }
  if (cp >= 0x0139 && cp <= 0x0148) {
    out.push_back((cp % 2 == 1) ? cp + 1 : cp);
    return;
  }
  if (cp >= 0x014A && cp <= 0x0177) {
    out.push_back((cp % 2 == 0) ? cp + 1 : cp);
    return;
  }
  if (cp == 0x0178) {  // Ÿ
    out.push_back(0x00FF);
    return;
  }
  if (cp >= 0x0179 && cp <= 0x017E) {
    out.push_back((cp % 2 == 1) ? cp + 1 : cp);
    return;
  }
  if (cp == 0x017F) {  // long s
    out.push_back(U's');
    return;
  }
  if (cp == 0x0130) {  // İ; dotless-i languages are out of scope
    out.push_back(U'i');
    return;
  }
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) {  // Greek uppercase
    out.push_back(cp + 0x20);
    return;
  }
  out.push_back(cp);
}

inline void fold(std::vector<char32_t>& cps) {
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) fold_append(out, cp);
  cps.swap(out);
}

}  // namespace asreval::uni

#endif  // ASREVAL_UNICODE_HPP
