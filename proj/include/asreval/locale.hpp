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

#ifndef ASREVAL_LOCALE_HPP
#define ASREVAL_LOCALE_HPP

#include <optional>
#include <string>
#include <string_view>

namespace asreval {

enum class Locale { EN, DE, FR };

inline std::string to_string(Locale locale) {
  switch (locale) {
    case Locale::EN: return "EN";
    case Locale::DE: return "DE";
    case Locale::FR: return "FR";
  }
  return "EN";
}

// Accepts "EN"/"en"/"eN" etc.; anything else is unsupported.
inline std::optional<Locale> parse_locale(std::string_view name) {
  std::string upper;
  upper.reserve(name.size());
  for (char c : name) upper.push_back(c >= 'a' && c <= 'z' ? char(c - 0x20) : c);
  if (upper == "EN") return Locale::EN;
  if (upper == "DE") return Locale::DE;
  if (upper == "FR") return Locale::FR;
  return std::nullopt;
}

}  // namespace asreval

#endif  // ASREVAL_LOCALE_HPP
