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

#ifndef ASREVAL_COMMON_HPP
#define ASREVAL_COMMON_HPP

#include <stdexcept>
#include <string>

namespace asreval {

inline constexpr const char* kVersion = "0.1.0";

// Failure classes surfaced to callers; the CLI maps each to an exit code.
enum class ErrorCategory {
  Io,                // missing files, unreadable streams
  Parse,             // malformed manifests, markup, payloads, unsupported formats
  Invalid,           // contract violations (bad arguments, out-of-range values)
  MetricUndefined,   // a requested metric is undefined on the full input
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(ErrorCategory::Io, msg); }
[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(ErrorCategory::Parse, msg); }
[[noreturn]] inline void throw_invalid(const std::string& msg) { throw Error(ErrorCategory::Invalid, msg); }
[[noreturn]] inline void throw_undefined(const std::string& msg) {
  throw Error(ErrorCategory::MetricUndefined, msg);
}

}  // namespace asreval

#endif  // ASREVAL_COMMON_HPP
