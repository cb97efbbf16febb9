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

#ifndef ASREVAL_RATIONAL_HPP
#define ASREVAL_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "asreval/common.hpp"

namespace asreval {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::int64_t narrow128(int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw_invalid("rational overflow");
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Exact rational rate. All metric arithmetic stays in integers; rounding
// happens only at display time.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;  // always > 0

  Ratio() = default;
  Ratio(std::int64_t n, std::int64_t d) {
    if (d == 0) throw_invalid("rational with zero denominator");
    detail::int128 nn = n, dd = d;
    if (dd < 0) {
      nn = -nn;
      dd = -dd;
    }
    detail::int128 g = detail::gcd128(nn, dd);
    if (g > 1) {
      nn /= g;
      dd /= g;
    }
    num = detail::narrow128(nn);
    den = detail::narrow128(dd);
  }

  static Ratio from_int(std::int64_t n) { return Ratio(n, 1); }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend Ratio operator+(const Ratio& a, const Ratio& b) {
    return make(detail::int128(a.num) * b.den + detail::int128(b.num) * a.den,
                detail::int128(a.den) * b.den);
  }
  friend Ratio operator-(const Ratio& a, const Ratio& b) {
    return make(detail::int128(a.num) * b.den - detail::int128(b.num) * a.den,
                detail::int128(a.den) * b.den);
  }
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return make(detail::int128(a.num) * b.num, detail::int128(a.den) * b.den);
  }
  friend Ratio operator/(const Ratio& a, const Ratio& b) {
    if (b.num == 0) throw_invalid("rational division by zero");
    return make(detail::int128(a.num) * b.den, detail::int128(a.den) * b.num);
  }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return detail::int128(a.num) * b.den < detail::int128(b.num) * a.den;
  }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }

 private:
  static Ratio make(detail::int128 n, detail::int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Ratio r;
    r.num = detail::narrow128(n);
    r.den = detail::narrow128(d);
    return r;
  }
};

// n/d scaled by 10^decimals and rounded half-up (ties away from zero).
inline std::int64_t round_scaled(const Ratio& r, int decimals) {
  detail::int128 scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  detail::int128 n = detail::int128(r.num) * scale;
  detail::int128 d = r.den;
  detail::int128 q = n / d;
  detail::int128 rem = detail::abs128(n % d);
  if (2 * rem >= d) q += (n < 0 ? -1 : 1);
  return detail::narrow128(q);
}

// Fixed-point decimal string, e.g. format_decimal(Ratio(1,3), 3) -> "0.333".
inline std::string format_decimal(const Ratio& r, int decimals) {
  std::int64_t scaled = round_scaled(r, decimals);
  std::int64_t mag = scaled < 0 ? -scaled : scaled;
  std::int64_t pow10 = 1;
  for (int i = 0; i < decimals; ++i) pow10 *= 10;
  std::string out = scaled < 0 ? "-" : "";
  out += std::to_string(mag / pow10);
  if (decimals > 0) {
    std::string frac = std::to_string(mag % pow10);
    out += "." + std::string(decimals - frac.size(), '0') + frac;
  }
  return out;
}

// Rate rendered as a percentage with one decimal, matching report tables.
inline std::string format_percent(const Ratio& r, int decimals = 1) {
  return format_decimal(r * Ratio(100, 1), decimals);
}

}  // namespace asreval

#endif  // ASREVAL_RATIONAL_HPP
