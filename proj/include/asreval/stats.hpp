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
// Percentile bootstrap over utterance-level resampling. The generator is
// SplitMix64 with one substream per resample keyed by (seed, resample index),
// so results are identical regardless of evaluation order or platform.

#ifndef ASREVAL_STATS_HPP
#define ASREVAL_STATS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asreval/common.hpp"
#include "asreval/rational.hpp"

namespace asreval {

inline constexpr std::int64_t kDefaultBootstrapSamples = 1000;
inline constexpr std::uint64_t kDefaultSeed = 42;

// SplitMix64 (Steele, Lea, Flood 2014). Fully specified by algorithm; the
// platform default generators are not portable across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound) via modulo rejection.
  std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Substream for one resample: state seeded by mixing the seed and the index
// through the output function itself.
inline SplitMix64 resample_stream(std::uint64_t seed, std::uint64_t resample_index) {
  SplitMix64 outer(seed);
  std::uint64_t mixed = outer.next();
  return SplitMix64(mixed + 0x9E3779B97F4A7C15ULL * (resample_index + 1));
}

struct MetricEstimate {
  std::string metric_name;
  Ratio point;
  Ratio ci_low;
  Ratio ci_high;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  Ratio defined_fraction{1, 1};

  friend bool operator==(const MetricEstimate&, const MetricEstimate&) = default;
};

// Linear interpolation between closest ranks on sorted values; p in [0,1].
inline Ratio percentile_sorted(const std::vector<Ratio>& sorted, const Ratio& p) {
  if (sorted.empty()) throw_invalid("percentile of empty sample");
  if (sorted.size() == 1) return sorted[0];
  // h = p * (n - 1); bounds are v[floor(h)] + frac(h) * (v[floor(h)+1] - v[floor(h)])
  Ratio h = p * Ratio(std::int64_t(sorted.size()) - 1, 1);
  std::int64_t lo = h.num / h.den;  // h >= 0
  Ratio frac = h - Ratio(lo, 1);
  std::size_t lo_idx = std::size_t(lo);
  if (lo_idx + 1 >= sorted.size()) return sorted.back();
  return sorted[lo_idx] + (sorted[lo_idx + 1] - sorted[lo_idx]) * frac;
}

// Percentile bootstrap CI for a pooled metric. `pool_and_score` maps a
// multiset of per-utterance components to the metric value, or nullopt when
// the metric is undefined on that resample; undefined resamples are excluded
// from the percentiles and reported via defined_fraction.
template <typename Component, typename PoolAndScore>
MetricEstimate bootstrap_ci(const std::string& metric_name,
                            const std::vector<Component>& per_utterance,
                            PoolAndScore pool_and_score,
                            std::int64_t samples = kDefaultBootstrapSamples,
                            std::uint64_t seed = kDefaultSeed) {
  if (per_utterance.empty()) throw_invalid("bootstrap over an empty utterance set");
  if (samples < 1) throw_invalid("bootstrap sample count must be positive");

  std::optional<Ratio> point = pool_and_score(per_utterance);
  if (!point)
    throw_undefined("metric '" + metric_name + "' undefined on the full evaluation set");

  const std::size_t n = per_utterance.size();
  std::vector<Ratio> values;
  values.reserve(std::size_t(samples));
  std::vector<Component> resample(n);
  for (std::int64_t r = 0; r < samples; ++r) {
    SplitMix64 rng = resample_stream(seed, std::uint64_t(r));
    for (std::size_t k = 0; k < n; ++k) resample[k] = per_utterance[rng.bounded(n)];
    std::optional<Ratio> value = pool_and_score(resample);
    if (value) values.push_back(*value);
  }

  MetricEstimate estimate;
  estimate.metric_name = metric_name;
  estimate.point = *point;
  estimate.samples = samples;
  estimate.seed = seed;
  estimate.defined_fraction = Ratio(std::int64_t(values.size()), samples);
  if (values.empty()) {
    // Degenerate: the metric was defined on the full set but on no resample.
    estimate.ci_low = *point;
    estimate.ci_high = *point;
    return estimate;
  }
  std::sort(values.begin(), values.end());
  estimate.ci_low = percentile_sorted(values, Ratio(1, 40));     // 2.5th
  estimate.ci_high = percentile_sorted(values, Ratio(39, 40));   // 97.5th
  return estimate;
}

// Complement estimate for metrics of the form 1 - x (FNR from recall, FDR
// from precision). 1 - x is monotone decreasing, so the percentile bounds
// swap exactly; re-running the bootstrap would produce identical numbers.
inline MetricEstimate complement_estimate(const std::string& metric_name,
                                          const MetricEstimate& base) {
  MetricEstimate out;
  out.metric_name = metric_name;
  out.point = Ratio(1, 1) - base.point;
  out.ci_low = Ratio(1, 1) - base.ci_high;
  out.ci_high = Ratio(1, 1) - base.ci_low;
  out.samples = base.samples;
  out.seed = base.seed;
  out.defined_fraction = base.defined_fraction;
  return out;
}

}  // namespace asreval

#endif  // ASREVAL_STATS_HPP
