// Copyright 2026 The LipTest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIPTEST_RNG_HPP_
#define LIPTEST_RNG_HPP_

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>

namespace liptest {

/// Seeded generator with a bit-exact sample stream: identical seeds produce
/// identical draws on every platform. Backed by std::mt19937_64 (fully
/// specified by the standard); all value conversions are done locally rather
/// than via the unspecified <random> distributions.
///
/// Child streams are derived from the root seed with a splitmix64 chain, so
/// parallel consumers get independent, reproducible streams:
///   child_seed(stream) = splitmix64(root + 0x9e3779b97f4a7c15 * (stream + 1))
class SeededRng {
 public:
  static constexpr const char* kVersion = "mt19937_64/v1";

  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Unbiased uniform in [0, n).
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SeededRng: uniform_below(0)");
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  /// Independent child stream; does not disturb this generator's state.
  SeededRng derive(std::uint64_t stream) const {
    return SeededRng(derive_seed(seed_, stream));
  }

  static std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
    return splitmix64(root + 0x9e3779b97f4a7c15ull * (stream + 1));
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace liptest

#endif  // LIPTEST_RNG_HPP_
