// Copyright 2026 The fastec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FASTEC_RNG_HPP_
#define FASTEC_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>

namespace fastec {

// Source of uniform integers. The engine draws through this interface so
// tests can script exact draw sequences.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform integer in [0, bound). `bound` must be positive.
  virtual std::uint64_t uniform_below(std::uint64_t bound) = 0;
};

// Deterministic stream over std::mt19937_64, whose output sequence is fixed
// by the C++ standard. Bounded draws use threshold rejection, so every value
// in [0, bound) is exactly equally likely and the sequence does not depend on
// the standard library's distribution implementations.
class RngStream final : public RandomSource {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  std::uint64_t uniform_below(std::uint64_t bound) override;

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent seeds from one user seed.
std::uint64_t mix64(std::uint64_t x) noexcept;

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) noexcept {
  return mix64(seed ^ mix64(salt + 0x9e3779b97f4a7c15ULL));
}

// Fisher-Yates with RandomSource draws (std::shuffle is not portable).
template <typename T>
void shuffle(std::span<T> items, RandomSource& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace fastec

#endif  // FASTEC_RNG_HPP_
