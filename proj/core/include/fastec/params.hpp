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

#ifndef FASTEC_PARAMS_HPP_
#define FASTEC_PARAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fastec/types.hpp"

namespace fastec {

// Exact positive rational num/den in lowest terms.
struct Epsilon {
  std::uint64_t num = 1;
  std::uint64_t den = 1;

  // Accepts "0.25", "1", "1/3", ".5". Throws Error{kParse} otherwise or when
  // the value is not positive.
  static Epsilon parse(std::string_view text);

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(const Epsilon&, const Epsilon&) = default;
};

enum class Mode { kPractical, kTheory };

Mode parse_mode(std::string_view text);
std::string_view mode_name(Mode mode) noexcept;

struct ParamOverrides {
  std::optional<std::size_t> k_max;
  std::optional<std::size_t> ell;
};

struct Params {
  Epsilon epsilon;
  Color q = 0;
  std::size_t k_max = 0;
  std::size_t ell = 0;
  std::uint64_t seed = 0;
  Mode mode = Mode::kPractical;
};

// q = floor((1 + eps) * delta). Practical defaults: k_max = max(8, ceil(16/eps)),
// ell = max(4, ceil(1/eps^2)). Theory mode uses ell = 6400 * k_max^4
// (saturating). Throws Error{kEpsilonTooSmall} when floor(eps * delta) < 1
// and Error{kInvalidOverride} when an override breaks k_max >= 2, ell >= 3
// or, in theory mode, k_max >= ceil(16/eps) and ell >= 6400 * k_max^4.
//
// Graphs with delta <= 1 need no recoloring; they get q = delta + 1 and
// the practical defaults without the epsilon check.
Params derive_params(std::uint32_t delta, Epsilon epsilon, const ParamOverrides& overrides = {},
                     Mode mode = Mode::kPractical, std::uint64_t seed = 0);

}  // namespace fastec

#endif  // FASTEC_PARAMS_HPP_
