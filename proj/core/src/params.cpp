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

#include "fastec/params.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "fastec/errors.hpp"

namespace fastec {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(Errc::kParse, "bad epsilon '" + std::string(whole) + "'");
  }
  return v;
}

std::uint64_t ceil_div(u128 a, u128 b) {
  const u128 r = (a + b - 1) / b;
  return r > kU64Max ? kU64Max : static_cast<std::uint64_t>(r);
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  const u128 r = static_cast<u128>(a) * b;
  return r > kU64Max ? kU64Max : static_cast<std::uint64_t>(r);
}

std::uint64_t theory_ell(std::uint64_t k_max) {
  std::uint64_t r = 6400;
  for (int i = 0; i < 4; ++i) r = sat_mul(r, k_max);
  return r;
}

}  // namespace

Epsilon Epsilon::parse(std::string_view text) {
  Epsilon e;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    e.num = parse_u64(text.substr(0, slash), text);
    e.den = parse_u64(text.substr(slash + 1), text);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18 || (whole.empty() && frac.empty())) {
      throw Error(Errc::kParse, "bad epsilon '" + std::string(text) + "'");
    }
    e.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) e.den *= 10;
    const std::uint64_t w = whole.empty() ? 0 : parse_u64(whole, text);
    const std::uint64_t f = parse_u64(frac, text);
    if (w > (kU64Max - f) / e.den) throw Error(Errc::kParse, "epsilon too large");
    e.num = w * e.den + f;
  } else {
    e.num = parse_u64(text, text);
    e.den = 1;
  }
  if (e.num == 0 || e.den == 0) {
    throw Error(Errc::kParse, "epsilon must be positive, got '" + std::string(text) + "'");
  }
  const std::uint64_t g = std::gcd(e.num, e.den);
  e.num /= g;
  e.den /= g;
  return e;
}

std::string Epsilon::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Mode parse_mode(std::string_view text) {
  if (text == "practical") return Mode::kPractical;
  if (text == "theory") return Mode::kTheory;
  throw Error(Errc::kParse, "unknown mode '" + std::string(text) + "'");
}

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::kTheory ? "theory" : "practical";
}

Params derive_params(std::uint32_t delta, Epsilon epsilon, const ParamOverrides& overrides,
                     Mode mode, std::uint64_t seed) {
  if (epsilon.num == 0 || epsilon.den == 0) {
    throw Error(Errc::kPreconditionViolated, "epsilon must be positive");
  }
  Params p;
  p.epsilon = epsilon;
  p.seed = seed;
  p.mode = mode;

  const std::uint64_t slack =
      static_cast<std::uint64_t>(static_cast<u128>(epsilon.num) * delta / epsilon.den);
  if (delta <= 1) {
    p.q = delta + 1;
  } else {
    if (slack < 1) {
      throw Error(Errc::kEpsilonTooSmall, "floor(epsilon * delta) = 0 for epsilon=" +
                                              epsilon.to_string() + " delta=" + std::to_string(delta));
    }
    const std::uint64_t q = delta + slack;
    if (q >= kBlank + std::numeric_limits<Color>::max()) {
      throw Error(Errc::kInvalidOverride, "palette size overflows the color type");
    }
    p.q = static_cast<Color>(q);
  }

  const std::uint64_t k_floor = ceil_div(16 * static_cast<u128>(epsilon.den), epsilon.num);
  const std::uint64_t inv_sq = ceil_div(static_cast<u128>(epsilon.den) * epsilon.den,
                                        static_cast<u128>(epsilon.num) * epsilon.num);
  p.k_max = overrides.k_max.value_or(std::max<std::uint64_t>(8, k_floor));
  if (overrides.ell) {
    p.ell = *overrides.ell;
  } else {
    p.ell = mode == Mode::kTheory ? theory_ell(p.k_max) : std::max<std::uint64_t>(4, inv_sq);
  }

  if (p.k_max < 2) throw Error(Errc::kInvalidOverride, "k_max must be at least 2");
  if (p.ell < 3) throw Error(Errc::kInvalidOverride, "ell must be at least 3");
  if (mode == Mode::kTheory) {
    if (p.k_max < k_floor) {
      throw Error(Errc::kInvalidOverride,
                  "theory mode needs k_max >= " + std::to_string(k_floor));
    }
    if (p.ell < theory_ell(p.k_max)) {
      throw Error(Errc::kInvalidOverride,
                  "theory mode needs ell >= 6400 * k_max^4 = " + std::to_string(theory_ell(p.k_max)));
    }
  }
  // 2 * ell must fit a size_t walk cap.
  if (p.ell > std::numeric_limits<std::size_t>::max() / 4) {
    p.ell = std::numeric_limits<std::size_t>::max() / 4;
  }
  return p;
}

}  // namespace fastec
