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

#ifndef FASTEC_ERRORS_HPP_
#define FASTEC_ERRORS_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fastec {

enum class Errc {
  kParse,
  kSelfLoop,
  kDuplicateEdge,
  kVertexOutOfRange,
  kInfeasible,
  kQTooSmall,
  kNotShiftable,
  kInvalidFinalColor,
  kBadStart,
  kBoundaryMismatch,
  kPreconditionViolated,
  kEpsilonTooSmall,
  kInvalidOverride,
  kInternal,
};

std::string_view errc_name(Errc code);

// Single exception type for the library. `code()` distinguishes user errors
// (bad input, bad parameters) from kInternal, which always means a bug.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        index_(index) {}

  Errc code() const noexcept { return code_; }

  // Position of the offending item (edge index, input line) when known.
  std::optional<std::size_t> index() const noexcept { return index_; }

  bool is_internal() const noexcept { return code_ == Errc::kInternal; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace fastec

#endif  // FASTEC_ERRORS_HPP_
