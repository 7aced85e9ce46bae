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

#ifndef FASTEC_MEMORY_HPP_
#define FASTEC_MEMORY_HPP_

#include <cstddef>
#include <new>
#include <vector>

namespace fastec {

namespace detail {
void* huge_allocate(std::size_t bytes);
void huge_deallocate(void* p, std::size_t bytes) noexcept;
inline constexpr std::size_t kHugeThreshold = std::size_t{1} << 21;
}  // namespace detail

// Large blocks are 2 MiB aligned and advised for transparent huge pages.
// The per-vertex and per-edge arrays are read at random positions, so on
// big graphs TLB misses otherwise dominate.
template <typename T>
struct HugePageAllocator {
  using value_type = T;

  HugePageAllocator() noexcept = default;
  template <typename U>
  HugePageAllocator(const HugePageAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    const std::size_t bytes = n * sizeof(T);
    if (bytes < detail::kHugeThreshold) return std::allocator<T>{}.allocate(n);
    return static_cast<T*>(detail::huge_allocate(bytes));
  }

  void deallocate(T* p, std::size_t n) noexcept {
    const std::size_t bytes = n * sizeof(T);
    if (bytes < detail::kHugeThreshold) {
      std::allocator<T>{}.deallocate(p, n);
      return;
    }
    detail::huge_deallocate(p, bytes);
  }

  template <typename U>
  bool operator==(const HugePageAllocator<U>&) const noexcept {
    return true;
  }
};

template <typename T>
using BigVector = std::vector<T, HugePageAllocator<T>>;

}  // namespace fastec

#endif  // FASTEC_MEMORY_HPP_
