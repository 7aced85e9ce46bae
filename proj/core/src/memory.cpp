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

#include "fastec/memory.hpp"

#include <cstdlib>

#if defined(__linux__)
#include <sys/mman.h>
#endif

namespace fastec::detail {

void* huge_allocate(std::size_t bytes) {
  const std::size_t rounded = (bytes + kHugeThreshold - 1) & ~(kHugeThreshold - 1);
  void* p = std::aligned_alloc(kHugeThreshold, rounded);
  if (p == nullptr) throw std::bad_alloc();
#if defined(__linux__) && defined(MADV_HUGEPAGE)
  madvise(p, rounded, MADV_HUGEPAGE);  // advisory; failure is harmless
#endif
  return p;
}

void huge_deallocate(void* p, std::size_t) noexcept { std::free(p); }

}  // namespace fastec::detail
