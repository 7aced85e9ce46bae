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

#ifndef FASTEC_COLORING_IO_HPP_
#define FASTEC_COLORING_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "fastec/graph.hpp"
#include "fastec/types.hpp"

namespace fastec {

// Coloring file:
//
//   # q=<q>
//   u v c      (one line per edge in edge-id order, u < v, c in 1..q)
//
// Blank edges are written with c = 0 so partial colorings stay readable.
void write_coloring(std::ostream& out, const Graph& g, std::span<const Color> colors, Color q);
void save_coloring(const std::filesystem::path& path, const Graph& g,
                   std::span<const Color> colors, Color q);

struct LoadedColoring {
  Color q = 0;
  std::vector<Color> colors;  // indexed by edge id of the graph
};

// Lines may appear in any order but every graph edge must appear exactly
// once. Throws Error{kParse} with the 1-based line number.
LoadedColoring read_coloring(std::istream& in, const Graph& g);
LoadedColoring load_coloring(const std::filesystem::path& path, const Graph& g);

}  // namespace fastec

#endif  // FASTEC_COLORING_IO_HPP_
