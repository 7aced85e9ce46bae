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

#ifndef FASTEC_EDGE_LIST_IO_HPP_
#define FASTEC_EDGE_LIST_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "fastec/graph.hpp"

namespace fastec {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v      (exactly m lines, 0-based ids, one space)
//
// Errors carry the 1-based input line in Error::index().
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

// Writes "n m" then one "u v" line per edge in edge-id order with u < v.
// No comments, no trailing whitespace, final newline.
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list(const std::filesystem::path& path, const Graph& g);

}  // namespace fastec

#endif  // FASTEC_EDGE_LIST_IO_HPP_
