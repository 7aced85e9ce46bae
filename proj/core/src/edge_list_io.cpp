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

#include "fastec/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fastec/errors.hpp"

namespace fastec {

namespace {

// Parses exactly two unsigned integers separated by one space.
bool parse_two(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  const char* first = line.data();
  const char* last = line.data() + line.size();
  auto r1 = std::from_chars(first, last, a);
  if (r1.ec != std::errc{} || r1.ptr == last || *r1.ptr != ' ') return false;
  auto r2 = std::from_chars(r1.ptr + 1, last, b);
  return r2.ec == std::errc{} && r2.ptr == last;
}

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<EdgePair> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim_cr(raw);
    if (line.empty() || line.front() == '#') continue;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_two(line, a, b)) {
      throw Error(Errc::kParse,
                  "line " + std::to_string(line_no) + ": expected two integers, got '" +
                      std::string(line) + "'",
                  line_no);
    }
    if (!have_header) {
      if (a >= kNoVertex || b >= kNoEdge) {
        throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": vertex or edge count too large",
                    line_no);
      }
      n = a;
      m = b;
      have_header = true;
      edges.reserve(std::min<std::uint64_t>(m, 1u << 24));
      edge_lines.reserve(std::min<std::uint64_t>(m, 1u << 24));
      continue;
    }
    if (edges.size() == m) {
      throw Error(Errc::kParse,
                  "line " + std::to_string(line_no) + ": more than " + std::to_string(m) +
                      " edge lines",
                  line_no);
    }
    if (a >= n || b >= n) {
      throw Error(Errc::kVertexOutOfRange,
                  "line " + std::to_string(line_no) + ": pair (" + std::to_string(a) + "," +
                      std::to_string(b) + ") outside 0.." + std::to_string(n == 0 ? 0 : n - 1),
                  line_no);
    }
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    edge_lines.push_back(line_no);
  }
  if (!have_header) throw Error(Errc::kParse, "missing 'n m' header line", line_no);
  if (edges.size() != m) {
    throw Error(Errc::kParse,
                "header declares " + std::to_string(m) + " edges but found " +
                    std::to_string(edges.size()),
                line_no);
  }
  try {
    return Graph::build(n, edges);
  } catch (const Error& err) {
    if (!err.index()) throw;
    const std::size_t at = edge_lines[*err.index()];
    const auto [u, v] = edges[*err.index()];
    throw Error(err.code(),
                "line " + std::to_string(at) + ": pair (" + std::to_string(u) + "," +
                    std::to_string(v) + ")",
                at);
  }
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open " + path.string());
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::string buf;
  buf.reserve(32 + g.num_edges() * 16);
  buf += std::to_string(g.num_vertices());
  buf += ' ';
  buf += std::to_string(g.num_edges());
  buf += '\n';
  for (const auto& [u, v] : g.edges()) {
    buf += std::to_string(u);
    buf += ' ';
    buf += std::to_string(v);
    buf += '\n';
  }
  out << buf;
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kParse, "cannot write " + path.string());
  write_edge_list(out, g);
}

}  // namespace fastec
