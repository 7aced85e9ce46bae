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

#include "fastec/coloring_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "fastec/errors.hpp"

namespace fastec {

namespace {

[[noreturn]] void parse_error(std::size_t line_no, const std::string& why) {
  throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": " + why, line_no);
}

bool parse_uints(std::string_view line, std::uint64_t* out, int count) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (int i = 0; i < count; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') return false;
      ++p;
    }
    auto r = std::from_chars(p, end, out[i]);
    if (r.ec != std::errc{}) return false;
    p = r.ptr;
  }
  return p == end;
}

}  // namespace

void write_coloring(std::ostream& out, const Graph& g, std::span<const Color> colors, Color q) {
  std::string buf;
  buf.reserve(16 + g.num_edges() * 20);
  buf += "# q=";
  buf += std::to_string(q);
  buf += '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    buf += std::to_string(u);
    buf += ' ';
    buf += std::to_string(v);
    buf += ' ';
    buf += std::to_string(e < colors.size() ? colors[e] : kBlank);
    buf += '\n';
  }
  out << buf;
}

void save_coloring(const std::filesystem::path& path, const Graph& g,
                   std::span<const Color> colors, Color q) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kParse, "cannot write " + path.string());
  write_coloring(out, g, colors, q);
}

LoadedColoring read_coloring(std::istream& in, const Graph& g) {
  LoadedColoring result;
  result.colors.assign(g.num_edges(), kBlank);
  std::vector<bool> seen(g.num_edges(), false);
  std::unordered_map<std::uint64_t, EdgeId> index;
  index.reserve(g.num_edges() * 2);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    index.emplace((std::uint64_t{u} << 32) | v, e);
  }

  std::string raw;
  std::size_t line_no = 0;
  bool have_q = false;
  std::size_t assigned = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kPrefix = "# q=";
      if (line.starts_with(kPrefix)) {
        std::uint64_t q = 0;
        if (!parse_uints(line.substr(kPrefix.size()), &q, 1) || q >= kNoVertex) {
          parse_error(line_no, "malformed q header");
        }
        result.q = static_cast<Color>(q);
        have_q = true;
      }
      continue;
    }
    std::uint64_t f[3];
    if (!parse_uints(line, f, 3)) parse_error(line_no, "expected 'u v c'");
    if (f[0] > f[1]) std::swap(f[0], f[1]);
    if (f[1] >= kNoVertex || f[2] >= kNoVertex) parse_error(line_no, "value out of range");
    const auto it = index.find((f[0] << 32) | f[1]);
    if (it == index.end()) {
      parse_error(line_no, "(" + std::to_string(f[0]) + "," + std::to_string(f[1]) +
                               ") is not an edge of the graph");
    }
    if (seen[it->second]) parse_error(line_no, "edge listed twice");
    seen[it->second] = true;
    result.colors[it->second] = static_cast<Color>(f[2]);
    ++assigned;
  }
  if (!have_q) parse_error(line_no, "missing '# q=<q>' header");
  if (assigned != g.num_edges()) {
    parse_error(line_no, "coloring lists " + std::to_string(assigned) + " of " +
                             std::to_string(g.num_edges()) + " edges");
  }
  return result;
}

LoadedColoring load_coloring(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open " + path.string());
  return read_coloring(in, g);
}

}  // namespace fastec
