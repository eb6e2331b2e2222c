// Copyright 2026 The snc Authors
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

#include "snc/io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "snc/errors.h"

namespace snc {
namespace {

std::vector<std::string_view> Tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t ParseCount(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw InputError("line " + std::to_string(line_no) +
                     ": expected a nonnegative integer, got '" +
                     std::string(tok) + "'");
  return value;
}

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

OrientedGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Arc> arcs;
  std::vector<std::size_t> arc_line;

  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = Tokens(line);
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw InputError("line " + std::to_string(line_no) +
                       ": expected two integers");
    const std::uint64_t x = ParseCount(toks[0], line_no);
    const std::uint64_t y = ParseCount(toks[1], line_no);
    if (!have_header) {
      if (x > std::numeric_limits<VertexId>::max())
        throw InputError("line " + std::to_string(line_no) +
                         ": vertex count too large");
      n = x;
      m = y;
      have_header = true;
      continue;
    }
    if (arcs.size() == m)
      throw InputError("line " + std::to_string(line_no) + ": more than " +
                       std::to_string(m) + " arcs");
    if (x >= n || y >= n)
      throw InputError("line " + std::to_string(line_no) + ": arc " +
                       std::to_string(x) + "->" + std::to_string(y) +
                       " has an endpoint outside [0, " + std::to_string(n) +
                       ")");
    arcs.push_back({static_cast<VertexId>(x), static_cast<VertexId>(y)});
    arc_line.push_back(line_no);
  }
  if (!have_header) throw InputError("line 1: missing 'n m' header");
  if (arcs.size() != m)
    throw InputError("header declares " + std::to_string(m) +
                     " arcs but found " + std::to_string(arcs.size()));

  // Arcs are validated one at a time so the error names the offending line.
  OrientedGraph g(n);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    try {
      g = g.with_arcs_added(std::span<const Arc>(&arcs[i], 1));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(arc_line[i]) + ": " + e.what());
    }
  }
  return g;
}

OrientedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

OrientedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return parse_edge_list(in);
}

std::string format_edge_list(const OrientedGraph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.arc_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.from << ' ' << a.to << '\n';
  return out.str();
}

LabelTable::LabelTable(std::vector<std::string> names)
    : names_(std::move(names)) {}

LabelTable LabelTable::Parse(std::istream& in) {
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    const auto toks = Tokens(line);
    if (toks.empty()) continue;
    names.emplace_back(toks.front());
  }
  return LabelTable(std::move(names));
}

LabelTable LabelTable::ReadFile(const std::string& path) {
  std::ifstream in = OpenOrThrow(path);
  return Parse(in);
}

std::string LabelTable::name(VertexId v) const {
  return v < names_.size() ? names_[v] : std::to_string(v);
}

VertexId LabelTable::index_of(std::string_view name) const {
  for (VertexId i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw InputError("unknown vertex label '" + std::string(name) + "'");
}

std::string format_vertex_set(const VertexSet& s, const LabelTable& labels) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ',';
    out += labels.name(v);
    first = false;
  }
  return out + "}";
}

std::string format_sequence(const std::vector<VertexId>& seq,
                            const LabelTable& labels) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ' ';
    out += labels.name(seq[i]);
  }
  return out;
}

std::vector<VertexId> parse_sequence(std::string_view text) {
  std::vector<VertexId> seq;
  for (std::string_view tok : Tokens(text))
    seq.push_back(static_cast<VertexId>(ParseCount(tok, 1)));
  return seq;
}

PartitionSpec parse_partition(std::istream& in, std::size_t n) {
  PartitionSpec p{VertexSet(n), VertexSet(n)};
  bool seen_a = false;
  bool seen_b = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = Tokens(line);
    if (toks.empty()) continue;
    VertexSet* target = nullptr;
    if (toks[0] == "A:") {
      target = &p.a_set;
      seen_a = true;
    } else if (toks[0] == "B:") {
      target = &p.b_set;
      seen_b = true;
    } else {
      throw InputError("line " + std::to_string(line_no) +
                       ": expected 'A:' or 'B:'");
    }
    for (std::size_t i = 1; i < toks.size(); ++i) {
      const std::uint64_t v = ParseCount(toks[i], line_no);
      if (v >= n)
        throw InputError("line " + std::to_string(line_no) + ": vertex " +
                         std::to_string(v) + " out of range");
      target->insert(static_cast<VertexId>(v));
    }
  }
  if (!seen_a || !seen_b)
    throw InputError("partition needs both an 'A:' and a 'B:' line");
  return p;
}

PartitionSpec read_partition_file(const std::string& path, std::size_t n) {
  std::ifstream in = OpenOrThrow(path);
  return parse_partition(in, n);
}

std::string format_partition(const PartitionSpec& p) {
  std::string out = "A:";
  for (VertexId v : p.a_set) out += ' ' + std::to_string(v);
  out += "\nB:";
  for (VertexId v : p.b_set) out += ' ' + std::to_string(v);
  return out + '\n';
}

std::string format_dot(const OrientedGraph& g, const LabelTable& labels) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (VertexId v = 0; v < g.size(); ++v)
    out << "  " << v << " [label=\"" << labels.name(v) << "\"];\n";
  for (const Arc& a : g.arcs()) out << "  " << a.from << " -> " << a.to << ";\n";
  for (const MissingEdge& e : missing_edges(g))
    out << "  " << e.lo << " -> " << e.hi
        << " [style=dashed, dir=none, color=gray];\n";
  out << "}\n";
  return out.str();
}

}  // namespace snc
