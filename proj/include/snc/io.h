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

// Text formats.
//
// Edge list:
//   n m
//   u v        (m lines, arc u->v, 0-indexed)
// Whitespace-separated; everything after '#' on a line is ignored.
//
// Labels: one name per line, line i naming vertex i.
//
// Partition: two lines `A: i j k ...` and `B: ...`.

#ifndef SNC_IO_H_
#define SNC_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snc/graph.h"

namespace snc {

// Throws InputError with a 1-based line number on malformed input, loops,
// digons and out-of-range endpoints.
OrientedGraph parse_edge_list(std::istream& in);
OrientedGraph parse_edge_list(std::string_view text);
OrientedGraph read_edge_list_file(const std::string& path);

// Canonical form: header, then arcs in lexicographic order.
std::string format_edge_list(const OrientedGraph& g);

// Maps dense indices to names at the I/O boundary. Unnamed vertices print
// as their index.
class LabelTable {
 public:
  LabelTable() = default;
  explicit LabelTable(std::vector<std::string> names);

  static LabelTable Parse(std::istream& in);
  static LabelTable ReadFile(const std::string& path);

  std::string name(VertexId v) const;
  std::size_t size() const { return names_.size(); }
  // Index of `name`, or throws InputError.
  VertexId index_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

std::string format_vertex_set(const VertexSet& s, const LabelTable& labels);
std::string format_sequence(const std::vector<VertexId>& seq,
                            const LabelTable& labels);

// Whitespace-separated indices on one line.
std::vector<VertexId> parse_sequence(std::string_view text);

struct PartitionSpec {
  VertexSet a_set;
  VertexSet b_set;
};
PartitionSpec parse_partition(std::istream& in, std::size_t n);
PartitionSpec read_partition_file(const std::string& path, std::size_t n);
std::string format_partition(const PartitionSpec& p);

// Graphviz rendering for external viewers.
std::string format_dot(const OrientedGraph& g, const LabelTable& labels);

}  // namespace snc

#endif  // SNC_IO_H_
