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

#ifndef SNC_VERTEX_SET_H_
#define SNC_VERTEX_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace snc {

using VertexId = std::uint32_t;

// Dense bitset over the vertex universe [0, universe). All binary operations
// require equal universes.
class VertexSet {
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    Iterator() = default;
    Iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {
      Seek();
    }

    VertexId operator*() const { return static_cast<VertexId>(pos_); }
    Iterator& operator++() {
      ++pos_;
      Seek();
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& o) const { return pos_ == o.pos_; }

   private:
    void Seek() {
      const std::size_t n = set_->universe_;
      while (pos_ < n) {
        Word w = set_->words_[pos_ / kBits] >> (pos_ % kBits);
        if (w != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(w));
          return;
        }
        pos_ = (pos_ / kBits + 1) * kBits;
      }
      pos_ = n;
    }

    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
      : VertexSet(universe) {
    for (VertexId v : members) insert(v);
  }

  static VertexSet Full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<VertexId>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(VertexId v) { words_[v / kBits] |= Word{1} << (v % kBits); }
  void erase(VertexId v) { words_[v / kBits] &= ~(Word{1} << (v % kBits)); }
  bool contains(VertexId v) const {
    return v < universe_ && ((words_[v / kBits] >> (v % kBits)) & 1U) != 0;
  }

  std::size_t size() const {
    std::size_t count = 0;
    for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
    return count;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const = default;

  Iterator begin() const { return Iterator(this, 0); }
  Iterator end() const { return Iterator(this, universe_); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace snc

#endif  // SNC_VERTEX_SET_H_
