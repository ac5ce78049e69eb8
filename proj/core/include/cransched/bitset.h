// Copyright 2026 The cransched Authors
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

#ifndef CRANSCHED_BITSET_H_
#define CRANSCHED_BITSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cran {

// Fixed-size bitset with word access, used for vertex sets.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int size)
      : size_(size), words_((static_cast<std::size_t>(size) + 63) / 64, 0) {}

  static VertexSet Full(int size) {
    VertexSet s(size);
    for (int i = 0; i < size; ++i) s.Set(i);
    return s;
  }

  int size() const { return size_; }

  bool Test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void Set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void Reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int Count() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  bool None() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  VertexSet& operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  // this &= ~other
  VertexSet& Subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      words_[i] &= ~other.words_[i];
    }
    return *this;
  }

  bool Intersects(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & other.words_[i]) return true;
    }
    return false;
  }

  // Calls f(i) for every set bit in ascending order.
  template <typename F>
  void ForEach(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<int>(w * 64) + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> ToVector() const {
    std::vector<int> out;
    ForEach([&out](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline VertexSet operator&(VertexSet a, const VertexSet& b) {
  a &= b;
  return a;
}

}  // namespace cran

#endif  // CRANSCHED_BITSET_H_
