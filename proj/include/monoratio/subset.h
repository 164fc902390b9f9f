// Copyright 2026 The Authors.
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

#ifndef MONORATIO_SUBSET_H_
#define MONORATIO_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monoratio {

// Membership bitset over a ground set of ids 0..n-1. Ground sets of up to 64
// elements live in a single inline word, so the exhaustive routines can move
// between Subset and raw masks for free; larger ground sets spill to the heap.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n);
  Subset(int n, std::initializer_list<int> ids);

  static Subset FromMask(int n, uint64_t mask);
  static Subset FromIds(int n, std::span<const int> ids);
  static Subset Full(int n);

  int universe_size() const { return n_; }

  // Ids outside the universe are never contained.
  bool Contains(int u) const {
    if (static_cast<unsigned>(u) >= static_cast<unsigned>(n_)) return false;
    return (word(u >> 6) >> (u & 63)) & 1u;
  }
  void Insert(int u);
  void Erase(int u);
  Subset With(int u) const;
  Subset Without(int u) const;

  int Count() const;
  bool Empty() const { return Count() == 0; }

  // Only valid for universe_size() <= 64.
  uint64_t mask() const;

  std::vector<int> Elements() const;

  bool IsSubsetOf(const Subset& other) const;
  Subset Union(const Subset& other) const;
  Subset Intersection(const Subset& other) const;
  Subset Difference(const Subset& other) const;

  // Re-indexes into a universe of size `n`. Elements >= n are dropped.
  Subset Resized(int n) const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    const int words = num_words();
    for (int w = 0; w < words; ++w) {
      uint64_t bits = word(w);
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  // "{0,2,5}".
  std::string ToString() const;

  friend bool operator==(const Subset& a, const Subset& b);

 private:
  int num_words() const { return (n_ + 63) / 64; }
  bool inline_storage() const { return n_ <= 64; }
  uint64_t word(int w) const { return inline_storage() ? inline_ : heap_[w]; }
  uint64_t& word_ref(int w) { return inline_storage() ? inline_ : heap_[w]; }
  void CheckId(int u) const;
  void CheckSameUniverse(const Subset& other) const;

  int n_ = 0;
  uint64_t inline_ = 0;
  std::vector<uint64_t> heap_;
};

}  // namespace monoratio

#endif  // MONORATIO_SUBSET_H_
