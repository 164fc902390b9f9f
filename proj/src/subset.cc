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

#include "monoratio/subset.h"

#include <sstream>

#include "monoratio/errors.h"

namespace monoratio {

Subset::Subset(int n) : n_(n) {
  if (n < 0) throw PreconditionError("Subset: negative universe size");
  if (!inline_storage()) heap_.assign(num_words(), 0);
}

Subset::Subset(int n, std::initializer_list<int> ids) : Subset(n) {
  for (int u : ids) Insert(u);
}

Subset Subset::FromMask(int n, uint64_t mask) {
  if (n > 64) throw PreconditionError("Subset::FromMask: n > 64");
  Subset s(n);
  if (n < 64 && (mask >> n) != 0) {
    throw PreconditionError("Subset::FromMask: mask has bits >= n");
  }
  s.inline_ = mask;
  return s;
}

Subset Subset::FromIds(int n, std::span<const int> ids) {
  Subset s(n);
  for (int u : ids) s.Insert(u);
  return s;
}

Subset Subset::Full(int n) {
  Subset s(n);
  const int words = s.num_words();
  for (int w = 0; w < words; ++w) {
    const int bits = (w == words - 1 && n % 64 != 0) ? n % 64 : 64;
    s.word_ref(w) = bits == 64 ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
  }
  return s;
}

void Subset::CheckId(int u) const {
  if (u < 0 || u >= n_) {
    throw PreconditionError("Subset: element id " + std::to_string(u) +
                            " outside ground set of size " +
                            std::to_string(n_));
  }
}

void Subset::CheckSameUniverse(const Subset& other) const {
  if (other.n_ != n_) {
    throw PreconditionError("Subset: mismatched universe sizes");
  }
}

void Subset::Insert(int u) {
  CheckId(u);
  word_ref(u >> 6) |= uint64_t{1} << (u & 63);
}

void Subset::Erase(int u) {
  CheckId(u);
  word_ref(u >> 6) &= ~(uint64_t{1} << (u & 63));
}

Subset Subset::With(int u) const {
  Subset s = *this;
  s.Insert(u);
  return s;
}

Subset Subset::Without(int u) const {
  Subset s = *this;
  s.Erase(u);
  return s;
}

int Subset::Count() const {
  int c = 0;
  for (int w = 0; w < num_words(); ++w) c += std::popcount(word(w));
  return c;
}

uint64_t Subset::mask() const {
  if (!inline_storage()) throw PreconditionError("Subset::mask: n > 64");
  return inline_;
}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(Count());
  ForEach([&](int u) { out.push_back(u); });
  return out;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  CheckSameUniverse(other);
  for (int w = 0; w < num_words(); ++w) {
    if ((word(w) & ~other.word(w)) != 0) return false;
  }
  return true;
}

Subset Subset::Union(const Subset& other) const {
  CheckSameUniverse(other);
  Subset s = *this;
  for (int w = 0; w < num_words(); ++w) s.word_ref(w) |= other.word(w);
  return s;
}

Subset Subset::Intersection(const Subset& other) const {
  CheckSameUniverse(other);
  Subset s = *this;
  for (int w = 0; w < num_words(); ++w) s.word_ref(w) &= other.word(w);
  return s;
}

Subset Subset::Difference(const Subset& other) const {
  CheckSameUniverse(other);
  Subset s = *this;
  for (int w = 0; w < num_words(); ++w) s.word_ref(w) &= ~other.word(w);
  return s;
}

Subset Subset::Resized(int n) const {
  Subset s(n);
  ForEach([&](int u) {
    if (u < n) s.Insert(u);
  });
  return s;
}

std::string Subset::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  ForEach([&](int u) {
    if (!first) os << ',';
    os << u;
    first = false;
  });
  os << '}';
  return os.str();
}

bool operator==(const Subset& a, const Subset& b) {
  if (a.n_ != b.n_) return false;
  for (int w = 0; w < a.num_words(); ++w) {
    if (a.word(w) != b.word(w)) return false;
  }
  return true;
}

}  // namespace monoratio
