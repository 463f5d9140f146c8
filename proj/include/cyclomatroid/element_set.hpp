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

#ifndef CYCLOMATROID_ELEMENT_SET_HPP_
#define CYCLOMATROID_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace cyclomatroid {

/// A subset of a matroid's ground set {0, ..., universe-1}, stored as a
/// bitmask. Ordering is lexicographic on the sorted index sequences, which is
/// the canonical order used for every enumeration and tie-break.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64) {}
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> items)
      : ElementSet(universe) {
    for (std::size_t i : items) Insert(i);
  }

  static ElementSet Full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.Insert(i);
    return s;
  }
  static ElementSet Of(std::size_t universe, const std::vector<std::size_t>& items) {
    ElementSet s(universe);
    for (std::size_t i : items) s.Insert(i);
    return s;
  }

  std::size_t universe() const { return universe_; }

  void Insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void Erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool Contains(std::size_t i) const {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1) != 0;
  }

  ElementSet With(std::size_t i) const {
    ElementSet s = *this;
    s.Insert(i);
    return s;
  }

  std::size_t Count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }
  bool Empty() const {
    for (std::uint64_t w : words_)
      if (w != 0) return false;
    return true;
  }

  bool IsSubsetOf(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  // Smallest member, or universe() when empty.
  std::size_t First() const { return NextFrom(0); }
  // Smallest member >= i, or universe() when there is none.
  std::size_t NextFrom(std::size_t i) const {
    if (i >= universe_) return universe_;
    std::size_t w = i >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (bits != 0) return (w << 6) + std::countr_zero(bits);
      if (++w >= words_.size()) return universe_;
      bits = words_[w];
    }
  }

  std::vector<std::size_t> Indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = First(); i < universe_; i = NextFrom(i + 1)) out.push_back(i);
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    std::size_t i = a.First();
    std::size_t j = b.First();
    while (i < a.universe_ && j < b.universe_) {
      if (i != j) return i < j;
      i = a.NextFrom(i + 1);
      j = b.NextFrom(j + 1);
    }
    return i >= a.universe_ && j < b.universe_;
  }

  std::size_t Hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (std::uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.Hash(); }
};

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_ELEMENT_SET_HPP_
