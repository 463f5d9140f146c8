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

#ifndef CYCLOMATROID_MATROID_HPP_
#define CYCLOMATROID_MATROID_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclomatroid/element_set.hpp"
#include "cyclomatroid/errors.hpp"
#include "cyclomatroid/representation.hpp"

namespace cyclomatroid {

struct Flat {
  ElementSet elements;
  int rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
  friend bool operator<(const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.elements < b.elements;
  }
};

// Counts closure computations against a limit. One budget is threaded
// through a whole search so partial statistics survive an abort.
class WorkBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit WorkBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void ChargeClosure() {
    if (++closures_ > limit_) throw BudgetExceeded(closures_ - 1, flats_);
  }
  void CountFlats(std::uint64_t n) { flats_ += n; }

  std::uint64_t limit() const { return limit_; }
  std::uint64_t closures() const { return closures_; }
  std::uint64_t flats_enumerated() const { return flats_; }

 private:
  std::uint64_t limit_;
  std::uint64_t closures_ = 0;
  std::uint64_t flats_ = 0;
};

struct MatroidStats {
  std::atomic<std::uint64_t> rank_calls{0};
  std::atomic<std::uint64_t> eliminations{0};
};

struct Simplification;

/// A matroid given by a representation or as a minor (M|X)/C of one.
///
/// Elements are addressed by their position in ground(); positions are local
/// to each minor, labels are global. Minors keep a pointer to the root
/// representation and evaluate r_{(M|X)/C}(Y) = r_M(Y u C) - r_M(C) through
/// the root's memo, so no projected matrix is ever formed.
///
/// Copies share state. The rank memo is guarded by a mutex and may be queried
/// from several threads at once.
class Matroid {
 public:
  explicit Matroid(Representation rep);
  ~Matroid();
  Matroid(const Matroid&);
  Matroid& operator=(const Matroid&);
  Matroid(Matroid&&) noexcept;
  Matroid& operator=(Matroid&&) noexcept;

  std::size_t size() const;
  const std::vector<std::string>& labels() const;
  const std::string& label(std::size_t i) const { return labels()[i]; }
  // Throws UsageError for an unknown label.
  std::size_t IndexOf(std::string_view label) const;
  ElementSet Elements(std::span<const std::string> labels) const;
  std::vector<std::string> LabelsOf(const ElementSet& s) const;
  // "{a,b,c}"
  std::string Format(const ElementSet& s) const;

  ElementSet EmptySet() const { return ElementSet(size()); }
  ElementSet Ground() const { return ElementSet::Full(size()); }

  int Rank(const ElementSet& x) const;
  int Rank() const { return Rank(Ground()); }
  bool IsIndependent(const ElementSet& x) const {
    return Rank(x) == static_cast<int>(x.Count());
  }
  Flat Closure(const ElementSet& x, WorkBudget* budget = nullptr) const;
  bool IsFlat(const ElementSet& x) const;
  // Lexicographically first basis of x (greedy in ground order).
  ElementSet GreedyBasis(const ElementSet& x) const;

  bool IsLoop(std::size_t e) const;
  bool AreParallel(std::size_t e, std::size_t f) const;
  bool IsSimple() const;
  Simplification Simplify() const;
  // Parallel class of a non-loop element.
  ElementSet ParallelClass(std::size_t e) const;

  // Every rank-k flat exactly once, in canonical order. Built from closures of
  // independent k-subsets grown in ground order; each closure is charged to
  // `budget` when one is given.
  std::vector<Flat> FlatsOfRank(int k, WorkBudget* budget = nullptr) const;

  Matroid Restrict(const ElementSet& x) const;
  // Throws NotAFlatError unless c is a flat of this matroid.
  Matroid Contract(const Flat& c) const;

  // Re-expresses a subset of another matroid over the same root (for instance
  // a minor of this one) in this matroid's positions. Throws UsageError when
  // some element is absent here.
  ElementSet Import(const Matroid& other, const ElementSet& s) const;

  // Materializes this matroid as a representation of its own.
  Representation Project() const;

  const Representation& root_representation() const;
  // Root column of each element.
  const std::vector<std::size_t>& root_columns() const;
  const MatroidStats& stats() const;

 private:
  struct Impl;
  explicit Matroid(std::shared_ptr<Impl> impl);
  std::shared_ptr<Impl> impl_;
};

struct Simplification {
  // The restriction to one representative per parallel class; representatives
  // are the first member of each class in ground order.
  Matroid simple;
  // For each element of the original matroid, the index in `simple` of its
  // representative, or nullopt for loops.
  std::vector<std::optional<std::size_t>> class_of;

  // Union of the parallel classes of the given elements of `simple`.
  ElementSet Lift(const ElementSet& in_simple) const;
};

// F = F1 u F2 and r(F) = r(F1) + r(F2).
bool IsDirectSum(const Matroid& m, const Flat& f, const Flat& f1, const Flat& f2);

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_MATROID_HPP_
