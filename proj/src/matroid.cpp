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

#include "cyclomatroid/matroid.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "cyclomatroid/errors.hpp"

namespace cyclomatroid {

namespace {
constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
}  // namespace

struct Matroid::Impl {
  std::shared_ptr<const Representation> rep;
  // Null for a representation-backed matroid, which is its own root.
  std::shared_ptr<Impl> root;
  std::shared_ptr<MatroidStats> stats;
  std::vector<std::size_t> root_columns;
  // Inverse of root_columns, kAbsent for root columns outside the ground set.
  std::vector<std::size_t> local_of_root;
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  // Contracted flat, in root positions, and its root rank.
  ElementSet contracted;
  int contracted_rank = 0;

  mutable std::shared_mutex mutex;
  mutable std::unordered_map<ElementSet, int, ElementSetHash> cache;

  Impl(std::shared_ptr<const Representation> rep_in, std::shared_ptr<Impl> root_in,
       std::shared_ptr<MatroidStats> stats_in, std::vector<std::size_t> columns,
       ElementSet contracted_in, int contracted_rank_in)
      : rep(std::move(rep_in)),
        root(std::move(root_in)),
        stats(std::move(stats_in)),
        root_columns(std::move(columns)),
        local_of_root(rep->cols(), kAbsent),
        contracted(std::move(contracted_in)),
        contracted_rank(contracted_rank_in) {
    for (std::size_t i = 0; i < root_columns.size(); ++i) {
      local_of_root[root_columns[i]] = i;
      labels.push_back(rep->labels()[root_columns[i]]);
      index.emplace(labels.back(), i);
    }
  }

  int CachedRank(const ElementSet& x) {
    {
      std::shared_lock lock(mutex);
      if (auto it = cache.find(x); it != cache.end()) return it->second;
    }
    int r = ComputeRank(x);
    std::unique_lock lock(mutex);
    cache.emplace(x, r);
    return r;
  }

  int ComputeRank(const ElementSet& x) {
    if (!root) {
      stats->eliminations.fetch_add(1, std::memory_order_relaxed);
      std::vector<std::size_t> columns;
      for (std::size_t i = x.First(); i < x.universe(); i = x.NextFrom(i + 1)) {
        columns.push_back(root_columns[i]);
      }
      return static_cast<int>(ColumnRank(*rep, columns));
    }
    ElementSet in_root = contracted;
    for (std::size_t i = x.First(); i < x.universe(); i = x.NextFrom(i + 1)) {
      in_root.Insert(root_columns[i]);
    }
    return root->CachedRank(in_root) - contracted_rank;
  }

  std::shared_ptr<Impl> RootOf(const std::shared_ptr<Impl>& self) const {
    return root ? root : self;
  }
};

Matroid::Matroid(Representation rep) {
  auto shared = std::make_shared<const Representation>(std::move(rep));
  std::vector<std::size_t> columns(shared->cols());
  for (std::size_t i = 0; i < columns.size(); ++i) columns[i] = i;
  ElementSet none(shared->cols());
  impl_ = std::make_shared<Impl>(shared, nullptr, std::make_shared<MatroidStats>(),
                                 std::move(columns), std::move(none), 0);
}

Matroid::Matroid(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
Matroid::~Matroid() = default;
Matroid::Matroid(const Matroid&) = default;
Matroid& Matroid::operator=(const Matroid&) = default;
Matroid::Matroid(Matroid&&) noexcept = default;
Matroid& Matroid::operator=(Matroid&&) noexcept = default;

std::size_t Matroid::size() const { return impl_->root_columns.size(); }

const std::vector<std::string>& Matroid::labels() const { return impl_->labels; }

std::size_t Matroid::IndexOf(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) {
    throw UsageError("unknown element '" + std::string(label) + "'");
  }
  return it->second;
}

ElementSet Matroid::Elements(std::span<const std::string> labels) const {
  ElementSet s = EmptySet();
  for (const std::string& label : labels) s.Insert(IndexOf(label));
  return s;
}

std::vector<std::string> Matroid::LabelsOf(const ElementSet& s) const {
  std::vector<std::string> out;
  for (std::size_t i = s.First(); i < s.universe(); i = s.NextFrom(i + 1)) {
    out.push_back(impl_->labels.at(i));
  }
  return out;
}

std::string Matroid::Format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for (const std::string& label : LabelsOf(s)) {
    if (!first) out += ",";
    out += label;
    first = false;
  }
  return out + "}";
}

int Matroid::Rank(const ElementSet& x) const {
  if (x.universe() != size()) {
    throw UsageError("element set over " + std::to_string(x.universe()) +
                     " elements used with a matroid on " + std::to_string(size()));
  }
  impl_->stats->rank_calls.fetch_add(1, std::memory_order_relaxed);
  return impl_->CachedRank(x);
}

Flat Matroid::Closure(const ElementSet& x, WorkBudget* budget) const {
  if (budget) budget->ChargeClosure();
  const int r = Rank(x);
  ElementSet closure = x;
  for (std::size_t e = 0; e < size(); ++e) {
    if (x.Contains(e)) continue;
    if (Rank(x.With(e)) == r) closure.Insert(e);
  }
  return Flat{std::move(closure), r};
}

bool Matroid::IsFlat(const ElementSet& x) const {
  const int r = Rank(x);
  for (std::size_t e = 0; e < size(); ++e) {
    if (!x.Contains(e) && Rank(x.With(e)) == r) return false;
  }
  return true;
}

ElementSet Matroid::GreedyBasis(const ElementSet& x) const {
  ElementSet basis = EmptySet();
  int r = 0;
  for (std::size_t e = x.First(); e < x.universe(); e = x.NextFrom(e + 1)) {
    if (Rank(basis.With(e)) == r + 1) {
      basis.Insert(e);
      ++r;
    }
  }
  return basis;
}

bool Matroid::IsLoop(std::size_t e) const {
  return Rank(ElementSet(size(), {e})) == 0;
}

bool Matroid::AreParallel(std::size_t e, std::size_t f) const {
  if (IsLoop(e) || IsLoop(f)) return false;
  return e == f || Rank(ElementSet(size(), {e, f})) == 1;
}

bool Matroid::IsSimple() const {
  for (std::size_t e = 0; e < size(); ++e) {
    if (IsLoop(e)) return false;
  }
  for (std::size_t e = 0; e < size(); ++e) {
    for (std::size_t f = e + 1; f < size(); ++f) {
      if (AreParallel(e, f)) return false;
    }
  }
  return true;
}

ElementSet Matroid::ParallelClass(std::size_t e) const {
  ElementSet cls = EmptySet();
  if (IsLoop(e)) throw UsageError("loop '" + label(e) + "' has no parallel class");
  for (std::size_t f = 0; f < size(); ++f) {
    if (AreParallel(e, f)) cls.Insert(f);
  }
  return cls;
}

Simplification Matroid::Simplify() const {
  std::vector<std::optional<std::size_t>> class_of(size());
  std::vector<std::size_t> representatives;
  for (std::size_t e = 0; e < size(); ++e) {
    if (IsLoop(e)) continue;
    for (std::size_t k = 0; k < representatives.size(); ++k) {
      if (AreParallel(representatives[k], e)) {
        class_of[e] = k;
        break;
      }
    }
    if (!class_of[e]) {
      class_of[e] = representatives.size();
      representatives.push_back(e);
    }
  }
  return Simplification{Restrict(ElementSet::Of(size(), representatives)),
                        std::move(class_of)};
}

ElementSet Simplification::Lift(const ElementSet& in_simple) const {
  ElementSet out(class_of.size());
  for (std::size_t e = 0; e < class_of.size(); ++e) {
    if (class_of[e] && in_simple.Contains(*class_of[e])) out.Insert(e);
  }
  return out;
}

std::vector<Flat> Matroid::FlatsOfRank(int k, WorkBudget* budget) const {
  const int full_rank = Rank();
  if (k < 0 || k > full_rank) {
    throw UsageError("flat rank " + std::to_string(k) + " outside [0, " +
                     std::to_string(full_rank) + "]");
  }
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Flat> flats;
  const std::size_t n = size();

  // Depth-first over independent sets in ground order, pruning any extension
  // that does not raise the rank.
  auto grow = [&](auto&& self, const ElementSet& current, int rank,
                  std::size_t start) -> void {
    if (rank == k) {
      Flat flat = Closure(current, budget);
      if (seen.insert(flat.elements).second) {
        flats.push_back(std::move(flat));
        if (budget) budget->CountFlats(1);
      }
      return;
    }
    const std::size_t needed = static_cast<std::size_t>(k - rank);
    for (std::size_t e = start; e + needed <= n; ++e) {
      ElementSet next = current.With(e);
      if (Rank(next) == rank + 1) self(self, next, rank + 1, e + 1);
    }
  };
  grow(grow, EmptySet(), 0, 0);
  std::sort(flats.begin(), flats.end());
  return flats;
}

Matroid Matroid::Restrict(const ElementSet& x) const {
  if (x.universe() != size()) throw UsageError("restriction set has the wrong universe");
  std::vector<std::size_t> columns;
  for (std::size_t i = x.First(); i < x.universe(); i = x.NextFrom(i + 1)) {
    columns.push_back(impl_->root_columns[i]);
  }
  return Matroid(std::make_shared<Impl>(impl_->rep, impl_->RootOf(impl_), impl_->stats,
                                        std::move(columns), impl_->contracted,
                                        impl_->contracted_rank));
}

Matroid Matroid::Contract(const Flat& c) const {
  if (c.elements.universe() != size()) {
    throw UsageError("contracted set has the wrong universe");
  }
  if (!IsFlat(c.elements) || Rank(c.elements) != c.rank) {
    throw NotAFlatError("cannot contract " + Format(c.elements) +
                        ": only flats may be contracted");
  }
  std::vector<std::size_t> columns;
  ElementSet contracted = impl_->contracted;
  for (std::size_t i = 0; i < size(); ++i) {
    if (c.elements.Contains(i)) {
      contracted.Insert(impl_->root_columns[i]);
    } else {
      columns.push_back(impl_->root_columns[i]);
    }
  }
  auto root = impl_->RootOf(impl_);
  const int contracted_rank = root->CachedRank(contracted);
  return Matroid(std::make_shared<Impl>(impl_->rep, std::move(root), impl_->stats,
                                        std::move(columns), std::move(contracted),
                                        contracted_rank));
}

ElementSet Matroid::Import(const Matroid& other, const ElementSet& s) const {
  ElementSet out = EmptySet();
  const bool same_root = other.impl_->rep == impl_->rep;
  for (std::size_t i = s.First(); i < s.universe(); i = s.NextFrom(i + 1)) {
    std::size_t local = kAbsent;
    if (same_root) {
      local = impl_->local_of_root[other.impl_->root_columns[i]];
    } else if (auto it = impl_->index.find(other.label(i)); it != impl_->index.end()) {
      local = it->second;
    }
    if (local == kAbsent) {
      throw UsageError("element '" + other.label(i) + "' is not in this matroid");
    }
    out.Insert(local);
  }
  return out;
}

Representation Matroid::Project() const {
  return cyclomatroid::Project(*impl_->rep, impl_->root_columns,
                               impl_->contracted.Indices());
}

const Representation& Matroid::root_representation() const { return *impl_->rep; }

const std::vector<std::size_t>& Matroid::root_columns() const {
  return impl_->root_columns;
}

const MatroidStats& Matroid::stats() const { return *impl_->stats; }

bool IsDirectSum(const Matroid& m, const Flat& f, const Flat& f1, const Flat& f2) {
  if ((f1.elements | f2.elements) != f.elements) return false;
  return m.Rank(f.elements) == m.Rank(f1.elements) + m.Rank(f2.elements);
}

}  // namespace cyclomatroid
