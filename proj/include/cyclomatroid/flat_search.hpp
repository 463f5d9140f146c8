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

#ifndef CYCLOMATROID_FLAT_SEARCH_HPP_
#define CYCLOMATROID_FLAT_SEARCH_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyclomatroid/errors.hpp"
#include "cyclomatroid/matroid.hpp"
#include "cyclomatroid/report.hpp"

namespace cyclomatroid {

// A rank-k flat written as the direct sum of a point and a rank-(k-1) flat.
struct OrdinaryWitness {
  Flat flat;
  Flat point;
  Flat complement;
};

// A step of the constructive proof failed; carries the levels recorded so far.
class ConstructionError : public InternalInconsistency {
 public:
  ConstructionError(const std::string& what, ConstructionTrace trace)
      : InternalInconsistency(what), trace_(std::move(trace)) {}
  const ConstructionTrace& trace() const { return trace_; }

 private:
  ConstructionTrace trace_;
};

// A rank-2 flat with exactly two elements of a simple matroid, the least such
// pair in canonical order. Returns nullopt when there is none; for rank >= 4
// that contradicts Kelly's theorem and raises InternalInconsistency instead.
// Throws UsageError when m is not simple.
std::optional<Flat> FindTwoPointLine(const Matroid& m);

// Tests every parallel class P of f, in canonical order, for whether f \ P is
// a rank-(k-1) flat. Throws UsageError unless f is a nonempty flat of m.
std::optional<OrdinaryWitness> IsOrdinary(const Matroid& m, const Flat& f);

// True when f has exactly rank(f) parallel classes.
bool IsElementary(const Matroid& m, const Flat& f);

// First ordinary flat of the canonical rank-k slice. Throws BudgetExceeded.
std::optional<OrdinaryWitness> FindOrdinaryFlatBrute(const Matroid& m, int k,
                                                     WorkBudget* budget = nullptr);

// First elementary flat of the canonical rank-k slice. Throws BudgetExceeded.
std::optional<Flat> FindElementaryFlatBrute(const Matroid& m, int k,
                                            WorkBudget* budget = nullptr);

enum class FPrimeStrategy {
  kEnumerate,  // canonically least qualifying flat of N|K
  kGreedy,     // grow an independent set from x through H, avoiding y
};

struct ConstructiveResult {
  OrdinaryWitness witness;
  ConstructionTrace trace;
};

// Builds an ordinary rank-k flat of a simple representable matroid of rank at
// least 4(k-1), following the inductive argument: contract a rank-4(k-2)
// flat, take a two-point line of the quotient, recurse on the contraction of
// that line inside the two hyperplane-like flats it spans, and lift the
// result back through the two-point-line claim.
//
// Every intermediate fact the argument relies on is checked; a failure throws
// ConstructionError. Throws PreconditionError for k < 2 or a small rank and
// UsageError for a non-simple matroid.
ConstructiveResult FindOrdinaryFlatConstructive(
    const Matroid& m, int k, FPrimeStrategy strategy = FPrimeStrategy::kEnumerate);

// An elementary rank-k flat. When rank(m) >= 4^(k-1) this uses the inductive
// construction on top of FindOrdinaryFlatConstructive; below that bound it
// falls back to scanning the rank-k slice, which may throw BudgetExceeded.
std::optional<Flat> FindElementaryFlat(const Matroid& m, int k,
                                       WorkBudget* budget = nullptr);

enum class Conjecture {
  kOrdinary = 1,    // rank >= k + 2 gives an ordinary rank-k flat
  kElementary = 2,  // rank >= 3(k-1) + 1 gives an elementary rank-k flat
};

int ConjecturedRank(Conjecture conjecture, int k);

struct Instance {
  Representation representation;
  InstanceDescriptor descriptor;
};

// Yields instances until nullopt.
using InstanceSource = std::function<std::optional<Instance>()>;

struct SearchRun {
  std::vector<SearchReport> reports;
  std::optional<std::size_t> counterexample;  // index into reports
  bool budget_exceeded = false;
};

// Runs the brute oracle for the conjecture on each instance and stops at the
// first one whose slice is exhausted without a witness. Each instance gets a
// fresh budget of `budget_limit` closures. Throws UsageError for instances that
// are not simple or are below the conjectured rank.
SearchRun SearchConjectureCounterexample(const InstanceSource& source,
                                         Conjecture conjecture, int k,
                                         std::uint64_t budget_limit);

// Checks one instance against the conjecture; the building block of the search
// above, exposed for parallel drivers.
SearchReport EvaluateConjecture(const Instance& instance, Conjecture conjecture, int k,
                                std::uint64_t budget_limit);

WitnessPayload ToPayload(const Matroid& m, const OrdinaryWitness& w);
WitnessPayload ToPayload(const Matroid& m, const Flat& f);

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_FLAT_SEARCH_HPP_
