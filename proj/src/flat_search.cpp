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

#include "cyclomatroid/flat_search.hpp"

#include <chrono>
#include <limits>
#include <utility>

namespace cyclomatroid {
namespace {

void RequireSimple(const Matroid& m, const char* operation) {
  if (!m.IsSimple()) {
    throw UsageError(std::string(operation) + " requires a simple matroid");
  }
}

// True when the line spanned by {e, f} holds no third element.
bool IsTwoPointLine(const Matroid& m, std::size_t e, std::size_t f) {
  const ElementSet pair(m.size(), {e, f});
  if (m.Rank(pair) != 2) return false;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (g != e && g != f && m.Rank(pair.With(g)) == 2) return false;
  }
  return true;
}

std::uint64_t PowerOfFour(int exponent) {
  if (exponent >= 31) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (2 * exponent);
}

class Constructor {
 public:
  Constructor(FPrimeStrategy strategy, ConstructionTrace& trace)
      : strategy_(strategy), trace_(trace) {}

  OrdinaryWitness Run(const Matroid& m, int k) {
    const std::size_t slot = trace_.levels.size();
    trace_.levels.emplace_back();
    auto level = [&]() -> ConstructionLevel& { return trace_.levels[slot]; };
    auto fail = [&](const std::string& what) {
      throw ConstructionError("constructive search at k=" + std::to_string(k) + ": " + what,
                              trace_);
    };
    level().k = k;
    level().rank = m.Rank();
    if (level().rank < 4 * (k - 1)) fail("rank below 4(k-1)");

    if (k == 2) {
      std::optional<Flat> line;
      try {
        line = FindTwoPointLine(m);
      } catch (const ConstructionError&) {
        throw;
      } catch (const InternalInconsistency& e) {
        fail(e.what());
      }
      if (!line) fail("no two-point line");
      auto witness = IsOrdinary(m, *line);
      if (!witness) fail("two-point line is not ordinary");
      level().output = m.LabelsOf(line->elements);
      return *witness;
    }

    // A rank-4(k-2) flat F and a two-point line {a, b} of M/F.
    const int base = 4 * (k - 2);
    const std::vector<std::size_t> basis = m.GreedyBasis(m.Ground()).Indices();
    const Flat f = m.Closure(ElementSet::Of(
        m.size(), std::vector<std::size_t>(basis.begin(), basis.begin() + base)));
    if (f.rank != base) fail("basis prefix does not span a rank-" + std::to_string(base) + " flat");
    level().contracted = m.LabelsOf(f.elements);

    const Matroid quotient = m.Contract(f);
    const Simplification quotient_simple = quotient.Simplify();
    std::optional<Flat> quotient_line;
    try {
      quotient_line = FindTwoPointLine(quotient_simple.simple);
    } catch (const InternalInconsistency& e) {
      fail(std::string("M/F: ") + e.what());
    }
    if (!quotient_line) fail("M/F has no two-point line");
    const std::vector<std::size_t> ab =
        m.Import(quotient_simple.simple, quotient_line->elements).Indices();
    const std::size_t a = ab[0];
    const std::size_t b = ab[1];

    const Flat f1 = m.Closure(f.elements.With(a));
    const Flat f2 = m.Closure(f.elements.With(b));
    level().f1 = m.LabelsOf(f1.elements);
    level().f2 = m.LabelsOf(f2.elements);
    if (f1.rank != base + 1 || f2.rank != base + 1) fail("F1 or F2 has the wrong rank");
    if ((f1.elements & f2.elements) != f.elements) fail("F1 and F2 do not meet in F");
    const ElementSet span = f1.elements | f2.elements;
    if (m.Rank(span) != base + 2 || !m.IsFlat(span)) fail("F1 u F2 is not a flat of rank r(F)+2");

    const Matroid n = m.Restrict(span);
    std::size_t x = n.Import(m, ElementSet(m.size(), {a})).First();
    std::size_t y = n.Import(m, ElementSet(m.size(), {b})).First();
    level().x = n.label(x);
    level().y = n.label(y);
    const ElementSet xy(n.size(), {x, y});
    const Flat line_xy = n.Closure(xy);
    if (line_xy.elements != xy) fail("{x,y} is not a two-point line of N");

    // Recurse on the simplification of N/{x,y} and lift H and P back to N.
    const Matroid n_quotient = n.Contract(line_xy);
    const Simplification n_quotient_simple = n_quotient.Simplify();
    const OrdinaryWitness sub = Run(n_quotient_simple.simple, k - 1);
    const ElementSet h = n.Import(n_quotient, n_quotient_simple.Lift(sub.complement.elements));
    const ElementSet p = n.Import(n_quotient, n_quotient_simple.Lift(sub.point.elements));

    const ElementSet h_xy = h | xy;
    const ElementSet p_xy = p | xy;
    const ElementSet all = h_xy | p;
    if (n.Rank(h_xy) != k || !n.IsFlat(h_xy)) fail("H u {x,y} is not a rank-k flat of N");
    if (n.Rank(p_xy) != 3 || !n.IsFlat(p_xy)) fail("P u {x,y} is not a plane of N");
    if (n.Rank(all) != k + 1 || !n.IsFlat(all)) fail("H u P u {x,y} is not a rank-(k+1) flat");

    // Two-point line {z, w} with z in P and w in {x, y}; prefer z outside F.
    const ElementSet f_in_n = n.Import(m, f.elements);
    const ElementSet p_outside_f = p - f_in_n;
    std::size_t z = 0;
    std::size_t w = 0;
    if (!p_outside_f.Empty()) {
      z = p_outside_f.First();
      if (IsTwoPointLine(n, z, y)) {
        w = y;
      } else if (IsTwoPointLine(n, z, x)) {
        w = x;
      } else {
        fail("neither {z,y} nor {z,x} is a two-point line");
      }
    } else {
      z = p.First();
      w = x;
      if (!IsTwoPointLine(n, z, x)) fail("P lies in F but {x,z} is not a two-point line");
    }
    level().z = n.label(z);
    level().w = n.label(w);
    if (w == y) {
      std::swap(x, y);
      level().swapped = true;
    }

    const ElementSet f_prime = ChooseFPrime(n, h_xy, x, y, k);
    level().f_prime = n.LabelsOf(f_prime);
    if (n.Rank(f_prime) != k - 1 || !n.IsFlat(f_prime)) fail("F' is not a rank-(k-1) flat");
    if (!f_prime.Contains(x) || f_prime.Contains(y) || !f_prime.IsSubsetOf(h_xy)) {
      fail("F' must lie in H u {x,y} and contain x but not y");
    }

    const ElementSet output_n = f_prime.With(z);
    if (n.Rank(output_n) != k || !n.IsFlat(output_n)) fail("F' u {z} is not a rank-k flat of N");
    const ElementSet output = m.Import(n, output_n);
    level().output = m.LabelsOf(output);
    if (m.Rank(output) != k || !m.IsFlat(output)) fail("F' u {z} is not a rank-k flat of M");

    OrdinaryWitness witness{
        Flat{output, k},
        Flat{m.Import(n, ElementSet(n.size(), {z})), 1},
        Flat{m.Import(n, f_prime), k - 1},
    };
    if (!m.IsFlat(witness.complement.elements)) fail("F' is not a flat of M");
    if (!IsOrdinary(m, witness.flat)) fail("F' u {z} fails the ordinary-flat check");
    return witness;
  }

 private:
  ElementSet ChooseFPrime(const Matroid& n, const ElementSet& k_flat, std::size_t x,
                          std::size_t y, int k) {
    if (strategy_ == FPrimeStrategy::kEnumerate) {
      const Matroid inside = n.Restrict(k_flat);
      for (const Flat& flat : inside.FlatsOfRank(k - 1)) {
        const ElementSet candidate = n.Import(inside, flat.elements);
        if (candidate.Contains(x) && !candidate.Contains(y)) return candidate;
      }
      return n.EmptySet();
    }
    ElementSet independent(n.size(), {x});
    int rank = 1;
    const ElementSet others = k_flat - ElementSet(n.size(), {x, y});
    for (std::size_t e = others.First(); e < others.universe() && rank < k - 1;
         e = others.NextFrom(e + 1)) {
      const ElementSet grown = independent.With(e);
      if (n.Rank(grown) != rank + 1) continue;
      if (n.Closure(grown).elements.Contains(y)) continue;
      independent = grown;
      ++rank;
    }
    return n.Closure(independent).elements;
  }

  FPrimeStrategy strategy_;
  ConstructionTrace& trace_;
};

}  // namespace

std::optional<Flat> FindTwoPointLine(const Matroid& m) {
  RequireSimple(m, "two-point line search");
  for (std::size_t e = 0; e < m.size(); ++e) {
    for (std::size_t f = e + 1; f < m.size(); ++f) {
      if (IsTwoPointLine(m, e, f)) return Flat{ElementSet(m.size(), {e, f}), 2};
    }
  }
  if (m.Rank() >= 4) {
    throw InternalInconsistency(
        "simple rank-" + std::to_string(m.Rank()) +
        " matroid without a two-point line; impossible for complex-representable input");
  }
  return std::nullopt;
}

std::optional<OrdinaryWitness> IsOrdinary(const Matroid& m, const Flat& f) {
  if (f.elements.universe() != m.size()) throw UsageError("flat has the wrong universe");
  if (f.rank < 1 || m.Rank(f.elements) != f.rank || !m.IsFlat(f.elements)) {
    throw UsageError(m.Format(f.elements) + " is not a flat of rank " +
                     std::to_string(f.rank) + " >= 1");
  }
  ElementSet seen = m.EmptySet();
  for (std::size_t e = f.elements.First(); e < f.elements.universe();
       e = f.elements.NextFrom(e + 1)) {
    if (seen.Contains(e)) continue;
    const ElementSet point = m.ParallelClass(e);
    seen |= point;
    const ElementSet rest = f.elements - point;
    if (m.Rank(rest) == f.rank - 1 && m.IsFlat(rest)) {
      return OrdinaryWitness{f, Flat{point, 1}, Flat{rest, f.rank - 1}};
    }
  }
  return std::nullopt;
}

bool IsElementary(const Matroid& m, const Flat& f) {
  ElementSet seen = m.EmptySet();
  int points = 0;
  for (std::size_t e = f.elements.First(); e < f.elements.universe();
       e = f.elements.NextFrom(e + 1)) {
    if (seen.Contains(e) || m.IsLoop(e)) continue;
    seen |= m.ParallelClass(e);
    ++points;
  }
  return points == f.rank;
}

std::optional<OrdinaryWitness> FindOrdinaryFlatBrute(const Matroid& m, int k,
                                                     WorkBudget* budget) {
  RequireSimple(m, "ordinary flat search");
  if (k < 1 || k > m.Rank()) throw UsageError("k must lie in [1, rank]");
  WorkBudget local;
  if (!budget) budget = &local;
  for (const Flat& flat : m.FlatsOfRank(k, budget)) {
    if (auto witness = IsOrdinary(m, flat)) return witness;
  }
  return std::nullopt;
}

std::optional<Flat> FindElementaryFlatBrute(const Matroid& m, int k, WorkBudget* budget) {
  RequireSimple(m, "elementary flat search");
  if (k < 1 || k > m.Rank()) throw UsageError("k must lie in [1, rank]");
  WorkBudget local;
  if (!budget) budget = &local;
  for (const Flat& flat : m.FlatsOfRank(k, budget)) {
    if (IsElementary(m, flat)) return flat;
  }
  return std::nullopt;
}

ConstructiveResult FindOrdinaryFlatConstructive(const Matroid& m, int k,
                                                FPrimeStrategy strategy) {
  if (k < 2) throw PreconditionError("constructive search needs k >= 2");
  if (m.Rank() < 4 * (k - 1)) {
    throw PreconditionError("constructive search for k=" + std::to_string(k) +
                            " needs rank >= " + std::to_string(4 * (k - 1)) + ", got " +
                            std::to_string(m.Rank()));
  }
  RequireSimple(m, "constructive search");
  ConstructiveResult result;
  Constructor constructor(strategy, result.trace);
  result.witness = constructor.Run(m, k);
  return result;
}

std::optional<Flat> FindElementaryFlat(const Matroid& m, int k, WorkBudget* budget) {
  RequireSimple(m, "elementary flat search");
  if (k < 1) throw UsageError("k must be positive");
  const int rank = m.Rank();
  if (k > rank) return std::nullopt;
  if (k == 1) return m.Closure(ElementSet(m.size(), {0}));
  if (static_cast<std::uint64_t>(rank) < PowerOfFour(k - 1)) {
    return FindElementaryFlatBrute(m, k, budget);
  }

  // An ordinary flat P + H with r(H) = 4^(k-2); an elementary rank-(k-1) flat
  // of M|H extends by P.
  const int inner = static_cast<int>(PowerOfFour(k - 2)) + 1;
  const ConstructiveResult ordinary = FindOrdinaryFlatConstructive(m, inner);
  const Matroid restricted = m.Restrict(ordinary.witness.complement.elements);
  const std::optional<Flat> smaller = FindElementaryFlat(restricted, k - 1, budget);
  if (!smaller) {
    throw InternalInconsistency("no elementary rank-" + std::to_string(k - 1) +
                                " flat inside the complement");
  }
  const ElementSet candidate =
      m.Import(restricted, smaller->elements) | ordinary.witness.point.elements;
  const Flat closure = m.Closure(candidate);
  if (closure.elements != candidate || closure.rank != k) {
    throw InternalInconsistency(m.Format(candidate) + " is not a rank-" + std::to_string(k) +
                                " flat");
  }
  if (!IsElementary(m, closure)) {
    throw InternalInconsistency(m.Format(candidate) + " is not elementary");
  }
  return closure;
}

int ConjecturedRank(Conjecture conjecture, int k) {
  return conjecture == Conjecture::kOrdinary ? k + 2 : 3 * (k - 1) + 1;
}

WitnessPayload ToPayload(const Matroid& m, const OrdinaryWitness& w) {
  return WitnessPayload{m.LabelsOf(w.flat.elements), m.LabelsOf(w.point.elements),
                        m.LabelsOf(w.complement.elements)};
}

WitnessPayload ToPayload(const Matroid& m, const Flat& f) {
  return WitnessPayload{m.LabelsOf(f.elements), {}, {}};
}

SearchReport EvaluateConjecture(const Instance& instance, Conjecture conjecture, int k,
                                std::uint64_t budget_limit) {
  if (k < 2) throw UsageError("conjecture search needs k >= 2");
  const auto start = std::chrono::steady_clock::now();
  const Matroid m(instance.representation);
  const int required = ConjecturedRank(conjecture, k);
  if (!m.IsSimple()) throw UsageError("conjecture instance is not simple");
  if (m.Rank() < required) {
    throw UsageError("conjecture instance has rank " + std::to_string(m.Rank()) +
                     ", below the conjectured bound " + std::to_string(required));
  }

  SearchReport report;
  report.mode = SearchMode::kCounterexample;
  report.instance = instance.descriptor;
  report.instance.rank = m.Rank();
  report.instance.k = k;
  report.instance.conductor = instance.representation.conductor();
  report.instance.columns = instance.representation.cols();
  WorkBudget budget(budget_limit);
  try {
    if (conjecture == Conjecture::kOrdinary) {
      if (auto w = FindOrdinaryFlatBrute(m, k, &budget)) report.witness = ToPayload(m, *w);
    } else {
      if (auto f = FindElementaryFlatBrute(m, k, &budget)) report.witness = ToPayload(m, *f);
    }
    report.outcome = report.witness ? Outcome::kWitnessFound : Outcome::kExhausted;
  } catch (const BudgetExceeded&) {
    report.outcome = Outcome::kBudgetExceeded;
  }
  report.stats.rank_calls = m.stats().rank_calls.load();
  report.stats.flats_enumerated = budget.flats_enumerated();
  report.stats.ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return report;
}

SearchRun SearchConjectureCounterexample(const InstanceSource& source,
                                         Conjecture conjecture, int k,
                                         std::uint64_t budget_limit) {
  SearchRun run;
  while (auto instance = source()) {
    run.reports.push_back(EvaluateConjecture(*instance, conjecture, k, budget_limit));
    const Outcome outcome = run.reports.back().outcome;
    if (outcome == Outcome::kBudgetExceeded) run.budget_exceeded = true;
    if (outcome == Outcome::kExhausted) {
      run.counterexample = run.reports.size() - 1;
      break;
    }
  }
  return run;
}

}  // namespace cyclomatroid
