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

// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cyclomatroid/catalog.hpp"
#include "cyclomatroid/drivers.hpp"
#include "cyclomatroid/flat_search.hpp"
#include "cyclomatroid/random.hpp"

namespace cyclomatroid {
namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  std::string name;
  double seconds;  // time limit
  std::function<Verdict()> run;
};

std::vector<std::size_t> Columns(const Matroid& m, const ElementSet& s) {
  std::vector<std::size_t> out;
  for (std::size_t i : s.Indices()) out.push_back(m.root_columns()[i]);
  return out;
}

// Rank from a fresh elimination on the root matrix; bypasses the rank cache.
int FreshRank(const Matroid& m, const ElementSet& s) {
  return static_cast<int>(ColumnRank(m.root_representation(), Columns(m, s)));
}

bool FreshFlat(const Matroid& m, const ElementSet& s, int rank) {
  if (FreshRank(m, s) != rank) return false;
  for (std::size_t e = 0; e < m.size(); ++e)
    if (!s.Contains(e) && FreshRank(m, s.With(e)) == rank) return false;
  return true;
}

bool FreshWitness(const Matroid& m, const OrdinaryWitness& w, int k) {
  return (w.point.elements | w.complement.elements) == w.flat.elements &&
         (w.point.elements & w.complement.elements).Empty() &&
         FreshFlat(m, w.flat.elements, k) && FreshFlat(m, w.point.elements, 1) &&
         FreshFlat(m, w.complement.elements, k - 1);
}

ElementSet RandomSubset(Rng& rng, std::size_t n) {
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng.Uniform(0, 2) == 0) s.Insert(i);
  return s;
}

Verdict Kelly() {
  int found = 0, total = 0;
  Verdict out;
  for (int conductor : {1, 3, 4}) {
    RandomTrialOptions options;
    options.conductor = conductor;
    for (int trial = 0; trial < 100; ++trial) {
      ++total;
      const Instance instance = MakeTrialInstance(options, 4, trial);
      const Matroid m(instance.representation);
      const auto line = FindTwoPointLine(m);
      if (line && line->elements.Count() == 2 && FreshFlat(m, line->elements, 2) &&
          instance.descriptor.columns >= 8 && instance.descriptor.columns <= 10) {
        ++found;
      } else {
        out.ok = false;
      }
    }
  }
  out.detail = std::to_string(found) + "/" + std::to_string(total) + " two-point lines";
  return out;
}

Verdict KellySharpness() {
  const Matroid ag(Ag23());
  int three_point = 0, pairs = 0;
  for (std::size_t a = 0; a < 9; ++a) {
    for (std::size_t b = a + 1; b < 9; ++b) {
      ++pairs;
      int on_line = 0;
      for (std::size_t e = 0; e < 9; ++e)
        if (FreshRank(ag, ElementSet(9, {a, b}).With(e)) == 2) ++on_line;
      if (on_line == 3) ++three_point;
    }
  }
  Verdict out;
  out.ok = ag.IsSimple() && ag.Rank() == 3 && !FindTwoPointLine(ag) && pairs == 36 &&
           three_point == 36;
  out.detail = "simple rank " + std::to_string(ag.Rank()) + ", " + std::to_string(three_point) +
               "/36 pairs on a three-point line";
  return out;
}

// The 25 main-theorem instances: 12 columns for the first 10, then 13 and 14.
std::vector<Instance> MainTheoremInstances() {
  std::vector<Instance> out;
  for (int trial = 0; trial < 25; ++trial) {
    RandomTrialOptions options;
    options.seed = 7;
    options.conductor = std::array{1, 3, 4}[trial % 3];
    options.columns = trial < 10 ? 12 : (trial < 18 ? 13 : 14);
    out.push_back(MakeTrialInstance(options, 8, trial));
  }
  return out;
}

Verdict MainTheorem() {
  int passed = 0, alarms = 0;
  for (const Instance& instance : MainTheoremInstances()) {
    const Matroid m(instance.representation);
    try {
      const ConstructiveResult r = FindOrdinaryFlatConstructive(m, 3);
      const Matroid fresh(instance.representation);
      if (IsOrdinary(fresh, r.witness.flat) && FreshWitness(fresh, r.witness, 3)) ++passed;
    } catch (const InternalInconsistency&) {
      ++alarms;
    }
  }
  Verdict out;
  out.ok = passed == 25 && alarms == 0;
  out.detail = std::to_string(passed) + "/25 rechecked ordinary, " + std::to_string(alarms) +
               " alarms";
  return out;
}

Verdict OracleAgreement() {
  int agreed = 0, used = 0;
  for (const Instance& instance : MainTheoremInstances()) {
    if (instance.representation.cols() > 12) continue;
    if (++used > 10) break;
    const Matroid m(instance.representation);
    const auto w = FindOrdinaryFlatBrute(m, 3);
    if (w && FreshWitness(m, *w, 3)) ++agreed;
  }
  Verdict out;
  out.ok = agreed == 10;
  out.detail = std::to_string(agreed) + "/10 brute witnesses on 12-column instances";
  return out;
}

Verdict Corollary() {
  RandomTrialOptions options;
  options.trials = 50;
  int found = 0;
  for (int trial = 0; trial < options.trials; ++trial) {
    options.conductor = std::array{1, 3, 4}[trial % 3];
    const Matroid m(MakeTrialInstance(options, 4, trial).representation);
    const auto flat = FindElementaryFlat(m, 2);
    if (flat && FreshFlat(m, flat->elements, 2) && IsElementary(m, *flat)) ++found;
  }
  Verdict out;
  out.ok = found == 50;
  out.detail = std::to_string(found) + "/50 elementary lines";
  return out;
}

Verdict AffinePlanePairTightness() {
  const Matroid m(Ag23Power(2));
  WorkBudget budget;
  const auto flat = FindElementaryFlatBrute(m, 3, &budget);
  int elementary = 0;
  const auto planes = m.FlatsOfRank(3);
  for (const Flat& f : planes) elementary += IsElementary(m, f);
  Verdict out;
  out.ok = m.Rank() == 6 && m.size() == 18 && !flat && elementary == 0 &&
           budget.flats_enumerated() == planes.size();
  out.detail = std::to_string(budget.flats_enumerated()) + " rank-3 flats enumerated, " +
               std::to_string(budget.closures()) + " closures, none elementary";
  return out;
}

Verdict MotzkinPlanes() {
  const Matroid m(Motzkin());
  const auto planes = m.FlatsOfRank(3);
  bool big = !planes.empty();
  int ordinary = 0;
  for (const Flat& f : planes) {
    big = big && f.elements.Count() >= 4;
    ordinary += IsOrdinary(m, f).has_value();
  }
  Verdict out;
  out.ok = big && ordinary >= 1;
  out.detail = std::to_string(planes.size()) + " planes, all with >= 4 elements, " +
               std::to_string(ordinary) + " ordinary";
  return out;
}

Verdict BonniceEdelstein() {
  Verdict out;
  for (int k : {2, 3}) {
    const Matroid m(ThreePointLinePower(k - 1));
    WorkBudget budget;
    const bool none = !FindElementaryFlatBrute(m, k, &budget);
    out.ok = out.ok && none && m.Rank() == 2 * k - 2;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) +
                  " rank " + std::to_string(m.Rank()) + ": " +
                  (none ? "none" : "found one") + " in " +
                  std::to_string(budget.flats_enumerated()) + " flats";
  }
  return out;
}

Verdict AxiomSuites() {
  constexpr int kChecks = 1000;
  Rng rng(2026);
  std::vector<std::string> failed;
  int entries = 0;
  for (const CatalogEntry& entry : CatalogEntries()) {
    ++entries;
    const Matroid m(entry.build(entry.defaults));
    const std::size_t n = m.size();
    bool ok = true;
    for (int i = 0; i < kChecks && ok; ++i) {
      const ElementSet x = RandomSubset(rng, n);
      const ElementSet y = RandomSubset(rng, n);
      ok = m.Rank(x | y) + m.Rank(x & y) <= m.Rank(x) + m.Rank(y);
    }
    for (int i = 0; i < kChecks && ok; ++i) {
      const ElementSet x = RandomSubset(rng, n);
      const ElementSet y = x | RandomSubset(rng, n);
      const Flat cx = m.Closure(x);
      ok = x.IsSubsetOf(cx.elements) && m.Closure(cx.elements).elements == cx.elements &&
           cx.elements.IsSubsetOf(m.Closure(y).elements);
    }
    for (int i = 0; i < kChecks && ok; ++i) {
      const Flat c = m.Closure(RandomSubset(rng, n) & RandomSubset(rng, n));
      const Matroid quotient = m.Contract(c);
      const Flat f = quotient.Closure(RandomSubset(rng, quotient.size()) &
                                      RandomSubset(rng, quotient.size()));
      const ElementSet lifted = m.Import(quotient, f.elements) | c.elements;
      ok = FreshFlat(m, lifted, c.rank + f.rank);
    }
    if (!ok) failed.push_back(entry.name);
  }
  Verdict out;
  out.ok = failed.empty();
  out.detail = std::to_string(entries) + " catalog matroids x 3 x " + std::to_string(kChecks) +
               " checks";
  for (const std::string& name : failed) out.detail += ", failed on " + name;
  return out;
}

std::string Capture(const std::string& command, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  std::string text;
  if (!pipe) {
    status = -1;
    return text;
  }
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe.get())) > 0) text.append(buffer, n);
  status = pclose(pipe.release());
  return text;
}

Verdict Determinism() {
  const std::string command = std::string(CYCLOMATROID_CLI_PATH) +
                              " verify --suite main-theorem --k 3 --trials 25 --seed 7 --json";
  int first_status = 0, second_status = 0;
  const std::string first = Capture(command, first_status);
  const std::string second = Capture(command, second_status);
  Verdict out;
  out.ok = first_status == 0 && second_status == 0 && !first.empty() && first == second;
  out.detail = std::to_string(first.size()) + " bytes, " +
               (first == second ? "identical" : "different") + ", exit " +
               std::to_string(first_status) + "/" + std::to_string(second_status);
  return out;
}

}  // namespace
}  // namespace cyclomatroid

int main() {
  using namespace cyclomatroid;
  const std::vector<Criterion> criteria{
      {"kelly suite", 30, Kelly},
      {"kelly sharpness", 1, KellySharpness},
      {"main theorem k=3", 300, MainTheorem},
      {"oracle agreement", 600, OracleAgreement},
      {"corollary k=2", 60, Corollary},
      {"ag23_power(2) tightness", 300, AffinePlanePairTightness},
      {"motzkin planes", 1, MotzkinPlanes},
      {"bonnice-edelstein tightness", 60, BonniceEdelstein},
      {"axiom suites", 60, AxiomSuites},
      {"determinism", 600, Determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.seconds;
    const bool pass = outcome.ok && in_time;
    failures += !pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS " : "FAIL ") << c.name << ": " << outcome.detail << " (" << seconds
         << " s, limit " << c.seconds << " s" << (in_time ? "" : ", over time") << ")";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
