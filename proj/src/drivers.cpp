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

#include "cyclomatroid/drivers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <thread>

#include "cyclomatroid/catalog.hpp"
#include "cyclomatroid/random.hpp"

namespace cyclomatroid {
namespace {

// Calls body(i) for i in [0, count) on up to `threads` workers. Results go to
// caller-owned slots indexed by i, so aggregation order never depends on the
// schedule.
void ParallelFor(int count, int threads, const std::function<void(int)>& body) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = next++; i < count; i = next++) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);
}

std::uint64_t Power4(int e) { return std::uint64_t{1} << (2 * e); }

}  // namespace

std::optional<Suite> ParseSuite(const std::string& name) {
  if (name == "kelly") return Suite::kKelly;
  if (name == "main-theorem") return Suite::kMainTheorem;
  if (name == "corollary") return Suite::kCorollary;
  return std::nullopt;
}

std::string ToString(Suite suite) {
  switch (suite) {
    case Suite::kKelly:
      return "kelly";
    case Suite::kMainTheorem:
      return "main-theorem";
    case Suite::kCorollary:
      return "corollary";
  }
  return "unknown";
}

int SuiteRank(Suite suite, int k) {
  switch (suite) {
    case Suite::kKelly:
      return 4;
    case Suite::kMainTheorem:
      return 4 * (k - 1);
    case Suite::kCorollary:
      return static_cast<int>(Power4(k - 1));
  }
  return 0;
}

Instance MakeTrialInstance(const RandomTrialOptions& options, int rank, int trial) {
  const std::uint64_t seed = TrialSeed(options.seed, static_cast<std::uint64_t>(trial));
  int columns = 0;
  if (options.columns) {
    columns = *options.columns;
  } else {
    Rng rng(SplitMix64(seed));
    columns = static_cast<int>(rng.Uniform(rank + 4, rank + 6));
  }
  Instance instance{RandomInstance(rank, columns, options.conductor, seed, options.bound), {}};
  instance.descriptor.source = "random";
  instance.descriptor.seed = seed;
  instance.descriptor.rank = rank;
  instance.descriptor.conductor = options.conductor;
  instance.descriptor.columns = static_cast<std::size_t>(columns);
  return instance;
}

TrialRun RunVerifySuite(Suite suite, int k, const RandomTrialOptions& options) {
  if (suite == Suite::kKelly) k = 2;
  if (k < 2) throw UsageError("verify needs k >= 2");
  if (suite == Suite::kCorollary && k > 8) throw UsageError("corollary suite supports k <= 8");
  if (options.trials < 0) throw UsageError("trials must be non-negative");
  const int rank = SuiteRank(suite, k);
  if (options.columns && *options.columns < rank) {
    throw UsageError("--cols " + std::to_string(*options.columns) + " is below the suite rank " +
                     std::to_string(rank));
  }

  TrialRun run;
  run.reports.resize(options.trials);
  run.instances.resize(options.trials);
  ParallelFor(options.trials, options.threads, [&](int trial) {
    const auto start = std::chrono::steady_clock::now();
    Instance instance = MakeTrialInstance(options, rank, trial);
    const Matroid m(instance.representation);
    SearchReport& report = run.reports[trial];
    report.mode = SearchMode::kVerify;
    report.instance = instance.descriptor;
    report.instance.k = k;
    try {
      switch (suite) {
        case Suite::kKelly:
          if (auto line = FindTwoPointLine(m)) report.witness = ToPayload(m, *line);
          break;
        case Suite::kMainTheorem: {
          ConstructiveResult result = FindOrdinaryFlatConstructive(m, k);
          if (!IsOrdinary(m, result.witness.flat)) {
            report.note = "constructed flat failed the ordinary recheck";
          } else {
            report.witness = ToPayload(m, result.witness);
          }
          break;
        }
        case Suite::kCorollary:
          if (auto flat = FindElementaryFlat(m, k)) report.witness = ToPayload(m, *flat);
          break;
      }
    } catch (const ConstructionError& e) {
      report.note = e.what();
      report.trace = e.trace();
    } catch (const InternalInconsistency& e) {
      report.note = e.what();
    }
    report.outcome = report.witness ? Outcome::kWitnessFound : Outcome::kExhausted;
    report.stats.rank_calls = m.stats().rank_calls.load();
    report.stats.ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    run.instances[trial] = std::move(instance.representation);
  });
  for (const SearchReport& report : run.reports) run.passed += report.witness ? 1 : 0;
  return run;
}

ConjectureRun RunConjectureSearch(Conjecture conjecture, int k,
                                  const RandomTrialOptions& options,
                                  std::uint64_t budget_limit) {
  if (k < 2) throw UsageError("search needs k >= 2");
  if (options.trials < 0) throw UsageError("trials must be non-negative");
  const int rank = ConjecturedRank(conjecture, k);
  if (options.columns && *options.columns < rank) {
    throw UsageError("--cols " + std::to_string(*options.columns) +
                     " is below the conjectured rank " + std::to_string(rank));
  }

  ConjectureRun run;
  if (options.threads <= 1) {
    int trial = 0;
    run.search = SearchConjectureCounterexample(
        [&]() -> std::optional<Instance> {
          if (trial >= options.trials) return std::nullopt;
          Instance instance = MakeTrialInstance(options, rank, trial++);
          run.instances.push_back(instance.representation);
          return instance;
        },
        conjecture, k, budget_limit);
    return run;
  }

  // Evaluate everything concurrently, then aggregate exactly as the
  // sequential search would: in trial order, stopping at a counterexample.
  std::vector<Instance> instances;
  for (int trial = 0; trial < options.trials; ++trial) {
    instances.push_back(MakeTrialInstance(options, rank, trial));
  }
  std::vector<SearchReport> reports(instances.size());
  ParallelFor(options.trials, options.threads, [&](int trial) {
    reports[trial] = EvaluateConjecture(instances[trial], conjecture, k, budget_limit);
  });
  for (std::size_t i = 0; i < reports.size(); ++i) {
    run.search.reports.push_back(std::move(reports[i]));
    run.instances.push_back(std::move(instances[i].representation));
    const Outcome outcome = run.search.reports.back().outcome;
    if (outcome == Outcome::kBudgetExceeded) run.search.budget_exceeded = true;
    if (outcome == Outcome::kExhausted) {
      run.search.counterexample = i;
      break;
    }
  }
  return run;
}

}  // namespace cyclomatroid
