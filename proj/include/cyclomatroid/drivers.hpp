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

#ifndef CYCLOMATROID_DRIVERS_HPP_
#define CYCLOMATROID_DRIVERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclomatroid/flat_search.hpp"
#include "cyclomatroid/representation.hpp"

namespace cyclomatroid {

enum class Suite { kKelly, kMainTheorem, kCorollary };

std::optional<Suite> ParseSuite(const std::string& name);
std::string ToString(Suite suite);

// Rank every instance of a suite is generated at: 4, 4(k-1) or 4^(k-1).
int SuiteRank(Suite suite, int k);

struct RandomTrialOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  // Fixed column count; when unset each trial draws one in [rank+4, rank+6].
  std::optional<int> columns;
  int conductor = 1;
  int bound = 10;
  int threads = 1;
};

struct TrialRun {
  std::vector<SearchReport> reports;
  // Instance of every trial, for dumping the interesting ones.
  std::vector<Representation> instances;
  int passed = 0;
};

// Generates the trial instance for `trial`; its descriptor records the seed.
Instance MakeTrialInstance(const RandomTrialOptions& options, int rank, int trial);

// Runs the finder matching `suite` on each random instance. A trial passes
// when a witness is found; internal-inconsistency alarms count as failures
// and are recorded in the report note.
TrialRun RunVerifySuite(Suite suite, int k, const RandomTrialOptions& options);

// Random instances of exactly the conjectured rank, evaluated in trial order.
// Stops reporting at the first counterexample.
struct ConjectureRun {
  SearchRun search;
  std::vector<Representation> instances;
};
ConjectureRun RunConjectureSearch(Conjecture conjecture, int k,
                                  const RandomTrialOptions& options,
                                  std::uint64_t budget_limit);

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_DRIVERS_HPP_
