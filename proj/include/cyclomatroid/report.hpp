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

#ifndef CYCLOMATROID_REPORT_HPP_
#define CYCLOMATROID_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cyclomatroid {

using Json = nlohmann::ordered_json;

// One recursion level of the constructive ordinary-flat finder. Sets are label
// lists in ground order.
struct ConstructionLevel {
  int k = 0;
  int rank = 0;  // rank of the matroid searched at this level
  std::vector<std::string> contracted;  // F
  std::vector<std::string> f1;
  std::vector<std::string> f2;
  std::string x;
  std::string y;
  std::string z;
  std::string w;
  bool swapped = false;  // x and y exchanged after the two-point-line claim
  std::vector<std::string> f_prime;
  std::vector<std::string> output;
};

// Levels ordered from the outermost call (largest k) to the base case.
struct ConstructionTrace {
  std::vector<ConstructionLevel> levels;
};

enum class SearchMode { kVerify, kCounterexample };
enum class Outcome { kWitnessFound, kExhausted, kBudgetExceeded };

struct InstanceDescriptor {
  std::string source;  // catalog ref, file name or "random"
  std::uint64_t seed = 0;
  int rank = 0;
  int conductor = 1;
  int k = 0;
  std::size_t columns = 0;
};

struct WitnessPayload {
  std::vector<std::string> flat;
  std::vector<std::string> point;       // empty unless an ordinary witness
  std::vector<std::string> complement;  // empty unless an ordinary witness
};

struct SearchStats {
  std::uint64_t rank_calls = 0;
  std::uint64_t flats_enumerated = 0;
  double ms = 0.0;
};

struct SearchReport {
  SearchMode mode = SearchMode::kVerify;
  InstanceDescriptor instance;
  Outcome outcome = Outcome::kExhausted;
  std::optional<WitnessPayload> witness;
  SearchStats stats;
  std::optional<ConstructionTrace> trace;
  std::string note;  // free-form diagnostic, empty when nothing to say
};

std::string ToString(SearchMode mode);
std::string ToString(Outcome outcome);

Json ToJson(const ConstructionTrace& trace);
// stats.ms is null unless `with_timing`, which keeps output reproducible.
Json ToJson(const SearchReport& report, bool with_timing);

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_REPORT_HPP_
