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

#include "cyclomatroid/report.hpp"

namespace cyclomatroid {

std::string ToString(SearchMode mode) {
  return mode == SearchMode::kVerify ? "verify" : "counterexample";
}

std::string ToString(Outcome outcome) {
  switch (outcome) {
    case Outcome::kWitnessFound:
      return "witness_found";
    case Outcome::kExhausted:
      return "exhausted";
    case Outcome::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

Json ToJson(const ConstructionTrace& trace) {
  Json levels = Json::array();
  for (const ConstructionLevel& level : trace.levels) {
    Json j;
    j["k"] = level.k;
    j["rank"] = level.rank;
    if (level.k > 2) {
      j["contracted_flat"] = level.contracted;
      j["f1"] = level.f1;
      j["f2"] = level.f2;
      j["x"] = level.x;
      j["y"] = level.y;
      j["z"] = level.z;
      j["w"] = level.w;
      j["swapped"] = level.swapped;
      j["f_prime"] = level.f_prime;
    }
    j["output"] = level.output;
    levels.push_back(std::move(j));
  }
  Json out;
  out["levels"] = std::move(levels);
  return out;
}

Json ToJson(const SearchReport& report, bool with_timing) {
  Json j;
  j["mode"] = ToString(report.mode);
  j["source"] = report.instance.source;
  j["seed"] = report.instance.seed;
  j["conductor"] = report.instance.conductor;
  j["rank"] = report.instance.rank;
  j["columns"] = report.instance.columns;
  j["k"] = report.instance.k;
  j["outcome"] = ToString(report.outcome);
  if (report.witness) {
    Json w;
    w["flat"] = report.witness->flat;
    w["point"] = report.witness->point;
    w["complement"] = report.witness->complement;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  Json stats;
  stats["rank_calls"] = report.stats.rank_calls;
  stats["flats_enumerated"] = report.stats.flats_enumerated;
  if (with_timing) {
    stats["ms"] = report.stats.ms;
  } else {
    stats["ms"] = nullptr;
  }
  j["stats"] = std::move(stats);
  if (report.trace) j["trace"] = ToJson(*report.trace);
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

}  // namespace cyclomatroid
