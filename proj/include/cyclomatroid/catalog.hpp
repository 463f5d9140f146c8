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

#ifndef CYCLOMATROID_CATALOG_HPP_
#define CYCLOMATROID_CATALOG_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclomatroid/representation.hpp"

namespace cyclomatroid {

// AG(2,3) as the nine Hesse inflection points over Q(zeta_3):
// (0,1,-w^j), (1,0,-w^j), (1,-w^j,0) for j = 0, 1, 2.
Representation Ag23();

// U_{r,n} as the r x n Vandermonde matrix over Q on the nodes 1..n.
Representation Uniform(int r, int n);

// Two disjoint three-point lines, U_{2,3} + U_{2,3}.
Representation Motzkin();

// t-fold direct sum of Ag23().
Representation Ag23Power(int t);

// U_{2,3} summed t times.
Representation ThreePointLinePower(int t);

constexpr int kMaxRandomConductor = 12;

// d x m matrix whose entries have power-basis coordinates p/q with |p| <= bound
// and 1 <= q <= bound, redrawn until the matroid is simple of rank d.
// Deterministic in `seed`. Throws GenerationError after `max_tries` draws.
Representation RandomInstance(int d, int m, int conductor, std::uint64_t seed,
                              int bound = 10, int max_tries = 1000);

struct CertifiedFact {
  std::vector<long> params;  // parameters the fact was certified at
  std::string property;
  std::string expected;
  // Recomputes the property with the brute-force oracles.
  std::function<std::string(const Representation&)> evaluate;
};

struct CatalogEntry {
  std::string name;
  std::string parameters;   // e.g. "r,n"
  std::string description;
  std::vector<long> defaults;
  std::function<Representation(std::span<const long>)> build;
  std::vector<CertifiedFact> certified_facts;
};

const std::vector<CatalogEntry>& CatalogEntries();

// Builds "name" or "name:p1,p2,...". Missing trailing parameters take the
// entry's defaults. Throws UsageError for an unknown name or bad parameters.
Representation BuildCatalogRef(std::string_view ref);
bool IsCatalogRef(std::string_view ref);

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_CATALOG_HPP_
