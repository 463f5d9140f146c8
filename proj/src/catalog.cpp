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

#include "cyclomatroid/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <utility>

#include "cyclomatroid/errors.hpp"
#include "cyclomatroid/flat_search.hpp"
#include "cyclomatroid/matroid.hpp"
#include "cyclomatroid/random.hpp"

namespace cyclomatroid {
namespace {

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string FlatSizes(const std::vector<Flat>& flats) {
  std::vector<std::size_t> sizes;
  for (const Flat& f : flats) sizes.push_back(f.elements.Count());
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::string out;
  for (std::size_t s : sizes) out += (out.empty() ? "" : ",") + std::to_string(s);
  return out;
}

CertifiedFact Fact(std::vector<long> params, std::string property, std::string expected,
                   std::function<std::string(const Matroid&)> evaluate) {
  return CertifiedFact{std::move(params), std::move(property), std::move(expected),
                       [evaluate = std::move(evaluate)](const Representation& rep) {
                         return evaluate(Matroid(rep));
                       }};
}

std::string RankOf(const Matroid& m) { return std::to_string(m.Rank()); }
std::string SizeOf(const Matroid& m) { return std::to_string(m.size()); }
std::string SimpleOf(const Matroid& m) { return Bool(m.IsSimple()); }
std::string TwoPointLine(const Matroid& m) {
  auto line = FindTwoPointLine(m);
  return line ? "exists" : "none";
}

std::vector<CatalogEntry> MakeEntries() {
  std::vector<CatalogEntry> entries;
  entries.push_back(CatalogEntry{
      "ag23",
      "",
      "ternary affine plane AG(2,3) as the Hesse configuration over Q(zeta_3)",
      {},
      [](std::span<const long>) { return Ag23(); },
      {
          Fact({}, "rank", "3", RankOf),
          Fact({}, "elements", "9", SizeOf),
          Fact({}, "simple", "true", SimpleOf),
          Fact({}, "lines", "12",
               [](const Matroid& m) { return std::to_string(m.FlatsOfRank(2).size()); }),
          Fact({}, "line sizes", "3",
               [](const Matroid& m) { return FlatSizes(m.FlatsOfRank(2)); }),
          Fact({}, "two-point line", "none", TwoPointLine),
      }});
  entries.push_back(CatalogEntry{
      "uniform",
      "r,n",
      "uniform matroid U_{r,n} as a Vandermonde matrix over Q",
      {2, 3},
      [](std::span<const long> p) {
        return Uniform(static_cast<int>(p[0]), static_cast<int>(p[1]));
      },
      {
          Fact({2, 3}, "rank", "2", RankOf),
          Fact({2, 3}, "elements", "3", SizeOf),
          Fact({2, 3}, "line sizes", "3",
               [](const Matroid& m) { return FlatSizes(m.FlatsOfRank(2)); }),
          Fact({2, 2}, "two-point line", "exists", TwoPointLine),
          Fact({3, 5}, "independent 3-subsets", "10",
               [](const Matroid& m) {
                 int count = 0;
                 for (std::size_t a = 0; a < m.size(); ++a)
                   for (std::size_t b = a + 1; b < m.size(); ++b)
                     for (std::size_t c = b + 1; c < m.size(); ++c)
                       count += m.IsIndependent(ElementSet(m.size(), {a, b, c}));
                 return std::to_string(count);
               }),
      }});
  entries.push_back(CatalogEntry{
      "motzkin",
      "",
      "direct sum of two three-point lines",
      {},
      [](std::span<const long>) { return Motzkin(); },
      {
          Fact({}, "rank", "4", RankOf),
          Fact({}, "elements", "6", SizeOf),
          Fact({}, "plane sizes", "4",
               [](const Matroid& m) { return FlatSizes(m.FlatsOfRank(3)); }),
          Fact({}, "ordinary plane", "exists",
               [](const Matroid& m) {
                 return FindOrdinaryFlatBrute(m, 3) ? "exists" : "none";
               }),
      }});
  entries.push_back(CatalogEntry{
      "ag23_power",
      "t",
      "t-fold direct sum of AG(2,3); rank 3t without an elementary rank-(t+1) flat",
      {2},
      [](std::span<const long> p) { return Ag23Power(static_cast<int>(p[0])); },
      {
          Fact({1}, "rank", "3", RankOf),
          Fact({1}, "elementary rank-2 flat", "none",
               [](const Matroid& m) { return FindElementaryFlatBrute(m, 2) ? "exists" : "none"; }),
          Fact({2}, "rank", "6", RankOf),
          Fact({2}, "elements", "18", SizeOf),
          Fact({2}, "elementary rank-3 flat", "none",
               [](const Matroid& m) { return FindElementaryFlatBrute(m, 3) ? "exists" : "none"; }),
      }});
  entries.push_back(CatalogEntry{
      "three_point_lines",
      "t",
      "t-fold direct sum of U_{2,3}; rank 2t without an elementary rank-(t+1) flat",
      {2},
      [](std::span<const long> p) { return ThreePointLinePower(static_cast<int>(p[0])); },
      {
          Fact({1}, "elementary rank-2 flat", "none",
               [](const Matroid& m) { return FindElementaryFlatBrute(m, 2) ? "exists" : "none"; }),
          Fact({2}, "rank", "4", RankOf),
          Fact({2}, "elementary rank-3 flat", "none",
               [](const Matroid& m) { return FindElementaryFlatBrute(m, 3) ? "exists" : "none"; }),
      }});
  entries.push_back(CatalogEntry{
      "random",
      "d,m,conductor,seed,bound",
      "seeded random simple rank-d representation with m columns",
      {4, 8, 1, 1, 10},
      [](std::span<const long> p) {
        return RandomInstance(static_cast<int>(p[0]), static_cast<int>(p[1]),
                              static_cast<int>(p[2]), static_cast<std::uint64_t>(p[3]),
                              static_cast<int>(p[4]));
      },
      {
          Fact({4, 8, 4, 1, 10}, "rank", "4", RankOf),
          Fact({4, 8, 4, 1, 10}, "simple", "true", SimpleOf),
          Fact({4, 8, 4, 1, 10}, "two-point line", "exists", TwoPointLine),
      }});
  return entries;
}

}  // namespace

Representation Ag23() {
  constexpr int n = 3;
  const CyclotomicNumber zero = CyclotomicNumber::Zero(n);
  const CyclotomicNumber one = CyclotomicNumber::One(n);
  const CyclotomicNumber omega = CyclotomicNumber::Zeta(n);
  std::vector<std::vector<CyclotomicNumber>> columns;
  for (int pattern = 0; pattern < 3; ++pattern) {
    for (int j = 0; j < 3; ++j) {
      const CyclotomicNumber c = -omega.Pow(j);
      switch (pattern) {
        case 0:
          columns.push_back({zero, one, c});
          break;
        case 1:
          columns.push_back({one, zero, c});
          break;
        default:
          columns.push_back({one, c, zero});
          break;
      }
    }
  }
  std::vector<CyclotomicNumber> entries;
  for (std::size_t r = 0; r < 3; ++r)
    for (const auto& column : columns) entries.push_back(column[r]);
  return Representation(n, 3, columns.size(), std::move(entries));
}

Representation Uniform(int r, int n) {
  if (r < 0 || n < 0 || r > n) throw UsageError("uniform needs 0 <= r <= n");
  std::vector<CyclotomicNumber> entries;
  for (int row = 0; row < r; ++row) {
    for (int node = 1; node <= n; ++node) {
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(node),
                    static_cast<unsigned long>(row));
      entries.push_back(CyclotomicNumber::Embed(Rational(power), 1));
    }
  }
  return Representation(1, static_cast<std::size_t>(r), static_cast<std::size_t>(n),
                        std::move(entries));
}

Representation Motzkin() { return DirectSum(Uniform(2, 3), Uniform(2, 3)); }

Representation Ag23Power(int t) {
  if (t < 1) throw UsageError("ag23_power needs t >= 1");
  Representation out = Ag23();
  for (int i = 1; i < t; ++i) out = DirectSum(out, Ag23());
  return out;
}

Representation ThreePointLinePower(int t) {
  if (t < 1) throw UsageError("three_point_lines needs t >= 1");
  Representation out = Uniform(2, 3);
  for (int i = 1; i < t; ++i) out = DirectSum(out, Uniform(2, 3));
  return out;
}

Representation RandomInstance(int d, int m, int conductor, std::uint64_t seed, int bound,
                              int max_tries) {
  if (d < 0 || d > m) throw UsageError("random instance needs 0 <= d <= m");
  if (conductor < 1 || conductor > kMaxRandomConductor) {
    throw UsageError("random instances support conductors 1.." +
                     std::to_string(kMaxRandomConductor));
  }
  if (bound < 1) throw UsageError("coefficient bound must be positive");
  const int phi = EulerPhi(conductor);
  Rng rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<CyclotomicNumber> entries;
    entries.reserve(static_cast<std::size_t>(d) * m);
    for (int i = 0; i < d * m; ++i) {
      std::vector<Rational> coords(phi);
      for (Rational& c : coords) {
        c = Rational(mpz_class(rng.Uniform(-bound, bound)), mpz_class(rng.Uniform(1, bound)));
        c.canonicalize();
      }
      entries.push_back(CyclotomicNumber::FromPolynomial(conductor, std::move(coords)));
    }
    Representation rep(conductor, d, m, std::move(entries));
    const Matroid matroid(rep);
    if (matroid.Rank() == d && matroid.IsSimple()) return rep;
  }
  throw GenerationError("no simple rank-" + std::to_string(d) + " instance after " +
                        std::to_string(max_tries) + " tries");
}

const std::vector<CatalogEntry>& CatalogEntries() {
  static const std::vector<CatalogEntry> entries = MakeEntries();
  return entries;
}

bool IsCatalogRef(std::string_view ref) {
  const std::string_view name = ref.substr(0, ref.find(':'));
  for (const CatalogEntry& entry : CatalogEntries())
    if (entry.name == name) return true;
  return false;
}

Representation BuildCatalogRef(std::string_view ref) {
  const std::size_t colon = ref.find(':');
  const std::string_view name = ref.substr(0, colon);
  const CatalogEntry* entry = nullptr;
  for (const CatalogEntry& e : CatalogEntries())
    if (e.name == name) entry = &e;
  if (!entry) throw UsageError("unknown catalog entry '" + std::string(name) + "'");

  std::vector<long> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = ref.substr(colon + 1);
    while (true) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      long value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size() || item.empty()) {
        throw UsageError("bad parameter '" + std::string(item) + "' in '" + std::string(ref) +
                         "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (params.size() > entry->defaults.size()) {
    throw UsageError("'" + entry->name + "' takes at most " +
                     std::to_string(entry->defaults.size()) + " parameters");
  }
  for (std::size_t i = params.size(); i < entry->defaults.size(); ++i) {
    params.push_back(entry->defaults[i]);
  }
  return entry->build(params);
}

}  // namespace cyclomatroid
