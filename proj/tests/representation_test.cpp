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

#include <gtest/gtest.h>

#include <filesystem>

#include "cyclomatroid/catalog.hpp"
#include "cyclomatroid/errors.hpp"
#include "cyclomatroid/matroid.hpp"
#include "cyclomatroid/representation.hpp"
#include "oracles.hpp"

namespace cyclomatroid {
namespace {

TEST(MatrixFormatTest, ParsesAndPrintsCanonically) {
  const Representation rep = ParseMatrix(
      "# a comment\n"
      "conductor 3\n"
      "size 2 3\n"
      "labels a b c\n"
      "\n"
      "1 0 z^2\n"
      "0 1/2 3z\n");
  EXPECT_EQ(rep.conductor(), 3);
  EXPECT_EQ(rep.rows(), 2u);
  EXPECT_EQ(rep.cols(), 3u);
  EXPECT_EQ(rep.labels(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(rep.at(0, 2).ToString(), "-1-z");
  EXPECT_EQ(FormatMatrix(rep),
            "conductor 3\nsize 2 3\nlabels a b c\n1 0 -1-z\n0 1/2 3z\n");
}

TEST(MatrixFormatTest, DefaultLabels) {
  const Representation rep = ParseMatrix("conductor 1\nsize 1 3\n1 2 3\n");
  EXPECT_EQ(rep.labels(), (std::vector<std::string>{"e1", "e2", "e3"}));
}

TEST(MatrixFormatTest, RoundTripsEveryCatalogEntry) {
  for (const char* ref : {"ag23", "uniform:3,5", "motzkin", "ag23_power:2", "random:4,8,4,1,10",
                          "uniform:0,3", "three_point_lines:3"}) {
    const Representation rep = BuildCatalogRef(ref);
    const std::string text = FormatMatrix(rep);
    EXPECT_EQ(ParseMatrix(text), rep) << ref;
    EXPECT_EQ(FormatMatrix(ParseMatrix(text)), text) << ref;
  }
}

TEST(MatrixFormatTest, EmptyRepresentationRoundTrips) {
  const Representation empty(1, 0, 0, {});
  EXPECT_EQ(ParseMatrix(FormatMatrix(empty)), empty);
  const Representation loops(4, 0, 2, {});
  EXPECT_EQ(ParseMatrix(FormatMatrix(loops)), loops);
}

TEST(MatrixFormatTest, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "cyclomatroid_rep_test.mat";
  WriteMatrixFile(Ag23(), path);
  EXPECT_EQ(ReadMatrixFile(path), Ag23());
  std::filesystem::remove(path);
  EXPECT_THROW(ReadMatrixFile(path), ParseError);
}

void ExpectParseError(const std::string& text, std::size_t line, std::size_t column) {
  try {
    ParseMatrix(text);
    FAIL() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(MatrixFormatTest, DiagnosticsCarryLineAndColumn) {
  ExpectParseError("cond 1\nsize 1 1\n1\n", 1, 1);
  ExpectParseError("conductor 0\nsize 1 1\n1\n", 1, 11);
  ExpectParseError("conductor 1\nsize 1\n1\n", 2, 1);
  ExpectParseError("conductor 1\nsize 1 x\n1\n", 2, 8);
  ExpectParseError("conductor 1\nsize 1 2\nlabels a a\n1 2\n", 3, 10);
  ExpectParseError("conductor 1\nsize 1 2\nlabels a\n1 2\n", 3, 1);
  ExpectParseError("conductor 1\nsize 2 2\n1 2\n", 4, 1);
  ExpectParseError("conductor 1\nsize 1 2\n1 2 3\n", 3, 1);
  ExpectParseError("conductor 3\nsize 1 2\n1   1+q\n", 3, 7);
  ExpectParseError("conductor 1\nsize 1 1\n1\n2\n", 4, 1);
}

TEST(RepresentationTest, ConstructorChecks) {
  EXPECT_THROW(Representation(1, 1, 2, {CyclotomicNumber::One(1)}), UsageError);
  EXPECT_THROW(Representation(3, 1, 1, {CyclotomicNumber::One(1)}), UsageError);
  EXPECT_THROW(Representation(1, 1, 2, {CyclotomicNumber::One(1), CyclotomicNumber::One(1)},
                              {"a", "a"}),
               UsageError);
}

TEST(DirectSumTest, Examples) {
  const Representation lines = DirectSum(Uniform(2, 3), Uniform(2, 3));
  EXPECT_EQ(lines.cols(), 6u);
  EXPECT_EQ(Matroid(lines).Rank(), 4);

  const Representation two_planes = DirectSum(Ag23(), Ag23());
  EXPECT_EQ(two_planes.cols(), 18u);
  EXPECT_EQ(Matroid(two_planes).Rank(), 6);

  const Representation empty(1, 0, 0, {});
  EXPECT_EQ(DirectSum(Ag23(), empty), Ag23());
  EXPECT_EQ(DirectSum(empty, Ag23()), Ag23());
}

TEST(DirectSumTest, SummandsAreFlatsAndRanksAdd) {
  const Representation a = Ag23();
  const Representation b = DirectSum(Uniform(2, 3), Uniform(3, 4));
  // Lift the rational block into Q(zeta_3) first, as the single-conductor rule requires.
  std::vector<CyclotomicNumber> lifted;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      lifted.push_back(CyclotomicNumber::Embed(b.at(r, c).coefficients()[0], 3));
  const Representation b3(3, b.rows(), b.cols(), lifted, {"p1", "p2", "p3", "p4", "p5", "p6", "p7"});
  const Matroid sum(DirectSum(a, b3));
  EXPECT_EQ(sum.label(9), "p1");
  ElementSet first(sum.size());
  for (std::size_t i = 0; i < 9; ++i) first.Insert(i);
  const ElementSet second = sum.Ground() - first;
  EXPECT_TRUE(sum.IsFlat(first));
  EXPECT_TRUE(sum.IsFlat(second));
  EXPECT_EQ(sum.Rank(), Matroid(a).Rank() + Matroid(b3).Rank());
  EXPECT_THROW(DirectSum(a, b), UsageError);
}

TEST(ColumnRankTest, AgreesWithMinorOracle) {
  for (const char* ref : {"ag23", "uniform:3,6", "random:3,7,4,9,10", "random:4,7,3,2,4"}) {
    const Representation rep = BuildCatalogRef(ref);
    const std::vector<int> ranks = oracle::AllRanks(rep);
    for (std::uint32_t mask = 0; mask < ranks.size(); ++mask) {
      const auto cols = oracle::Members(mask);
      ASSERT_EQ(static_cast<int>(ColumnRank(rep, cols)), ranks[mask]) << ref << " mask " << mask;
    }
  }
}

TEST(ProjectTest, ContractionMatchesRankFormula) {
  const Matroid m(Ag23Power(2));
  const Flat point = m.Closure(ElementSet(m.size(), {0}));
  const Flat line = m.Closure(ElementSet(m.size(), {9, 10}));
  const Matroid without_point = m.Contract(point);
  const Matroid minor =
      without_point.Contract(without_point.Closure(without_point.Import(m, line.elements)));
  const Representation projected = minor.Project();
  EXPECT_EQ(projected.rows(), 6u - 3u);
  EXPECT_EQ(projected.labels(), minor.labels());
  const Matroid rebuilt(projected);
  oracle::ForEachSubset(minor.size(), 3, [&](const std::vector<std::size_t>& s) {
    const ElementSet x = ElementSet::Of(minor.size(), s);
    ASSERT_EQ(rebuilt.Rank(x), minor.Rank(x));
  });
  EXPECT_EQ(rebuilt.Rank(), minor.Rank());
}

}  // namespace
}  // namespace cyclomatroid
