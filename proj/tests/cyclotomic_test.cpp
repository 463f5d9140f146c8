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

#include "cyclomatroid/cyclotomic.hpp"
#include "cyclomatroid/errors.hpp"
#include "cyclomatroid/random.hpp"

namespace cyclomatroid {
namespace {

constexpr int kIterations = 1000;

CyclotomicNumber Q(const char* text, int n) { return CyclotomicNumber::Parse(text, n); }

CyclotomicNumber RandomElement(Rng& rng, int n) {
  std::vector<Rational> coeffs(EulerPhi(n));
  for (Rational& c : coeffs) {
    c = Rational(mpz_class(rng.Uniform(-9, 9)), mpz_class(rng.Uniform(1, 9)));
    c.canonicalize();
  }
  return CyclotomicNumber::FromPolynomial(n, std::move(coeffs));
}

// Square-and-multiply written independently of CyclotomicNumber::Pow.
CyclotomicNumber SquaringPower(CyclotomicNumber base, unsigned e) {
  CyclotomicNumber acc = CyclotomicNumber::One(base.conductor());
  for (; e > 0; e >>= 1) {
    if (e & 1u) acc = acc * base;
    base = base * base;
  }
  return acc;
}

TEST(CyclotomicPolynomialTest, KnownSmallCases) {
  auto as_longs = [](int n) {
    std::vector<long> out;
    for (const mpz_class& c : CyclotomicPolynomial(n)) out.push_back(c.get_si());
    return out;
  };
  EXPECT_EQ(as_longs(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(as_longs(3), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(as_longs(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(as_longs(8), (std::vector<long>{1, 0, 0, 0, 1}));
  EXPECT_EQ(as_longs(12), (std::vector<long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(EulerPhi(1), 1);
  EXPECT_EQ(EulerPhi(12), 4);
  EXPECT_EQ(EulerPhi(30), 8);
}

TEST(CyclotomicTest, AddExamples) {
  EXPECT_EQ(Q("1/2", 1) + Q("1/3", 1), Q("5/6", 1));
  const auto zeta = CyclotomicNumber::Zeta(3);
  EXPECT_EQ(zeta + zeta * zeta, Q("-1", 3));

  Rng rng(11);
  for (int i = 0; i < kIterations; ++i) {
    const int n = (i % 3 == 0) ? 1 : (i % 3 == 1 ? 3 : 4);
    const auto x = RandomElement(rng, n);
    EXPECT_EQ(x + CyclotomicNumber::Zero(n), x);
  }
}

TEST(CyclotomicTest, MulExamples) {
  const auto i = CyclotomicNumber::Zeta(4);
  EXPECT_EQ(i * i, Q("-1", 4));
  const auto w = CyclotomicNumber::Zeta(3);
  EXPECT_EQ(w * w, Q("-1-z", 3));
  // zeta_3^3 = 1 by the squaring oracle, so w * w^2 = w * (-1 - w) = 1.
  EXPECT_TRUE(SquaringPower(w, 3).IsOne());
  EXPECT_EQ(w * Q("-1-z", 3), CyclotomicNumber::One(3));
}

TEST(CyclotomicTest, InverseExamples) {
  EXPECT_EQ(Q("2", 1).Inverse(), Q("1/2", 1));
  const auto w = CyclotomicNumber::Zeta(3);
  EXPECT_EQ(w.Inverse(), Q("-1-z", 3));
  EXPECT_TRUE((w * Q("-1-z", 3)).IsOne());
  const auto one_plus_i = Q("1+z", 4);
  EXPECT_EQ(one_plus_i.Inverse(), Q("1/2-1/2z", 4));
  EXPECT_TRUE((one_plus_i * Q("1/2-1/2z", 4)).IsOne());
}

TEST(CyclotomicTest, InverseOfZeroThrows) {
  EXPECT_THROW(CyclotomicNumber::Zero(5).Inverse(), DivisionByZero);
  EXPECT_THROW(Q("1", 3) / CyclotomicNumber::Zero(3), DivisionByZero);
}

TEST(CyclotomicTest, EmbedExamples) {
  EXPECT_TRUE(CyclotomicNumber::Embed(Rational(0), 3).IsZero());
  EXPECT_EQ(CyclotomicNumber::Embed(Rational(0), 3), CyclotomicNumber::Zero(3));
  EXPECT_TRUE(CyclotomicNumber::Embed(Rational(1), 4).IsOne());
  EXPECT_EQ(CyclotomicNumber::Embed(Rational(5, 7), 1).ToString(), "5/7");
  EXPECT_EQ(CyclotomicNumber::Embed(Rational(5, 7), 3).coefficients().size(), 2u);
}

TEST(CyclotomicTest, ConductorMismatchIsRejected) {
  EXPECT_THROW(Q("1", 3) + Q("1", 4), UsageError);
  EXPECT_THROW(Q("1", 3) * Q("1", 1), UsageError);
  EXPECT_THROW(CyclotomicNumber::Zero(0), UsageError);
}

TEST(CyclotomicTest, RootsOfUnityArePrimitive) {
  for (int n : {1, 3, 4, 5, 8, 12}) {
    const auto zeta = CyclotomicNumber::Zeta(n);
    CyclotomicNumber power = CyclotomicNumber::One(n);
    for (int m = 1; m < n; ++m) {
      power = power * zeta;
      EXPECT_FALSE(power.IsOne()) << "zeta_" << n << "^" << m;
    }
    power = power * zeta;
    EXPECT_TRUE(power.IsOne()) << "zeta_" << n << "^" << n;
    EXPECT_TRUE(zeta.Pow(static_cast<std::uint64_t>(n)).IsOne());
  }
}

TEST(CyclotomicTest, FieldAxiomsOnRandomTriples) {
  Rng rng(2024);
  for (int iter = 0; iter < kIterations; ++iter) {
    const int n = std::vector<int>{1, 3, 4, 5, 8, 12}[iter % 6];
    const auto a = RandomElement(rng, n);
    const auto b = RandomElement(rng, n);
    const auto c = RandomElement(rng, n);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).IsZero());
    if (!a.IsZero()) {
      ASSERT_TRUE((a * a.Inverse()).IsOne()) << a;
    }
  }
}

TEST(CyclotomicTest, ReductionIsIdempotent) {
  Rng rng(5);
  for (int iter = 0; iter < kIterations; ++iter) {
    const int n = std::vector<int>{3, 4, 5, 12}[iter % 4];
    const auto a = RandomElement(rng, n);
    std::vector<Rational> coeffs(a.coefficients().begin(), a.coefficients().end());
    ASSERT_EQ(CyclotomicNumber::FromPolynomial(n, coeffs), a);
  }
}

TEST(CyclotomicTest, TextRoundTrip) {
  Rng rng(77);
  for (int iter = 0; iter < kIterations; ++iter) {
    const int n = std::vector<int>{1, 3, 4, 5, 8}[iter % 5];
    const auto a = RandomElement(rng, n);
    ASSERT_EQ(CyclotomicNumber::Parse(a.ToString(), n), a) << a;
  }
}

TEST(CyclotomicTest, ParsingAndPrinting) {
  EXPECT_EQ(Q("1/2+3z-z^2", 5).ToString(), "1/2+3z-z^2");
  EXPECT_EQ(Q(" 1/2 + 3 z - z ^ 2 ", 5), Q("1/2+3z-z^2", 5));
  EXPECT_EQ(Q("2*z", 4), Q("2z", 4));
  EXPECT_EQ(Q("z^2", 3).ToString(), "-1-z");
  EXPECT_EQ(Q("z^4", 4).ToString(), "1");
  EXPECT_EQ(Q("z", 1).ToString(), "1");
  EXPECT_EQ(Q("-0", 3).ToString(), "0");
  EXPECT_EQ(Q("4/6", 1).ToString(), "2/3");
  EXPECT_EQ(Q("-1/2z", 4).ToString(), "-1/2z");
}

TEST(CyclotomicTest, MalformedScalars) {
  for (const char* bad : {"", "1/0", "1/", "z^", "2 3", "1++z", "x", "1z2", "/3"}) {
    EXPECT_THROW(Q(bad, 3), ParseError) << "'" << bad << "'";
  }
  try {
    Q("1+2w", 3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
  }
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(ParseRational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(ParseRational("+7"), Rational(7));
  EXPECT_THROW(ParseRational("1/0"), UsageError);
  EXPECT_THROW(ParseRational("1.5"), UsageError);
}

}  // namespace
}  // namespace cyclomatroid
