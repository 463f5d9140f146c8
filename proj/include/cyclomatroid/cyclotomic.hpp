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

#ifndef CYCLOMATROID_CYCLOTOMIC_HPP_
#define CYCLOMATROID_CYCLOTOMIC_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclomatroid {

// Canonical rationals: GMP keeps mpq_class reduced with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;

// Parses "p" or "p/q" (optional sign). Throws UsageError on malformed text or
// a zero denominator.
Rational ParseRational(std::string_view text);

int EulerPhi(int n);

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
// Computed once per conductor and cached for the lifetime of the process.
const std::vector<mpz_class>& CyclotomicPolynomial(int n);

/// An element of the cyclotomic field Q(zeta_n), stored as its coordinates in
/// the power basis 1, z, ..., z^(phi(n)-1) of Q[z]/Phi_n(z).
///
/// Values are immutable once built and always fully reduced, so two numbers
/// are equal exactly when their conductors and coefficient vectors match.
/// Mixing conductors in one operation throws UsageError.
class CyclotomicNumber {
 public:
  // Zero of Q.
  CyclotomicNumber();

  static CyclotomicNumber Zero(int conductor);
  static CyclotomicNumber One(int conductor);
  // The primitive root zeta_n itself; for n = 1 and n = 2 this is 1 and -1.
  static CyclotomicNumber Zeta(int conductor);
  static CyclotomicNumber Embed(const Rational& q, int conductor);
  // Reduces an arbitrary-length polynomial modulo Phi_n.
  static CyclotomicNumber FromPolynomial(int conductor,
                                         std::vector<Rational> coefficients);

  // Text form: a polynomial in `z`, for example "1/2+3z-z^2". Spaces between
  // tokens are accepted; exponents of any size are reduced modulo Phi_n.
  static CyclotomicNumber Parse(std::string_view text, int conductor);

  int conductor() const { return conductor_; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  bool IsZero() const;
  bool IsOne() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a,
                                    const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a,
                                    const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a,
                                    const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(const CyclotomicNumber& a,
                                    const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a,
                         const CyclotomicNumber& b) = default;

  // Throws DivisionByZero for zero.
  CyclotomicNumber Inverse() const;
  CyclotomicNumber Pow(std::uint64_t exponent) const;

  // Canonical whitespace-free text, accepted by Parse.
  std::string ToString() const;

 private:
  CyclotomicNumber(int conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  int conductor_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

}  // namespace cyclomatroid

#endif  // CYCLOMATROID_CYCLOTOMIC_HPP_
