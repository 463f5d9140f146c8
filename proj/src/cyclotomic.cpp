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

#include "cyclomatroid/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "cyclomatroid/errors.hpp"

namespace cyclomatroid {
namespace {

using Poly = std::vector<Rational>;

void Trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division of polynomials over Q; `divisor` must be nonzero and trimmed.
std::pair<Poly, Poly> DivMod(Poly dividend, const Poly& divisor) {
  Trim(dividend);
  if (dividend.size() < divisor.size()) return {Poly{}, dividend};
  Poly quotient(dividend.size() - divisor.size() + 1);
  const Rational& lead = divisor.back();
  for (std::size_t i = dividend.size(); i-- > divisor.size() - 1;) {
    if (dividend[i] == 0) continue;
    Rational factor = dividend[i] / lead;
    std::size_t shift = i + 1 - divisor.size();
    quotient[shift] = factor;
    for (std::size_t j = 0; j < divisor.size(); ++j) {
      dividend[shift + j] -= factor * divisor[j];
    }
  }
  Trim(dividend);
  Trim(quotient);
  return {quotient, dividend};
}

Poly Multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly Subtract(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  Trim(a);
  return a;
}

// Reduces p in place modulo the monic polynomial phi and pads to deg(phi).
void ReduceModulo(Poly& p, const std::vector<mpz_class>& phi) {
  const std::size_t degree = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > degree;) {
    if (p[i] == 0) continue;
    Rational top = p[i];
    std::size_t shift = i - degree;
    for (std::size_t j = 0; j <= degree; ++j) p[shift + j] -= top * phi[j];
  }
  p.resize(degree);
}

void CheckConductor(int n) {
  if (n < 1) throw UsageError("conductor must be positive");
}

void CheckSameConductor(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() != b.conductor()) {
    throw UsageError("conductor mismatch: " + std::to_string(a.conductor()) +
                     " vs " + std::to_string(b.conductor()));
  }
}

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  void SkipSpaces() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool AtEnd() {
    SkipSpaces();
    return pos_ >= text_.size();
  }
  char Peek() {
    SkipSpaces();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool Consume(char c) {
    if (Peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string Digits() {
    SkipSpaces();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void Fail(const std::string& what) const {
    // Column is 1-based; ParseError's line is patched by the matrix reader.
    throw ParseError(what, 1, pos_ + 1);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational ParseRational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    return j;
  };
  std::size_t end = digits(i);
  if (end == i) throw UsageError("malformed rational '" + std::string(text) + "'");
  mpz_class num(std::string(text.substr(i, end - i)));
  mpz_class den = 1;
  if (end < text.size() && text[end] == '/') {
    std::size_t den_end = digits(end + 1);
    if (den_end == end + 1)
      throw UsageError("malformed rational '" + std::string(text) + "'");
    den = mpz_class(std::string(text.substr(end + 1, den_end - end - 1)));
    end = den_end;
  }
  if (end != text.size())
    throw UsageError("malformed rational '" + std::string(text) + "'");
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

int EulerPhi(int n) {
  CheckConductor(n);
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& CyclotomicPolynomial(int n) {
  CheckConductor(n);
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<mpz_class>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  Poly numerator(n + 1);
  numerator[0] = -1;
  numerator[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& phi_d = CyclotomicPolynomial(d);
    Poly divisor(phi_d.begin(), phi_d.end());
    auto [quotient, remainder] = DivMod(numerator, divisor);
    if (!remainder.empty()) {
      throw InternalInconsistency("cyclotomic division left a remainder");
    }
    numerator = std::move(quotient);
  }
  auto phi = std::make_unique<std::vector<mpz_class>>();
  for (const Rational& c : numerator) {
    if (c.get_den() != 1) {
      throw InternalInconsistency("cyclotomic polynomial is not integral");
    }
    phi->push_back(c.get_num());
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(phi));
  return *it->second;
}

CyclotomicNumber::CyclotomicNumber() : conductor_(1), coeffs_(1) {}

CyclotomicNumber CyclotomicNumber::Zero(int conductor) {
  return CyclotomicNumber(conductor, Poly(EulerPhi(conductor)));
}

CyclotomicNumber CyclotomicNumber::One(int conductor) {
  return Embed(Rational(1), conductor);
}

CyclotomicNumber CyclotomicNumber::Zeta(int conductor) {
  Poly p(2);
  p[1] = 1;
  return FromPolynomial(conductor, std::move(p));
}

CyclotomicNumber CyclotomicNumber::Embed(const Rational& q, int conductor) {
  Poly p(EulerPhi(conductor));
  p[0] = q;
  return CyclotomicNumber(conductor, std::move(p));
}

CyclotomicNumber CyclotomicNumber::FromPolynomial(int conductor, Poly coefficients) {
  const auto& phi = CyclotomicPolynomial(conductor);
  const std::size_t degree = phi.size() - 1;
  if (coefficients.size() < degree) coefficients.resize(degree);
  ReduceModulo(coefficients, phi);
  return CyclotomicNumber(conductor, std::move(coefficients));
}

CyclotomicNumber CyclotomicNumber::Parse(std::string_view text, int conductor) {
  CheckConductor(conductor);
  TextCursor cursor(text);
  Poly poly(1);
  bool first = true;
  if (cursor.AtEnd()) cursor.Fail("empty scalar");
  while (!cursor.AtEnd()) {
    bool negative = false;
    if (cursor.Consume('-')) {
      negative = true;
    } else if (!cursor.Consume('+') && !first) {
      cursor.Fail("expected '+' or '-'");
    }
    first = false;

    Rational coefficient(1);
    bool has_number = false;
    std::string num = cursor.Digits();
    if (!num.empty()) {
      has_number = true;
      mpz_class den = 1;
      if (cursor.Consume('/')) {
        std::string den_text = cursor.Digits();
        if (den_text.empty()) cursor.Fail("expected denominator");
        den = mpz_class(den_text);
        if (den == 0) cursor.Fail("zero denominator");
      }
      coefficient = Rational(mpz_class(num), den);
      coefficient.canonicalize();
      cursor.Consume('*');
    }
    std::size_t exponent = 0;
    if (cursor.Consume('z')) {
      exponent = 1;
      if (cursor.Consume('^')) {
        std::string e = cursor.Digits();
        if (e.empty()) cursor.Fail("expected exponent");
        if (e.size() > 6) cursor.Fail("exponent too large");
        exponent = std::stoul(e);
      }
    } else if (!has_number) {
      cursor.Fail("expected a number or 'z'");
    }
    if (negative) coefficient = -coefficient;
    if (poly.size() <= exponent) poly.resize(exponent + 1);
    poly[exponent] += coefficient;
  }
  return FromPolynomial(conductor, std::move(poly));
}

bool CyclotomicNumber::IsZero() const {
  for (const Rational& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::IsOne() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  Poly out = coeffs_;
  for (Rational& c : out) c = -c;
  return CyclotomicNumber(conductor_, std::move(out));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CheckSameConductor(a, b);
  Poly out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
  return CyclotomicNumber(a.conductor_, std::move(out));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CheckSameConductor(a, b);
  Poly out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs_[i];
  return CyclotomicNumber(a.conductor_, std::move(out));
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CheckSameConductor(a, b);
  if (a.coeffs_.size() == 1) {
    return CyclotomicNumber(a.conductor_, Poly{a.coeffs_[0] * b.coeffs_[0]});
  }
  Poly product = Multiply(a.coeffs_, b.coeffs_);
  if (product.empty()) return CyclotomicNumber::Zero(a.conductor_);
  ReduceModulo(product, CyclotomicPolynomial(a.conductor_));
  return CyclotomicNumber(a.conductor_, std::move(product));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CheckSameConductor(a, b);
  return a * b.Inverse();
}

CyclotomicNumber CyclotomicNumber::Inverse() const {
  if (IsZero()) throw DivisionByZero("inverse of zero");
  if (coeffs_.size() == 1) {
    return CyclotomicNumber(conductor_, Poly{1 / coeffs_[0]});
  }
  // Extended Euclid on (Phi_n, a): tracks s with s * a == r (mod Phi_n).
  const auto& phi_int = CyclotomicPolynomial(conductor_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = coeffs_;
  Trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = DivMod(r0, r1);
    Poly s = Subtract(s0, Multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_n is irreducible, so the gcd r0 is a nonzero constant.
  if (r0.size() != 1) {
    throw InternalInconsistency("cyclotomic polynomial has a nontrivial factor");
  }
  for (Rational& c : s0) c /= r0[0];
  return FromPolynomial(conductor_, std::move(s0));
}

CyclotomicNumber CyclotomicNumber::Pow(std::uint64_t exponent) const {
  CyclotomicNumber result = One(conductor_);
  CyclotomicNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string CyclotomicNumber::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = c.get_str();
    } else {
      if (c == 1) {
        term = "z";
      } else if (c == -1) {
        term = "-z";
      } else {
        term = c.get_str() + "z";
      }
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x) {
  return os << x.ToString();
}

}  // namespace cyclomatroid
