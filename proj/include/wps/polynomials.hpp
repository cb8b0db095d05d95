// Copyright 2026 The wps Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wps/finite_field.hpp"

namespace wps {

/// Dense univariate polynomial over F_q in the variable t. Coefficients are
/// stored ascending with no trailing zeros, so the zero polynomial is empty.
class Poly {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Code> coeffs);

  static Poly constant(const Field& field, Code c) { return Poly(field, {c}); }
  static Poly one(const Field& field) { return constant(field, 1); }
  /// c t^n
  static Poly monomial(const Field& field, Code c, unsigned n);
  /// t - c
  static Poly linear(const Field& field, Code c);
  /// Parses ascending comma-separated coefficients ("1,0,1") or an expression
  /// in t ("t^2 + 1"); extension-field coefficients are written as coordinate
  /// tuples "(c0,c1,...)".
  static Poly parse(const Field& field, std::string_view text);

  const Field& field() const noexcept { return field_; }
  const std::vector<Code>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Code leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Code coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  Poly monic() const;
  Poly scaled(Code c) const;
  Poly derivative() const;
  Code eval(Code x) const noexcept;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Canonical order: by degree, then coefficientwise from the leading term down.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

  /// Human-readable form, e.g. "t^2 + 2*t + 1".
  std::string to_string() const;
  /// Input syntax form, e.g. "1,2,1".
  std::string to_spec() const;

 private:
  void normalize() noexcept;
  void check_field(const Poly& o) const;

  Field field_;
  std::vector<Code> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) throws GcdOfZeros.
Poly gcd(const Poly& a, const Poly& b);
/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);
/// Largest e with pi^e | f, for nonzero f and nonconstant pi.
unsigned multiplicity(const Poly& f, const Poly& pi);

struct Factorization {
  FieldElement unit;
  /// (monic irreducible, multiplicity), sorted canonically.
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly expand() const;
  std::string to_string() const;
};

/// Squarefree, distinct-degree and equal-degree factorization. The seed only
/// drives the random splitting; the result is canonical.
Factorization factor(const Poly& f, std::uint64_t seed = 0);
bool is_irreducible(const Poly& f);

enum class PolySet { AllDegLe, MonicIrreducibleDegLe };

/// AllDegLe: every polynomial of degree <= m including zero (q^(m+1) of them).
/// MonicIrreducibleDegLe: each monic irreducible of degree 1..m once.
/// Both in canonical order.
std::vector<Poly> enumerate_polys(const Field& field, PolySet set, unsigned m);

/// The polynomial whose coefficient codes are the base-q digits of index,
/// least significant digit first, using at most len digits.
Poly poly_from_index(const Field& field, std::uint64_t index, unsigned len);

}  // namespace wps
