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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "wps/polynomials.hpp"
#include "wps/weights.hpp"

namespace wps {

/// Element of F_q(t) in lowest terms with monic denominator; zero is 0/1.
class RationalFunction {
 public:
  RationalFunction(Poly num, Poly den);
  explicit RationalFunction(Poly num) : RationalFunction(num, Poly::one(num.field())) {}
  /// "num/den" or "num" in polynomial syntax.
  static RationalFunction parse(const Field& field, std::string_view text);

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  const Field& field() const noexcept { return num_.field(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

/// A place of F_q(t): a monic irreducible polynomial or the place at infinity.
class Place {
 public:
  /// Normalizes to monic; throws unless the polynomial is irreducible.
  static Place finite(const Poly& pi);
  static Place infinity() { return Place(); }

  bool is_infinity() const noexcept { return !pi_.has_value(); }
  /// The irreducible of a finite place.
  const Poly& poly() const { return *pi_; }
  int degree() const noexcept { return pi_ ? pi_->degree() : 1; }

  /// Finite places in canonical polynomial order, infinity last.
  friend std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept;
  friend bool operator==(const Place& a, const Place& b) noexcept { return (a <=> b) == 0; }

  std::string to_string() const;

 private:
  Place() = default;
  explicit Place(Poly pi) : pi_(std::move(pi)) {}
  std::optional<Poly> pi_;
};

/// Finite formal sum of places; zero coefficients are never stored.
class Divisor {
 public:
  Divisor() = default;

  long long coefficient(const Place& p) const;
  void add_term(const Place& p, long long n);
  const std::map<Place, long long>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_effective() const noexcept;

  /// sum n_P deg(P)
  long long degree() const noexcept;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  Divisor operator-() const;
  friend bool operator==(const Divisor&, const Divisor&) = default;
  /// Coefficientwise <=.
  friend bool leq(const Divisor& a, const Divisor& b);
  /// Coefficientwise minimum; absent coefficients count as 0.
  friend Divisor inf(const Divisor& a, const Divisor& b);

  std::string to_string() const;

 private:
  std::map<Place, long long> terms_;
};

/// ord_P(y) for y != 0.
long long ord_at(const Place& place, const RationalFunction& y);
/// (y)_w = sum floor(ord_P(y) / w) P.
Divisor weighted_divisor(const RationalFunction& y, unsigned w);
/// The principal divisor (y) = (y)_1.
inline Divisor divisor_of(const RationalFunction& y) { return weighted_divisor(y, 1); }

/// -deg(inf over nonzero i of (y_i)_{w_i}).
long long height(std::span<const RationalFunction> coords, const WeightVector& w);

/// Floor division for a possibly negative numerator and positive divisor.
constexpr long long floor_div(long long a, long long b) noexcept {
  const long long q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

}  // namespace wps
