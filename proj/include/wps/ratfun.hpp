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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wps {

/// Ascending coefficients over Q with no trailing zeros.
using QPoly = std::vector<mpq_class>;

namespace qpoly {

void normalize(QPoly& f);
int degree(const QPoly& f) noexcept;
QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const mpq_class& c);
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0, 0) is 0.
QPoly gcd(const QPoly& a, const QPoly& b);
mpq_class eval(const QPoly& f, const mpq_class& x);
/// 1 - c t
QPoly one_minus(const mpq_class& c);
/// Integer coefficients with content 1, e.g. "1 - 5*t + 4*t^2".
std::string to_string(const QPoly& f);

}  // namespace qpoly

/// Rational function over Q in lowest terms with monic denominator.
class RatFuncQ {
 public:
  RatFuncQ() : den_{mpq_class(1)} {}
  RatFuncQ(QPoly num, QPoly den);
  explicit RatFuncQ(QPoly num) : RatFuncQ(std::move(num), QPoly{mpq_class(1)}) {}
  static RatFuncQ constant(const mpq_class& c) { return RatFuncQ(QPoly{c}); }

  const QPoly& num() const noexcept { return num_; }
  const QPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.empty(); }
  bool is_polynomial() const noexcept { return den_.size() == 1; }

  friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
  friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
  RatFuncQ operator-() const;
  RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
  friend bool operator==(const RatFuncQ&, const RatFuncQ&) = default;

  /// Whether f has a power series expansion at t = 0.
  bool has_expansion() const { return !den_.empty() && den_[0] != 0; }
  /// Taylor coefficient of t^d via the recurrence sum_k den_k c_{d-k} = num_d.
  mpq_class coeff(unsigned d) const;
  /// Coefficients of t^0 .. t^{n-1}.
  std::vector<mpq_class> series(unsigned n) const;
  /// f = S + g with g proper.
  std::pair<QPoly, RatFuncQ> poly_part() const;
  mpq_class eval(const mpq_class& t) const;

  /// "P(t) / Q(t)" with coprime integer coefficients and positive Q(0).
  std::string to_string() const;
  /// (numerator, denominator) scaled as in to_string().
  std::pair<QPoly, QPoly> integer_cleared() const;

 private:
  QPoly num_;
  QPoly den_;
};

/// True iff coeff(d) == coeffs[d] for every provided d.
bool match_series(const RatFuncQ& f, std::span<const mpq_class> coeffs);

/// "a/b" or "a" for integers.
std::string to_fraction_string(const mpq_class& x);

}  // namespace wps
