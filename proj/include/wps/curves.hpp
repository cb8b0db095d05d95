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

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "wps/finite_field.hpp"
#include "wps/ratfun.hpp"

namespace wps {

enum class CurveKind { Genus0, Elliptic };

/// Affine point (x, y) or the point at infinity O.
struct ECPoint {
  bool infinity = true;
  Code x = 0;
  Code y = 0;

  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(Code x, Code y) { return {false, x, y}; }
  friend bool operator==(const ECPoint&, const ECPoint&) = default;
};

/// Zeta data of a base curve: Z(X, t) = P(t) / ((1 - t)(1 - q t)).
struct ZetaData {
  /// Integer coefficients of P(t), ascending.
  std::vector<long long> numerator;
  std::uint32_t q = 0;
  unsigned genus = 0;
  long long class_number = 0;

  QPoly numerator_poly() const;
  RatFuncQ zeta() const;
  std::string numerator_string() const;
};

/// Base curve X over F_q: the projective line, or a short Weierstrass elliptic
/// curve y^2 = x^3 + a x + b with p >= 5. The distinguished degree-one divisor
/// D* is the place at infinity of P^1, respectively the point O.
class CurveModel {
 public:
  static CurveModel genus0(const Field& field);
  static CurveModel elliptic(const Field& field, Code a, Code b);
  /// "genus0" or "elliptic:a=A,b=B"; A and B are integers (reduced mod p) or
  /// coordinate tuples "(c0,...)".
  static CurveModel parse(const Field& field, std::string_view spec);

  CurveKind kind() const noexcept;
  const Field& field() const noexcept;
  unsigned genus() const noexcept;
  Code a() const noexcept;
  Code b() const noexcept;
  std::string to_string() const;

  // Group law on E(F_q); only valid for elliptic curves.
  bool on_curve(const ECPoint& p) const;
  ECPoint add(const ECPoint& p, const ECPoint& r) const;
  ECPoint neg(const ECPoint& p) const;
  ECPoint smul(long long k, const ECPoint& p) const;

  /// h: 1 for genus 0, #E(F_q) for elliptic curves.
  long long class_number() const noexcept;
  /// One representative per degree-zero class. Elliptic: the points P_j of
  /// E(F_q) standing for (P_j) - (O), O first. Genus 0: the trivial class.
  const std::vector<ECPoint>& class_reps() const noexcept;

  /// l(u (D_j + d D*)) by Riemann-Roch case analysis.
  long long rr_dim(std::size_t j, unsigned u, unsigned d) const;

  ZetaData zeta_data() const;
  /// zeta_X(s) = Z(X, q^{-s}) for s >= 2.
  mpq_class zeta_value(int s) const;

 private:
  struct Data;
  explicit CurveModel(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  void require_point(const ECPoint& p) const;
  std::shared_ptr<const Data> d_;
};

}  // namespace wps
