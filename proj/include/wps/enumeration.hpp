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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wps/function_field.hpp"
#include "wps/polynomials.hpp"
#include "wps/weights.hpp"

namespace wps {

/// Polynomial representative of a point of P(w)(F_q(t)): w-primitive and the
/// smallest tuple of its F_q^x weighted orbit.
struct NormalizedPoint {
  std::vector<Poly> coords;
  WeightVector weights;

  IndexSubset support() const noexcept;
  /// max over nonzero i of ceil(deg x_i / w_i).
  long long height() const;
  std::string to_string() const;

  friend bool operator==(const NormalizedPoint& a, const NormalizedPoint& b) { return a.coords == b.coords; }
  friend auto operator<=>(const NormalizedPoint& a, const NormalizedPoint& b) { return a.coords <=> b.coords; }
};

/// True iff no monic irreducible pi has pi^{w_i} | x_i for every nonzero x_i.
bool is_w_primitive(std::span<const Poly> coords, const WeightVector& w);

/// Lexicographically smallest tuple (lambda^{w_i} x_i) over lambda in F_q^x,
/// for any nonzero tuple.
std::vector<Poly> orbit_min(std::span<const Poly> coords, const WeightVector& w);

/// orbit_min of a w-primitive tuple; throws NotPrimitive otherwise.
NormalizedPoint canonical_rep(std::span<const Poly> coords, const WeightVector& w);

/// #{lambda in F_q^x : lambda^{w_i} = 1 for all i in support} = gcd(w_support, q - 1).
unsigned stabilizer_order(IndexSubset support, const WeightVector& w, std::uint32_t q);

/// Scales an arbitrary nonzero tuple of rational functions by some lambda in
/// F_q(t)^x to a w-primitive polynomial tuple, then returns its canonical rep.
NormalizedPoint normalize_point(std::span<const RationalFunction> coords, const WeightVector& w);

/// Number of candidate tuples q^{sum (w_i d + 1)} scanned for height d,
/// saturating at UINT64_MAX.
std::uint64_t search_space(std::uint32_t q, const WeightVector& w, unsigned d) noexcept;

inline constexpr std::uint64_t kDefaultCap = 1'000'000'000ULL;

struct EnumerationOptions {
  /// Largest admissible search_space(); beyond it the call throws TooLarge.
  std::uint64_t cap = kDefaultCap;
  /// Worker count; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Called with (finished, total) top-level slices; may be called from workers.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct PointCount {
  /// A_d(w), the number of F_q^x orbits.
  mpz_class orbits;
  /// sum over w-primitive tuples of gcd(support, q - 1); equals orbits * (q - 1).
  mpz_class weighted_tuples;
  /// Number of w-primitive polynomial tuples of height d.
  mpz_class primitive_tuples;
};

/// Every point of height exactly d, sorted canonically.
std::vector<NormalizedPoint> enumerate_points(const Field& field, const WeightVector& w, unsigned d,
                                              const EnumerationOptions& options = {});

/// Stabilizer-weighted orbit count of the height-d primitive tuples.
PointCount count_points_detailed(const Field& field, const WeightVector& w, unsigned d,
                                 const EnumerationOptions& options = {});

inline mpz_class count_points(const Field& field, const WeightVector& w, unsigned d,
                              const EnumerationOptions& options = {}) {
  return count_points_detailed(field, w, d, options).orbits;
}

}  // namespace wps
