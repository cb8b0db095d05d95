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

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "wps/curves.hpp"
#include "wps/ratfun.hpp"
#include "wps/weights.hpp"

namespace wps {

/// #B_w(D_j + d D*): F_q^x orbits of nonzero tuples x with -inf_i (x_i)_{w_i} <= D,
/// from sum_{v != 0} gcd(v, q-1)/(q-1) prod_{i in v} (q^{l(w_i D)} - 1).
mpz_class bw_count(const CurveModel& curve, const WeightVector& w, std::size_t j, unsigned d);

/// Z(u, t) = sum_j sum_d prod_{i in u} q^{l(w_i (D_j + d D*))} t^d in closed form.
struct SubsetZeta {
  /// Q_u: finitely many corrections below the Riemann-Roch range.
  QPoly correction;
  /// P_u with Z(u, t) = P_u(t) / (1 - q^{|u|} t).
  QPoly numerator;
  RatFuncQ closed;
};
SubsetZeta zu_closed(const CurveModel& curve, const WeightVector& w, IndexSubset u);

struct WeightedDivisorZeta {
  /// series[d] = sum_j #B_w(D_j + d D*), d = 0..dmax.
  std::vector<mpz_class> series;
  /// Inclusion-exclusion over Z(u, t); checked against the series.
  RatFuncQ closed;
};
WeightedDivisorZeta zw(const CurveModel& curve, const WeightVector& w, unsigned dmax);

struct MainCoefficient {
  IndexSubset u = 0;
  mpq_class value;
};

/// The height zeta function sum_d A_d(w) t^d = Z_w(X, t) / Z(X, t) together with
/// its polynomial part and the coefficients a_u of the simple poles at q^{-|u|}.
struct WeightedZeta {
  CurveModel curve;
  WeightVector w;
  RatFuncQ zeta_x;
  RatFuncQ zw;
  RatFuncQ height_zeta;
  QPoly poly_part;
  /// deg(poly_part) + 1, or 0 when poly_part vanishes.
  unsigned d0 = 0;
  /// One entry per index subset u with |u| >= 2, in mask order.
  std::vector<MainCoefficient> main_coeffs;
};

/// Builds the height zeta and asserts the quotient identity and pole structure.
WeightedZeta height_zeta(const CurveModel& curve, const WeightVector& w);

/// a_u = sum_{v >= u} gcd(v, q-1)(-1)^{#v-#u} h q^{#u(1-g)} / ((q-1) zeta_X(|u|)).
mpq_class main_coefficient(const CurveModel& curve, const WeightVector& w, IndexSubset u);

/// A_d(w) as the t^d coefficient of the height zeta function.
mpz_class ad_exact(const WeightedZeta& hz, unsigned d);
/// sum_{|u| >= 2} a_u q^{d|u|}, for d >= 1.
mpq_class ad_main(const WeightedZeta& hz, unsigned d);
unsigned d_threshold(const WeightedZeta& hz) noexcept;

/// Decomposition height_zeta = S(t) + sum_s A_s / (1 - q^s t) + N(t) / P(t) and
/// the resulting explicit error constants.
struct ErrorAnalysis {
  QPoly poly_part;
  /// N(t) over the zeta numerator P(t); zero for genus 0.
  QPoly remainder_numerator;
  /// sum |N_k|: |coefficient of N/P at d| <= C (d+1) q^{d/2}.
  mpq_class c_alpha;
  /// sum |S_k|.
  mpq_class c_poly;
  /// Second largest |u| with a_u != 0, or 0.
  unsigned s_second = 0;
  /// Relative error constant: |A_d / (a_w q^{|w| d}) - 1| <= C'' q^{-d w_min}.
  /// Present when |w| >= 2 and (genus 0 or #w >= 2).
  std::optional<mpq_class> c_corollary;
  mpq_class leading;
};

ErrorAnalysis analyze_error(const WeightedZeta& hz);

/// |exact - main| <= C (d+1) q^{d/2} + C' q^{d s'}, decided exactly.
bool within_error_bound(const ErrorAnalysis& ea, std::uint32_t q, unsigned d, const mpz_class& exact,
                        const mpq_class& main);
/// |exact / (a_w q^{|w| d}) - 1| <= C'' q^{-d w_min}, decided exactly.
bool within_corollary_bound(const ErrorAnalysis& ea, const WeightVector& w, std::uint32_t q, unsigned d,
                            const mpz_class& exact);

/// q^e as an exact rational; e may be negative.
mpq_class qpow(std::uint32_t q, long long e);

}  // namespace wps
