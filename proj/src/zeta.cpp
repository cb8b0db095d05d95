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

#include "wps/zeta.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wps/error.hpp"

namespace wps {

mpq_class qpow(std::uint32_t q, long long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(mpz_class(1), r) : mpq_class(r);
}

namespace {

int sign_of(unsigned k) { return k % 2 == 0 ? 1 : -1; }

// c_u = sum_{v >= u, v != 0} gcd(v, q-1) (-1)^{#v-#u} / (q-1)
mpq_class inclusion_exclusion_weight(const WeightVector& w, IndexSubset u, std::uint32_t q) {
  mpq_class c = 0;
  for (IndexSubset v : w.subsets()) {
    if (v == 0 || (v & u) != u) continue;
    c += sign_of(subset_size(v) - subset_size(u)) * static_cast<long>(w.gcd_with(v, q));
  }
  return c / mpq_class(static_cast<long>(q - 1));
}

mpq_class sum_abs(const QPoly& f) {
  mpq_class s = 0;
  for (const auto& c : f) s += abs(c);
  return s;
}

}  // namespace

mpz_class bw_count(const CurveModel& curve, const WeightVector& w, std::size_t j, unsigned d) {
  const std::uint32_t q = curve.field().q();
  std::vector<mpz_class> nonzero(w.length());  // #L_{w_i}(D) - 1
  for (std::size_t i = 0; i < w.length(); ++i) {
    mpz_ui_pow_ui(nonzero[i].get_mpz_t(), q, static_cast<unsigned long>(curve.rr_dim(j, w[i], d)));
    nonzero[i] -= 1;
  }
  mpz_class total = 0;
  for (IndexSubset v : w.subsets()) {
    if (v == 0) continue;
    mpz_class term = w.gcd_with(v, q);
    for (unsigned i : subset_indices(v)) term *= nonzero[i];
    total += term;
  }
  if (total % (q - 1) != 0) throw Error(Errc::Internal, "orbit count is not integral");
  return total / (q - 1);
}

SubsetZeta zu_closed(const CurveModel& curve, const WeightVector& w, IndexSubset u) {
  const std::uint32_t q = curve.field().q();
  const long long g = curve.genus();
  const long long h = curve.class_number();
  SubsetZeta z;
  const mpq_class base = mpz_class(static_cast<long>(h)) * qpow(q, static_cast<long long>(subset_size(u)) * (1 - g));
  const unsigned s = w.total(u);
  if (u != 0 && g > 0) {
    // Only d with min(u) d <= 2g - 2 fall outside the Riemann-Roch range.
    const long long dmax = (2 * g - 2) / w.min(u);
    for (long long d = 0; d <= dmax; ++d) {
      mpq_class sum = 0;
      for (std::size_t j = 0; j < curve.class_reps().size(); ++j) {
        mpq_class prod = 1;
        for (unsigned i : subset_indices(u)) prod *= qpow(q, curve.rr_dim(j, w[i], static_cast<unsigned>(d)));
        sum += prod;
      }
      z.correction.push_back(sum - base * qpow(q, static_cast<long long>(s) * d));
    }
    qpoly::normalize(z.correction);
  }
  const QPoly pole = qpoly::one_minus(qpow(q, s));
  z.numerator = qpoly::add(qpoly::mul(z.correction, pole), QPoly{base});
  z.closed = RatFuncQ(z.numerator, pole);
  return z;
}

WeightedDivisorZeta zw(const CurveModel& curve, const WeightVector& w, unsigned dmax) {
  const std::uint32_t q = curve.field().q();
  WeightedDivisorZeta r;
  for (IndexSubset u : w.subsets()) {
    const mpq_class c = inclusion_exclusion_weight(w, u, q);
    if (c != 0) r.closed += RatFuncQ::constant(c) * zu_closed(curve, w, u).closed;
  }
  std::vector<mpq_class> expected;
  for (unsigned d = 0; d <= dmax; ++d) {
    mpz_class total = 0;
    for (std::size_t j = 0; j < curve.class_reps().size(); ++j) total += bw_count(curve, w, j, d);
    r.series.push_back(total);
    expected.emplace_back(total);
  }
  if (!match_series(r.closed, expected))
    throw Error(Errc::Internal, "closed form of Z_w disagrees with the orbit-count series");
  return r;
}

mpq_class main_coefficient(const CurveModel& curve, const WeightVector& w, IndexSubset u) {
  const std::uint32_t q = curve.field().q();
  const long long g = curve.genus();
  const mpq_class factor = mpz_class(static_cast<long>(curve.class_number())) * qpow(q, static_cast<long long>(subset_size(u)) * (1 - g)) /
                           curve.zeta_value(static_cast<int>(w.total(u)));
  return inclusion_exclusion_weight(w, u, q) * factor;
}

WeightedZeta height_zeta(const CurveModel& curve, const WeightVector& w) {
  const std::uint32_t q = curve.field().q();
  const ZetaData zd = curve.zeta_data();
  WeightedZeta hz{curve, w, zd.zeta(), zw(curve, w, 10).closed, {}, {}, 0, {}};
  hz.height_zeta = hz.zw / hz.zeta_x;
  if (!(hz.height_zeta * hz.zeta_x == hz.zw)) throw Error(Errc::Internal, "height zeta identity failed");

  hz.poly_part = hz.height_zeta.poly_part().first;
  hz.d0 = hz.poly_part.empty() ? 0 : static_cast<unsigned>(qpoly::degree(hz.poly_part) + 1);

  // Simple poles only at q^{-s}, s = |u| >= 2, besides the zeros of P(t).
  std::set<unsigned> pole_orders;
  for (IndexSubset u : w.subsets())
    if (w.total(u) >= 2) pole_orders.insert(w.total(u));
  QPoly allowed = zd.numerator_poly();
  for (unsigned s : pole_orders) allowed = qpoly::mul(allowed, qpoly::one_minus(qpow(q, s)));
  if (!qpoly::divmod(allowed, hz.height_zeta.den()).second.empty())
    throw Error(Errc::Internal, "height zeta has an unexpected pole");

  for (IndexSubset u : w.subsets())
    if (w.total(u) >= 2) hz.main_coeffs.push_back({u, main_coefficient(curve, w, u)});
  return hz;
}

mpz_class ad_exact(const WeightedZeta& hz, unsigned d) {
  const mpq_class c = hz.height_zeta.coeff(d);
  if (c.get_den() != 1 || c < 0) throw Error(Errc::Internal, "A_d is not a nonnegative integer: " + c.get_str());
  return c.get_num();
}

mpq_class ad_main(const WeightedZeta& hz, unsigned d) {
  if (d < 1) throw Error(Errc::BadSpec, "the main term is defined for d >= 1");
  const std::uint32_t q = hz.curve.field().q();
  mpq_class total = 0;
  for (const auto& mc : hz.main_coeffs) total += mc.value * qpow(q, static_cast<long long>(d) * hz.w.total(mc.u));
  return total;
}

unsigned d_threshold(const WeightedZeta& hz) noexcept { return hz.d0; }

ErrorAnalysis analyze_error(const WeightedZeta& hz) {
  const std::uint32_t q = hz.curve.field().q();
  const ZetaData zd = hz.curve.zeta_data();
  ErrorAnalysis ea;
  ea.poly_part = hz.poly_part;

  std::map<unsigned, mpq_class> by_order;
  for (const auto& mc : hz.main_coeffs) by_order[hz.w.total(mc.u)] += mc.value;
  RatFuncQ rest = hz.height_zeta - RatFuncQ(hz.poly_part);
  for (const auto& [s, a] : by_order)
    if (a != 0) rest = rest - RatFuncQ(QPoly{a}, qpoly::one_minus(qpow(q, s)));
  const RatFuncQ numer = rest * RatFuncQ(zd.numerator_poly());
  if (!numer.is_polynomial())
    throw Error(Errc::Internal, "main coefficients do not account for the poles of the height zeta");
  ea.remainder_numerator = numer.num();
  ea.c_alpha = sum_abs(ea.remainder_numerator);
  ea.c_poly = sum_abs(ea.poly_part);

  std::set<unsigned, std::greater<>> live;
  for (const auto& mc : hz.main_coeffs)
    if (mc.value != 0) live.insert(hz.w.total(mc.u));
  if (live.size() >= 2) ea.s_second = *std::next(live.begin());

  if (hz.w.total() >= 2) {
    const IndexSubset full = hz.w.full();
    ea.leading = main_coefficient(hz.curve, hz.w, full);
    if (hz.curve.genus() == 0 || hz.w.length() >= 2) {
      mpq_class others = 0;
      for (const auto& mc : hz.main_coeffs)
        if (mc.u != full) others += abs(mc.value);
      // (d+1) q^{d/2} <= 2 q^{d (|w| - w_min)} once |w| - w_min >= 1.
      ea.c_corollary = (others + 2 * ea.c_alpha + ea.c_poly) / ea.leading;
    }
  }
  return ea;
}

bool within_error_bound(const ErrorAnalysis& ea, std::uint32_t q, unsigned d, const mpz_class& exact,
                        const mpq_class& main) {
  const mpq_class diff = abs(mpq_class(exact) - main);
  const mpq_class poly_term = ea.c_poly * qpow(q, static_cast<long long>(d) * ea.s_second);
  if (diff <= poly_term) return true;
  const mpq_class excess = diff - poly_term;
  const mpq_class alpha = ea.c_alpha * (d + 1);
  // excess <= alpha q^{d/2}  <=>  excess^2 <= alpha^2 q^d
  return excess * excess <= alpha * alpha * qpow(q, d);
}

bool within_corollary_bound(const ErrorAnalysis& ea, const WeightVector& w, std::uint32_t q, unsigned d,
                            const mpz_class& exact) {
  if (!ea.c_corollary) throw Error(Errc::BadSpec, "no corollary constant for this weight vector");
  const mpq_class lead = ea.leading * qpow(q, static_cast<long long>(w.total()) * d);
  const mpq_class diff = abs(mpq_class(exact) - lead);
  return diff <= *ea.c_corollary * ea.leading * qpow(q, static_cast<long long>(w.total() - w.min()) * d);
}

}  // namespace wps
