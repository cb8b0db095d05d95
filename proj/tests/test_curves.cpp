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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wps/curves.hpp"
#include "wps/error.hpp"

using wps::Code;
using wps::CurveModel;
using wps::ECPoint;
using wps::Field;

namespace {

/// #E(F_{p^e}) for y^2 = x^3 + a x + b by scanning every (x, y).
long naive_point_count(std::uint32_t p, unsigned e, long long a, long long b) {
  const Field f = Field::make(p, e);
  const Code ca = f.from_int(a);
  const Code cb = f.from_int(b);
  long n = 1;
  for (Code x = 0; x < f.q(); ++x) {
    const Code rhs = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(ca, x)), cb);
    for (Code y = 0; y < f.q(); ++y)
      if (f.mul(y, y) == rhs) ++n;
  }
  return n;
}

CurveModel e5() { return CurveModel::elliptic(Field::make(5), 1, 1); }

}  // namespace

TEST_CASE("curve construction") {
  const auto g0 = CurveModel::genus0(Field::make(2));
  CHECK(g0.genus() == 0);
  CHECK(g0.class_number() == 1);
  const auto e = e5();
  CHECK(e.genus() == 1);
  CHECK((4 + 27) % 5 != 0);
  CHECK_THROWS_AS(CurveModel::elliptic(Field::make(5), 0, 0), wps::Error);
  try {
    CurveModel::elliptic(Field::make(3), 1, 1);
    FAIL("expected UnsupportedCharacteristic");
  } catch (const wps::Error& err) {
    CHECK(err.code() == wps::Errc::UnsupportedCharacteristic);
  }
  CHECK(CurveModel::parse(Field::make(5), "elliptic:a=1,b=1").class_number() == 9);
  CHECK(CurveModel::parse(Field::make(3), "genus0").kind() == wps::CurveKind::Genus0);
  CHECK_THROWS_AS(CurveModel::parse(Field::make(5), "hyperelliptic"), wps::Error);
}

TEST_CASE("class number by exhaustive scan") {
  const auto e = e5();
  CHECK(e.class_number() == 9);
  CHECK(naive_point_count(5, 1, 1, 1) == 9);
  CHECK(e.class_reps().size() == 9);
  CHECK(e.class_reps().front().infinity);
  for (const auto& [p, a, b] : std::vector<std::tuple<int, int, int>>{{7, 1, 3}, {11, 2, 5}, {13, 0, 1}, {5, 2, 1}}) {
    const auto c = CurveModel::elliptic(Field::make(p), a, b);
    CHECK(c.class_number() == naive_point_count(p, 1, a, b));
    CHECK(std::abs(p + 1 - c.class_number()) <= 2 * std::sqrt(static_cast<double>(p)));
  }
}

TEST_CASE("group law") {
  const auto e = e5();
  const auto& pts = e.class_reps();
  const ECPoint O = ECPoint::at_infinity();
  for (const auto& P : pts) {
    CHECK(e.add(P, O) == P);
    CHECK(e.add(P, e.neg(P)) == O);
    CHECK(e.smul(9, P) == O);
    CHECK(e.smul(-1, P) == e.neg(P));
  }
  CHECK_THROWS_AS(e.add(ECPoint::affine(1, 1), O), wps::Error);

  std::mt19937_64 rng(17);
  for (const auto& c : {e, CurveModel::elliptic(Field::make(13), 2, 3), CurveModel::elliptic(Field::make(5, 2), 1, 1)}) {
    const auto& r = c.class_reps();
    std::uniform_int_distribution<std::size_t> pick(0, r.size() - 1);
    for (int it = 0; it < 40; ++it) {
      const auto& a = r[pick(rng)];
      const auto& b = r[pick(rng)];
      const auto& d = r[pick(rng)];
      CHECK(c.on_curve(c.add(a, b)));
      CHECK(c.add(a, b) == c.add(b, a));
      CHECK(c.add(c.add(a, b), d) == c.add(a, c.add(b, d)));
      CHECK(c.smul(c.class_number(), a) == O);
    }
  }
}

TEST_CASE("Riemann-Roch dimensions") {
  CHECK(CurveModel::genus0(Field::make(2)).rr_dim(0, 2, 3) == 7);
  const auto e = e5();
  const auto& pts = e.class_reps();
  std::size_t principal = pts.size();
  std::size_t order9 = pts.size();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (pts[j].infinity) principal = j;
    else if (!(e.smul(3, pts[j]) == ECPoint::at_infinity())) order9 = j;
  }
  REQUIRE(principal < pts.size());
  REQUIRE(order9 < pts.size());
  CHECK(e.rr_dim(principal, 3, 0) == 1);
  CHECK(e.rr_dim(order9, 3, 0) == 0);
  for (std::size_t j = 0; j < pts.size(); ++j)
    for (unsigned u = 1; u <= 3; ++u)
      for (unsigned d = 0; d <= 4; ++d) {
        const long long dim = e.rr_dim(j, u, d);
        CHECK(dim >= std::max(0LL, static_cast<long long>(u * d)));
        if (u * d > 0) CHECK(dim == static_cast<long long>(u * d));
      }
}

TEST_CASE("zeta data") {
  const auto g2 = CurveModel::genus0(Field::make(2)).zeta_data();
  CHECK(g2.numerator == std::vector<long long>{1});
  const auto ze = e5().zeta_data();
  CHECK(ze.numerator == std::vector<long long>{1, 3, 5});
  CHECK(ze.numerator_string() == "1 + 3*t + 5*t^2");
  long long at_one = 0;
  for (long long c : ze.numerator) at_one += c;
  CHECK(at_one == ze.class_number);
}

TEST_CASE("zeta coefficients count effective divisors") {
  // Genus 0: effective divisors of degree d are k (t-places) plus (d-k) infinity.
  for (int p : {2, 3}) {
    const auto z = CurveModel::genus0(Field::make(p)).zeta_data().zeta();
    for (unsigned d = 1; d <= 3; ++d) {
      // Monic f of degree k <= d paired with (d - k) infinity; k = 0 is f = 1.
      const long count = 1 + static_cast<long>(oracle::monics(p, d).size());
      CHECK(z.coeff(d) == count);
    }
  }
  // Elliptic: Z = exp(sum N_e t^e / e) with N_e counted over F_{5^e}.
  std::vector<mpq_class> logc{0};
  for (unsigned m = 1; m <= 3; ++m) logc.emplace_back(naive_point_count(5, m, 1, 1));
  const auto expected = oracle::exp_log_series(logc, 4);
  const auto z = e5().zeta_data().zeta();
  for (unsigned d = 0; d <= 3; ++d) CHECK(z.coeff(d) == expected[d]);
}

TEST_CASE("zeta values") {
  CHECK(CurveModel::genus0(Field::make(2)).zeta_value(2) == mpq_class(8, 3));
  CHECK(CurveModel::genus0(Field::make(3)).zeta_value(2) == mpq_class(27, 16));
  CHECK(e5().zeta_value(2) == mpq_class(47, 32));
  const mpq_class direct = (1 + mpq_class(3, 25) + mpq_class(5, 625)) / (mpq_class(24, 25) * mpq_class(4, 5));
  CHECK(e5().zeta_value(2) == direct);
  CHECK_THROWS_AS(e5().zeta_value(1), wps::Error);
}
