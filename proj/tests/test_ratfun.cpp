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

#include <random>

#include "oracles.hpp"
#include "wps/error.hpp"
#include "wps/ratfun.hpp"

using wps::QPoly;
using wps::RatFuncQ;

namespace {

QPoly Q(std::initializer_list<long> c) {
  QPoly f;
  for (long x : c) f.emplace_back(x);
  return f;
}

RatFuncQ geometric(long c) { return RatFuncQ(Q({1}), wps::qpoly::one_minus(c)); }

}  // namespace

TEST_CASE("arithmetic and reduction") {
  const RatFuncQ f = RatFuncQ::constant(2) * geometric(4) - geometric(1);
  const RatFuncQ expected(Q({1, 2}), wps::qpoly::mul(Q({1, -4}), Q({1, -1})));
  CHECK(f == expected);
  const auto s = f.series(3);
  const auto direct = oracle::series_divide(Q({1, 2}), wps::qpoly::mul(Q({1, -4}), Q({1, -1})), 3);
  CHECK(s == direct);
  CHECK((f - f).is_zero());
  CHECK(RatFuncQ(Q({1, -1})) * geometric(1) == RatFuncQ::constant(1));
  CHECK(f / f == RatFuncQ::constant(1));
  CHECK(f.den().back() == 1);
  CHECK_THROWS_AS(RatFuncQ(Q({1}), QPoly{}), wps::Error);
}

TEST_CASE("series coefficients") {
  for (long q : {2, 3, 7}) {
    mpq_class pw = 1;
    for (unsigned d = 0; d < 8; ++d, pw *= q) CHECK(geometric(q).coeff(d) == pw);
  }
  const RatFuncQ g = geometric(1) * geometric(2);
  CHECK(g.coeff(3) == 15);
  CHECK(oracle::series_divide(Q({1}), wps::qpoly::mul(Q({1, -1}), Q({1, -2})), 4)[3] == 15);
  CHECK(RatFuncQ(Q({1, 2, 3})).coeff(5) == 0);
  CHECK_THROWS_AS(RatFuncQ(Q({1}), Q({0, 1})).coeff(0), wps::Error);
}

TEST_CASE("series extraction agrees with long division on random input") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int it = 0; it < 100; ++it) {
    QPoly num = Q({c(rng), c(rng), c(rng), c(rng)});
    QPoly den = Q({1 + std::abs(c(rng)), c(rng), c(rng)});
    wps::qpoly::normalize(num);
    const RatFuncQ f(num, den);
    CHECK(f.series(12) == oracle::series_divide(num, den, 12));
  }
}

TEST_CASE("polynomial part") {
  const RatFuncQ f(Q({0, 0, 1}), Q({-1, 1}));
  const auto [s, g] = f.poly_part();
  CHECK(s == Q({1, 1}));
  CHECK(g == RatFuncQ(Q({1}), Q({-1, 1})));
  CHECK(RatFuncQ(s) + g == f);
  const auto [s2, g2] = geometric(3).poly_part();
  CHECK(s2.empty());
  CHECK(g2 == geometric(3));
  const auto [s3, g3] = RatFuncQ(Q({1, 2})).poly_part();
  CHECK(s3 == Q({1, 2}));
  CHECK(g3.is_zero());
}

TEST_CASE("series matching") {
  CHECK(wps::match_series(geometric(1), std::vector<mpq_class>{1, 1, 1, 1}));
  CHECK(!wps::match_series(geometric(1), std::vector<mpq_class>{1, 2}));
  const RatFuncQ z = geometric(1) * geometric(2);
  CHECK(wps::match_series(z, std::vector<mpq_class>{1, 3, 7, 15}));
}

TEST_CASE("formatting") {
  const RatFuncQ f(Q({1, 3, 5}), wps::qpoly::mul(Q({1, -1}), Q({1, -5})));
  CHECK(f.to_string() == "(1 + 3*t + 5*t^2) / (1 - 6*t + 5*t^2)");
  CHECK(RatFuncQ::constant(mpq_class(3, 4)).to_string() == "(3) / (4)");
  CHECK(wps::to_fraction_string(mpq_class(-21, 8)) == "-21/8");
  CHECK(wps::to_fraction_string(mpq_class(6)) == "6");
  CHECK(f.eval(2) == mpq_class(3));  // (1 + 6 + 20) / ((1 - 2)(1 - 10))
}
