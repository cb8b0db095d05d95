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
#include "wps/polynomials.hpp"

using wps::Field;
using wps::Poly;
using wps::PolySet;

namespace {

Poly P(const Field& f, std::vector<wps::Code> c) { return Poly(f, std::move(c)); }

Poly random_poly(const Field& f, std::mt19937_64& rng, unsigned max_deg) {
  std::uniform_int_distribution<wps::Code> coef(0, f.q() - 1);
  std::vector<wps::Code> c(std::uniform_int_distribution<unsigned>(1, max_deg + 1)(rng));
  for (auto& x : c) x = coef(rng);
  return Poly(f, c);
}

}  // namespace

TEST_CASE("arithmetic examples") {
  const Field f2 = Field::make(2);
  const Field f3 = Field::make(3);
  const Field f5 = Field::make(5);
  CHECK(gcd(P(f2, {1, 0, 1}), P(f2, {1, 1})) == P(f2, {1, 1}));
  const auto qr = divmod(P(f3, {0, 0, 0, 1}), P(f3, {0, 1}));
  CHECK(qr.quotient == P(f3, {0, 0, 1}));
  CHECK(qr.remainder.is_zero());
  CHECK(gcd(P(f5, {3, 1, 4, 1}), Poly::one(f5)).is_one());
  CHECK(P(f2, {1, 1}) * P(f2, {1, 1}) == P(f2, {1, 0, 1}));
  CHECK((P(f3, {1, 2}) - P(f3, {1, 2})).is_zero());
  CHECK(P(f3, {1, 2}).degree() == 1);
  CHECK(Poly(f3).degree() == Poly::kZeroDegree);
  CHECK(P(f5, {1, 2, 3}).derivative() == P(f5, {2, 1}));
  CHECK(P(f5, {1, 2, 3}).eval(2) == (1 + 4 + 12) % 5);
  CHECK(Poly::parse(f2, "1,0,1") == P(f2, {1, 0, 1}));
  CHECK(Poly::parse(f2, "t^2 + 1") == P(f2, {1, 0, 1}));
  CHECK(Poly::parse(f3, "2*t^3 - t + 1") == P(f3, {1, 2, 0, 2}));
  CHECK(Poly::parse(f3, "t") == P(f3, {0, 1}));
  const Field f9 = Field::make(3, 2);
  CHECK(Poly::parse(f9, "(0,1)t + 1") == Poly(f9, {1, 3}));
  CHECK_THROWS_AS(Poly::parse(f3, "t^"), wps::Error);
  CHECK_THROWS_AS(Poly::parse(f3, "2x"), wps::Error);
  CHECK(P(f2, {1, 0, 1}).to_string() == "t^2 + 1");
  CHECK(P(f3, {1, 2, 1}).to_string() == "t^2 + 2*t + 1");
}

TEST_CASE("division identity on random input") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::make(2), Field::make(5), Field::make(2, 2)}) {
    for (int it = 0; it < 200; ++it) {
      const Poly a = random_poly(f, rng, 8);
      Poly b = random_poly(f, rng, 4);
      if (b.is_zero()) b = Poly::one(f);
      const auto qr = divmod(a, b);
      CHECK(qr.quotient * b + qr.remainder == a);
      CHECK(qr.remainder.degree() < b.degree());
      if (!a.is_zero()) {
        const Poly g = gcd(a, b);
        CHECK(g.is_monic());
        CHECK((a % g).is_zero());
        CHECK((b % g).is_zero());
      }
    }
  }
}

TEST_CASE("gcd of zeros") {
  const Field f = Field::make(3);
  CHECK_THROWS_AS(gcd(Poly(f), Poly(f)), wps::Error);
  CHECK_THROWS_AS(divmod(Poly::one(f), Poly(f)), wps::Error);
}

TEST_CASE("factorization examples") {
  const Field f2 = Field::make(2);
  const Field f3 = Field::make(3);
  auto a = factor(P(f2, {0, 1, 1}));
  CHECK(a.unit.code() == 1);
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0] == std::pair{P(f2, {0, 1}), 1u});
  CHECK(a.factors[1] == std::pair{P(f2, {1, 1}), 1u});
  auto b = factor(P(f2, {1, 0, 1}));
  REQUIRE(b.factors.size() == 1);
  CHECK(b.factors[0] == std::pair{P(f2, {1, 1}), 2u});
  CHECK(b.to_string() == "(t + 1)^2");
  auto c = factor(P(f3, {2, 0, 2}));
  CHECK(c.unit.code() == 2);
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0] == std::pair{P(f3, {1, 0, 1}), 1u});
  for (int x = 0; x < 3; ++x) CHECK((x * x + 1) % 3 != 0);
}

TEST_CASE("factorization round trip") {
  std::mt19937_64 rng(11);
  for (const Field& f : {Field::make(2), Field::make(3), Field::make(3, 2)}) {
    for (int it = 0; it < 150; ++it) {
      const Poly g = random_poly(f, rng, 12);
      if (g.is_zero()) continue;
      const auto fac = factor(g, it);
      CHECK(fac.expand() == g);
      for (const auto& [pi, e] : fac.factors) {
        CHECK(pi.is_monic());
        CHECK(e >= 1);
        CHECK(is_irreducible(pi));
      }
      for (std::size_t k = 1; k < fac.factors.size(); ++k) CHECK(fac.factors[k - 1].first < fac.factors[k].first);
      // Seed independence.
      CHECK(factor(g, it + 1000).factors == fac.factors);
    }
  }
}

TEST_CASE("irreducibility examples") {
  const Field f2 = Field::make(2);
  CHECK(is_irreducible(P(f2, {1, 1, 1})));
  CHECK(!is_irreducible(P(f2, {1, 0, 1})));
  const Field f7 = Field::make(7);
  for (wps::Code c = 0; c < 7; ++c) CHECK(is_irreducible(Poly::linear(f7, c)));
  CHECK_THROWS_AS(is_irreducible(Poly::one(f7)), wps::Error);
  CHECK_THROWS_AS(is_irreducible(Poly(f7)), wps::Error);
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (const Field& f : {Field::make(2), Field::make(3), Field::make(5), Field::make(2, 2)}) {
    const auto irr = enumerate_polys(f, PolySet::MonicIrreducibleDegLe, 4);
    std::vector<long long> by_degree(5, 0);
    for (const auto& p : irr) ++by_degree[p.degree()];
    for (unsigned n = 1; n <= 4; ++n) CHECK(by_degree[n] == oracle::necklace(f.q(), n));
  }
}

TEST_CASE("irreducibility agrees with exhaustive trial division") {
  const int p = 3;
  const Field f = Field::make(p);
  const auto divisors = oracle::monics(p, 2);
  for (const auto& g : oracle::monics(p, 4)) {
    if (oracle::deg(g) < 2) continue;
    bool reducible = false;
    for (const auto& h : divisors)
      if (2 * oracle::deg(h) <= oracle::deg(g) && oracle::divides(h, g, p)) reducible = true;
    std::vector<wps::Code> c(g.begin(), g.end());
    CHECK(is_irreducible(Poly(f, c)) == !reducible);
  }
}

TEST_CASE("enumeration of polynomial sets") {
  const Field f2 = Field::make(2);
  const auto all = enumerate_polys(f2, PolySet::AllDegLe, 1);
  REQUIRE(all.size() == 4);
  CHECK(all[0].is_zero());
  CHECK(all[1] == Poly::one(f2));
  CHECK(all[2] == P(f2, {0, 1}));
  CHECK(all[3] == P(f2, {1, 1}));
  const auto irr = enumerate_polys(f2, PolySet::MonicIrreducibleDegLe, 2);
  CHECK(irr == std::vector<Poly>{P(f2, {0, 1}), P(f2, {1, 1}), P(f2, {1, 1, 1})});
  const Field f3 = Field::make(3);
  CHECK(enumerate_polys(f3, PolySet::MonicIrreducibleDegLe, 1) ==
        std::vector<Poly>{P(f3, {0, 1}), P(f3, {1, 1}), P(f3, {2, 1})});
  CHECK(enumerate_polys(Field::make(3), PolySet::AllDegLe, 3).size() == 81);
}

TEST_CASE("multiplicity and powmod") {
  const Field f2 = Field::make(2);
  const Poly x = P(f2, {1, 1});
  CHECK(multiplicity(x * x * x * P(f2, {0, 1}), x) == 3);
  const Poly m = P(f2, {1, 1, 1});
  CHECK(powmod(P(f2, {0, 1}), 4, m) == P(f2, {0, 1}));
}
