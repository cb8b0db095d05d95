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

#include "wps/function_field.hpp"

#include <algorithm>

#include "wps/error.hpp"

namespace wps {

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (!(num_.field() == den_.field())) throw Error(Errc::MixedFields, "numerator and denominator fields differ");
  if (num_.is_zero()) {
    den_ = Poly::one(num_.field());
    return;
  }
  const Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Code lead = den_.leading();
  if (lead != 1) {
    const Code li = num_.field().inv(lead);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RationalFunction RationalFunction::parse(const Field& field, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalFunction(Poly::parse(field, text));
  return RationalFunction(Poly::parse(field, text.substr(0, slash)), Poly::parse(field, text.substr(slash + 1)));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

Place Place::finite(const Poly& pi) {
  if (!is_irreducible(pi)) throw Error(Errc::BadSpec, "place polynomial " + pi.to_string() + " is reducible");
  return Place(pi.monic());
}

std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept {
  if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() <=> !b.is_infinity();
  return *a.pi_ <=> *b.pi_;
}

std::string Place::to_string() const { return is_infinity() ? "(inf)" : "(" + pi_->to_string() + ")"; }

long long Divisor::coefficient(const Place& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

void Divisor::add_term(const Place& p, long long n) {
  if (n == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, n);
  if (!inserted) {
    it->second += n;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Divisor::is_effective() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

long long Divisor::degree() const noexcept {
  long long d = 0;
  for (const auto& [p, n] : terms_) d += n * p.degree();
  return d;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  Divisor r = a;
  for (const auto& [p, n] : b.terms_) r.add_term(p, n);
  return r;
}

Divisor Divisor::operator-() const {
  Divisor r;
  for (const auto& [p, n] : terms_) r.terms_.emplace(p, -n);
  return r;
}

Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }

bool leq(const Divisor& a, const Divisor& b) { return (b - a).is_effective(); }

Divisor inf(const Divisor& a, const Divisor& b) {
  Divisor r;
  for (const auto& [p, n] : a.terms_) r.add_term(p, std::min(n, b.coefficient(p)));
  for (const auto& [p, n] : b.terms_)
    if (!a.terms_.contains(p)) r.add_term(p, std::min(n, 0LL));
  return r;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, n] : terms_) {
    if (!s.empty()) s += n < 0 ? " - " : " + ";
    else if (n < 0) s += "-";
    const long long m = n < 0 ? -n : n;
    if (m != 1) s += std::to_string(m) + "*";
    s += p.to_string();
  }
  return s;
}

long long ord_at(const Place& place, const RationalFunction& y) {
  if (y.is_zero()) throw Error(Errc::ZeroFunction, "ord of the zero function");
  if (place.is_infinity()) return static_cast<long long>(y.den().degree()) - y.num().degree();
  return static_cast<long long>(multiplicity(y.num(), place.poly())) - multiplicity(y.den(), place.poly());
}

Divisor weighted_divisor(const RationalFunction& y, unsigned w) {
  if (y.is_zero()) throw Error(Errc::ZeroFunction, "weighted divisor of the zero function");
  if (w == 0) throw Error(Errc::BadSpec, "weight must be >= 1");
  Divisor d;
  // num and den are coprime, so each irreducible occurs in at most one of them.
  for (const auto& [pi, e] : factor(y.num()).factors)
    d.add_term(Place::finite(pi), floor_div(static_cast<long long>(e), w));
  for (const auto& [pi, e] : factor(y.den()).factors)
    d.add_term(Place::finite(pi), floor_div(-static_cast<long long>(e), w));
  d.add_term(Place::infinity(), floor_div(ord_at(Place::infinity(), y), w));
  return d;
}

long long height(std::span<const RationalFunction> coords, const WeightVector& w) {
  if (coords.size() != w.length()) throw Error(Errc::LengthMismatch, "coordinate count differs from weight count");
  std::optional<Divisor> acc;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    Divisor d = weighted_divisor(coords[i], w[i]);
    acc = acc ? inf(*acc, d) : std::move(d);
  }
  if (!acc) throw Error(Errc::AllZero, "all coordinates are zero");
  return -acc->degree();
}

}  // namespace wps
