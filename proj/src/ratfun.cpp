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

#include "wps/ratfun.hpp"

#include <algorithm>

#include "wps/error.hpp"

namespace wps {

namespace qpoly {

void normalize(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const QPoly& f) noexcept { return static_cast<int>(f.size()) - 1; }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  normalize(r);
  return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
  if (c == 0) return {};
  QPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  QPoly r = a;
  normalize(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly quo(r.size() - b.size() + 1);
  const int db = degree(b);
  for (int i = degree(r); i >= db; --i) {
    if (r[i] == 0) continue;
    const mpq_class f = r[i] / b.back();
    quo[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  r.resize(db);
  normalize(r);
  normalize(quo);
  return {quo, r};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  normalize(x);
  normalize(y);
  while (!y.empty()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return x;
  return scale(x, 1 / mpq_class(x.back()));
}

mpq_class eval(const QPoly& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

QPoly one_minus(const mpq_class& c) {
  QPoly r{mpq_class(1), -c};
  normalize(r);
  return r;
}

namespace {

// Multiplier turning the coefficients into coprime integers.
mpq_class clearing_factor(const QPoly& a, const QPoly& b) {
  mpz_class l = 1, g = 0;
  for (const QPoly* f : {&a, &b})
    for (const auto& c : *f) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const QPoly* f : {&a, &b})
    for (const auto& c : *f) {
      const mpz_class v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  if (g == 0) g = 1;
  return mpq_class(l, g);
}

std::string format_integer_poly(const QPoly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const mpz_class c = f[i].get_num();
    if (c == 0) continue;
    const mpz_class m = abs(c);
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (i == 0 || m != 1) s += m.get_str();
    if (i > 0) {
      if (m != 1) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace

std::string to_string(const QPoly& f) {
  if (f.empty()) return "0";
  return format_integer_poly(scale(f, clearing_factor(f, {})));
}

}  // namespace qpoly

RatFuncQ::RatFuncQ(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  qpoly::normalize(num_);
  qpoly::normalize(den_);
  if (den_.empty()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num_.empty()) {
    den_ = {mpq_class(1)};
    return;
  }
  const QPoly g = qpoly::gcd(num_, den_);
  if (g.size() > 1) {
    num_ = qpoly::divmod(num_, g).first;
    den_ = qpoly::divmod(den_, g).first;
  }
  const mpq_class lead = den_.back();
  if (lead != 1) {
    num_ = qpoly::scale(num_, 1 / lead);
    den_ = qpoly::scale(den_, 1 / lead);
  }
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
  if (a.den_ == b.den_) return RatFuncQ(qpoly::add(a.num_, b.num_), a.den_);
  return RatFuncQ(qpoly::add(qpoly::mul(a.num_, b.den_), qpoly::mul(b.num_, a.den_)), qpoly::mul(a.den_, b.den_));
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
  return RatFuncQ(qpoly::mul(a.num_, b.num_), qpoly::mul(a.den_, b.den_));
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero rational function");
  return RatFuncQ(qpoly::mul(a.num_, b.den_), qpoly::mul(a.den_, b.num_));
}

RatFuncQ RatFuncQ::operator-() const {
  RatFuncQ r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

std::vector<mpq_class> RatFuncQ::series(unsigned n) const {
  if (!has_expansion()) throw Error(Errc::NoExpansionAtZero, "denominator vanishes at t = 0");
  std::vector<mpq_class> c(n);
  const mpq_class inv0 = 1 / den_[0];
  for (unsigned d = 0; d < n; ++d) {
    mpq_class acc = d < num_.size() ? num_[d] : mpq_class(0);
    for (std::size_t k = 1; k < den_.size() && k <= d; ++k) acc -= den_[k] * c[d - k];
    c[d] = acc * inv0;
  }
  return c;
}

mpq_class RatFuncQ::coeff(unsigned d) const { return series(d + 1).back(); }

std::pair<QPoly, RatFuncQ> RatFuncQ::poly_part() const {
  auto [quo, rem] = qpoly::divmod(num_, den_);
  return {quo, RatFuncQ(rem, den_)};
}

mpq_class RatFuncQ::eval(const mpq_class& t) const {
  const mpq_class d = qpoly::eval(den_, t);
  if (d == 0) throw Error(Errc::DivisionByZero, "evaluation at a pole");
  return qpoly::eval(num_, t) / d;
}

std::pair<QPoly, QPoly> RatFuncQ::integer_cleared() const {
  mpq_class f = qpoly::clearing_factor(num_, den_);
  // Prefer a positive constant term in the denominator (1 - a t form).
  const auto lowest = std::find_if(den_.begin(), den_.end(), [](const mpq_class& c) { return c != 0; });
  if (lowest != den_.end() && *lowest * f < 0) f = -f;
  return {qpoly::scale(num_, f), qpoly::scale(den_, f)};
}

std::string RatFuncQ::to_string() const {
  const auto [n, d] = integer_cleared();
  return "(" + qpoly::format_integer_poly(n) + ") / (" + qpoly::format_integer_poly(d) + ")";
}

bool match_series(const RatFuncQ& f, std::span<const mpq_class> coeffs) {
  const auto s = f.series(static_cast<unsigned>(coeffs.size()));
  return std::equal(s.begin(), s.end(), coeffs.begin(), coeffs.end());
}

std::string to_fraction_string(const mpq_class& x) { return x.get_str(); }

}  // namespace wps
