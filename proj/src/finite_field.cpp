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

#include "wps/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "wps/error.hpp"

namespace wps {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::GcdOfZeros: return "GcdOfZeros";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::ZeroFunction: return "ZeroFunction";
    case Errc::AllZero: return "AllZero";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::EmptySupport: return "EmptySupport";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::PoleAtOne: return "PoleAtOne";
    case Errc::NoExpansionAtZero: return "NoExpansionAtZero";
    case Errc::BadSpec: return "BadSpec";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned k = 1;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> pow_p;  // p^i, i <= k
  std::vector<std::uint32_t> log;    // log[a] for a != 0
  std::vector<std::uint32_t> exp;    // exp[i] = g^i, i < 2(q-1)
  std::uint32_t generator = 1;
  std::vector<Code> pth_root;
};

}  // namespace detail

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
Coeffs rem_monic(Coeffs f, const Coeffs& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + (p - lead) * g[i]) % p);
    trim(f);
  }
  return f;
}

// Trial division by every monic polynomial of degree 1..deg/2; deg f <= 16.
bool irreducible_over_prime(const Coeffs& f, std::uint32_t p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned m = 1; m <= n / 2; ++m) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs g(m + 1);
      std::uint64_t r = idx;
      for (unsigned i = 0; i < m; ++i) {
        g[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      g[m] = 1;
      if (rem_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Multiplication of coordinate vectors modulo the field modulus.
Coeffs mul_coords(const Coeffs& a, const Coeffs& b, const detail::FieldData& d) {
  Coeffs r(2 * d.k, 0);
  for (unsigned i = 0; i < d.k; ++i)
    for (unsigned j = 0; j < d.k; ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % d.p);
  if (d.k == 1) return {r[0]};
  r = rem_monic(r, d.modulus, d.p);
  r.resize(d.k, 0);
  return r;
}

Coeffs to_coords(Code a, const detail::FieldData& d) {
  Coeffs c(d.k);
  for (unsigned i = 0; i < d.k; ++i) {
    c[i] = a % d.p;
    a /= d.p;
  }
  return c;
}

Code to_code(const Coeffs& c, const detail::FieldData& d) {
  Code a = 0;
  for (unsigned i = d.k; i-- > 0;) a = a * d.p + c[i];
  return a;
}

std::uint32_t parse_uint(std::string_view s) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(Errc::BadSpec, "expected a nonnegative integer, got '" + std::string(s) + "'");
  return v;
}

std::vector<std::uint32_t> parse_uint_list(std::string_view s) {
  std::vector<std::uint32_t> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    out.push_back(parse_uint(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Field Field::make(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (k == 0) throw Error(Errc::BadSpec, "extension degree must be >= 1");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(Errc::FieldTooLarge, "q exceeds 2^16");
  }

  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->k = k;
  d->q = static_cast<std::uint32_t>(q);
  d->pow_p.resize(k + 1);
  d->pow_p[0] = 1;
  for (unsigned i = 1; i <= k; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;

  if (k == 1) {
    if (modulus && !modulus->empty())
      throw Error(Errc::BadSpec, "a modulus is only meaningful for k > 1");
  } else if (modulus) {
    Coeffs m = *modulus;
    if (m.size() != k + 1 || m.back() != 1)
      throw Error(Errc::BadSpec, "modulus must be monic of degree " + std::to_string(k));
    for (auto c : m)
      if (c >= p) throw Error(Errc::BadSpec, "modulus coefficient out of range");
    if (!irreducible_over_prime(m, p))
      throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    d->modulus = std::move(m);
  } else {
    const std::uint64_t count = q;  // p^k monic polynomials of degree k
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Coeffs m(k + 1);
      std::uint64_t r = idx;
      for (unsigned i = 0; i < k; ++i) {
        m[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      m[k] = 1;
      if (irreducible_over_prime(m, p)) {
        d->modulus = std::move(m);
        break;
      }
    }
    if (d->modulus.empty()) throw Error(Errc::Internal, "no irreducible modulus found");
  }

  // Discrete log tables from the first generator in canonical order.
  const std::uint32_t order = d->q - 1;
  d->log.assign(d->q, 0);
  d->exp.assign(2 * std::size_t{order} + 1, 0);
  if (order == 1) {
    d->generator = 1;
    d->exp[0] = d->exp[1] = d->exp[2] = 1;
  } else {
    for (Code g = 2; g < d->q; ++g) {
      const Coeffs gc = to_coords(g, *d);
      Coeffs x = gc;
      std::uint32_t n = 1;
      while (!(to_code(x, *d) == 1)) {
        x = mul_coords(x, gc, *d);
        ++n;
      }
      if (n != order) continue;
      d->generator = g;
      Coeffs y = to_coords(1, *d);
      for (std::uint32_t i = 0; i < order; ++i) {
        const Code c = to_code(y, *d);
        d->exp[i] = c;
        d->log[c] = i;
        y = mul_coords(y, gc, *d);
      }
      for (std::uint32_t i = order; i < d->exp.size(); ++i) d->exp[i] = d->exp[i - order];
      break;
    }
  }

  // x -> x^(q/p) inverts the Frobenius.
  d->pth_root.assign(d->q, 0);
  Field tmp(d);
  for (Code a = 0; a < d->q; ++a) d->pth_root[a] = tmp.pow(a, d->q / p);
  return tmp;
}

Field Field::parse(std::string_view spec) {
  std::string_view s = spec;
  if (s.starts_with("q=")) s.remove_prefix(2);
  std::optional<Coeffs> modulus;
  if (const auto colon = s.find(':'); colon != std::string_view::npos) {
    std::string_view rest = s.substr(colon + 1);
    s = s.substr(0, colon);
    if (!rest.starts_with("modulus="))
      throw Error(Errc::BadSpec, "expected ':modulus=' in field spec '" + std::string(spec) + "'");
    rest.remove_prefix(8);
    modulus = parse_uint_list(rest);
  }
  std::uint32_t p = 0;
  unsigned k = 1;
  if (const auto caret = s.find('^'); caret != std::string_view::npos) {
    p = parse_uint(s.substr(0, caret));
    k = parse_uint(s.substr(caret + 1));
  } else {
    const std::uint32_t q = parse_uint(s);
    if (q < 2) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    if (q > kMaxFieldOrder) throw Error(Errc::FieldTooLarge, "q exceeds 2^16");
    // Split a prime power into p^k; a non-prime-power fails as NotPrime.
    std::uint32_t base = q;
    for (std::uint32_t f = 2; f * f <= q; ++f) {
      if (q % f == 0) {
        base = f;
        break;
      }
    }
    std::uint32_t r = q;
    k = 0;
    while (r % base == 0) {
      r /= base;
      ++k;
    }
    if (r != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    p = base;
  }
  if (k == 0) throw Error(Errc::BadSpec, "extension degree must be >= 1");
  if (k == 1 && modulus && modulus->size() <= 2) modulus.reset();
  return make(p, k, std::move(modulus));
}

std::uint32_t Field::p() const noexcept { return d_->p; }
unsigned Field::k() const noexcept { return d_->k; }
std::uint32_t Field::q() const noexcept { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return d_->modulus; }
Code Field::generator() const noexcept { return d_->generator; }

std::string Field::spec_string() const {
  std::string s = "q=" + std::to_string(d_->p);
  if (d_->k == 1) return s;
  s += "^" + std::to_string(d_->k) + ":modulus=";
  for (std::size_t i = 0; i < d_->modulus.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d_->modulus[i]);
  }
  return s;
}

Code Field::add(Code a, Code b) const noexcept {
  const auto& d = *d_;
  if (d.k == 1) {
    const Code s = a + b;
    return s >= d.p ? s - d.p : s;
  }
  Code r = 0;
  for (unsigned i = 0; i < d.k; ++i) {
    Code s = a % d.p + b % d.p;
    if (s >= d.p) s -= d.p;
    r += s * d.pow_p[i];
    a /= d.p;
    b /= d.p;
  }
  return r;
}

Code Field::neg(Code a) const noexcept {
  const auto& d = *d_;
  if (d.k == 1) return a == 0 ? 0 : d.p - a;
  Code r = 0;
  for (unsigned i = 0; i < d.k; ++i) {
    const Code c = a % d.p;
    r += (c == 0 ? 0 : d.p - c) * d.pow_p[i];
    a /= d.p;
  }
  return r;
}

Code Field::sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

Code Field::mul(Code a, Code b) const noexcept {
  if (a == 0 || b == 0) return 0;
  const auto& d = *d_;
  if (d.k == 1) return static_cast<Code>(std::uint64_t{a} * b % d.p);
  return d.exp[d.log[a] + d.log[b]];
}

Code Field::inv(Code a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  const auto& d = *d_;
  const std::uint32_t order = d.q - 1;
  return d.exp[(order - d.log[a]) % order];
}

Code Field::div(Code a, Code b) const { return mul(a, inv(b)); }

Code Field::pow(Code a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& d = *d_;
  const std::uint64_t order = d.q - 1;
  return d.exp[(std::uint64_t{d.log[a]} * (e % order)) % order];
}

Code Field::pth_root(Code a) const noexcept { return d_->pth_root[a]; }

std::vector<std::uint32_t> Field::coords(Code a) const { return to_coords(a, *d_); }

Code Field::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() != d_->k) throw Error(Errc::BadSpec, "wrong number of coordinates");
  for (auto c : coords)
    if (c >= d_->p) throw Error(Errc::BadSpec, "coordinate out of range");
  return to_code(Coeffs(coords.begin(), coords.end()), *d_);
}

Code Field::from_int(long long n) const noexcept {
  const long long p = d_->p;
  return static_cast<Code>(((n % p) + p) % p);
}

std::string Field::format(Code a) const {
  if (d_->k == 1) return std::to_string(a);
  std::string s = "(";
  const auto c = coords(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

FieldElement Field::element(Code a) const {
  if (a >= d_->q) throw Error(Errc::BadSpec, "element code out of range");
  return {*this, a};
}
FieldElement Field::zero() const { return {*this, 0}; }
FieldElement Field::one() const { return {*this, 1}; }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(d_->q);
  for (Code a = 0; a < d_->q; ++a) out.emplace_back(*this, a);
  return out;
}

FieldElement::FieldElement(Field field, Code code) : field_(std::move(field)), code_(code) {}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw Error(Errc::MixedFields, "operands from different fields");
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_.inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.add(a.code_, b.code_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.sub(a.code_, b.code_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.mul(a.code_, b.code_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return {a.field_, a.field_.div(a.code_, b.code_)};
}

}  // namespace wps
