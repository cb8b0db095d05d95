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

#include "wps/polynomials.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <random>

#include "wps/error.hpp"

namespace wps {

Poly::Poly(Field field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Code c : c_)
    if (c >= field_.q()) throw Error(Errc::BadSpec, "coefficient code out of range");
  normalize();
}

void Poly::normalize() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_field(const Poly& o) const {
  if (!(field_ == o.field_)) throw Error(Errc::MixedFields, "polynomials over different fields");
}

Poly Poly::monomial(const Field& field, Code c, unsigned n) {
  std::vector<Code> v(n + 1, 0);
  v[n] = c;
  return Poly(field, std::move(v));
}

Poly Poly::linear(const Field& field, Code c) { return Poly(field, {field.neg(c), 1}); }

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

long long parse_int(std::string_view s) {
  s = strip(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::BadSpec, "bad integer '" + std::string(s) + "'");
  return v;
}

Code parse_element(const Field& field, std::string_view tok) {
  tok = strip(tok);
  if (tok.starts_with('(')) {
    if (!tok.ends_with(')')) throw Error(Errc::BadSpec, "unbalanced parenthesis in '" + std::string(tok) + "'");
    tok = tok.substr(1, tok.size() - 2);
    std::vector<std::uint32_t> coords;
    std::size_t start = 0;
    while (true) {
      const auto comma = tok.find(',', start);
      coords.push_back(field.from_int(parse_int(tok.substr(start, comma == tok.npos ? tok.npos : comma - start))));
      if (comma == tok.npos) break;
      start = comma + 1;
    }
    return field.from_coords(coords);
  }
  return field.from_int(parse_int(tok));
}

}  // namespace

namespace {

// Sum of terms [c][*]t[^n] or c, e.g. "t^2 + 2*t + 1".
Poly parse_expression(const Field& field, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  Poly sum(field);
  std::size_t i = 0;
  while (i < s.size()) {
    bool negate = false;
    if (s[i] == '+' || s[i] == '-') negate = s[i++] == '-';
    std::size_t j = i;
    if (j < s.size() && s[j] == '(') {
      j = s.find(')', j);
      if (j == std::string::npos) throw Error(Errc::BadSpec, "unbalanced parentheses in polynomial");
      ++j;
    } else {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    }
    const bool has_coeff = j > i;
    Code c = has_coeff ? parse_element(field, std::string_view(s).substr(i, j - i)) : 1;
    i = j;
    unsigned n = 0;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 't') {
      n = 1;
      if (++i < s.size() && s[i] == '^') {
        j = ++i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw Error(Errc::BadSpec, "missing exponent in '" + s + "'");
        n = static_cast<unsigned>(std::stoul(s.substr(i, j - i)));
        i = j;
      }
    } else if (!has_coeff) {
      throw Error(Errc::BadSpec, "bad polynomial term in '" + s + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw Error(Errc::BadSpec, "bad polynomial '" + s + "'");
    if (negate) c = field.neg(c);
    sum += Poly::monomial(field, c, n);
  }
  return sum;
}

}  // namespace

Poly Poly::parse(const Field& field, std::string_view text) {
  if (text.find('t') != std::string_view::npos) return parse_expression(field, text);
  std::vector<Code> coeffs;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : ',';
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      coeffs.push_back(parse_element(field, text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw Error(Errc::BadSpec, "unbalanced parentheses in polynomial");
  return Poly(field, std::move(coeffs));
}

Poly Poly::monic() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "monic of zero");
  return scaled(field_.inv(leading()));
}

Poly Poly::scaled(Code c) const {
  Poly r(field_);
  if (c == 0) return r;
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_.mul(c_[i], c);
  return r;
}

Poly Poly::derivative() const {
  Poly r(field_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long long>(i)));
  r.normalize();
  return r;
}

Code Poly::eval(Code x) const noexcept {
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  check_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_field(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  check_field(o);
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Code> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

Poly Poly::operator-() const {
  Poly r(field_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_.neg(c_[i]);
  return r;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    const bool unit = c_[i] == 1;
    if (i == 0) {
      s += field_.format(c_[i]);
      continue;
    }
    if (!unit) s += field_.format(c_[i]) + "*";
    s += "t";
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::string Poly::to_spec() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ',';
    s += field_.format(c_[i]);
  }
  return s;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) throw Error(Errc::MixedFields, "polynomials over different fields");
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  std::vector<Code> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(f), a};
  std::vector<Code> quo(r.size() - bc.size() + 1, 0);
  const Code lead_inv = f.inv(b.leading());
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i] == 0) continue;
    const Code factor = f.mul(r[i], lead_inv);
    quo[i - db] = factor;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(factor, bc[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(Errc::GcdOfZeros, "gcd(0, 0)");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::one(base.field()) % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

unsigned multiplicity(const Poly& f, const Poly& pi) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "multiplicity in zero");
  if (pi.is_constant()) throw Error(Errc::ConstantPolynomial, "multiplicity of a constant");
  unsigned e = 0;
  Poly g = f;
  while (g.degree() >= pi.degree()) {
    auto [quo, rem] = divmod(g, pi);
    if (!rem.is_zero()) break;
    g = std::move(quo);
    ++e;
  }
  return e;
}

Poly Factorization::expand() const {
  Poly r = Poly::constant(unit.field(), unit.code());
  for (const auto& [pi, e] : factors)
    for (unsigned i = 0; i < e; ++i) r *= pi;
  return r;
}

std::string Factorization::to_string() const {
  std::string s;
  if (unit.code() != 1 || factors.empty()) s = unit.to_string();
  for (const auto& [pi, e] : factors) {
    if (!s.empty()) s += " * ";
    s += "(" + pi.to_string() + ")";
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

Poly pth_root(const Poly& f) {
  const Field& field = f.field();
  const std::uint32_t p = field.p();
  std::vector<Code> r((f.coeffs().size() + p - 1) / p, 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field.pth_root(f.coeff(i * p));
  return Poly(field, std::move(r));
}

void squarefree(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const Poly df = f.derivative();
  if (df.is_zero()) {
    squarefree(pth_root(f), scale * f.field().p(), out);
    return;
  }
  Poly c = gcd(f, df);
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (!c.is_one()) squarefree(pth_root(c.monic()), scale * f.field().p(), out);
}

// Splits a squarefree monic f into products of irreducibles of equal degree.
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
  std::vector<std::pair<Poly, unsigned>> out;
  const Field& field = f.field();
  const Poly t = Poly::monomial(field, 1, 1);
  Poly h = t % f;
  unsigned i = 1;
  while (f.degree() >= 2 * static_cast<int>(i)) {
    h = powmod(h, field.q(), f);
    Poly g = gcd(h - t, f);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

constexpr int kMaxSplitAttempts = 256;

void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = f.degree();
  if (n == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const Field& field = f.field();
  const std::uint32_t q = field.q();
  std::uniform_int_distribution<Code> coeff(0, q - 1);
  for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
    std::vector<Code> ac(n);
    for (auto& c : ac) c = coeff(rng);
    const Poly a(field, std::move(ac));
    if (a.degree() < 1) continue;
    Poly g = gcd(a, f);
    if (g.is_one()) {
      Poly b(field);
      if (q % 2 == 1) {
        // a^((q^d-1)/2) = (prod_{i<d} a^(q^i))^((q-1)/2)
        Poly cur = a % f, norm = a % f;
        for (unsigned i = 1; i < d; ++i) {
          cur = powmod(cur, q, f);
          norm = (norm * cur) % f;
        }
        b = powmod(norm, (q - 1) / 2, f) - Poly::one(field);
      } else {
        // Trace to F_2: a + a^2 + ... + a^(2^(kd-1))
        const unsigned steps = field.k() * d;
        Poly cur = a % f;
        b = cur;
        for (unsigned i = 1; i < steps; ++i) {
          cur = (cur * cur) % f;
          b += cur;
        }
      }
      if (b.is_zero()) continue;
      g = gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < n) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
  throw Error(Errc::Internal, "equal-degree splitting exceeded the retry bound");
}

}  // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "factor of zero");
  const Field& field = f.field();
  Factorization result{field.element(f.leading()), {}};
  std::vector<std::pair<Poly, unsigned>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irr;
      equal_degree(block, d, rng, irr);
      for (auto& pi : irr) result.factors.emplace_back(std::move(pi), mult);
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& fe : result.factors) {
    if (!merged.empty() && merged.back().first == fe.first)
      merged.back().second += fe.second;
    else
      merged.push_back(std::move(fe));
  }
  result.factors = std::move(merged);
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "irreducibility of zero");
  if (f.is_constant()) throw Error(Errc::ConstantPolynomial, "irreducibility of a constant");
  const Poly g = f.monic();
  const Field& field = f.field();
  const Poly t = Poly::monomial(field, 1, 1);
  Poly h = t % g;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = powmod(h, field.q(), g);
    if (!gcd(h - t, g).is_one()) return false;
  }
  return true;
}

Poly poly_from_index(const Field& field, std::uint64_t index, unsigned len) {
  std::vector<Code> c(len, 0);
  const std::uint32_t q = field.q();
  for (unsigned i = 0; i < len && index; ++i) {
    c[i] = static_cast<Code>(index % q);
    index /= q;
  }
  return Poly(field, std::move(c));
}

std::vector<Poly> enumerate_polys(const Field& field, PolySet set, unsigned m) {
  const std::uint64_t q = field.q();
  std::vector<Poly> out;
  if (set == PolySet::AllDegLe) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i <= m; ++i) count *= q;
    out.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) out.push_back(poly_from_index(field, idx, m + 1));
    std::sort(out.begin(), out.end());
    return out;
  }
  for (unsigned deg = 1; deg <= m; ++deg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= q;
    const std::size_t first = out.size();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly f = poly_from_index(field, idx, deg) + Poly::monomial(field, 1, deg);
      if (is_irreducible(f)) out.push_back(std::move(f));
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  }
  return out;
}

}  // namespace wps
