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

#include "wps/curves.hpp"

#include "wps/error.hpp"
#include "wps/polynomials.hpp"

namespace wps {

struct CurveModel::Data {
  CurveKind kind = CurveKind::Genus0;
  Field field;
  Code a = 0;
  Code b = 0;
  std::vector<ECPoint> reps;
};

QPoly ZetaData::numerator_poly() const {
  QPoly p;
  for (long long c : numerator) p.emplace_back(static_cast<long>(c));
  qpoly::normalize(p);
  return p;
}

RatFuncQ ZetaData::zeta() const {
  return RatFuncQ(numerator_poly(), qpoly::mul(qpoly::one_minus(1), qpoly::one_minus(q)));
}

std::string ZetaData::numerator_string() const { return qpoly::to_string(numerator_poly()); }

CurveModel CurveModel::genus0(const Field& field) {
  auto d = std::make_shared<Data>(Data{CurveKind::Genus0, field, 0, 0, {ECPoint::at_infinity()}});
  return CurveModel(std::move(d));
}

CurveModel CurveModel::elliptic(const Field& field, Code a, Code b) {
  if (field.p() < 5)
    throw Error(Errc::UnsupportedCharacteristic, "short Weierstrass models need characteristic >= 5");
  // 4a^3 + 27b^2
  const Code disc = field.add(field.mul(field.from_int(4), field.pow(a, 3)),
                              field.mul(field.from_int(27), field.mul(b, b)));
  if (disc == 0) throw Error(Errc::SingularCurve, "4a^3 + 27b^2 = 0");

  auto d = std::make_shared<Data>(Data{CurveKind::Elliptic, field, a, b, {ECPoint::at_infinity()}});
  // sqrt table: roots[s] lists y with y^2 = s.
  std::vector<std::vector<Code>> roots(field.q());
  for (Code y = 0; y < field.q(); ++y) roots[field.mul(y, y)].push_back(y);
  for (Code x = 0; x < field.q(); ++x) {
    const Code rhs = field.add(field.add(field.pow(x, 3), field.mul(a, x)), b);
    for (Code y : roots[rhs]) d->reps.push_back(ECPoint::affine(x, y));
  }
  const long long trace = static_cast<long long>(field.q()) + 1 - static_cast<long long>(d->reps.size());
  if (trace * trace > 4LL * field.q()) throw Error(Errc::Internal, "point count violates the Hasse bound");
  return CurveModel(std::move(d));
}

CurveModel CurveModel::parse(const Field& field, std::string_view spec) {
  if (spec == "genus0") return genus0(field);
  if (!spec.starts_with("elliptic:")) throw Error(Errc::BadSpec, "unknown curve spec '" + std::string(spec) + "'");
  std::string_view rest = spec.substr(9);
  // "a=A,b=B" where A, B may themselves be parenthesized tuples.
  const auto bpos = rest.find("b=");
  if (!rest.starts_with("a=") || bpos == std::string_view::npos || bpos < 3 || rest[bpos - 1] != ',')
    throw Error(Errc::BadSpec, "expected elliptic:a=A,b=B");
  const auto parse_coeff = [&](std::string_view text) {
    const Poly c = Poly::parse(field, text);
    if (c.degree() > 0) throw Error(Errc::BadSpec, "curve coefficient must be a single field element");
    return c.coeff(0);
  };
  return elliptic(field, parse_coeff(rest.substr(2, bpos - 3)), parse_coeff(rest.substr(bpos + 2)));
}

CurveKind CurveModel::kind() const noexcept { return d_->kind; }
const Field& CurveModel::field() const noexcept { return d_->field; }
unsigned CurveModel::genus() const noexcept { return d_->kind == CurveKind::Genus0 ? 0 : 1; }
Code CurveModel::a() const noexcept { return d_->a; }
Code CurveModel::b() const noexcept { return d_->b; }
long long CurveModel::class_number() const noexcept { return static_cast<long long>(d_->reps.size()); }
const std::vector<ECPoint>& CurveModel::class_reps() const noexcept { return d_->reps; }

std::string CurveModel::to_string() const {
  if (d_->kind == CurveKind::Genus0) return "genus0";
  return "elliptic:a=" + d_->field.format(d_->a) + ",b=" + d_->field.format(d_->b);
}

bool CurveModel::on_curve(const ECPoint& p) const {
  if (d_->kind != CurveKind::Elliptic) return p.infinity;
  if (p.infinity) return true;
  const Field& f = d_->field;
  if (p.x >= f.q() || p.y >= f.q()) return false;
  const Code rhs = f.add(f.add(f.pow(p.x, 3), f.mul(d_->a, p.x)), d_->b);
  return f.mul(p.y, p.y) == rhs;
}

void CurveModel::require_point(const ECPoint& p) const {
  if (!on_curve(p)) throw Error(Errc::PointNotOnCurve, "point is not on " + to_string());
}

ECPoint CurveModel::neg(const ECPoint& p) const {
  require_point(p);
  if (p.infinity) return p;
  return ECPoint::affine(p.x, d_->field.neg(p.y));
}

ECPoint CurveModel::add(const ECPoint& p, const ECPoint& r) const {
  require_point(p);
  require_point(r);
  if (p.infinity) return r;
  if (r.infinity) return p;
  const Field& f = d_->field;
  Code slope;
  if (p.x == r.x) {
    if (f.add(p.y, r.y) == 0) return ECPoint::at_infinity();
    // tangent: (3x^2 + a) / 2y
    slope = f.div(f.add(f.mul(f.from_int(3), f.mul(p.x, p.x)), d_->a), f.mul(f.from_int(2), p.y));
  } else {
    slope = f.div(f.sub(r.y, p.y), f.sub(r.x, p.x));
  }
  const Code x3 = f.sub(f.sub(f.mul(slope, slope), p.x), r.x);
  const Code y3 = f.sub(f.mul(slope, f.sub(p.x, x3)), p.y);
  return ECPoint::affine(x3, y3);
}

ECPoint CurveModel::smul(long long k, const ECPoint& p) const {
  require_point(p);
  ECPoint base = k < 0 ? neg(p) : p;
  unsigned long long n = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  ECPoint acc = ECPoint::at_infinity();
  while (n) {
    if (n & 1) acc = add(acc, base);
    n >>= 1;
    if (n) base = add(base, base);
  }
  return acc;
}

long long CurveModel::rr_dim(std::size_t j, unsigned u, unsigned d) const {
  if (u == 0) throw Error(Errc::BadSpec, "rr_dim needs u >= 1");
  if (j >= d_->reps.size()) throw Error(Errc::BadSpec, "class index out of range");
  const long long deg = static_cast<long long>(u) * d;
  if (d_->kind == CurveKind::Genus0) return deg + 1;
  // Genus 1: l(D) = deg D for deg D >= 1; in degree 0 only principal divisors
  // have sections, and u((P_j) - (O)) is principal iff [u]P_j = O.
  if (deg >= 1) return deg;
  return smul(u, d_->reps[j]).infinity ? 1 : 0;
}

ZetaData CurveModel::zeta_data() const {
  ZetaData z;
  z.q = d_->field.q();
  z.genus = genus();
  z.class_number = class_number();
  if (d_->kind == CurveKind::Genus0) {
    z.numerator = {1};
  } else {
    const long long trace = static_cast<long long>(z.q) + 1 - z.class_number;
    z.numerator = {1, -trace, static_cast<long long>(z.q)};
  }
  return z;
}

mpq_class CurveModel::zeta_value(int s) const {
  if (s <= 1) throw Error(Errc::PoleAtOne, "zeta_X(s) needs s >= 2");
  mpz_class qs;
  mpz_ui_pow_ui(qs.get_mpz_t(), d_->field.q(), static_cast<unsigned long>(s));
  const mpq_class t(mpz_class(1), qs);
  return zeta_data().zeta().eval(t);
}

}  // namespace wps
