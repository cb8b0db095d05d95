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

#include "wps/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "wps/error.hpp"

namespace wps {

// ---------------------------------------------------------------------------
// WeightVector

WeightVector::WeightVector(std::vector<unsigned> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw Error(Errc::BadSpec, "weight vector is empty");
  if (w_.size() > 16) throw Error(Errc::BadSpec, "at most 16 weights are supported");
  min_ = w_[0];
  for (unsigned x : w_) {
    if (x == 0) throw Error(Errc::BadSpec, "weights must be >= 1");
    total_ += x;
    min_ = std::min(min_, x);
  }
}

WeightVector WeightVector::parse(const std::string& text) {
  std::vector<unsigned> w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 1) throw Error(Errc::BadSpec, "bad weight '" + tok + "'");
      w.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw Error(Errc::BadSpec, "bad weight '" + tok + "'");
    }
  }
  return WeightVector(std::move(w));
}

unsigned WeightVector::total(IndexSubset u) const noexcept {
  unsigned s = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (u >> i & 1) s += w_[i];
  return s;
}

unsigned WeightVector::min(IndexSubset u) const noexcept {
  unsigned m = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (u >> i & 1) m = m == 0 ? w_[i] : std::min(m, w_[i]);
  return m;
}

unsigned WeightVector::gcd_with(IndexSubset u, std::uint32_t q) const noexcept {
  unsigned g = q - 1;
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (u >> i & 1) g = std::gcd(g, w_[i]);
  return g;
}

std::vector<IndexSubset> WeightVector::subsets() const {
  std::vector<IndexSubset> out(std::size_t{1} << w_.size());
  std::iota(out.begin(), out.end(), IndexSubset{0});
  return out;
}

std::string WeightVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s + ")";
}

std::vector<unsigned> subset_indices(IndexSubset u) {
  std::vector<unsigned> out;
  for (unsigned i = 0; u; ++i, u >>= 1)
    if (u & 1) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Points

IndexSubset NormalizedPoint::support() const noexcept {
  IndexSubset s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) s |= IndexSubset{1} << i;
  return s;
}

namespace {

long long ceil_height(const Poly& x, unsigned w) {
  return (static_cast<long long>(x.degree()) + w - 1) / w;
}

void check_tuple(std::span<const Poly> coords, const WeightVector& w) {
  if (coords.size() != w.length()) throw Error(Errc::LengthMismatch, "coordinate count differs from weight count");
  if (std::all_of(coords.begin(), coords.end(), [](const Poly& x) { return x.is_zero(); }))
    throw Error(Errc::AllZero, "all coordinates are zero");
}

}  // namespace

long long NormalizedPoint::height() const {
  long long h = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) h = std::max(h, ceil_height(coords[i], weights[i]));
  return h;
}

std::string NormalizedPoint::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += " : ";
    s += coords[i].to_string();
  }
  return s + "]";
}

bool is_w_primitive(std::span<const Poly> coords, const WeightVector& w) {
  check_tuple(coords, w);
  int maxdeg = 0;
  for (const auto& x : coords) maxdeg = std::max(maxdeg, x.degree());
  if (maxdeg == 0) return true;
  const Field& field = coords[0].field();
  for (const Poly& pi : enumerate_polys(field, PolySet::MonicIrreducibleDegLe, static_cast<unsigned>(maxdeg))) {
    long long m = -1;
    for (std::size_t i = 0; i < coords.size() && m != 0; ++i) {
      if (coords[i].is_zero()) continue;
      const long long f = multiplicity(coords[i], pi) / w[i];
      m = m < 0 ? f : std::min(m, f);
    }
    if (m >= 1) return false;
  }
  return true;
}

std::vector<Poly> orbit_min(std::span<const Poly> coords, const WeightVector& w) {
  check_tuple(coords, w);
  const Field& field = coords[0].field();
  std::vector<Poly> best(coords.begin(), coords.end());
  for (Code lambda = 2; lambda < field.q(); ++lambda) {
    std::vector<Poly> cand;
    cand.reserve(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) cand.push_back(coords[i].scaled(field.pow(lambda, w[i])));
    if (cand < best) best = std::move(cand);
  }
  return best;
}

NormalizedPoint canonical_rep(std::span<const Poly> coords, const WeightVector& w) {
  check_tuple(coords, w);
  if (!is_w_primitive(coords, w)) throw Error(Errc::NotPrimitive, "tuple is not w-primitive");
  return {orbit_min(coords, w), w};
}

unsigned stabilizer_order(IndexSubset support, const WeightVector& w, std::uint32_t q) {
  if (support == 0) throw Error(Errc::EmptySupport, "stabilizer of an empty support");
  return w.gcd_with(support, q);
}

NormalizedPoint normalize_point(std::span<const RationalFunction> coords, const WeightVector& w) {
  if (coords.size() != w.length()) throw Error(Errc::LengthMismatch, "coordinate count differs from weight count");
  const RationalFunction* first = nullptr;
  for (const auto& y : coords)
    if (!y.is_zero()) first = first ? first : &y;
  if (!first) throw Error(Errc::AllZero, "all coordinates are zero");
  const Field& field = first->field();

  // lambda = lcm of denominators makes every lambda^{w_i} y_i a polynomial.
  Poly lcm = Poly::one(field);
  for (const auto& y : coords)
    if (!y.is_zero()) lcm = lcm * (y.den() / gcd(lcm, y.den()));
  std::vector<Poly> x;
  x.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) {
      x.emplace_back(field);
      continue;
    }
    Poly v = coords[i].num() * (lcm / coords[i].den());
    for (unsigned k = 1; k < w[i]; ++k) v *= lcm;
    x.push_back(std::move(v));
  }

  // Divide out pi^{m w_i} with m = min_i floor(v_pi(x_i) / w_i).
  Poly g(field);
  for (const auto& v : x)
    if (!v.is_zero()) g = g.is_zero() ? v.monic() : gcd(g, v);
  for (const auto& [pi, e] : factor(g).factors) {
    long long m = -1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      const long long f = multiplicity(x[i], pi) / w[i];
      m = m < 0 ? f : std::min(m, f);
    }
    for (std::size_t i = 0; i < x.size() && m > 0; ++i) {
      if (x[i].is_zero()) continue;
      for (long long k = 0; k < m * w[i]; ++k) x[i] = x[i] / pi;
    }
  }
  return canonical_rep(x, w);
}

std::uint64_t search_space(std::uint32_t q, const WeightVector& w, unsigned d) noexcept {
  std::uint64_t total = 1;
  for (unsigned wi : w.weights()) {
    const std::uint64_t len = std::uint64_t{wi} * d + 1;
    for (std::uint64_t k = 0; k < len; ++k) {
      if (total > UINT64_MAX / q) return UINT64_MAX;
      total *= q;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

// Per-coordinate tables of every polynomial of degree <= w_i d. For each
// nonzero x the "witness" polynomial has exactly the prime support
// {pi : pi^{w_i} | x}; a tuple is w-primitive iff the witnesses of its nonzero
// coordinates have gcd 1.
struct CoordTable {
  std::vector<Poly> polys;
  std::vector<int> level;  // ceil(deg / w_i), -1 for zero
  std::vector<Poly> witness;
  std::vector<char> witness_one;
};

CoordTable build_table(const Field& field, unsigned wi, unsigned d, const std::vector<Poly>& irreducibles) {
  CoordTable t;
  const unsigned len = wi * d + 1;
  std::uint64_t count = 1;
  for (unsigned k = 0; k < len; ++k) count *= field.q();
  t.polys.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) t.polys.push_back(poly_from_index(field, idx, len));

  std::vector<Poly> powers;  // pi^{w_i}
  for (const auto& pi : irreducibles) {
    Poly pw = Poly::one(field);
    for (unsigned k = 0; k < wi; ++k) pw *= pi;
    powers.push_back(std::move(pw));
  }

  t.level.resize(count);
  t.witness.reserve(count);
  t.witness_one.resize(count);
  for (std::uint64_t j = 0; j < count; ++j) {
    const Poly& x = t.polys[j];
    if (x.is_zero()) {
      t.level[j] = -1;
      t.witness.push_back(Poly::one(field));
      t.witness_one[j] = 1;
      continue;
    }
    t.level[j] = static_cast<int>(ceil_height(x, wi));
    Poly wit = Poly::one(field);
    if (wi == 1) {
      wit = x.monic();
    } else {
      for (std::size_t k = 0; k < irreducibles.size(); ++k) {
        if (powers[k].degree() > x.degree()) break;
        if ((x % powers[k]).is_zero()) wit *= irreducibles[k];
      }
    }
    t.witness_one[j] = wit.is_one();
    t.witness.push_back(std::move(wit));
  }
  return t;
}

struct Search {
  const Field& field;
  const WeightVector& w;
  int d;
  bool listing;
  std::vector<CoordTable> tables;
  std::vector<std::vector<Code>> lambda_pow;  // lambda_pow[i][lambda] = lambda^{w_i}
};

enum class GcdState { None, One, Pending };

struct Worker {
  const Search& s;
  std::vector<std::uint64_t> counts;
  std::vector<NormalizedPoint> points;
  std::vector<std::size_t> choice;

  explicit Worker(const Search& search)
      : s(search), counts(std::size_t{1} << search.w.length(), 0), choice(search.w.length(), 0) {}

  static GcdState advance(GcdState st, const Poly* g, const CoordTable& t, std::size_t j, Poly& out) {
    if (st == GcdState::One || t.witness_one[j]) return GcdState::One;
    if (st == GcdState::None) {
      out = t.witness[j];
      return GcdState::Pending;
    }
    out = gcd(*g, t.witness[j]);
    return out.is_one() ? GcdState::One : GcdState::Pending;
  }

  bool is_canonical() const {
    const std::size_t n = choice.size();
    for (Code lambda = 2; lambda < s.field.q(); ++lambda) {
      for (std::size_t i = 0; i < n; ++i) {
        const Poly& x = s.tables[i].polys[choice[i]];
        const Poly y = x.scaled(s.lambda_pow[i][lambda]);
        if (y < x) return false;
        if (x < y) break;
      }
    }
    return true;
  }

  void record(IndexSubset mask) {
    ++counts[mask];
    if (!s.listing || !is_canonical()) return;
    std::vector<Poly> coords;
    for (std::size_t i = 0; i < choice.size(); ++i) coords.push_back(s.tables[i].polys[choice[i]]);
    points.push_back({std::move(coords), s.w});
  }

  void walk(std::size_t i, GcdState st, const Poly* g, IndexSubset mask, bool top) {
    const CoordTable& t = s.tables[i];
    const std::size_t n = choice.size();
    const std::size_t size = t.polys.size();
    Poly next(s.field);
    if (i + 1 == n) {
      // Last coordinate, unrolled.
      for (std::size_t j = 0; j < size; ++j) {
        choice[i] = j;
        if (t.level[j] < 0) {
          if (mask != 0 && top && st != GcdState::Pending) record(mask);
          continue;
        }
        if (!top && t.level[j] != s.d) continue;
        if (st == GcdState::None && !t.witness_one[j]) continue;
        if (st == GcdState::Pending && !t.witness_one[j] && !gcd(*g, t.witness[j]).is_one()) continue;
        record(mask | IndexSubset{1} << i);
      }
      return;
    }
    for (std::size_t j = 0; j < size; ++j) {
      choice[i] = j;
      if (t.level[j] < 0) {
        walk(i + 1, st, g, mask, top);
        continue;
      }
      const GcdState ns = advance(st, g, t, j, next);
      walk(i + 1, ns, ns == GcdState::Pending ? &next : nullptr, mask | IndexSubset{1} << i, top || t.level[j] == s.d);
    }
  }

  // Processes one slice: coordinate 0 fixed to index j.
  void run_slice(std::size_t j) {
    const CoordTable& t = s.tables[0];
    choice[0] = j;
    if (choice.size() == 1) {
      if (t.level[j] == s.d && t.witness_one[j]) record(1);
      return;
    }
    if (t.level[j] < 0) {
      walk(1, GcdState::None, nullptr, 0, false);
      return;
    }
    Poly g(s.field);
    const GcdState st = advance(GcdState::None, nullptr, t, j, g);
    walk(1, st, st == GcdState::Pending ? &g : nullptr, 1, t.level[j] == s.d);
  }
};

struct SearchResult {
  std::vector<std::uint64_t> counts;  // per support mask
  std::vector<NormalizedPoint> points;
};

SearchResult run_search(const Field& field, const WeightVector& w, unsigned d, bool listing,
                        const EnumerationOptions& options) {
  const std::uint64_t space = search_space(field.q(), w, d);
  if (space > options.cap)
    throw Error(Errc::TooLarge, "search space " + std::to_string(space) + " exceeds the cap " +
                                    std::to_string(options.cap));

  Search s{field, w, static_cast<int>(d), listing, {}, {}};
  const auto irreducibles = enumerate_polys(field, PolySet::MonicIrreducibleDegLe, d);
  for (unsigned wi : w.weights()) {
    s.tables.push_back(build_table(field, wi, d, irreducibles));
    std::vector<Code> pw(field.q());
    for (Code l = 0; l < field.q(); ++l) pw[l] = field.pow(l, wi);
    s.lambda_pow.push_back(std::move(pw));
  }

  const std::size_t slices = s.tables[0].polys.size();
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, slices));

  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  std::vector<Worker> workers;
  workers.reserve(threads);
  for (unsigned k = 0; k < threads; ++k) workers.emplace_back(s);

  auto body = [&](Worker& wk) {
    for (std::size_t j; (j = next.fetch_add(1)) < slices;) {
      wk.run_slice(j);
      const std::uint64_t finished = done.fetch_add(1) + 1;
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(finished, slices);
      }
    }
  };
  if (threads == 1) {
    body(workers[0]);
  } else {
    std::vector<std::thread> pool;
    for (auto& wk : workers) pool.emplace_back(body, std::ref(wk));
    for (auto& th : pool) th.join();
  }

  SearchResult r;
  r.counts.assign(std::size_t{1} << w.length(), 0);
  for (auto& wk : workers) {
    for (std::size_t m = 0; m < r.counts.size(); ++m) r.counts[m] += wk.counts[m];
    r.points.insert(r.points.end(), std::make_move_iterator(wk.points.begin()),
                    std::make_move_iterator(wk.points.end()));
  }
  std::sort(r.points.begin(), r.points.end());
  return r;
}

}  // namespace

std::vector<NormalizedPoint> enumerate_points(const Field& field, const WeightVector& w, unsigned d,
                                              const EnumerationOptions& options) {
  return run_search(field, w, d, true, options).points;
}

PointCount count_points_detailed(const Field& field, const WeightVector& w, unsigned d,
                                 const EnumerationOptions& options) {
  const SearchResult r = run_search(field, w, d, false, options);
  PointCount pc;
  for (IndexSubset m = 1; m < r.counts.size(); ++m) {
    const mpz_class c = mpz_class(std::to_string(r.counts[m]));
    pc.primitive_tuples += c;
    pc.weighted_tuples += c * stabilizer_order(m, w, field.q());
  }
  const mpz_class unit_count = field.q() - 1;
  if (pc.weighted_tuples % unit_count != 0)
    throw Error(Errc::Internal, "stabilizer-weighted tuple count is not divisible by q - 1");
  pc.orbits = pc.weighted_tuples / unit_count;
  return pc;
}

}  // namespace wps
