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

#include "wps/report.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "wps/error.hpp"

namespace wps {

namespace {

unsigned parse_unsigned(const std::string& s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(Errc::BadSpec, "expected a nonnegative integer, got '" + s + "'");
  return v;
}

std::string subset_string(const WeightVector& w, IndexSubset u, bool weights) {
  std::string s;
  for (unsigned i : subset_indices(u)) {
    if (!s.empty()) s += ' ';
    s += std::to_string(weights ? w[i] : i);
  }
  return s;
}

void require_genus0(const CurveModel& curve) {
  if (curve.kind() != CurveKind::Genus0)
    throw Error(Errc::BadSpec, "the enumeration oracle runs over F_q(t) only (curve genus0)");
}

CountReport header(const RunConfig& config, const Field& field, const CurveModel& curve) {
  CountReport r;
  r.field = field.spec_string();
  r.q = field.q();
  r.weights = config.weights;
  r.curve = curve.to_string();
  r.h = curve.class_number();
  r.g = curve.genus();
  r.zeta_numerator = curve.zeta_data().numerator_string();
  return r;
}

void fill_zeta_header(CountReport& r, const WeightedZeta& hz) {
  r.d0 = hz.d0;
  r.a_table = hz.main_coeffs;
  std::set<unsigned> orders;
  for (const auto& mc : hz.main_coeffs) orders.insert(hz.w.total(mc.u));
  for (unsigned s : orders) r.zeta_values.emplace_back(s, hz.curve.zeta_value(static_cast<int>(s)));
}

EnumerationOptions enumeration_options(const RunConfig& config) {
  EnumerationOptions opt;
  opt.cap = config.cap;
  opt.threads = config.threads;
  return opt;
}

void check_range(const RunConfig& config) {
  if (config.d_lo > config.d_hi) throw Error(Errc::BadSpec, "empty d range");
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw Error(Errc::BadSpec, "unknown format '" + text + "'");
}

std::pair<unsigned, unsigned> parse_d_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned d = parse_unsigned(text);
    return {d, d};
  }
  const unsigned lo = parse_unsigned(text.substr(0, dots));
  const unsigned hi = parse_unsigned(text.substr(dots + 2));
  if (lo > hi) throw Error(Errc::BadSpec, "empty d range '" + text + "'");
  return {lo, hi};
}

Field config_field(const RunConfig& config) {
  if (config.modulus.empty() || config.field.find(':') != std::string::npos) return Field::parse(config.field);
  return Field::parse(config.field + ":modulus=" + config.modulus);
}

CountReport cmd_count(const RunConfig& config) {
  check_range(config);
  const Field field = config_field(config);
  const CurveModel curve = CurveModel::parse(field, config.curve);
  require_genus0(curve);
  const WeightVector w(config.weights);
  CountReport r = header(config, field, curve);
  for (unsigned d = config.d_lo; d <= config.d_hi; ++d) {
    ReportRow row;
    row.d = d;
    if (config.list_points) {
      const auto pts = enumerate_points(field, w, d, enumeration_options(config));
      row.oracle = mpz_class(static_cast<unsigned long>(pts.size()));
      for (const auto& p : pts) row.points.push_back(p.to_string());
    } else {
      row.oracle = count_points(field, w, d, enumeration_options(config));
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

CountReport cmd_predict(const RunConfig& config) {
  check_range(config);
  const Field field = config_field(config);
  const CurveModel curve = CurveModel::parse(field, config.curve);
  const WeightVector w(config.weights);
  const WeightedZeta hz = height_zeta(curve, w);
  CountReport r = header(config, field, curve);
  fill_zeta_header(r, hz);
  for (unsigned d = config.d_lo; d <= config.d_hi; ++d) {
    ReportRow row;
    row.d = d;
    row.exact = ad_exact(hz, d);
    if (d >= 1) {
      row.main = ad_main(hz, d);
      row.abs_error = abs(mpq_class(*row.exact) - *row.main);
    }
    row.at_or_above_d0 = d >= hz.d0;
    r.rows.push_back(std::move(row));
  }
  return r;
}

CountReport cmd_compare(const RunConfig& config) {
  const Field field = config_field(config);
  require_genus0(CurveModel::parse(field, config.curve));
  CountReport r = cmd_predict(config);
  const WeightVector w(config.weights);
  for (ReportRow& row : r.rows) row.oracle = count_points(field, w, row.d, enumeration_options(config));
  r.first_mismatch = find_mismatch(r.rows);
  return r;
}

std::optional<std::size_t> find_mismatch(const std::vector<ReportRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].oracle && rows[i].exact && *rows[i].oracle != *rows[i].exact) return i;
  return std::nullopt;
}

CountReport cmd_zeta(const RunConfig& config) {
  const Field field = config_field(config);
  const CurveModel curve = CurveModel::parse(field, config.curve);
  const WeightVector w(config.weights);
  const WeightedZeta hz = height_zeta(curve, w);
  CountReport r = header(config, field, curve);
  fill_zeta_header(r, hz);
  r.zeta_x = hz.zeta_x.to_string();
  r.zw = hz.zw.to_string();
  r.height_zeta = hz.height_zeta.to_string();
  r.poly_part = qpoly::to_string(hz.poly_part);
  if (!hz.poly_part.empty()) {
    // Keep the exact rational coefficients rather than the cleared form.
    std::string s;
    for (std::size_t i = 0; i < hz.poly_part.size(); ++i) {
      if (hz.poly_part[i] == 0) continue;
      if (!s.empty()) s += " + ";
      s += "(" + hz.poly_part[i].get_str() + ")";
      if (i > 0) s += i == 1 ? "*t" : "*t^" + std::to_string(i);
    }
    r.poly_part = s;
  }
  return r;
}

CountReport run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::Count: return cmd_count(config);
    case Command::Predict: return cmd_predict(config);
    case Command::Compare: return cmd_compare(config);
    case Command::Zeta: return cmd_zeta(config);
  }
  throw Error(Errc::BadSpec, "unknown command");
}

nlohmann::json to_json(const CountReport& r) {
  using nlohmann::json;
  const WeightVector w(r.weights);
  json j;
  j["q"] = r.q;
  j["field"] = r.field;
  j["weights"] = r.weights;
  j["curve"] = r.curve;
  j["h"] = r.h;
  j["g"] = r.g;
  j["zeta_numerator"] = r.zeta_numerator;
  j["d0"] = r.d0 ? json(*r.d0) : json(nullptr);
  json zv = json::array();
  for (const auto& [s, v] : r.zeta_values) zv.push_back({{"s", s}, {"value", v.get_str()}});
  j["zeta_values"] = zv;
  json at = json::array();
  for (const auto& mc : r.a_table) at.push_back({{"u", subset_indices(mc.u)}, {"value", mc.value.get_str()}});
  j["a_table"] = at;
  json rows = json::array();
  for (const auto& row : r.rows) {
    json o;
    o["d"] = row.d;
    o["oracle"] = row.oracle ? json(row.oracle->get_str()) : json(nullptr);
    o["exact"] = row.exact ? json(row.exact->get_str()) : json(nullptr);
    o["main"] = row.main ? json(row.main->get_str()) : json("n/a");
    o["abs_error"] = row.abs_error ? json(row.abs_error->get_str()) : json(nullptr);
    o["d_ge_d0"] = row.at_or_above_d0;
    if (!row.points.empty()) o["points"] = row.points;
    rows.push_back(o);
  }
  j["rows"] = rows;
  if (r.first_mismatch) j["first_mismatch"] = r.rows[*r.first_mismatch].d;
  if (!r.zeta_x.empty()) {
    j["zeta_x"] = r.zeta_x;
    j["zw"] = r.zw;
    j["height_zeta"] = r.height_zeta;
    j["poly_part"] = r.poly_part;
  }
  return j;
}

std::vector<ReportRow> rows_from_json(const nlohmann::json& j) {
  std::vector<ReportRow> rows;
  for (const auto& o : j.at("rows")) {
    ReportRow row;
    row.d = o.at("d").get<unsigned>();
    if (!o.at("oracle").is_null()) row.oracle = mpz_class(o.at("oracle").get<std::string>());
    if (!o.at("exact").is_null()) row.exact = mpz_class(o.at("exact").get<std::string>());
    if (o.at("main").get<std::string>() != "n/a") {
      row.main = mpq_class(o.at("main").get<std::string>());
      row.main->canonicalize();
    }
    if (!o.at("abs_error").is_null()) {
      row.abs_error = mpq_class(o.at("abs_error").get<std::string>());
      row.abs_error->canonicalize();
    }
    row.at_or_above_d0 = o.at("d_ge_d0").get<bool>();
    if (o.contains("points")) row.points = o.at("points").get<std::vector<std::string>>();
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string opt_str(const std::optional<mpz_class>& v) { return v ? v->get_str() : ""; }
std::string opt_str(const std::optional<mpq_class>& v) { return v ? v->get_str() : "n/a"; }

std::string weights_string(const std::vector<unsigned>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void render_a_table_csv(std::ostream& os, const CountReport& r) {
  const WeightVector w(r.weights);
  os << "subset,weights,size,a_u\n";
  for (const auto& mc : r.a_table)
    os << subset_string(w, mc.u, false) << ',' << subset_string(w, mc.u, true) << ',' << w.total(mc.u) << ','
       << mc.value.get_str() << '\n';
}

}  // namespace

std::string render(const CountReport& r, Command command, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::Json) {
    os << to_json(r).dump(2) << '\n';
    return os.str();
  }
  const bool has_oracle = command == Command::Count || command == Command::Compare;
  const bool has_exact = command != Command::Count;

  if (format == OutputFormat::Csv) {
    if (command == Command::Zeta) {
      render_a_table_csv(os, r);
      return os.str();
    }
    os << "d";
    if (has_oracle) os << ",oracle";
    if (has_exact) os << ",exact,main,abs_error,d_ge_d0";
    os << '\n';
    for (const auto& row : r.rows) {
      os << row.d;
      if (has_oracle) os << ',' << opt_str(row.oracle);
      if (has_exact)
        os << ',' << opt_str(row.exact) << ',' << opt_str(row.main) << ','
           << (row.abs_error ? row.abs_error->get_str() : "n/a") << ',' << (row.at_or_above_d0 ? 1 : 0);
      os << '\n';
    }
    return os.str();
  }

  os << "field: " << r.field << "  weights: (" << weights_string(r.weights) << ")  curve: " << r.curve
     << "  g=" << r.g << "  h=" << r.h << '\n';
  os << "zeta numerator P(t) = " << r.zeta_numerator << '\n';
  if (r.d0) os << "d0 = " << *r.d0 << '\n';
  for (const auto& [s, v] : r.zeta_values) os << "zeta_X(" << s << ") = " << v.get_str() << '\n';
  if (!r.a_table.empty()) {
    const WeightVector w(r.weights);
    os << "a_u:\n";
    for (const auto& mc : r.a_table)
      os << "  u={" << subset_string(w, mc.u, false) << "} weights=(" << subset_string(w, mc.u, true)
         << ") |u|=" << w.total(mc.u) << "  a_u=" << mc.value.get_str() << '\n';
  }
  if (command == Command::Zeta) {
    os << "Z(X,t)        = " << r.zeta_x << '\n';
    os << "Z_w(X,t)      = " << r.zw << '\n';
    os << "height zeta   = " << r.height_zeta << '\n';
    os << "poly part     = " << r.poly_part << '\n';
    return os.str();
  }

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"d"};
  if (has_oracle) head.push_back("oracle");
  if (has_exact) {
    head.push_back("exact");
    head.push_back("main");
    head.push_back("abs_error");
    head.push_back("d>=d0");
  }
  cells.push_back(head);
  for (const auto& row : r.rows) {
    std::vector<std::string> c{std::to_string(row.d)};
    if (has_oracle) c.push_back(opt_str(row.oracle));
    if (has_exact) {
      c.push_back(opt_str(row.exact));
      c.push_back(opt_str(row.main));
      c.push_back(row.abs_error ? row.abs_error->get_str() : "n/a");
      c.push_back(row.at_or_above_d0 ? "yes" : "no");
    }
    cells.push_back(std::move(c));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& c : cells)
    for (std::size_t i = 0; i < c.size(); ++i) width[i] = std::max(width[i], c[i].size());
  for (const auto& c : cells) {
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "  " : "") << pad(c[i], width[i]);
    os << '\n';
  }
  for (const auto& row : r.rows)
    for (const auto& p : row.points) os << "  d=" << row.d << "  " << p << '\n';
  return os.str();
}

}  // namespace wps
