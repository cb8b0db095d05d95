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

// Command-line front end: point counts by enumeration and by the height zeta
// function, plus small algebra utilities.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "wps/enumeration.hpp"
#include "wps/error.hpp"
#include "wps/function_field.hpp"
#include "wps/report.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInfeasible = 3;

struct Flags {
  std::string q = "2";
  std::string modulus;
  std::string curve = "genus0";
  std::string weights = "1,1";
  std::string d = "0";
  std::string format = "table";
  std::uint64_t seed = 0;
  std::uint64_t cap = wps::kDefaultCap;
  unsigned threads = 0;
  bool list = false;
  std::string poly;
  std::string coords;
  unsigned max_deg = 1;
};

void add_field_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--q", f.q, "field: prime power, P^K, or q=P^K:modulus=c0,...,cK");
  cmd->add_option("--modulus", f.modulus, "ascending modulus coefficients for extension fields");
}

void add_count_flags(CLI::App* cmd, Flags& f, bool curve) {
  add_field_flags(cmd, f);
  if (curve) cmd->add_option("--curve", f.curve, "genus0 or elliptic:a=A,b=B");
  cmd->add_option("--weights", f.weights, "comma-separated weights");
  cmd->add_option("--d", f.d, "height d or range A..B");
  cmd->add_option("--format", f.format, "table, csv or json");
  cmd->add_option("--seed", f.seed, "seed for randomized factorization");
  cmd->add_option("--cap", f.cap, "enumeration feasibility cap (WPS_CAP overrides)");
  cmd->add_option("--threads", f.threads, "enumeration workers (0 = all cores)");
}

wps::RunConfig to_config(const Flags& f, wps::Command command) {
  wps::RunConfig c;
  c.field = f.q;
  c.modulus = f.modulus;
  c.curve = f.curve;
  c.weights = wps::WeightVector::parse(f.weights).weights();
  std::tie(c.d_lo, c.d_hi) = wps::parse_d_range(f.d);
  c.command = command;
  c.format = wps::parse_format(f.format);
  c.seed = f.seed;
  c.cap = f.cap;
  if (const char* env = std::getenv("WPS_CAP")) {
    try {
      c.cap = std::stoull(env);
    } catch (const std::exception&) {
      throw wps::Error(wps::Errc::BadSpec, "WPS_CAP must be an integer");
    }
  }
  c.threads = f.threads;
  c.list_points = f.list;
  return c;
}

wps::Field flags_field(const Flags& f) {
  wps::RunConfig c;
  c.field = f.q;
  c.modulus = f.modulus;
  return wps::config_field(c);
}

int run_report(const Flags& f, wps::Command command) {
  const wps::RunConfig config = to_config(f, command);
  const wps::CountReport report = wps::run_command(config);
  std::cout << wps::render(report, command, config.format);
  if (report.first_mismatch) {
    const auto& row = report.rows[*report.first_mismatch];
    std::cerr << "mismatch at d=" << row.d << ": oracle " << row.oracle->get_str() << " != exact "
              << row.exact->get_str() << '\n';
    return kExitMismatch;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points of bounded height on weighted projective spaces over F_q(t)"};
  app.require_subcommand(1);
  Flags f;

  auto* count = app.add_subcommand("count", "enumerate points of height d over F_q(t)");
  add_count_flags(count, f, true);
  count->add_flag("--list", f.list, "print the representative of every point");
  auto* predict = app.add_subcommand("predict", "exact and main-term counts from the height zeta function");
  add_count_flags(predict, f, true);
  auto* compare = app.add_subcommand("compare", "enumeration oracle against the height zeta function");
  add_count_flags(compare, f, true);
  auto* zeta = app.add_subcommand("zeta", "print Z(X,t), Z_w(X,t), the height zeta function and a_u");
  add_count_flags(zeta, f, true);

  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial over F_q");
  add_field_flags(factor_cmd, f);
  factor_cmd->add_option("--poly", f.poly, "ascending coefficients, e.g. 1,0,1")->required();
  factor_cmd->add_option("--seed", f.seed, "splitting seed");
  auto* height_cmd = app.add_subcommand("height", "height of a point of P(w) over F_q(t)");
  add_field_flags(height_cmd, f);
  height_cmd->add_option("--weights", f.weights, "comma-separated weights");
  height_cmd->add_option("--coords", f.coords, "semicolon-separated num/den coordinates")->required();
  auto* irr_cmd = app.add_subcommand("irr", "list monic irreducibles of degree <= m");
  add_field_flags(irr_cmd, f);
  irr_cmd->add_option("--max-deg", f.max_deg, "largest degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitBadInput;
  }

  try {
    if (count->parsed()) return run_report(f, wps::Command::Count);
    if (predict->parsed()) return run_report(f, wps::Command::Predict);
    if (compare->parsed()) return run_report(f, wps::Command::Compare);
    if (zeta->parsed()) return run_report(f, wps::Command::Zeta);
    const wps::Field field = flags_field(f);
    if (factor_cmd->parsed()) {
      std::cout << wps::factor(wps::Poly::parse(field, f.poly), f.seed).to_string() << '\n';
    } else if (height_cmd->parsed()) {
      std::vector<wps::RationalFunction> coords;
      std::stringstream ss(f.coords);
      std::string tok;
      while (std::getline(ss, tok, ';')) coords.push_back(wps::RationalFunction::parse(field, tok));
      std::cout << wps::height(coords, wps::WeightVector::parse(f.weights)) << '\n';
    } else if (irr_cmd->parsed()) {
      for (const auto& p : wps::enumerate_polys(field, wps::PolySet::MonicIrreducibleDegLe, f.max_deg))
        std::cout << p.to_string() << '\n';
    }
    return 0;
  } catch (const wps::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == wps::Errc::TooLarge) return kExitInfeasible;
    if (e.code() == wps::Errc::Internal) return kExitMismatch;
    return kExitBadInput;
  }
}
