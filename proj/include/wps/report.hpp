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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "wps/curves.hpp"
#include "wps/enumeration.hpp"
#include "wps/zeta.hpp"

namespace wps {

enum class Command { Count, Predict, Compare, Zeta };
enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_format(const std::string& text);

struct RunConfig {
  /// Field spec string understood by Field::parse, or a prime power.
  std::string field = "2";
  /// Optional ascending modulus "c0,...,cK" for extension fields.
  std::string modulus;
  std::string curve = "genus0";
  std::vector<unsigned> weights{1, 1};
  unsigned d_lo = 0;
  unsigned d_hi = 0;
  Command command = Command::Predict;
  OutputFormat format = OutputFormat::Table;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultCap;
  unsigned threads = 0;
  bool list_points = false;
};

/// "A" or "A..B".
std::pair<unsigned, unsigned> parse_d_range(const std::string& text);
/// Builds the field from RunConfig::field and RunConfig::modulus.
Field config_field(const RunConfig& config);

struct ReportRow {
  unsigned d = 0;
  std::optional<mpz_class> oracle;
  std::optional<mpz_class> exact;
  /// Absent for d < 1.
  std::optional<mpq_class> main;
  std::optional<mpq_class> abs_error;
  bool at_or_above_d0 = false;
  std::vector<std::string> points;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct CountReport {
  std::string field;
  std::uint32_t q = 0;
  std::vector<unsigned> weights;
  std::string curve;
  long long h = 0;
  unsigned g = 0;
  std::optional<unsigned> d0;
  std::string zeta_numerator;
  /// (s, zeta_X(s)) for every |u| >= 2 that occurs.
  std::vector<std::pair<unsigned, mpq_class>> zeta_values;
  std::vector<MainCoefficient> a_table;
  std::vector<ReportRow> rows;
  /// Index into rows of the first oracle/exact disagreement.
  std::optional<std::size_t> first_mismatch;
  // Filled by the zeta command.
  std::string zeta_x;
  std::string zw;
  std::string height_zeta;
  std::string poly_part;
};

CountReport cmd_count(const RunConfig& config);
CountReport cmd_predict(const RunConfig& config);
CountReport cmd_compare(const RunConfig& config);
CountReport cmd_zeta(const RunConfig& config);
CountReport run_command(const RunConfig& config);

/// Index of the first row whose oracle and exact counts are both present and differ.
std::optional<std::size_t> find_mismatch(const std::vector<ReportRow>& rows);

nlohmann::json to_json(const CountReport& report);
/// Rows recovered from to_json output.
std::vector<ReportRow> rows_from_json(const nlohmann::json& j);
std::string render(const CountReport& report, Command command, OutputFormat format);

}  // namespace wps
