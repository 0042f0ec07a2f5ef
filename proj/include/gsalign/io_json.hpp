/**
 * @file io_json.hpp
 * @brief JSON serialization of designs and simulation reports, JSON run
 *        configuration parsing, and CSV table output.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gsalign/channel.hpp"
#include "gsalign/gsa.hpp"
#include "gsalign/sim.hpp"

namespace gsalign {

using Json = nlohmann::json;

/// Complex matrices serialize as nested arrays of [re, im] pairs.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const GsaDesign& design);
Json to_json(const SimReport& report);
Json to_json(const BatchReport& batch);

/// A run configuration parsed from a JSON file. Either a named traffic
/// pattern or an explicit symmetric stream matrix must be given.
struct RunConfig {
  SystemConfig system;
  std::optional<Pattern> pattern;
  int streams_per_pair = 1;         ///< used with a named pattern.
  int clusters = 1;                 ///< used with the clustered pattern.
  std::optional<DataSwitchMatrix> explicit_streams;
  std::uint64_t seed = 0;
  bool seed_given = false;

  DataSwitchMatrix resolve_streams() const;
};

Pattern pattern_from_string(const std::string& s);
std::string pattern_to_string(Pattern p);

RunConfig parse_run_config(const Json& j);
RunConfig load_run_config(const std::string& path);

/// Write rows as CSV: '#'-prefixed header line, values at 12 significant
/// digits.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

std::string format_sig12(double v);

}  // namespace gsalign
