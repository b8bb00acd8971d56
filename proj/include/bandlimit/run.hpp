#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bandlimit {

using Json = nlohmann::ordered_json;

inline constexpr int l2_desk_cap = 300;
inline constexpr int l2_hard_cap = 1000;

struct RunConfig {
  std::string command; // monotone-poly, monotone-l2, lid, lid-optimize, sharp-constant,
                       // verify-inequality, zeros, verify-f0, tables
  std::optional<int> d;
  std::optional<double> alpha;
  double lo = 0.3;
  double hi = 2.0;
  double alpha_tol = 1e-4;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  std::string poly = "1";
  std::string pipeline = "l2"; // zeros: h0, poly or l2
  std::string path = "exact";  // monotone-poly: exact or quadrature
  int count = 10;
  int draws = 500;
  bool allow_large = false;
  std::string out_format = "json"; // json or csv
  std::string out_dir = "tables";
  bool timing = false;
};

const std::vector<std::string>& known_commands();

// Throws DomainError for bad configurations and NumericalError subclasses
// when a computation does not converge.
Json run(const RunConfig& cfg);

// Record for a failed run; exit_code is 2 (config) or 3 (numerical).
Json error_record(const RunConfig& cfg, const std::string& kind, const std::string& message);

std::string format_json(const Json& record);
// key,value lines; arrays become key[i] rows.
std::string format_csv(const Json& record);

std::vector<double> parse_number_list(const std::string& text);

// Golden values printed in the reference tables.
struct GoldenRow {
  int d;
  double bound;
};
const std::vector<GoldenRow>& golden_poly_bounds();
const std::vector<GoldenRow>& golden_l2_bounds();
const std::vector<double>& golden_h0_zeros();
const std::vector<double>& golden_l2_zeros();

} // namespace bandlimit
