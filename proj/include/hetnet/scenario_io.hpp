#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hetnet/scenario.hpp"

namespace hetnet {

/// Raised on malformed scenario text; the message carries the line number.
class ScenarioParseError : public std::runtime_error {
 public:
  explicit ScenarioParseError(const std::string& what) : std::runtime_error(what) {}
};

// Flat key-value scenario format: one `key = value` per line, `#` comments.
// Keys: lambda_b, lambda_f, c, r_cluster, r0, p_b_dbm, p_f_dbm, chi_db,
// alpha, lambda_m_arrivals, mu, n_channels, rth_over_b, mcs_db (comma list),
// mode, n_f, r_m, beta_m_db, beta_f_db. Every key is optional and falls back
// to the defaults; unknown keys are errors. dB values are converted to
// linear here and nowhere else.

Scenario parse_scenario(std::istream& in, const std::string& id);
Scenario load_scenario_file(const std::string& path);

/// Canonical text form (round-trips through parse_scenario).
std::string scenario_to_text(const Scenario& s);

}  // namespace hetnet
