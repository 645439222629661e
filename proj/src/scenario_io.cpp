#include "hetnet/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace hetnet {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void die(int line, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ": " << msg;
  throw ScenarioParseError(os.str());
}

double parse_number(const std::string& v, int line) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) die(line, "trailing characters after number '" + v + "'");
    return x;
  } catch (const ScenarioParseError&) {
    throw;
  } catch (const std::exception&) {
    die(line, "expected a number, got '" + v + "'");
  }
}

Mode parse_mode(std::string v, int line) {
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) {
    return c == '_' ? '-' : std::tolower(c);
  });
  if (v == "co-channel" || v == "cochannel") return Mode::CoChannel;
  if (v == "orthogonal") return Mode::Orthogonal;
  if (v == "partial") return Mode::Partial;
  die(line, "unknown mode '" + v + "' (expected co-channel|orthogonal|partial)");
}

}  // namespace

Scenario parse_scenario(std::istream& in, const std::string& id) {
  Scenario s;
  s.id = id;
  bool mcs_given = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    const auto hash = text.find('#');
    if (hash != std::string::npos) text.erase(hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) die(line, "expected 'key = value'");
    const std::string key = trim(text.substr(0, eq));
    const std::string val = trim(text.substr(eq + 1));
    if (val.empty()) die(line, "missing value for key '" + key + "'");

    if (key == "lambda_b") s.net.lambda_b = parse_number(val, line);
    else if (key == "lambda_f") s.net.lambda_f = parse_number(val, line);
    else if (key == "c") s.net.c = parse_number(val, line);
    else if (key == "r_cluster") s.net.r_cluster = parse_number(val, line);
    else if (key == "r0") s.net.r0 = parse_number(val, line);
    else if (key == "p_b_dbm") s.net.p_b = dbm_to_watts(parse_number(val, line));
    else if (key == "p_f_dbm") s.net.p_f = dbm_to_watts(parse_number(val, line));
    else if (key == "chi_db") s.net.chi = db_to_linear(-parse_number(val, line));
    else if (key == "alpha") s.net.alpha = parse_number(val, line);
    else if (key == "lambda_m_arrivals") s.traffic.lambda_arrivals = parse_number(val, line);
    else if (key == "mu") s.traffic.mu = parse_number(val, line);
    else if (key == "n_channels") {
      const double n = parse_number(val, line);
      if (n != std::floor(n)) die(line, "n_channels must be an integer");
      s.traffic.n_channels = static_cast<int>(n);
    } else if (key == "rth_over_b") s.traffic.rth_over_b = parse_number(val, line);
    else if (key == "mcs_db") {
      s.traffic.mcs.thresholds.clear();
      std::stringstream items(val);
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (item.empty()) die(line, "empty entry in mcs_db list");
        s.traffic.mcs.thresholds.push_back(db_to_linear(parse_number(item, line)));
      }
      mcs_given = true;
    } else if (key == "mode") s.spectrum.mode = parse_mode(val, line);
    else if (key == "n_f") {
      const double n = parse_number(val, line);
      if (n != std::floor(n)) die(line, "n_f must be an integer");
      s.spectrum.n_f = static_cast<int>(n);
    } else if (key == "r_m") s.spectrum.r_m = parse_number(val, line);
    else if (key == "beta_m_db") s.spectrum.beta_m = db_to_linear(parse_number(val, line));
    else if (key == "beta_f_db") s.spectrum.beta_f = db_to_linear(parse_number(val, line));
    else die(line, "unknown key '" + key + "'");
  }
  // The default MCS ladder anchors its first level at beta_M.
  if (!mcs_given) s.traffic.mcs = McsTable::default_table(s.spectrum.beta_m);
  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError("cannot open scenario file '" + path + "'");
  std::string id = path;
  const auto slash = id.find_last_of('/');
  if (slash != std::string::npos) id.erase(0, slash + 1);
  const auto dot = id.find_last_of('.');
  if (dot != std::string::npos && dot > 0) id.erase(dot);
  return parse_scenario(in, id);
}

std::string scenario_to_text(const Scenario& s) {
  std::ostringstream os;
  os.precision(12);
  os << "lambda_b = " << s.net.lambda_b << "\n";
  os << "lambda_f = " << s.net.lambda_f << "\n";
  os << "c = " << s.net.c << "\n";
  os << "r_cluster = " << s.net.r_cluster << "\n";
  os << "r0 = " << s.net.r0 << "\n";
  os << "p_b_dbm = " << watts_to_dbm(s.net.p_b) << "\n";
  os << "p_f_dbm = " << watts_to_dbm(s.net.p_f) << "\n";
  os << "chi_db = " << -linear_to_db(s.net.chi) << "\n";
  os << "alpha = " << s.net.alpha << "\n";
  os << "lambda_m_arrivals = " << s.traffic.lambda_arrivals << "\n";
  os << "mu = " << s.traffic.mu << "\n";
  os << "n_channels = " << s.traffic.n_channels << "\n";
  os << "rth_over_b = " << s.traffic.rth_over_b << "\n";
  os << "mcs_db = ";
  for (std::size_t i = 0; i < s.traffic.mcs.thresholds.size(); ++i) {
    if (i) os << ", ";
    os << linear_to_db(s.traffic.mcs.thresholds[i]);
  }
  os << "\n";
  os << "mode = " << mode_name(s.spectrum.mode) << "\n";
  os << "n_f = " << s.spectrum.n_f << "\n";
  os << "r_m = " << s.spectrum.r_m << "\n";
  os << "beta_m_db = " << linear_to_db(s.spectrum.beta_m) << "\n";
  os << "beta_f_db = " << linear_to_db(s.spectrum.beta_f) << "\n";
  return os.str();
}

}  // namespace hetnet
