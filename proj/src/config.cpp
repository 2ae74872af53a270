#include "plapclaw/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace plapclaw {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<double> parse_number_list(const std::string& key, const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_number(key, tok));
  return out;
}

bool parse_bool(const std::string& key, const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError(key + ": expected a boolean, got '" + s + "'");
}

// value of the form "name" or "name:payload"
std::pair<std::string, std::string> tagged(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos) return {s, ""};
  return {trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

const std::set<std::string> kKnownKeys = {
    "problem.flux",          "problem.flux_interval",
    "problem.p",             "problem.mu",
    "problem.u_minus",       "problem.u_plus",
    "problem.initial",       "problem.bump",
    "problem.grid",          "problem.t_end",
    "problem.cfl",           "problem.observations",
    "problem.boundary",      "diagnostics.q_list",
    "diagnostics.gradient_exponents", "diagnostics.alpha",
    "diagnostics.energy_q",  "diagnostics.deviation",
    "diagnostics.fit_window", "diagnostics.fit_tolerance",
    "diagnostics.theorem",   "output.dir",
    "output.fields",         "output.energy",
    "output.plot_data",
};

std::string join_numbers(const std::vector<double>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::isinf(xs[i]) ? "inf" : format_number(xs[i]);
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& key, const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size())
      throw ConfigError(key + ": trailing characters in number '" + text + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + text + "'");
  }
}

ExperimentConfig config_from_map(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, _] : kv)
    if (!kKnownKeys.count(key)) throw ConfigError("unknown config key: " + key);

  auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };
  auto require = [&](const std::string& key) -> std::string {
    auto v = get(key);
    if (!v) throw ConfigError("missing required key: " + key);
    return *v;
  };

  const double p = parse_number("problem.p", require("problem.p"));
  if (!(p > 1.0)) throw ConfigError("problem.p: p must exceed 1");
  const double mu = parse_number("problem.mu", get("problem.mu").value_or("1"));
  if (!(mu > 0.0)) throw ConfigError("problem.mu: mu must be positive");

  const double u_minus = parse_number("problem.u_minus", require("problem.u_minus"));
  const double u_plus = parse_number("problem.u_plus", require("problem.u_plus"));
  if (!(u_minus <= u_plus))
    throw ConfigError("problem.u_minus: far field states must satisfy u_minus <= u_plus");

  // grid
  const auto grid_parts = parse_number_list("problem.grid", require("problem.grid"));
  if (grid_parts.size() != 3)
    throw ConfigError("problem.grid: expected x_min,x_max,n_cells");
  const int n_cells = static_cast<int>(grid_parts[2]);
  if (n_cells != grid_parts[2] || n_cells < 2)
    throw ConfigError("problem.grid: n_cells must be an integer >= 2");
  Grid grid(grid_parts[0], grid_parts[1], n_cells);

  // initial spec
  InitialSpec initial;
  {
    const auto [name, payload] = tagged(require("problem.initial"));
    if (name == "smoothed_rarefaction") {
      initial.base = InitialSpec::Base::SmoothedRarefaction;
    } else if (name == "riemann") {
      initial.base = InitialSpec::Base::ExactRiemann;
    } else if (name == "constant") {
      initial.base = InitialSpec::Base::Constant;
      initial.constant_value = parse_number("problem.initial", payload);
    } else if (name == "barenblatt") {
      initial.base = InitialSpec::Base::Barenblatt;
      const auto parts = parse_number_list("problem.initial", payload);
      if (parts.size() != 2)
        throw ConfigError("problem.initial: barenblatt expects t0,C");
      initial.barenblatt_t0 = parts[0];
      initial.barenblatt_C = parts[1];
    } else {
      throw ConfigError("problem.initial: unknown base '" + name + "'");
    }
  }
  {
    const auto [name, payload] = tagged(get("problem.bump").value_or("none"));
    if (name != "none") {
      BumpSpec bump;
      const auto parts = parse_number_list("problem.bump", payload);
      if (name == "gaussian")
        bump.shape = BumpSpec::Shape::Gaussian;
      else if (name == "hat")
        bump.shape = BumpSpec::Shape::CompactHat;
      else if (name == "power_tail")
        bump.shape = BumpSpec::Shape::PowerTail;
      else
        throw ConfigError("problem.bump: unknown shape '" + name + "'");
      const size_t want = bump.shape == BumpSpec::Shape::PowerTail ? 4 : 3;
      if (parts.size() != want)
        throw ConfigError("problem.bump: expected amplitude,center,width" +
                          std::string(want == 4 ? ",decay" : ""));
      bump.amplitude = parts[0];
      bump.center = parts[1];
      bump.width = parts[2];
      if (want == 4) bump.tail_decay = parts[3];
      initial.bump = bump;
    }
  }

  // flux
  std::optional<FluxModel> flux;
  const auto [flux_name, flux_payload] = tagged(require("problem.flux"));
  {
    double lo, hi;
    if (auto iv = get("problem.flux_interval")) {
      const auto parts = parse_number_list("problem.flux_interval", *iv);
      if (parts.size() != 2)
        throw ConfigError("problem.flux_interval: expected lo,hi");
      lo = parts[0];
      hi = parts[1];
    } else {
      double margin = 1.0 + (initial.bump ? std::abs(initial.bump->amplitude) : 0.0);
      if (initial.base == InitialSpec::Base::ExactRiemann)
        margin += u_plus - u_minus;
      lo = u_minus - margin - 0.5;
      hi = u_plus + margin + 0.5;
    }
    if (flux_name == "burgers") {
      flux = FluxModel::burgers(lo, hi);
    } else if (flux_name == "poly") {
      std::vector<double> coeffs = parse_number_list("problem.flux", flux_payload);
      try {
        flux = FluxModel::poly_convex(std::move(coeffs), lo, hi);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("problem.flux: ") + e.what());
      }
    } else if (flux_name == "none") {
      // pure diffusion
    } else {
      throw ConfigError("problem.flux: unknown flux '" + flux_name + "'");
    }
  }

  // time schedule
  const double t_end = parse_number("problem.t_end", require("problem.t_end"));
  if (!(t_end > 0.0)) throw ConfigError("problem.t_end: must be positive");
  const double cfl = parse_number("problem.cfl", get("problem.cfl").value_or("0.4"));
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("problem.cfl: must lie in (0,1)");

  std::vector<double> observations;
  {
    const auto [name, payload] =
        tagged(get("problem.observations").value_or("geometric:1,1.3"));
    if (name == "geometric") {
      const auto parts = parse_number_list("problem.observations", payload);
      if (parts.size() != 2 || !(parts[0] > 0.0) || !(parts[1] > 1.0))
        throw ConfigError("problem.observations: geometric expects t0>0,ratio>1");
      observations.push_back(0.0);
      for (double tk = parts[0]; tk < t_end * (1.0 - 1e-12); tk *= parts[1])
        observations.push_back(tk);
      observations.push_back(t_end);
    } else if (name == "list") {
      observations = parse_number_list("problem.observations", payload);
      if (observations.empty() || !std::is_sorted(observations.begin(), observations.end()))
        throw ConfigError("problem.observations: list must be sorted and nonempty");
      if (observations.front() > 0.0) observations.insert(observations.begin(), 0.0);
      if (observations.back() < t_end * (1.0 - 1e-12)) observations.push_back(t_end);
      if (observations.back() > t_end * (1.0 + 1e-12))
        throw ConfigError("problem.observations: must not exceed t_end");
    } else {
      throw ConfigError("problem.observations: unknown schedule '" + name + "'");
    }
  }

  BoundaryRule boundary = flux ? BoundaryRule::DirichletFarField
                               : BoundaryRule::ZeroGradient;
  {
    const std::string b = get("problem.boundary").value_or("auto");
    if (b == "dirichlet_far_field")
      boundary = BoundaryRule::DirichletFarField;
    else if (b == "zero_gradient")
      boundary = BoundaryRule::ZeroGradient;
    else if (b != "auto")
      throw ConfigError("problem.boundary: unknown rule '" + b + "'");
  }

  ExperimentConfig cfg{
      Problem{std::move(flux), ViscosityParams(p, mu), FarField(u_minus, u_plus),
              initial, grid, TimeSchedule{t_end, cfl, observations}, boundary}};

  // diagnostics block
  cfg.q_list = parse_number_list("diagnostics.q_list",
                                 get("diagnostics.q_list").value_or("1,2,inf"));
  for (double q : cfg.q_list)
    if (!(q >= 1.0)) throw ConfigError("diagnostics.q_list: exponents must be >= 1");
  {
    const std::string g = get("diagnostics.gradient_exponents").value_or("auto");
    if (g == "auto")
      cfg.gradient_exponents = {p + 1.0};
    else
      cfg.gradient_exponents = parse_number_list("diagnostics.gradient_exponents", g);
    for (double e : cfg.gradient_exponents)
      if (!(e > 1.0))
        throw ConfigError("diagnostics.gradient_exponents: exponents must exceed 1");
  }
  cfg.alpha = parse_number("diagnostics.alpha", get("diagnostics.alpha").value_or("0"));
  if (cfg.alpha < 0.0) throw ConfigError("diagnostics.alpha: must be nonnegative");
  cfg.energy_q =
      parse_number("diagnostics.energy_q", get("diagnostics.energy_q").value_or("2"));
  if (!(cfg.energy_q >= 1.0)) throw ConfigError("diagnostics.energy_q: must be >= 1");
  {
    const std::string d = get("diagnostics.deviation").value_or("auto");
    if (d == "auto")
      cfg.deviation_state = (cfg.problem.flux && u_minus < u_plus)
                                ? AsymptoticState::SmoothedUr
                                : AsymptoticState::Constant;
    else if (d == "smoothed")
      cfg.deviation_state = AsymptoticState::SmoothedUr;
    else if (d == "exact_rarefaction")
      cfg.deviation_state = AsymptoticState::ExactRarefaction;
    else if (d == "constant")
      cfg.deviation_state = AsymptoticState::Constant;
    else
      throw ConfigError("diagnostics.deviation: unknown mode '" + d + "'");
    if (cfg.deviation_state != AsymptoticState::Constant &&
        (!cfg.problem.flux || !(u_minus < u_plus)))
      throw ConfigError("diagnostics.deviation: wave deviation needs a flux and u_minus < u_plus");
  }
  {
    const std::string w = get("diagnostics.fit_window").value_or("auto");
    if (w == "auto") {
      cfg.fit_window_lo = t_end / 10.0;
      cfg.fit_window_hi = t_end;
    } else {
      const auto parts = parse_number_list("diagnostics.fit_window", w);
      if (parts.size() != 2 || !(parts[0] < parts[1]))
        throw ConfigError("diagnostics.fit_window: expected lo,hi with lo < hi");
      cfg.fit_window_lo = parts[0];
      cfg.fit_window_hi = parts[1];
    }
  }
  cfg.fit_tolerance = parse_number("diagnostics.fit_tolerance",
                                   get("diagnostics.fit_tolerance").value_or("0.15"));
  if (!(cfg.fit_tolerance > 0.0))
    throw ConfigError("diagnostics.fit_tolerance: must be positive");
  {
    const std::string th = get("diagnostics.theorem").value_or("none");
    if (th != "none") {
      try {
        cfg.rate_set = parse_rate_set(th);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("diagnostics.theorem: ") + e.what());
      }
    }
  }

  cfg.output_dir = get("output.dir").value_or("out");
  cfg.write_fields = parse_bool("output.fields", get("output.fields").value_or("false"));
  cfg.write_energy = parse_bool("output.energy", get("output.energy").value_or("false"));
  cfg.write_plot_data =
      parse_bool("output.plot_data", get("output.plot_data").value_or("true"));

  try {
    cfg.problem.validate();
  } catch (const std::exception& e) {
    throw ConfigError(std::string("problem: ") + e.what());
  }

  // Canonical resolved map (defaults materialized, schedules expanded).
  auto& r = cfg.resolved;
  r["problem.flux"] =
      flux_name == "poly"
          ? "poly:" + join_numbers(cfg.problem.flux->coefficients())
          : flux_name;
  if (cfg.problem.flux)
    r["problem.flux_interval"] = format_number(cfg.problem.flux->u_lo()) + "," +
                                 format_number(cfg.problem.flux->u_hi());
  r["problem.p"] = format_number(p);
  r["problem.mu"] = format_number(mu);
  r["problem.u_minus"] = format_number(u_minus);
  r["problem.u_plus"] = format_number(u_plus);
  switch (initial.base) {
    case InitialSpec::Base::SmoothedRarefaction:
      r["problem.initial"] = "smoothed_rarefaction";
      break;
    case InitialSpec::Base::ExactRiemann:
      r["problem.initial"] = "riemann";
      break;
    case InitialSpec::Base::Constant:
      r["problem.initial"] = "constant:" + format_number(initial.constant_value);
      break;
    case InitialSpec::Base::Barenblatt:
      r["problem.initial"] = "barenblatt:" + format_number(initial.barenblatt_t0) +
                             "," + format_number(initial.barenblatt_C);
      break;
  }
  if (initial.bump) {
    const auto& b = *initial.bump;
    std::string s = b.shape == BumpSpec::Shape::Gaussian     ? "gaussian"
                    : b.shape == BumpSpec::Shape::CompactHat ? "hat"
                                                             : "power_tail";
    s += ":" + format_number(b.amplitude) + "," + format_number(b.center) + "," +
         format_number(b.width);
    if (b.shape == BumpSpec::Shape::PowerTail) s += "," + format_number(b.tail_decay);
    r["problem.bump"] = s;
  } else {
    r["problem.bump"] = "none";
  }
  r["problem.grid"] = format_number(grid.x_min) + "," + format_number(grid.x_max) +
                      "," + format_number(grid.n_cells);
  r["problem.t_end"] = format_number(t_end);
  r["problem.cfl"] = format_number(cfl);
  r["problem.observations"] = "list:" + join_numbers(observations);
  r["problem.boundary"] = boundary == BoundaryRule::DirichletFarField
                              ? "dirichlet_far_field"
                              : "zero_gradient";
  r["diagnostics.q_list"] = join_numbers(cfg.q_list);
  r["diagnostics.gradient_exponents"] = join_numbers(cfg.gradient_exponents);
  r["diagnostics.alpha"] = format_number(cfg.alpha);
  r["diagnostics.energy_q"] = format_number(cfg.energy_q);
  r["diagnostics.deviation"] =
      cfg.deviation_state == AsymptoticState::SmoothedUr ? "smoothed"
      : cfg.deviation_state == AsymptoticState::ExactRarefaction
          ? "exact_rarefaction"
          : "constant";
  r["diagnostics.fit_window"] =
      format_number(cfg.fit_window_lo) + "," + format_number(cfg.fit_window_hi);
  r["diagnostics.fit_tolerance"] = format_number(cfg.fit_tolerance);
  r["diagnostics.theorem"] = cfg.rate_set ? rate_set_name(*cfg.rate_set) : "none";
  r["output.dir"] = cfg.output_dir;
  r["output.fields"] = cfg.write_fields ? "true" : "false";
  r["output.energy"] = cfg.write_energy ? "true" : "false";
  r["output.plot_data"] = cfg.write_plot_data ? "true" : "false";
  return cfg;
}

ExperimentConfig parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (kv.count(key)) throw ConfigError("duplicate config key: " + key);
    kv[key] = value;
  }
  return config_from_map(kv);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json manifest;
    try {
      manifest = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("manifest parse error: ") + e.what());
    }
    if (!manifest.contains("config") || !manifest["config"].is_object())
      throw ConfigError("manifest lacks a config object");
    std::map<std::string, std::string> kv;
    for (auto& [key, value] : manifest["config"].items())
      kv[key] = value.get<std::string>();
    return config_from_map(kv);
  }
  return parse_config_text(text);
}

}  // namespace plapclaw
