#pragma once

#include <charconv>
#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "fracper/errors.hpp"
#include "fracper/fode_solver.hpp"
#include "fracper/impulsive.hpp"
#include "fracper/mellin.hpp"
#include "fracper/periodicity.hpp"
#include "fracper/systems.hpp"

namespace fracper {

using json = nlohmann::json;

/// Malformed or incomplete configuration document.
class config_error : public error {
public:
  using error::error;
};

/// Locale-independent %.17g formatting.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (res.ec != std::errc())
    throw error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

/// CSV with a header row and '\n'-terminated rows.
inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
  for (std::size_t c = 0; c < header.size(); ++c)
    os << (c ? "," : "") << header[c];
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << format_double(row[c]);
    os << '\n';
  }
}

/// Trajectory as `t,x1,...,xp`, plus a `jump` column (1 at impulse rows) when
/// jump rows are given.
inline void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                                 const std::vector<std::size_t>* jump_rows = nullptr) {
  std::vector<std::string> header{"t"};
  for (std::size_t c = 0; c < traj.dimension(); ++c)
    header.push_back("x" + std::to_string(c + 1));
  if (jump_rows)
    header.push_back("jump");
  std::vector<double> jumps(traj.states.size(), 0.0);
  if (jump_rows)
    for (std::size_t r : *jump_rows)
      jumps.at(r) = 1.0;
  std::vector<std::vector<double>> rows;
  rows.reserve(traj.states.size());
  for (std::size_t j = 0; j < traj.states.size(); ++j) {
    std::vector<double> row{traj.grid.at(j)};
    row.insert(row.end(), traj.states[j].begin(), traj.states[j].end());
    if (jump_rows)
      row.push_back(jumps[j]);
    rows.push_back(std::move(row));
  }
  write_csv(os, header, rows);
}

/// Impulse schedule fields of a run document.
struct ImpulseConfig {
  std::vector<double> impulse_times;
  double period = 0.0;
  std::size_t periods_to_run = 1;
};

/// A system run document: the system plus horizon, step and optional impulses.
struct RunDocument {
  SystemSpec system;
  double t_end = 100.0;
  double h = 0.01;
  std::optional<ImpulseConfig> impulses;
};

namespace detail {

template <class T>
T required(const json& j, const char* key) {
  if (!j.contains(key))
    throw config_error(std::string("missing required field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw config_error(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T optional_field(const json& j, const char* key, T fallback) {
  if (!j.contains(key))
    return fallback;
  return required<T>(j, key);
}

} // namespace detail

/// Parses {name, params?, orders, x0, t_end?, h?, impulse_times?, period?, periods_to_run?}.
/// A scalar "orders" is broadcast over the state.
inline RunDocument parse_run_document(const json& j) {
  if (!j.is_object())
    throw config_error("system document must be a JSON object");
  RunDocument doc;
  doc.system.name = detail::required<std::string>(j, "name");
  doc.system.params = detail::optional_field<std::vector<double>>(j, "params", {});
  doc.system.x0 = detail::required<std::vector<double>>(j, "x0");
  if (j.contains("orders") && j.at("orders").is_number())
    doc.system.orders.assign(doc.system.x0.size(), j.at("orders").get<double>());
  else
    doc.system.orders = detail::required<std::vector<double>>(j, "orders");
  doc.t_end = detail::optional_field<double>(j, "t_end", doc.t_end);
  doc.h = detail::optional_field<double>(j, "h", doc.h);
  if (j.contains("impulse_times") || j.contains("period") || j.contains("periods_to_run")) {
    ImpulseConfig ic;
    ic.period = detail::required<double>(j, "period");
    ic.impulse_times = detail::optional_field<std::vector<double>>(j, "impulse_times", {0.0, ic.period});
    ic.periods_to_run = detail::optional_field<std::size_t>(j, "periods_to_run", 1);
    doc.impulses = ic;
  }
  if (!(doc.t_end > 0.0) || !(doc.h > 0.0))
    throw config_error("t_end and h must be > 0");
  return doc;
}

inline json to_json_value(const RunDocument& doc) {
  json j{{"name", doc.system.name},
         {"params", doc.system.params},
         {"orders", doc.system.orders},
         {"x0", doc.system.x0},
         {"t_end", doc.t_end},
         {"h", doc.h}};
  if (doc.impulses) {
    j["impulse_times"] = doc.impulses->impulse_times;
    j["period"] = doc.impulses->period;
    j["periods_to_run"] = doc.impulses->periods_to_run;
  }
  return j;
}

inline json complex_to_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

inline std::complex<double> complex_from_json(const json& j) {
  return {detail::required<double>(j, "re"), detail::required<double>(j, "im")};
}

// nlohmann ADL hooks.

inline void to_json(json& j, const PeriodicityReport& r) {
  j = json{{"candidate_period", r.candidate_period},
           {"residual_per_cycle", r.residual_per_cycle},
           {"asymptotic_flag", r.asymptotic_flag},
           {"exact_flag", r.exact_flag},
           {"exact_tolerance", r.exact_tolerance}};
}

inline void from_json(const json& j, PeriodicityReport& r) {
  r.candidate_period = detail::required<double>(j, "candidate_period");
  r.residual_per_cycle = detail::required<std::vector<double>>(j, "residual_per_cycle");
  r.asymptotic_flag = detail::required<bool>(j, "asymptotic_flag");
  r.exact_flag = detail::required<bool>(j, "exact_flag");
  r.exact_tolerance = detail::required<double>(j, "exact_tolerance");
}

inline void to_json(json& j, const StripWindow& s) {
  j = json{{"re_min", s.re_min},
           {"re_max", s.re_max},
           {"re_samples", s.re_samples},
           {"im_max", s.im_max},
           {"im_samples", s.im_samples}};
}

inline void from_json(const json& j, StripWindow& s) {
  s.re_min = detail::required<double>(j, "re_min");
  s.re_max = detail::required<double>(j, "re_max");
  s.re_samples = detail::required<std::size_t>(j, "re_samples");
  s.im_max = detail::required<double>(j, "im_max");
  s.im_samples = detail::required<std::size_t>(j, "im_samples");
}

inline void to_json(json& j, const WitnessReport& r) {
  json zs = json::array();
  for (auto z : r.z)
    zs.push_back(complex_to_json(z));
  j = json{{"alpha", r.alpha},         {"n", r.n},
           {"strip", r.strip},         {"z", zs},
           {"abs_H", r.abs_h},         {"abs_G_one_minus_z", r.abs_g_reflected},
           {"min_abs_H", r.min_abs_h}, {"max_abs_H", r.max_abs_h},
           {"min_abs_G", r.min_abs_g}, {"max_abs_G", r.max_abs_g}};
}

inline void from_json(const json& j, WitnessReport& r) {
  r.alpha = detail::required<double>(j, "alpha");
  r.n = detail::required<int>(j, "n");
  r.strip = detail::required<StripWindow>(j, "strip");
  r.z.clear();
  for (const auto& z : detail::required<json>(j, "z"))
    r.z.push_back(complex_from_json(z));
  r.abs_h = detail::required<std::vector<double>>(j, "abs_H");
  r.abs_g_reflected = detail::required<std::vector<double>>(j, "abs_G_one_minus_z");
  r.min_abs_h = detail::required<double>(j, "min_abs_H");
  r.max_abs_h = detail::required<double>(j, "max_abs_H");
  r.min_abs_g = detail::required<double>(j, "min_abs_G");
  r.max_abs_g = detail::required<double>(j, "max_abs_G");
}

inline void to_json(json& j, const ConvergenceTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row{{"steps", r.steps}, {"h", r.h}, {"max_error", r.max_error}};
    row["observed_order"] = r.observed_order ? json(*r.observed_order) : json(nullptr);
    rows.push_back(row);
  }
  j = json{{"self_referenced", t.self_referenced}, {"rows", rows}};
}

inline void from_json(const json& j, ConvergenceTable& t) {
  t.self_referenced = detail::required<bool>(j, "self_referenced");
  t.rows.clear();
  for (const auto& row : detail::required<json>(j, "rows")) {
    ConvergenceRow r;
    r.steps = detail::required<std::size_t>(row, "steps");
    r.h = detail::required<double>(row, "h");
    r.max_error = detail::required<double>(row, "max_error");
    if (row.contains("observed_order") && !row.at("observed_order").is_null())
      r.observed_order = row.at("observed_order").get<double>();
    t.rows.push_back(r);
  }
}

} // namespace fracper
