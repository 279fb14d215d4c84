// fracper command-line front end.
//
// Exit status: 0 ok, 2 bad configuration, 3 numeric failure, 4 I/O failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fracper/fracper.hpp"

using namespace fracper;

namespace {

class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

constexpr double two_pi = 2.0 * std::numbers::pi;

/// Options shared by the subcommands. Unset flags fall back to the --config
/// document, then to the command default.
struct Options {
  std::string config_path, out_path, format = "text";
  std::optional<double> alpha, beta, order, t_end, step, period, t_min, offset;
  std::optional<std::string> z, system, kind, function, input, strip_re;
  std::optional<double> strip_im;
  std::optional<std::size_t> cycles, samples;
  std::vector<double> x0, params, cos_coeffs, sin_coeffs;
  std::optional<int> figure;
  bool zero_impulses = false;
  json config = json::object();
};

json load_config(const std::string& path) {
  if (path.empty())
    return json::object();
  std::ifstream in(path);
  if (!in)
    throw io_error("cannot open config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config file: ") + e.what());
  }
}

template <class T>
T pick(const std::optional<T>& flag, const json& cfg, const char* key, std::optional<T> fallback = std::nullopt) {
  if (flag)
    return *flag;
  if (cfg.contains(key))
    return detail::required<T>(cfg, key);
  if (fallback)
    return *fallback;
  throw config_error(std::string("missing required parameter '") + key + "'");
}

std::vector<double> pick_list(const std::vector<double>& flag, const json& cfg, const char* key,
                              std::vector<double> fallback = {}) {
  if (!flag.empty())
    return flag;
  if (cfg.contains(key))
    return detail::required<std::vector<double>>(cfg, key);
  return fallback;
}

/// "a", "a,b", "a+bi", "a-bi", "bi".
cplx parse_complex(std::string s) {
  std::erase(s, ' ');
  if (s.empty())
    throw config_error("empty complex number");
  try {
    if (auto comma = s.find(','); comma != std::string::npos)
      return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    if (s.back() == 'i' || s.back() == 'j') {
      s.pop_back();
      std::size_t split = std::string::npos;
      for (std::size_t i = s.size(); i-- > 1;)
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
          split = i;
          break;
        }
      auto im_of = [](const std::string& t) {
        return t.empty() || t == "+" ? 1.0 : t == "-" ? -1.0 : std::stod(t);
      };
      if (split == std::string::npos)
        return {0.0, im_of(s)};
      return {std::stod(s.substr(0, split)), im_of(s.substr(split))};
    }
    std::size_t used = 0;
    const double re = std::stod(s, &used);
    if (used != s.size())
      throw config_error("trailing characters in '" + s + "'");
    return {re, 0.0};
  } catch (const std::logic_error&) {
    throw config_error("cannot parse complex number '" + s + "'");
  }
}

std::pair<double, double> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw config_error("expected 'lo,hi', got '" + s + "'");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw config_error("cannot parse range '" + s + "'");
  }
}

/// Output sink: the --out file or stdout.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw io_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    os().flush();
    if (!os())
      throw io_error("write failed");
  }

private:
  std::ofstream file_;
};

bool want_json(const Options& o) {
  if (o.format != "text" && o.format != "csv" && o.format != "json")
    throw config_error("--format must be text, csv or json");
  return o.format == "json";
}

// ---- system documents ----

RunDocument run_document(const Options& o) {
  json doc = o.config;
  if (o.system)
    doc["name"] = *o.system;
  if (!o.params.empty())
    doc["params"] = o.params;
  if (!o.x0.empty())
    doc["x0"] = o.x0;
  if (o.order)
    doc["orders"] = *o.order;
  else if (o.alpha)
    doc["orders"] = *o.alpha;
  if (o.t_end)
    doc["t_end"] = *o.t_end;
  if (o.step)
    doc["h"] = *o.step;
  if (o.period)
    doc["period"] = *o.period;
  if (o.cycles)
    doc["periods_to_run"] = *o.cycles;
  if (doc.contains("name") && doc["name"] == "nn2") {
    if (!doc.contains("x0"))
      doc["x0"] = {0.1, 0.1};
    if (!doc.contains("orders"))
      doc["orders"] = 0.5;
  }
  return parse_run_document(doc);
}

void emit_trajectory(Sink& sink, const Options& o, const Trajectory& traj,
                     const std::vector<std::size_t>* jumps = nullptr) {
  if (!want_json(o)) {
    write_trajectory_csv(sink.os(), traj, jumps);
    return;
  }
  json j{{"system", traj.spec.name}, {"orders", traj.spec.orders}, {"t", json::array()}, {"x", json::array()}};
  for (std::size_t r = 0; r < traj.states.size(); ++r) {
    j["t"].push_back(traj.grid.at(r));
    j["x"].push_back(traj.states[r]);
  }
  if (jumps)
    j["jump_rows"] = *jumps;
  sink.os() << j.dump() << '\n';
}

// ---- commands ----

void cmd_ml_eval(const Options& o, Sink& sink) {
  const double alpha = pick(o.alpha, o.config, "alpha");
  const double beta = pick(o.beta, o.config, "beta", std::optional<double>(1.0));
  const cplx z = parse_complex(pick(o.z, o.config, "z"));
  const cplx v = mittag_leffler(MLParams{alpha, beta}, z);
  if (want_json(o)) {
    sink.os() << json{{"alpha", alpha}, {"beta", beta}, {"z", complex_to_json(z)}, {"value", complex_to_json(v)}}.dump()
              << '\n';
  } else if (o.format == "csv") {
    write_csv(sink.os(), {"re", "im"}, {{v.real(), v.imag()}});
  } else if (v.imag() == 0.0) {
    sink.os() << format_double(v.real()) << '\n';
  } else {
    sink.os() << format_double(v.real()) << (v.imag() < 0 ? "-" : "+") << format_double(std::abs(v.imag())) << "i\n";
  }
}

struct Builtin {
  std::function<double(double)> f, d1, d2, d3;
};

Builtin builtin_function(const std::string& name) {
  if (name == "sin")
    return {[](double t) { return std::sin(t); }, [](double t) { return std::cos(t); },
            [](double t) { return -std::sin(t); }, [](double t) { return -std::cos(t); }};
  if (name == "cos")
    return {[](double t) { return std::cos(t); }, [](double t) { return -std::sin(t); },
            [](double t) { return -std::cos(t); }, [](double t) { return std::sin(t); }};
  if (name == "exp")
    return {[](double t) { return std::exp(-t); }, [](double t) { return -std::exp(-t); },
            [](double t) { return std::exp(-t); }, [](double t) { return -std::exp(-t); }};
  if (name == "t2")
    return {[](double t) { return t * t; }, [](double t) { return 2.0 * t; }, [](double) { return 2.0; },
            [](double) { return 0.0; }};
  if (name == "const")
    return {[](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 0.0; },
            [](double) { return 0.0; }};
  throw config_error("unknown function '" + name + "' (sin, cos, exp, t2, const)");
}

/// Two-column CSV t,value with a header; the grid must be uniform.
SampledFunction read_sampled_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw io_error("cannot open input file '" + path + "'");
  std::string line;
  std::getline(in, line);
  std::vector<double> t, v;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ','))
      throw config_error("input row needs t,value: '" + line + "'");
    t.push_back(std::stod(a));
    v.push_back(std::stod(b));
  }
  if (t.size() < 3)
    throw config_error("input needs at least 3 samples");
  const double h = t[1] - t[0];
  for (std::size_t i = 1; i < t.size(); ++i)
    if (std::abs(t[i] - t[i - 1] - h) > 1e-9 * std::max(1.0, std::abs(t[i])))
      throw config_error("input grid is not uniform");
  return SampledFunction(TimeGrid(t[0], h, t.size()), std::move(v));
}

void cmd_deriv(const Options& o, Sink& sink) {
  const double alpha = o.order ? *o.order : pick(o.alpha, o.config, "alpha");
  const std::string kind = pick(o.kind, o.config, "kind", std::optional<std::string>("caputo"));
  const FractionalOrder q(alpha);
  std::optional<SampledFunction> f;
  if (o.input || o.config.contains("input")) {
    f = read_sampled_csv(pick(o.input, o.config, "input"));
  } else {
    const std::string name = pick(o.function, o.config, "function", std::optional<std::string>("sin"));
    const double t_end = pick(o.t_end, o.config, "t_end", std::optional<double>(10.0));
    const double h = pick(o.step, o.config, "h", std::optional<double>(1e-3));
    const Builtin b = builtin_function(name);
    f = SampledFunction::sample_with_derivatives(TimeGrid::spanning(0.0, t_end, h), b.f, b.d1, b.d2, b.d3);
  }

  SampledFunction d = [&] {
    if (kind == "caputo")
      return caputo_derivative(*f, q);
    if (kind == "rl")
      return rl_derivative(*f, q).values;
    if (kind == "gl")
      return gl_derivative(*f, q);
    if (kind == "gl-plain")
      return gl_derivative(*f, q, GlScheme::plain);
    throw config_error("--kind must be caputo, rl, gl or gl-plain");
  }();

  if (want_json(o)) {
    json j{{"kind", kind}, {"alpha", alpha}, {"t", json::array()}, {"value", d.values}};
    for (std::size_t i = 0; i < d.grid.size(); ++i)
      j["t"].push_back(d.grid.at(i));
    sink.os() << j.dump() << '\n';
    return;
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < d.grid.size(); ++i)
    rows.push_back({d.grid.at(i), d.values[i]});
  write_csv(sink.os(), {"t", "value"}, rows);
}

void cmd_solve(const Options& o, Sink& sink) {
  const RunDocument doc = run_document(o);
  emit_trajectory(sink, o, solve_caputo(doc.system, TimeGrid::spanning(0.0, doc.t_end, doc.h)));
}

void cmd_impulsive(const Options& o, Sink& sink) {
  const RunDocument doc = run_document(o);
  if (!doc.impulses)
    throw config_error("impulsive: a period (and optionally impulse_times) is required");
  const ImpulseSchedule sched = ImpulseSchedule::from_times(doc.impulses->impulse_times, doc.impulses->period);
  const auto sol = solve_impulsive(doc.system, sched, doc.impulses->periods_to_run, doc.h,
                                   o.zero_impulses ? ImpulseMode::zero : ImpulseMode::memory_cancelling);
  emit_trajectory(sink, o, sol.trajectory, &sol.jump_rows);
}

/// Rows t,x1,... of a trajectory CSV (extra columns such as `jump` ignored
/// when named so).
Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw io_error("cannot open input file '" + path + "'");
  std::string line;
  std::getline(in, line);
  std::vector<std::string> header;
  {
    std::istringstream h(line);
    for (std::string c; std::getline(h, c, ',');)
      header.push_back(c);
  }
  std::size_t dim = 0;
  while (dim + 1 < header.size() && header[dim + 1] != "jump")
    ++dim;
  if (dim == 0)
    throw config_error("trajectory CSV needs columns t,x1,...");
  std::vector<double> t;
  std::vector<State> states;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    t.push_back(std::stod(cell));
    State s(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      if (!std::getline(row, cell, ','))
        throw config_error("short trajectory row: '" + line + "'");
      s[c] = std::stod(cell);
    }
    states.push_back(std::move(s));
  }
  if (t.size() < 2)
    throw config_error("trajectory CSV has fewer than 2 rows");
  const double h = t[1] - t[0];
  SystemSpec spec{"input", {}, std::vector<double>(dim, 0.5), states.front()};
  return Trajectory{TimeGrid(t[0], h, t.size()), std::move(states), spec};
}

void cmd_analyze_period(const Options& o, Sink& sink) {
  Trajectory traj = [&] {
    if (o.input || o.config.contains("input"))
      return read_trajectory_csv(pick(o.input, o.config, "input"));
    Options sys = o;
    if (!sys.t_end && !o.config.contains("t_end"))
      sys.t_end = 200.0;
    sys.period.reset(); // analysis period, not an impulse period
    sys.cycles.reset();
    json cfg = o.config;
    cfg.erase("period");
    cfg.erase("periods_to_run");
    sys.config = cfg;
    const RunDocument doc = run_document(sys);
    return solve_caputo(doc.system, TimeGrid::spanning(0.0, doc.t_end, doc.h));
  }();
  const double h = traj.grid.step();
  const double span = traj.grid.back() - traj.grid.t0();
  const double t_min = pick(o.t_min, o.config, "t_min", std::optional<double>(traj.grid.t0() + 0.3 * span));
  const std::optional<double> given = o.period ? o.period
                                      : o.config.contains("analysis_period")
                                          ? std::optional<double>(o.config["analysis_period"].get<double>())
                                          : std::nullopt;
  const double estimated = given ? *given : estimate_period(traj, t_min);
  const double P = align_period(estimated, h);
  const double t_start = traj.grid.at(traj.grid.index_of(t_min));
  const double room = std::floor((traj.grid.back() - t_start) / P + 1e-9);
  if (room < 2.0)
    throw coverage_error("analyze-period: fewer than two periods after t_min");
  const std::size_t cycles = o.cycles.value_or(static_cast<std::size_t>(room) - 1);
  const PeriodicityReport rep = analyze_periodicity(traj, P, cycles, t_start);

  if (o.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (std::size_t k = 0; k < rep.residual_per_cycle.size(); ++k)
      rows.push_back({static_cast<double>(k), t_start + static_cast<double>(k) * P, rep.residual_per_cycle[k]});
    write_csv(sink.os(), {"cycle", "t_start", "residual"}, rows);
    return;
  }
  json j = rep;
  j["estimated_period"] = estimated;
  j["t_min"] = t_start;
  sink.os() << j.dump(2) << '\n';
}

TrigPolynomial trig_polynomial(const Options& o) {
  TrigPolynomial p;
  p.period = pick(o.period, o.config, "period", std::optional<double>(two_pi));
  const std::string fn = pick(o.function, o.config, "function", std::optional<std::string>("trig"));
  if (fn == "sin")
    p.sin_coeffs = {1.0};
  else if (fn == "cos")
    p.cos_coeffs = {1.0};
  else if (fn == "const")
    p.offset = 1.0;
  else if (fn != "trig")
    throw config_error("mellin-witness: --function must be sin, cos, const or trig");
  if (fn == "trig") {
    p.offset = pick(o.offset, o.config, "offset", std::optional<double>(0.0));
    p.cos_coeffs = pick_list(o.cos_coeffs, o.config, "cos");
    p.sin_coeffs = pick_list(o.sin_coeffs, o.config, "sin");
    if (p.cos_coeffs.empty() && p.sin_coeffs.empty() && !o.offset && !o.config.contains("offset"))
      p.sin_coeffs = {1.0};
  }
  return p;
}

void cmd_mellin_witness(const Options& o, Sink& sink) {
  const double alpha = o.order ? *o.order : pick(o.alpha, o.config, "alpha", std::optional<double>(0.5));
  const TrigPolynomial x = trig_polynomial(o);
  const double w = alpha - std::floor(alpha);
  const double lo_default = 1.0 - w + 0.25 * w, hi_default = 1.0 - 0.25 * w;
  const auto [re_lo, re_hi] = o.strip_re ? parse_pair(*o.strip_re)
                              : o.config.contains("strip_re")
                                  ? std::pair{o.config["strip_re"].at(0).get<double>(),
                                              o.config["strip_re"].at(1).get<double>()}
                                  : std::pair{lo_default, hi_default};
  const double im_max = pick(o.strip_im, o.config, "strip_im", std::optional<double>(5.0));
  const std::size_t samples = pick(o.samples, o.config, "samples", std::optional<std::size_t>(5));
  const WitnessReport rep = proof_witness(x, alpha, StripWindow{re_lo, re_hi, samples, im_max, samples});
  if (o.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < rep.z.size(); ++i)
      rows.push_back({rep.z[i].real(), rep.z[i].imag(), rep.abs_h[i], rep.abs_g_reflected[i]});
    write_csv(sink.os(), {"re_z", "im_z", "abs_H", "abs_G_one_minus_z"}, rows);
    return;
  }
  sink.os() << json(rep).dump(2) << '\n';
}

void cmd_reproduce_figure(const Options& o, Sink& sink) {
  const int id = pick(o.figure, o.config, "id");
  if (id == 1) {
    const double alpha = 0.5;
    const double h = pick(o.step, o.config, "h", std::optional<double>(0.01));
    const double t_end = pick(o.t_end, o.config, "t_end", std::optional<double>(40.0));
    const auto g = TimeGrid::spanning(0.0, t_end, h);
    std::vector<std::vector<double>> rows;
    for (std::size_t j = 1; j < g.size(); ++j) {
      const double t = g.at(j);
      rows.push_back({t, std::cos(t), caputo_sin_closed_form(alpha, t)});
    }
    write_csv(sink.os(), {"t", "cos_t", "caputo_sin_alpha05"}, rows);
    return;
  }
  if (id == 2 || id == 3) {
    const double h = pick(o.step, o.config, "h", std::optional<double>(0.01));
    const double t_end = pick(o.t_end, o.config, "t_end", std::optional<double>(200.0));
    const SystemSpec spec{"nn2", {}, {0.5, 0.5}, {0.1, 0.1}};
    const Trajectory x = solve_caputo(spec, TimeGrid::spanning(0.0, t_end, h));
    if (id == 3) {
      write_trajectory_csv(sink.os(), x);
      return;
    }
    std::vector<std::vector<double>> rows;
    for (const State& s : x.states)
      rows.push_back(s);
    write_csv(sink.os(), {"x1", "x2"}, rows);
    return;
  }
  throw config_error("reproduce-figure: --id must be 1, 2 or 3");
}

void report(const char* kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional calculus and periodicity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--config", o.config_path, "JSON document with parameters (flags override it)");
  app.add_option("--out", o.out_path, "Output file (default: stdout)");
  app.add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));

  auto system_flags = [&](CLI::App* c) {
    c->add_option("--system", o.system, "Built-in system: nn2, linear, forced_periodic, constant");
    c->add_option("--params", o.params, "System parameters")->delimiter(',');
    c->add_option("--x0", o.x0, "Initial state, comma separated")->delimiter(',');
    c->add_option("--order,--alpha", o.order, "Derivative order (broadcast over components)");
    c->add_option("--t-end", o.t_end, "Horizon");
    c->add_option("--step", o.step, "Step h");
  };

  auto* ml = app.add_subcommand("ml-eval", "Evaluate E_{alpha,beta}(z)");
  ml->add_option("--alpha", o.alpha, "alpha > 0");
  ml->add_option("--beta", o.beta, "beta (default 1)");
  ml->add_option("--z", o.z, "Argument: x, re,im or a+bi");

  auto* deriv = app.add_subcommand("deriv", "Fractional derivative of a sampled function");
  deriv->add_option("--alpha,--order", o.alpha, "Order (non-integer)");
  deriv->add_option("--kind", o.kind, "caputo (default), rl, gl or gl-plain");
  deriv->add_option("--function", o.function, "sin (default), cos, exp (e^-t), t2, const");
  deriv->add_option("--input", o.input, "CSV t,value on a uniform grid starting at 0");
  deriv->add_option("--t-end", o.t_end, "Horizon (default 10)");
  deriv->add_option("--step", o.step, "Step h (default 1e-3)");

  auto* solve = app.add_subcommand("solve", "Integrate a Caputo system");
  system_flags(solve);

  auto* imp = app.add_subcommand("impulsive", "Integrate an impulsive Caputo system");
  system_flags(imp);
  imp->add_option("--period", o.period, "Impulse period T (instants 0 and T unless the config lists more)");
  imp->add_option("--cycles", o.cycles, "Number of periods to run");
  imp->add_flag("--zero-impulses", o.zero_impulses, "Restart memory at each instant but apply no jump");

  auto* ap = app.add_subcommand("analyze-period", "Period estimate and cycle residuals");
  system_flags(ap);
  ap->add_option("--input", o.input, "Trajectory CSV t,x1,... instead of solving");
  ap->add_option("--period", o.period, "Use this period instead of estimating it");
  ap->add_option("--cycles", o.cycles, "Cycles to compare (default: all that fit)");
  ap->add_option("--t-min", o.t_min, "Transient cutoff (default 30% of the horizon)");

  auto* mw = app.add_subcommand("mellin-witness", "Sample |H(z)| and |G(1-z)| over a strip window");
  mw->add_option("--alpha,--order", o.alpha, "Order (non-integer, default 0.5)");
  mw->add_option("--function", o.function, "sin, cos, const or trig (default)");
  mw->add_option("--period", o.period, "Period T (default 2 pi)");
  mw->add_option("--offset", o.offset, "Constant term of the trigonometric polynomial");
  mw->add_option("--cos", o.cos_coeffs, "Cosine coefficients a_1,a_2,...")->delimiter(',');
  mw->add_option("--sin", o.sin_coeffs, "Sine coefficients b_1,b_2,...")->delimiter(',');
  mw->add_option("--strip-re", o.strip_re, "Re z range lo,hi inside (n - alpha, 1)");
  mw->add_option("--strip-im", o.strip_im, "Im z range is [-v, v] (default 5)");
  mw->add_option("--samples", o.samples, "Samples per axis (default 5)");

  auto* fig = app.add_subcommand("reproduce-figure", "Plot data for figures 1-3");
  fig->add_option("--id", o.figure, "1: cos vs D^0.5 sin; 2: nn2 phase portrait; 3: nn2 versus time");
  fig->add_option("--t-end", o.t_end, "Horizon");
  fig->add_option("--step", o.step, "Step h");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("config", e.what());
    return 2;
  }

  try {
    o.config = load_config(o.config_path);
    if (!o.config.is_object())
      throw config_error("config document must be a JSON object");
    Sink sink(o.out_path);
    if (*ml)
      cmd_ml_eval(o, sink);
    else if (*deriv)
      cmd_deriv(o, sink);
    else if (*solve)
      cmd_solve(o, sink);
    else if (*imp)
      cmd_impulsive(o, sink);
    else if (*ap)
      cmd_analyze_period(o, sink);
    else if (*mw)
      cmd_mellin_witness(o, sink);
    else if (*fig)
      cmd_reproduce_figure(o, sink);
    sink.finish();
  } catch (const config_error& e) {
    report("config", e.what());
    return 2;
  } catch (const unknown_system_error& e) {
    report("config", e.what());
    return 2;
  } catch (const json::exception& e) {
    report("config", e.what());
    return 2;
  } catch (const io_error& e) {
    report("io", e.what());
    return 4;
  } catch (const fracper::error& e) {
    report("numeric", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    report("config", e.what());
    return 2;
  }
  return 0;
}
