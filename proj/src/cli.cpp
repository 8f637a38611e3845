// Copyright 2026 The ivssa Authors.
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


#include "ivssa/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ivssa/decomposition.hpp"
#include "ivssa/error.hpp"
#include "ivssa/forecasting.hpp"
#include "ivssa/io.hpp"
#include "ivssa/kernels.hpp"
#include "ivssa/reconstruction.hpp"
#include "ivssa/spectral.hpp"

namespace ivssa::cli {

using nlohmann::json;

GroupingSpec GroupingSpec::parse(const std::string& text) {
  GroupingSpec spec;
  if (text == "periodogram") return spec;
  if (text == "all") {
    spec.kind = Kind::kAll;
    return spec;
  }
  if (text == "oos") {
    spec.kind = Kind::kOos;
    return spec;
  }
  if (text.rfind("fixed:", 0) == 0) {
    const std::string digits = text.substr(6);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      spec.kind = Kind::kFixed;
      spec.m = std::stoul(digits);
      if (spec.m >= 1) return spec;
    }
  }
  fail(ErrorKind::kConfig, "--grouping must be periodogram, fixed:M (M >= 1), all or oos; got '" +
                               text + "'");
}

std::string GroupingSpec::str() const {
  switch (kind) {
    case Kind::kPeriodogram: return "periodogram";
    case Kind::kFixed: return "fixed:" + std::to_string(m);
    case Kind::kAll: return "all";
    case Kind::kOos: return "oos";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorKind::kConfig, "--alpha must lie in (0, 1)");
  if (horizon < 1) fail(ErrorKind::kConfig, "--horizon must be >= 1");
  if (window && *window < 2) fail(ErrorKind::kConfig, "--window must be >= 2");
  if (grouping.kind == GroupingSpec::Kind::kFixed && grouping.m < 1)
    fail(ErrorKind::kConfig, "fixed grouping needs M >= 1");
  if (reps < 1) fail(ErrorKind::kConfig, "--reps must be >= 1");
  if (stride < 1) fail(ErrorKind::kConfig, "--stride must be >= 1");
  if (ercs && *ercs < 1) fail(ErrorKind::kConfig, "--ercs must be >= 1");
  for (std::size_t v : l_grid)
    if (v < 2) fail(ErrorKind::kConfig, "--l-grid entries must be >= 2");
  for (std::size_t v : m_grid)
    if (v < 1) fail(ErrorKind::kConfig, "--m-grid entries must be >= 1");
  for (std::size_t v : n_list)
    if (v < 4) fail(ErrorKind::kConfig, "--n-list entries must be >= 4");
  for (std::size_t v : m_list)
    if (v < 1) fail(ErrorKind::kConfig, "--m-list entries must be >= 1");
  if (n < 4) fail(ErrorKind::kConfig, "--n must be >= 4");
  if (scenarios.empty() || methods.empty()) fail(ErrorKind::kConfig, "empty scenario or method list");
  const bool needs_input = command == "decompose" || command == "select" ||
                           command == "forecast" || command == "select-params";
  if (needs_input && input.empty()) fail(ErrorKind::kConfig, "--input is required for " + command);
}

json RunConfig::to_json() const {
  json j;
  j["command"] = command;
  if (!input.empty()) j["input"] = input.string();
  j["window"] = window ? json(*window) : json("auto");
  j["grouping"] = grouping.str();
  j["alpha"] = alpha;
  j["horizon"] = horizon;
  j["stack"] = std::string(to_string(stack));
  j["seed"] = seed;
  j["reps"] = reps;
  j["full_study"] = full_study;
  j["format"] = format == OutputFormat::kJson ? "json" : "csv";
  j["max_m"] = max_m;
  j["center_residuals"] = center;
  if (ercs) j["ercs"] = *ercs;
  if (first_window) j["w0"] = *first_window;
  j["l_grid"] = l_grid;
  j["m_grid"] = m_grid;
  j["stride"] = stride;
  json sc = json::array();
  for (Scenario s : scenarios) sc.push_back(std::string(to_string(s)));
  j["scenarios"] = sc;
  j["n"] = n;
  j["n_list"] = n_list;
  j["m_list"] = m_list;
  json me = json::array();
  for (Method m : methods) me.push_back(std::string(to_string(m)));
  j["methods"] = me;
  return j;
}

namespace {

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json interval_json(const IntervalSeries& s) {
  json lo = json::array(), hi = json::array();
  for (const auto& v : s) {
    lo.push_back(v.lo());
    hi.push_back(v.hi());
  }
  return {{"lo", lo}, {"hi", hi}};
}

json pair_json(const PairSeries& p) {
  json a = json::array(), b = json::array();
  for (const auto& v : p) {
    a.push_back(v.a);
    b.push_back(v.b);
  }
  json j = interval_json(IntervalSeries::from_pairs(p));
  j["a"] = a;
  j["b"] = b;
  return j;
}

json header(const RunConfig& config) {
  json j;
  j["ivssa_version"] = kVersion;
  j["command"] = config.command;
  j["config"] = config.to_json();
  return j;
}

std::filesystem::path artifact(const RunConfig& config, const std::string& name) {
  return *config.out_dir / name;
}

void write_json(const std::filesystem::path& path, const json& doc) {
  io::write_file_atomic(path, doc.dump(2) + "\n");
  std::ifstream in(path);
  validate_intervals(json::parse(in));
}

StackingMode resolve_mode(const RunConfig& config, std::size_t count) {
  return count == 1 ? StackingMode::kUnivariate : config.stack;
}

struct ResolvedWindow {
  std::size_t window;
  bool automatic;
};

ResolvedWindow resolve_window(const RunConfig& config, std::size_t n, std::size_t count,
                              StackingMode mode) {
  if (config.window) return {*config.window, false};
  return {default_window(n, count, mode), true};
}

SelectionOptions selection_options(const RunConfig& config) {
  SelectionOptions o;
  o.alpha = config.alpha;
  o.max_m = config.max_m;
  o.periodogram.center = config.center;
  return o;
}

json selection_json(const SelectionResult& r, std::size_t series_index) {
  return {{"series", series_index + 1},
          {"m", r.m},
          {"converged", r.converged},
          {"critical_value", r.critical_value},
          {"ks_trace", r.ks_trace},
          {"clipped_ordinates", r.clipped}};
}

const IntervalSeries& single_series(const std::vector<IntervalSeries>& series,
                                    const std::string& command) {
  if (series.size() != 1)
    fail(ErrorKind::kConfig, command + " works on a single series; input has " +
                                 std::to_string(series.size()));
  return series.front();
}

struct OosSetup {
  std::size_t w0;
  std::vector<std::size_t> l_grid, m_grid;
};

OosSetup oos_setup(const RunConfig& config, std::size_t n) {
  OosSetup s;
  const std::size_t p = config.horizon;
  if (p >= n) fail(ErrorKind::kConfig, "--horizon must be smaller than the series length");
  if (config.first_window) {
    s.w0 = *config.first_window;
  } else {
    s.w0 = std::min((n + 1) / 2 + 1, n - p);
    if (!config.l_grid.empty()) {
      const std::size_t max_l = *std::max_element(config.l_grid.begin(), config.l_grid.end());
      s.w0 = std::min(std::max(s.w0, max_l + 1), n - p);
    }
  }
  s.l_grid = config.l_grid.empty() ? default_l_grid(n, s.w0) : config.l_grid;
  s.m_grid = config.m_grid.empty() ? default_m_grid() : config.m_grid;
  if (s.l_grid.empty()) fail(ErrorKind::kConfig, "no valid window length below w0 = " + std::to_string(s.w0));
  return s;
}

json oos_json(const OosResult& r, const OosSetup& setup, std::size_t p, std::size_t stride) {
  json table = json::array();
  for (const auto& c : r.table)
    table.push_back({{"l", c.window}, {"m", c.m}, {"objective", number(c.objective)},
                     {"failures", c.failures}});
  return {{"l_star", r.window}, {"m_star", r.m},       {"objective", r.objective},
          {"w0", setup.w0},     {"p", p},              {"stride", stride},
          {"l_grid", setup.l_grid}, {"m_grid", setup.m_grid}, {"table", table}};
}

void emit(const RunConfig& config, const std::string& stem, const json& doc,
          const std::vector<std::pair<std::string, std::string>>& csv_files) {
  if (!config.out_dir) return;
  if (config.format == OutputFormat::kJson || stem == "forecast" || stem == "mc")
    write_json(artifact(config, stem + ".json"), doc);
  if (config.format == OutputFormat::kCsv || stem == "forecast" || stem == "mc")
    for (const auto& [name, content] : csv_files) io::write_file_atomic(artifact(config, name), content);
}

}  // namespace

void validate_intervals(const json& doc) {
  if (doc.is_object()) {
    if (doc.contains("lo") && doc.contains("hi") && doc["lo"].is_array() && doc["hi"].is_array()) {
      const auto& lo = doc["lo"];
      const auto& hi = doc["hi"];
      if (lo.size() != hi.size()) fail(ErrorKind::kInvalidValue, "lo/hi arrays differ in length");
      for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i].is_number() && hi[i].is_number() && lo[i].get<double>() > hi[i].get<double>())
          fail(ErrorKind::kInvalidValue, "emitted interval with lo > hi at index " + std::to_string(i));
    }
    for (const auto& [key, value] : doc.items()) validate_intervals(value);
  } else if (doc.is_array()) {
    for (const auto& v : doc) validate_intervals(v);
  }
}

json cmd_decompose(const RunConfig& config) {
  config.validate();
  const auto series = io::read_csv(config.input);
  const std::size_t count = series.size(), n = series.front().size();
  const StackingMode mode = resolve_mode(config, count);
  ResolvedWindow rw = resolve_window(config, n, count, mode);

  json doc = header(config);
  std::optional<std::size_t> oos_m;
  if (config.grouping.kind == GroupingSpec::Kind::kOos) {
    const IntervalSeries& y = single_series(series, "oos grouping");
    const OosSetup setup = oos_setup(config, n);
    OosOptions options{setup.w0, config.horizon, config.stride};
    const OosResult r = select_params_oos(y, setup.l_grid, setup.m_grid, options);
    rw = {r.window, false};
    oos_m = r.m;
    doc["oos"] = oos_json(r, setup, config.horizon, config.stride);
  }

  const Decomposition dec = decompose(series, rw.window, mode);
  const std::size_t d = dec.rank();
  if (d == 0) fail(ErrorKind::kDegenerateSpectrum, "decomposition has rank 0 (all-zero data)");

  std::vector<Grouping> groupings;
  json selections = json::array();
  for (std::size_t s = 0; s < count; ++s) {
    switch (config.grouping.kind) {
      case GroupingSpec::Kind::kPeriodogram: {
        const SelectionResult r = select_components(dec, series[s], s, selection_options(config));
        selections.push_back(selection_json(r, s));
        groupings.push_back(Grouping::prefix(r.m));
        break;
      }
      case GroupingSpec::Kind::kFixed:
        if (config.grouping.m > d)
          fail(ErrorKind::kConfig, "fixed grouping m = " + std::to_string(config.grouping.m) +
                                       " exceeds d = " + std::to_string(d));
        groupings.push_back(Grouping::prefix(config.grouping.m));
        break;
      case GroupingSpec::Kind::kAll: groupings.push_back(Grouping::prefix(d)); break;
      case GroupingSpec::Kind::kOos: groupings.push_back(Grouping::prefix(std::min(*oos_m, d))); break;
    }
  }

  const std::size_t erc_count = std::min(config.ercs.value_or(d), d);
  const ErcSet ercs = reconstruct_ercs(dec, erc_count);

  doc["n"] = n;
  doc["series_count"] = count;
  doc["mode"] = std::string(to_string(mode));
  doc["window"] = rw.window;
  doc["window_rule"] = rw.automatic ? "auto" : "user";
  doc["k"] = dec.k();
  doc["rank"] = d;
  doc["eigenvalues"] = dec.eig().values;
  if (series.front().has_labels()) doc["labels"] = series.front().labels();

  json groups = json::array();
  for (std::size_t s = 0; s < count; ++s)
    groups.push_back({{"series", s + 1}, {"components", groupings[s].components()}});
  doc["grouping"] = groups;
  if (!selections.empty()) doc["selection"] = selections;

  json erc_json = json::array();
  for (std::size_t c = 0; c < ercs.size(); ++c) {
    json per_series = json::array();
    for (std::size_t s = 0; s < count; ++s) per_series.push_back(pair_json(ercs.pairs[c][s]));
    erc_json.push_back({{"component", c + 1}, {"eigenvalue", dec.eig().values[c]}, {"series", per_series}});
  }
  doc["ercs"] = erc_json;

  std::vector<IntervalSeries> trends;
  json trend_json = json::array();
  for (std::size_t s = 0; s < count; ++s) {
    trends.push_back(trendline(dec, groupings[s], s));
    json t = interval_json(trends.back());
    t["series"] = s + 1;
    trend_json.push_back(t);
  }
  doc["trendlines"] = trend_json;

  if (series.front().has_labels())
    for (auto& t : trends) t = IntervalSeries(t.values(), series.front().labels());
  std::string erc_csv = "component,series,t,a,b,lo,hi\n";
  for (std::size_t c = 0; c < ercs.size(); ++c)
    for (std::size_t s = 0; s < count; ++s)
      for (std::size_t t = 0; t < n; ++t) {
        const OrderedPair p = ercs.pairs[c][s][t];
        const Interval v = phi(p);
        erc_csv += std::to_string(c + 1) + ',' + std::to_string(s + 1) + ',' + std::to_string(t + 1) +
                   ',' + io::format_number(p.a, 12) + ',' + io::format_number(p.b, 12) + ',' +
                   io::format_number(v.lo(), 12) + ',' + io::format_number(v.hi(), 12) + '\n';
      }
  emit(config, "decompose", doc,
       {{"decompose_trendline.csv", io::format_csv(trends)}, {"decompose_ercs.csv", erc_csv}});
  return doc;
}

json cmd_select(const RunConfig& config) {
  config.validate();
  const auto series = io::read_csv(config.input);
  const std::size_t count = series.size(), n = series.front().size();
  const StackingMode mode = resolve_mode(config, count);
  const ResolvedWindow rw = resolve_window(config, n, count, mode);
  const Decomposition dec = decompose(series, rw.window, mode);

  json doc = header(config);
  doc["n"] = n;
  doc["series_count"] = count;
  doc["mode"] = std::string(to_string(mode));
  doc["window"] = rw.window;
  doc["window_rule"] = rw.automatic ? "auto" : "user";
  doc["rank"] = dec.rank();
  json selections = json::array();
  std::string csv = "series,m,converged\n";
  for (std::size_t s = 0; s < count; ++s) {
    const SelectionResult r = select_components(dec, series[s], s, selection_options(config));
    selections.push_back(selection_json(r, s));
    csv += std::to_string(s + 1) + ',' + std::to_string(r.m) + ',' + (r.converged ? "true" : "false") + '\n';
  }
  doc["selection"] = selections;
  emit(config, "select", doc, {{"select.csv", csv}});
  return doc;
}

json cmd_forecast(const RunConfig& config) {
  config.validate();
  const auto series = io::read_csv(config.input);
  const IntervalSeries& y = single_series(series, "forecast");
  const std::size_t n = y.size();

  json doc = header(config);
  ResolvedWindow rw = resolve_window(config, n, 1, StackingMode::kUnivariate);
  std::optional<std::size_t> m;
  if (config.grouping.kind == GroupingSpec::Kind::kOos) {
    const OosSetup setup = oos_setup(config, n);
    const OosResult r = select_params_oos(y, setup.l_grid, setup.m_grid,
                                          OosOptions{setup.w0, config.horizon, config.stride});
    rw = {r.window, false};
    m = r.m;
    doc["oos"] = oos_json(r, setup, config.horizon, config.stride);
  }
  const Decomposition dec = decompose(y, rw.window);
  if (dec.rank() == 0) fail(ErrorKind::kDegenerateSpectrum, "decomposition has rank 0");
  switch (config.grouping.kind) {
    case GroupingSpec::Kind::kPeriodogram: {
      const SelectionResult r = select_components(dec, y, 0, selection_options(config));
      doc["selection"] = json::array({selection_json(r, 0)});
      m = r.m;
      break;
    }
    case GroupingSpec::Kind::kFixed:
      if (config.grouping.m > dec.rank())
        fail(ErrorKind::kConfig, "fixed grouping m exceeds d = " + std::to_string(dec.rank()));
      m = config.grouping.m;
      break;
    case GroupingSpec::Kind::kAll: m = dec.rank(); break;
    case GroupingSpec::Kind::kOos: break;
  }
  const Grouping grouping = Grouping::prefix(*m);
  const RecurrenceCoefficients coef = recurrence_coefficients(dec.eig(), grouping);
  const IntervalSeries trend = trendline(dec, grouping);
  const ForecastResult f = forecast_recurrent(trend, coef, config.horizon);

  doc["n"] = n;
  doc["window"] = rw.window;
  doc["window_rule"] = rw.automatic ? "auto" : "user";
  doc["m"] = *m;
  doc["rank"] = dec.rank();
  doc["coefficients"] = coef.alpha;
  doc["verticality"] = coef.verticality;
  doc["trendline"] = interval_json(trend);
  json fj = interval_json(f.values);
  fj["horizon"] = f.horizon;
  fj["origin"] = f.origin;
  std::vector<std::string> labels;
  for (std::size_t h = 1; h <= f.horizon; ++h) labels.push_back("t+" + std::to_string(h));
  fj["labels"] = labels;
  doc["forecast"] = fj;

  const IntervalSeries labelled(f.values.values(), labels);
  emit(config, "forecast", doc, {{"forecast.csv", io::format_csv({labelled})}});
  return doc;
}

json cmd_select_params(const RunConfig& config) {
  config.validate();
  const auto series = io::read_csv(config.input);
  const IntervalSeries& y = single_series(series, "select-params");
  const OosSetup setup = oos_setup(config, y.size());
  const OosResult r = select_params_oos(y, setup.l_grid, setup.m_grid,
                                        OosOptions{setup.w0, config.horizon, config.stride});
  json doc = header(config);
  doc["n"] = y.size();
  doc["oos"] = oos_json(r, setup, config.horizon, config.stride);
  std::string csv = "l,m,objective,failures\n";
  for (const auto& c : r.table)
    csv += std::to_string(c.window) + ',' + std::to_string(c.m) + ',' +
           (std::isfinite(c.objective) ? io::format_number(c.objective, 12) : std::string("inf")) +
           ',' + std::to_string(c.failures) + '\n';
  emit(config, "select_params", doc, {{"select_params.csv", csv}});
  return doc;
}

json cmd_simulate(const RunConfig& config) {
  config.validate();
  const Scenario scenario = config.scenarios.front();
  const SimulatedPair sim = simulate_scenario(ScenarioConfig::make(scenario, config.n, config.seed));
  json doc = header(config);
  doc["scenario"] = std::string(to_string(scenario));
  doc["n"] = config.n;
  doc["rng"] = {{"engine", "mt19937_64"}, {"normal", "box-muller"}, {"seed", config.seed}};
  doc["x"] = interval_json(sim.x);
  doc["y"] = interval_json(sim.y);
  doc["x_mean"] = interval_json(sim.x_mean);
  doc["y_mean"] = interval_json(sim.y_mean);
  emit(config, "simulate", doc,
       {{"simulate.csv", io::format_csv({sim.x, sim.y})},
        {"simulate_mean.csv", io::format_csv({sim.x_mean, sim.y_mean})}});
  return doc;
}

json cmd_mc(const RunConfig& config) {
  config.validate();
  McConfig mc;
  mc.scenarios = config.scenarios;
  mc.n_list = config.n_list;
  mc.m_list = config.m_list;
  mc.methods = config.methods;
  mc.reps = config.reps;
  mc.base_seed = config.seed;
  mc.alpha = config.alpha;
  mc.max_m = config.max_m;
  if (config.full_study) {
    mc.reps = 1000;
    mc.n_list = {100, 250, 1000};
  }
  const McReport report = run_monte_carlo(mc);

  json doc = header(config);
  doc["rng"] = {{"engine", "mt19937_64"}, {"normal", "box-muller"}, {"seed_rule", "base_seed + rep"}};
  doc["reps"] = mc.reps;
  doc["n_list"] = mc.n_list;
  json summaries = json::array();
  for (const auto& s : report.summaries) {
    json j = {{"scenario", std::string(to_string(s.scenario))},
              {"n", s.n},
              {"method", std::string(to_string(s.method))},
              {"m", s.m},
              {"count", s.count},
              {"mean_hr_x", s.mean_hr_x},
              {"q25_hr_x", s.q25_hr_x},
              {"median_hr_x", s.median_hr_x},
              {"q75_hr_x", s.q75_hr_x}};
    if (s.mean_hr_y) j["mean_hr_y"] = *s.mean_hr_y;
    if (s.mean_hr_avg) j["mean_hr_avg"] = *s.mean_hr_avg;
    summaries.push_back(j);
  }
  doc["summaries"] = summaries;
  json groups = json::array();
  for (const auto& g : report.groups) {
    std::vector<std::size_t> selected;
    for (const auto& sel : report.selections)
      if (sel.scenario == g.scenario && sel.n == g.n && sel.method == g.method)
        selected.push_back(sel.missing ? 0 : sel.m);
    groups.push_back({{"scenario", std::string(to_string(g.scenario))},
                      {"n", g.n},
                      {"method", std::string(to_string(g.method))},
                      {"best_m", g.best_m},
                      {"best_mean_hr_x", g.best_mean_hr_x},
                      {"selected_m_histogram", g.histogram},
                      {"selected_m_mode", g.selected_mode},
                      {"selected_m", selected}});
  }
  doc["groups"] = groups;

  std::string csv = "scenario,n,method,rep,m,missing,hr_x,hr_y\n";
  for (const auto& c : report.cells)
    csv += std::string(to_string(c.scenario)) + ',' + std::to_string(c.n) + ',' +
           std::string(to_string(c.method)) + ',' + std::to_string(c.rep) + ',' + std::to_string(c.m) +
           ',' + (c.missing ? "1" : "0") + ',' + (c.missing ? "" : io::format_number(c.hr_x, 12)) + ',' +
           (c.hr_y && !c.missing ? io::format_number(*c.hr_y, 12) : "") + '\n';
  emit(config, "mc", doc, {{"mc.csv", csv}});
  return doc;
}

namespace {

template <class T>
std::vector<T> parse_enum_list(const std::vector<std::string>& items, T (*one)(const std::string&)) {
  std::vector<T> out;
  for (const auto& s : items) out.push_back(one(s));
  return out;
}

Scenario parse_scenario(const std::string& s) {
  if (s == "A" || s == "a") return Scenario::kA;
  if (s == "B" || s == "b") return Scenario::kB;
  fail(ErrorKind::kConfig, "unknown scenario '" + s + "' (expected A or B)");
}

Method parse_method(const std::string& s) {
  if (s == "IVSSA" || s == "ivssa") return Method::kIvssa;
  if (s == "vMIVSSA" || s == "vmivssa" || s == "vertical") return Method::kVertical;
  if (s == "hMIVSSA" || s == "hmivssa" || s == "horizontal") return Method::kHorizontal;
  fail(ErrorKind::kConfig, "unknown method '" + s + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval-valued singular spectrum analysis"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string input, window = "auto", grouping = "periodogram", stack = "vertical", format = "json";
  std::string out_dir;
  std::vector<std::string> scenarios, methods;
  std::optional<std::size_t> w0, ercs;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", input, "CSV file: label,lo,hi or label,lo_1,hi_1,...");
    sub->add_option("--window", window, "window length N or 'auto'");
    sub->add_option("--grouping", grouping, "periodogram | fixed:M | all | oos");
    sub->add_option("--alpha", config.alpha, "KS significance level");
    sub->add_option("--horizon", config.horizon, "forecast horizon / oos steps ahead");
    sub->add_option("--stack", stack, "vertical | horizontal (multivariate input)");
    sub->add_option("--seed", config.seed, "RNG seed");
    sub->add_option("--reps", config.reps, "Monte Carlo replications");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--format", format, "json | csv");
    sub->add_option("--max-m", config.max_m, "largest m scanned by the periodogram criterion");
    sub->add_option("--ercs", ercs, "number of ERCs emitted by decompose");
    sub->add_flag("--center", config.center, "center residuals before the periodogram");
    sub->add_option("--w0", w0, "first training size for oos selection");
    sub->add_option("--l-grid", config.l_grid, "window grid for oos selection")->delimiter(',');
    sub->add_option("--m-grid", config.m_grid, "component grid for oos selection")->delimiter(',');
    sub->add_option("--stride", config.stride, "step between oos training cutoffs");
    sub->add_option("--scenario", scenarios, "A and/or B")->delimiter(',');
    sub->add_option("--n", config.n, "simulated series length");
    sub->add_option("--n-list", config.n_list, "Monte Carlo sample sizes")->delimiter(',');
    sub->add_option("--m-list", config.m_list, "Monte Carlo component counts")->delimiter(',');
    sub->add_option("--methods", methods, "IVSSA,vMIVSSA,hMIVSSA")->delimiter(',');
    sub->add_flag("--full", config.full_study, "full study: 1000 reps, n in {100, 250, 1000}");
  };
  for (const char* name : {"decompose", "select", "forecast", "select-params", "simulate", "mc"}) {
    std::string help;
    if (std::string(name) == "decompose") help = "decompose into ERCs and interval trendlines";
    else if (std::string(name) == "select") help = "choose the number of ERCs via the interval periodogram";
    else if (std::string(name) == "forecast") help = "recurrent interval forecasts";
    else if (std::string(name) == "select-params") help = "out-of-sample (l, m) search";
    else if (std::string(name) == "simulate") help = "draw one scenario A/B sample";
    else help = "Monte Carlo study of scenarios A/B";
    common(app.add_subcommand(name, help));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code(ErrorKind::kConfig);
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    config.input = input;
    if (window != "auto") {
      if (window.empty() || window.find_first_not_of("0123456789") != std::string::npos)
        fail(ErrorKind::kConfig, "--window must be a positive integer or 'auto'");
      config.window = std::stoul(window);
    }
    config.grouping = GroupingSpec::parse(grouping);
    if (stack == "vertical") config.stack = StackingMode::kVertical;
    else if (stack == "horizontal") config.stack = StackingMode::kHorizontal;
    else fail(ErrorKind::kConfig, "--stack must be vertical or horizontal");
    if (format == "json") config.format = OutputFormat::kJson;
    else if (format == "csv") config.format = OutputFormat::kCsv;
    else fail(ErrorKind::kConfig, "--format must be json or csv");
    if (!out_dir.empty()) config.out_dir = out_dir;
    config.first_window = w0;
    config.ercs = ercs;
    if (!scenarios.empty()) config.scenarios = parse_enum_list(scenarios, parse_scenario);
    if (!methods.empty()) config.methods = parse_enum_list(methods, parse_method);

    json doc;
    if (config.command == "decompose") doc = cmd_decompose(config);
    else if (config.command == "select") doc = cmd_select(config);
    else if (config.command == "forecast") doc = cmd_forecast(config);
    else if (config.command == "select-params") doc = cmd_select_params(config);
    else if (config.command == "simulate") doc = cmd_simulate(config);
    else doc = cmd_mc(config);

    if (config.out_dir) out << "wrote " << config.command << " artifacts to " << config.out_dir->string() << '\n';
    else out << doc.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error (io): " << e.what() << '\n';
    return exit_code(ErrorKind::kConfig);
  }
}

}  // namespace ivssa::cli
