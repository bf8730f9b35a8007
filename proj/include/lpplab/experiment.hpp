#pragma once

// Experiment runner: declarative configs, replica-parallel execution, and
// reproducible persistence.
//
// A run directory holds records.csv (pinned schema, byte-identical across
// reruns of the same config) and manifest.json (full config echo, code
// version, RNG known-answer hash, wall timing). Each (n, replica) cell is
// computed from StreamKey{derive_seed(seed, n), replica, purpose}, so records
// of one replica do not depend on which other replicas exist, and runs of
// different models under one seed share their base randomness (paired
// comparisons).

#include <array>
#include <cctype>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lpplab/lattice.hpp"
#include "lpplab/parallel.hpp"
#include "lpplab/point_process.hpp"
#include "lpplab/rng.hpp"
#include "lpplab/stats.hpp"
#include "lpplab/tasep.hpp"
#include "lpplab/ulam.hpp"

namespace lpplab {

inline constexpr const char* kCodeVersion = "lpplab 0.1.0";
inline constexpr const char* kCsvHeader = "model,n,replica,observable,value,wall_ms,seed_hi,seed_lo";
inline constexpr int kCsvSchemaVersion = 1;

struct ExperimentConfig {
  ModelTag model = ModelTag::ulam;
  bool model_set = false;
  double lambda = 0.0;
  bool lambda_set = false;
  double epsilon = 0.0;
  double m = 0.0;
  double t_max = 0.0;
  bool t_max_set = false;
  std::vector<int64_t> n_list;
  int64_t replicas = 0;
  uint64_t seed = 0;
  std::string output_dir;
};

struct ConfigError : std::runtime_error {
  std::vector<std::string> violations;
  explicit ConfigError(std::vector<std::string> v)
      : std::runtime_error("invalid experiment config"), violations(std::move(v)) {}
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(cur), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline void format_value(char* buf, std::size_t cap, double v) {
  std::snprintf(buf, cap, "%.17g", v);
}

}  // namespace detail

// Key-value format with one optional [params] section; '#' and ';' start
// comments. Unknown keys are config errors.
inline ExperimentConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file: " + path});

  ExperimentConfig cfg;
  std::vector<std::string> violations;
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = detail::trim(line.substr(1, line.size() - 2));
      if (section != "params")
        violations.push_back("line " + std::to_string(lineno) + ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      violations.push_back("line " + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string val = detail::trim(line.substr(eq + 1));
    try {
      if (section.empty() && key == "model") {
        cfg.model_set = model_from_string(val, cfg.model);
        if (!cfg.model_set) violations.push_back("model: unknown model '" + val + "'");
      } else if (section.empty() && key == "n_list") {
        for (const auto& tok : detail::split_list(val)) cfg.n_list.push_back(std::stoll(tok));
      } else if (section.empty() && key == "replicas") {
        cfg.replicas = std::stoll(val);
      } else if (section.empty() && key == "seed") {
        cfg.seed = std::stoull(val);
      } else if (section.empty() && key == "output_dir") {
        cfg.output_dir = val;
      } else if (section == "params" && key == "lambda") {
        cfg.lambda = std::stod(val);
        cfg.lambda_set = true;
      } else if (section == "params" && key == "epsilon") {
        cfg.epsilon = std::stod(val);
      } else if (section == "params" && key == "m") {
        cfg.m = std::stod(val);
      } else if (section == "params" && key == "t_max") {
        cfg.t_max = std::stod(val);
        cfg.t_max_set = true;
      } else {
        violations.push_back("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::exception&) {
      violations.push_back("line " + std::to_string(lineno) + ": cannot parse value for '" + key + "'");
    }
  }
  if (!violations.empty()) throw ConfigError(std::move(violations));
  return cfg;
}

// Every violated field is reported, not just the first.
inline std::vector<std::string> validate(const ExperimentConfig& cfg) {
  std::vector<std::string> v;
  if (!cfg.model_set) v.push_back("model: required");
  if (cfg.n_list.empty()) v.push_back("n_list: required and nonempty");
  for (std::size_t i = 0; i < cfg.n_list.size(); ++i) {
    if (cfg.n_list[i] < 1) v.push_back("n_list: entries must be >= 1");
    if (i > 0 && cfg.n_list[i] <= cfg.n_list[i - 1]) {
      v.push_back("n_list: must be strictly ascending");
      break;
    }
  }
  if (cfg.replicas < 1) v.push_back("replicas: must be >= 1");
  if (cfg.output_dir.empty()) v.push_back("output_dir: required");
  if (!(cfg.lambda >= 0.0) || !std::isfinite(cfg.lambda)) v.push_back("lambda: must be finite and >= 0");
  if (!(cfg.epsilon >= 0.0 && cfg.epsilon < 1.0)) v.push_back("epsilon: must be in [0,1)");
  if (!cfg.model_set) return v;

  switch (cfg.model) {
    case ModelTag::ulam_reinforced:
      if (!cfg.lambda_set) v.push_back("lambda: required for model ulam_reinforced");
      for (int64_t n : cfg.n_list)
        if (!(std::fabs(cfg.m) < static_cast<double>(n))) {
          v.push_back("m: |m| < n required for every n in n_list");
          break;
        }
      break;
    case ModelTag::lattice_slowbond:
      for (int64_t n : cfg.n_list)
        if (std::fabs(cfg.m) > static_cast<double>(n) ||
            cfg.m != std::floor(cfg.m)) {
          v.push_back("m: integer with |m| <= n required for every n in n_list");
          break;
        }
      break;
    case ModelTag::tasep:
      if (!cfg.t_max_set || !(cfg.t_max > 0.0)) v.push_back("t_max: required and > 0 for model tasep");
      // window rule: the information cone must not reach either edge
      if (cfg.t_max_set)
        for (int64_t n : cfg.n_list)
          if (static_cast<double>(n) < 1.5 * cfg.t_max) {
            v.push_back("n_list: tasep window requires n >= 1.5 * t_max sites per side");
            break;
          }
      break;
    default:
      break;
  }
  return v;
}

struct RunOptions {
  unsigned workers = 0;  // 0: hardware parallelism
};

namespace detail {

struct CellRow {
  const char* observable;
  double value;
};

inline std::vector<CellRow> run_cell(const ExperimentConfig& cfg, int64_t n, int64_t replica,
                                     uint64_t stream_seed) {
  const uint32_t rep = static_cast<uint32_t>(replica);
  switch (cfg.model) {
    case ModelTag::ulam:
    case ModelTag::ulam_reinforced: {
      const double lambda = cfg.model == ModelTag::ulam ? 0.0 : cfg.lambda;
      const LisResult res = reinforced_lis(n, lambda, cfg.m, {stream_seed, rep, 0});
      const auto fluct = transversal_fluctuation(res.topmost_path, res.from, res.to);
      return {{"L", static_cast<double>(res.length)}, {"F", fluct.about_diagonal}};
    }
    case ModelTag::lattice:
    case ModelTag::lattice_slowbond: {
      const double eps = cfg.model == ModelTag::lattice ? 0.0 : cfg.epsilon;
      const StreamKey key{stream_seed, rep, static_cast<uint32_t>(Purpose::lattice)};
      const LatticeWeights w = sample_weights(n, eps, static_cast<int64_t>(cfg.m), key);
      return {{"T", passage_time_value(w)}};
    }
    case ModelTag::tasep: {
      const StreamKey key{stream_seed, rep, static_cast<uint32_t>(Purpose::tasep)};
      TasepState st = simulate(init_step(n, n), cfg.epsilon, cfg.t_max, key);
      const CurrentEstimate est = current_estimate(st, cfg.t_max / 10.0);
      return {{"J", est.J}, {"J_se", est.standard_error}};
    }
    case ModelTag::tasep_coupled: {
      const StreamKey key{stream_seed, rep, static_cast<uint32_t>(Purpose::tasep)};
      const CoupledPassageTime ct = coupled_passage_time(n, cfg.epsilon, key);
      return {{"t_tasep", ct.tasep_time}, {"t_lpp", ct.lpp_time}};
    }
  }
  throw std::logic_error("run_cell: unhandled model");
}

}  // namespace detail

// Executes all (n, replica) cells and persists records.csv + manifest.json.
// Row order is (n, replica, observable) regardless of scheduling; the CSV is
// byte-identical across reruns, so wall timing goes to the manifest only.
inline void run(const ExperimentConfig& cfg, const RunOptions& opts = {}) {
  {
    auto v = validate(cfg);
    if (!v.empty()) throw ConfigError(std::move(v));
  }
  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);

  const auto t_start = std::chrono::steady_clock::now();
  const std::size_t cells = cfg.n_list.size() * static_cast<std::size_t>(cfg.replicas);
  std::vector<std::vector<detail::CellRow>> results(cells);
  const unsigned workers = opts.workers == 0 ? default_workers() : opts.workers;

  parallel_for(cells, workers, [&](std::size_t cell) {
    const int64_t n = cfg.n_list[cell / static_cast<std::size_t>(cfg.replicas)];
    const int64_t rep = static_cast<int64_t>(cell % static_cast<std::size_t>(cfg.replicas));
    results[cell] = detail::run_cell(cfg, n, rep, derive_seed(cfg.seed, static_cast<uint64_t>(n)));
  });

  const auto total_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t_start)
                            .count();

  std::ofstream csv(fs::path(cfg.output_dir) / "records.csv", std::ios::binary);
  if (!csv) throw std::runtime_error("run: cannot write records.csv in " + cfg.output_dir);
  csv << kCsvHeader << '\n';
  char buf[40];
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const int64_t n = cfg.n_list[cell / static_cast<std::size_t>(cfg.replicas)];
    const int64_t rep = static_cast<int64_t>(cell % static_cast<std::size_t>(cfg.replicas));
    const uint64_t stream_seed = derive_seed(cfg.seed, static_cast<uint64_t>(n));
    for (const auto& row : results[cell]) {
      detail::format_value(buf, sizeof buf, row.value);
      csv << to_string(cfg.model) << ',' << n << ',' << rep << ',' << row.observable << ',' << buf
          << ",0," << (stream_seed >> 32) << ',' << (stream_seed & 0xffffffffu) << '\n';
    }
  }
  csv.close();

  nlohmann::json manifest;
  manifest["code_version"] = kCodeVersion;
  manifest["rng_test_vector_hash"] = rng_kat_hash();
  manifest["csv_schema_version"] = kCsvSchemaVersion;
  manifest["csv_header"] = kCsvHeader;
  manifest["model"] = to_string(cfg.model);
  manifest["params"] = {{"lambda", cfg.lambda}, {"epsilon", cfg.epsilon}, {"m", cfg.m},
                        {"t_max", cfg.t_max}};
  manifest["n_list"] = cfg.n_list;
  manifest["replicas"] = cfg.replicas;
  manifest["seed"] = cfg.seed;
  manifest["output_dir"] = cfg.output_dir;
  manifest["timing"] = {{"total_wall_ms", total_ms}, {"workers", workers}};
  std::ofstream mf(fs::path(cfg.output_dir) / "manifest.json", std::ios::binary);
  mf << manifest.dump(2) << '\n';
}

// ---- analysis ---------------------------------------------------------------

enum class Analysis { time_constant, chi, xi, tails, shape, current };

inline bool analysis_from_string(const std::string& s, Analysis& out) {
  const std::pair<const char*, Analysis> table[] = {
      {"time_constant", Analysis::time_constant}, {"chi", Analysis::chi},
      {"xi", Analysis::xi},                       {"tails", Analysis::tails},
      {"shape", Analysis::shape},                 {"current", Analysis::current}};
  for (const auto& [name, a] : table)
    if (s == name) {
      out = a;
      return true;
    }
  return false;
}

struct RecordRow {
  int64_t n = 0;
  int64_t replica = 0;
  std::string observable;
  double value = 0.0;
};

struct LoadedRun {
  ModelTag model = ModelTag::ulam;
  nlohmann::json manifest;
  std::vector<RecordRow> rows;
};

inline LoadedRun load_run(const std::string& dir) {
  namespace fs = std::filesystem;
  LoadedRun run;
  {
    std::ifstream mf(fs::path(dir) / "manifest.json");
    if (!mf) throw std::runtime_error("analyze: missing manifest.json in " + dir);
    mf >> run.manifest;
    if (!model_from_string(run.manifest.value("model", ""), run.model))
      throw std::runtime_error("analyze: bad model in manifest of " + dir);
  }
  std::ifstream csv(fs::path(dir) / "records.csv");
  if (!csv) throw std::runtime_error("analyze: missing records.csv in " + dir);
  std::string line;
  std::getline(csv, line);
  if (line != kCsvHeader) throw std::runtime_error("analyze: unexpected CSV header in " + dir);
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(tok);
    if (f.size() != 8) throw std::runtime_error("analyze: malformed CSV row in " + dir);
    run.rows.push_back({std::stoll(f[1]), std::stoll(f[2]), f[3], std::stod(f[4])});
  }
  return run;
}

namespace detail {

inline SampleSeries series_for(const std::vector<LoadedRun>& runs, const std::string& observable) {
  std::map<int64_t, std::vector<double>> by_n;
  for (const auto& r : runs)
    for (const auto& row : r.rows)
      if (row.observable == observable) by_n[row.n].push_back(row.value);
  SampleSeries s;
  s.model_tag = runs.front().model;
  for (auto& [n, values] : by_n) s.entries.push_back({n, std::move(values)});
  return s;
}

inline std::string primary_observable(ModelTag m) {
  switch (m) {
    case ModelTag::ulam:
    case ModelTag::ulam_reinforced: return "L";
    case ModelTag::lattice:
    case ModelTag::lattice_slowbond: return "T";
    case ModelTag::tasep: return "J";
    case ModelTag::tasep_coupled: return "t_lpp";
  }
  return "";
}

// Acklam's rational approximation to the standard normal quantile.
inline double normal_quantile(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double pl = 0.02425;
  if (p < pl) {
    const double q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (p > 1 - pl) return -normal_quantile(1 - p);
  const double q = p - 0.5, r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

inline void write_plot(const std::string& out_dir,
                       const std::vector<std::array<double, 3>>& rows) {
  std::ofstream plot(std::filesystem::path(out_dir) / "plot.csv", std::ios::binary);
  plot << "x,y,yerr\n";
  char buf[40];
  for (const auto& r : rows) {
    for (int i = 0; i < 3; ++i) {
      format_value(buf, sizeof buf, r[static_cast<std::size_t>(i)]);
      plot << buf << (i < 2 ? "," : "\n");
    }
  }
}

inline nlohmann::json estimate_json(const ScalingEstimate& est) {
  return {{"exponent", est.exponent},
          {"constant", est.constant},
          {"ci_low", est.ci_low},
          {"ci_high", est.ci_high},
          {"ci_target", est.target == ScalingEstimate::Target::exponent ? "exponent" : "constant"},
          {"n_used", est.n_used},
          {"residual_diagnostic", est.residual_diagnostic}};
}

}  // namespace detail

struct AnalyzeOptions {
  double correction_exponent = 1.0 / 3.0;  // time_constant finite-size term
  uint64_t bootstrap_seed = 977;
};

// Runs one analysis over the merged records of the given run directories and
// writes report.json plus plot.csv (x, y, yerr) into out_dir.
inline nlohmann::json analyze(const std::vector<std::string>& dirs, Analysis analysis,
                              const std::string& out_dir, const AnalyzeOptions& opts = {}) {
  if (dirs.empty()) throw std::runtime_error("analyze: no run directories given");
  std::vector<LoadedRun> runs;
  for (const auto& d : dirs) runs.push_back(load_run(d));
  for (const auto& r : runs)
    if (r.model != runs.front().model)
      throw std::runtime_error("analyze: run directories mix different models");
  const ModelTag model = runs.front().model;

  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  nlohmann::json report;
  report["model"] = to_string(model);
  report["run_dirs"] = dirs;
  const StreamKey boot_key{opts.bootstrap_seed, 0, static_cast<uint32_t>(Purpose::bootstrap)};
  std::vector<std::array<double, 3>> plot;

  switch (analysis) {
    case Analysis::time_constant: {
      if (model == ModelTag::tasep)
        throw std::runtime_error("analyze time_constant: not defined for tasep runs");
      const auto series = detail::series_for(runs, detail::primary_observable(model));
      const auto est = time_constant(series, opts.correction_exponent, boot_key);
      report["analysis"] = "time_constant";
      report["correction_exponent"] = opts.correction_exponent;
      report["estimate"] = detail::estimate_json(est);
      for (const auto& e : series.entries)
        plot.push_back({static_cast<double>(e.n), mean_of(e.values),
                        sample_sd(e.values) / std::sqrt(static_cast<double>(e.values.size()))});
      break;
    }
    case Analysis::chi: {
      if (model == ModelTag::tasep)
        throw std::runtime_error("analyze chi: not defined for tasep runs");
      const auto series = detail::series_for(runs, detail::primary_observable(model));
      const auto est = fluctuation_exponent(series, boot_key);
      report["analysis"] = "chi";
      report["estimate"] = detail::estimate_json(est);
      for (const auto& e : series.entries) {
        const double sd = sample_sd(e.values);
        plot.push_back({static_cast<double>(e.n), sd,
                        sd / std::sqrt(2.0 * (static_cast<double>(e.values.size()) - 1.0))});
      }
      break;
    }
    case Analysis::xi: {
      if (model != ModelTag::ulam && model != ModelTag::ulam_reinforced)
        throw std::runtime_error("analyze xi: transversal samples exist only for ulam runs");
      const auto series = detail::series_for(runs, "F");
      const auto est = transversal_exponent(series, boot_key);
      report["analysis"] = "xi";
      report["estimate"] = detail::estimate_json(est);
      for (const auto& e : series.entries)
        plot.push_back({static_cast<double>(e.n), mean_of(e.values),
                        sample_sd(e.values) / std::sqrt(static_cast<double>(e.values.size()))});
      break;
    }
    case Analysis::tails: {
      if (model == ModelTag::tasep)
        throw std::runtime_error("analyze tails: not defined for tasep runs");
      const auto series = detail::series_for(runs, detail::primary_observable(model));
      if (series.entries.empty()) throw std::runtime_error("analyze tails: no samples");
      const auto& top = series.entries.back();
      const double n = static_cast<double>(top.n);
      const bool lattice_model =
          model == ModelTag::lattice || model == ModelTag::lattice_slowbond;
      const double center = lattice_model ? 4.0 * n : 2.0 * n;
      const double scale = (lattice_model ? std::pow(2.0, 4.0 / 3.0) : 1.0) * std::cbrt(n);
      const auto prof = tail_profile(top.values, center, scale);
      report["analysis"] = "tails";
      report["n"] = top.n;
      report["center"] = center;
      report["scale"] = scale;
      report["truncated"] = prof.truncated;
      auto& pts = report["points"] = nlohmann::json::array();
      const double count = static_cast<double>(top.values.size());
      for (const auto& p : prof.points) {
        pts.push_back({{"s", p.s}, {"log_survival", p.log_survival},
                       {"s_three_halves", p.s_three_halves}});
        const double surv = std::exp(p.log_survival);
        plot.push_back({p.s, p.log_survival, std::sqrt((1.0 - surv) / (count * surv))});
      }
      break;
    }
    case Analysis::shape: {
      const auto series = detail::series_for(runs, detail::primary_observable(model));
      if (series.entries.empty()) throw std::runtime_error("analyze shape: no samples");
      const auto& top = series.entries.back();
      const auto rep = shape_report(top.values);
      report["analysis"] = "shape";
      report["n"] = top.n;
      report["shape"] = {{"skewness", rep.skewness},
                         {"skewness_se", rep.skewness_se},
                         {"skewness_p", rep.skewness_p},
                         {"excess_kurtosis", rep.excess_kurtosis},
                         {"kurtosis_se", rep.kurtosis_se},
                         {"normality_p", rep.normality_p},
                         {"count", rep.count}};
      // QQ data against the normal
      std::vector<double> sorted = top.values;
      std::sort(sorted.begin(), sorted.end());
      const double mu = mean_of(sorted), sd = sample_sd(sorted);
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double p = (static_cast<double>(i) + 0.5) / static_cast<double>(sorted.size());
        plot.push_back({detail::normal_quantile(p), (sorted[i] - mu) / sd, 0.0});
      }
      break;
    }
    case Analysis::current: {
      if (model != ModelTag::tasep)
        throw std::runtime_error("analyze current: defined only for tasep runs");
      const auto series = detail::series_for(runs, "J");
      if (series.entries.empty()) throw std::runtime_error("analyze current: no samples");
      const double eps = runs.front().manifest["params"].value("epsilon", 0.0);
      const double mean_field = (1.0 - eps) / ((2.0 - eps) * (2.0 - eps));
      report["analysis"] = "current";
      report["epsilon"] = eps;
      report["mean_field"] = mean_field;
      auto& levels = report["levels"] = nlohmann::json::array();
      for (const auto& e : series.entries) {
        const double j = mean_of(e.values);
        const double se = e.values.size() > 1
                              ? sample_sd(e.values) / std::sqrt(static_cast<double>(e.values.size()))
                              : 0.0;
        levels.push_back({{"window", e.n}, {"J", j}, {"se", se},
                          {"abs_delta_mean_field", std::fabs(j - mean_field)},
                          {"replicas", e.values.size()}});
        plot.push_back({static_cast<double>(e.n), j, se});
      }
      break;
    }
  }

  detail::write_plot(out_dir, plot);
  std::ofstream rf(fs::path(out_dir) / "report.json", std::ios::binary);
  rf << report.dump(2) << '\n';
  return report;
}

}  // namespace lpplab
