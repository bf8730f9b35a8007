#pragma once

// Estimators over replica samples: time constants with finite-size
// correction, fluctuation and transversal exponents, moderate-deviation tail
// profiles and distribution-shape reports. Interval estimates come from a
// seedable percentile bootstrap (1000 resamples).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpplab/rng.hpp"

namespace lpplab {

struct InsufficientData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ModelTag { ulam, ulam_reinforced, lattice, lattice_slowbond, tasep, tasep_coupled };

inline const char* to_string(ModelTag m) {
  switch (m) {
    case ModelTag::ulam: return "ulam";
    case ModelTag::ulam_reinforced: return "ulam_reinforced";
    case ModelTag::lattice: return "lattice";
    case ModelTag::lattice_slowbond: return "lattice_slowbond";
    case ModelTag::tasep: return "tasep";
    case ModelTag::tasep_coupled: return "tasep_coupled";
  }
  return "?";
}

inline bool model_from_string(const std::string& s, ModelTag& out) {
  for (ModelTag m : {ModelTag::ulam, ModelTag::ulam_reinforced, ModelTag::lattice,
                     ModelTag::lattice_slowbond, ModelTag::tasep, ModelTag::tasep_coupled})
    if (s == to_string(m)) {
      out = m;
      return true;
    }
  return false;
}

// Replica values of one observable at increasing system sizes.
struct SampleSeries {
  struct Entry {
    int64_t n = 0;
    std::vector<double> values;
  };
  std::vector<Entry> entries;
  ModelTag model_tag = ModelTag::ulam;

  void validate() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].values.size() < 2)
        throw InsufficientData("sample series: every n needs at least 2 values");
      if (i > 0 && entries[i].n <= entries[i - 1].n)
        throw InsufficientData("sample series: n must be strictly increasing");
    }
  }
};

inline double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double sample_sd(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

struct ScalingEstimate {
  enum class Target { exponent, constant };

  double exponent = 0.0;
  double constant = 0.0;
  double ci_low = 0.0;   // 95% bootstrap percentile interval
  double ci_high = 0.0;  // brackets the field named by `target`
  Target target = Target::exponent;
  std::vector<int64_t> n_used;
  double residual_diagnostic = 0.0;

  double headline() const { return target == Target::exponent ? exponent : constant; }
};

namespace detail {

inline void percentile_ci(std::vector<double>& boot, double& lo, double& hi) {
  std::sort(boot.begin(), boot.end());
  const std::size_t b = boot.size();
  lo = boot[static_cast<std::size_t>(0.025 * static_cast<double>(b))];
  hi = boot[static_cast<std::size_t>(0.975 * static_cast<double>(b)) - 1];
}

struct LinFit {
  double slope = 0.0, intercept = 0.0, rms_residual = 0.0;
};

inline LinFit ols(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) sx += x[i], sy += y[i];
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LinFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double rss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - f.slope * x[i] - f.intercept;
    rss += r * r;
  }
  f.rms_residual = std::sqrt(rss / n);
  return f;
}

// Weighted least squares for y ~ c*a1 + b*a2 (no intercept).
struct TwoBasisFit {
  double c = 0.0, b = 0.0, rms_residual = 0.0;
};

inline TwoBasisFit wls_two_basis(const std::vector<double>& a1, const std::vector<double>& a2,
                                 const std::vector<double>& y, const std::vector<double>& w) {
  double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    s11 += w[i] * a1[i] * a1[i];
    s12 += w[i] * a1[i] * a2[i];
    s22 += w[i] * a2[i] * a2[i];
    r1 += w[i] * a1[i] * y[i];
    r2 += w[i] * a2[i] * y[i];
  }
  const double det = s11 * s22 - s12 * s12;
  if (det == 0.0) throw InsufficientData("time_constant: singular design");
  TwoBasisFit f;
  f.c = (r1 * s22 - r2 * s12) / det;
  f.b = (s11 * r2 - s12 * r1) / det;
  double rss = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = y[i] - f.c * a1[i] - f.b * a2[i];
    rss += r * r;
  }
  f.rms_residual = std::sqrt(rss / y.size());
  return f;
}

inline std::vector<double> resample(const std::vector<double>& v, Stream& stream) {
  std::vector<double> out(v.size());
  for (auto& x : out) x = v[stream.uniform_index(v.size())];
  return out;
}

inline StreamKey bootstrap_key(const StreamKey& k, uint32_t b) {
  return {k.experiment_seed, b, static_cast<uint32_t>(Purpose::bootstrap)};
}

}  // namespace detail

inline constexpr int kBootstrapResamples = 1000;

// Fit mean(n) = c*n + b*n^q at caller-supplied correction exponent q; the
// headline estimate is the limit constant c. Weighted by the squared
// standard errors of the replica means (unweighted if any level is exact).
inline ScalingEstimate time_constant(const SampleSeries& series, double correction_exponent,
                                     const StreamKey& boot_key = {0, 0, 0}) {
  series.validate();
  if (series.entries.size() < 3)
    throw InsufficientData("time_constant: need at least 3 distinct n levels");

  std::vector<double> a1, a2, y, w;
  ScalingEstimate est;
  est.target = ScalingEstimate::Target::constant;
  est.exponent = correction_exponent;
  for (const auto& e : series.entries) {
    const double nn = static_cast<double>(e.n);
    a1.push_back(nn);
    a2.push_back(std::pow(nn, correction_exponent));
    y.push_back(mean_of(e.values));
    const double se = sample_sd(e.values) / std::sqrt(static_cast<double>(e.values.size()));
    w.push_back(se > 0 ? 1.0 / (se * se) : 0.0);
    est.n_used.push_back(e.n);
  }
  for (auto& wi : w)
    if (wi == 0.0) {  // an exact level: fall back to equal weights
      std::fill(w.begin(), w.end(), 1.0);
      break;
    }

  const auto fit = detail::wls_two_basis(a1, a2, y, w);
  est.constant = fit.c;
  est.residual_diagnostic = fit.rms_residual;

  std::vector<double> boot(kBootstrapResamples);
  for (int b = 0; b < kBootstrapResamples; ++b) {
    Stream stream(detail::bootstrap_key(boot_key, static_cast<uint32_t>(b)));
    std::vector<double> yb, wb;
    for (const auto& e : series.entries) {
      const auto r = detail::resample(e.values, stream);
      yb.push_back(mean_of(r));
      const double se = sample_sd(r) / std::sqrt(static_cast<double>(r.size()));
      wb.push_back(se > 0 ? 1.0 / (se * se) : 0.0);
    }
    for (auto& wi : wb)
      if (wi == 0.0) {
        std::fill(wb.begin(), wb.end(), 1.0);
        break;
      }
    boot[static_cast<std::size_t>(b)] = detail::wls_two_basis(a1, a2, yb, wb).c;
  }
  detail::percentile_ci(boot, est.ci_low, est.ci_high);
  return est;
}

// chi-hat: slope of log sample-sd against log n.
inline ScalingEstimate fluctuation_exponent(const SampleSeries& series,
                                            const StreamKey& boot_key = {0, 0, 0}) {
  series.validate();
  if (series.entries.size() < 4)
    throw InsufficientData("fluctuation_exponent: need at least 4 distinct n levels");
  for (const auto& e : series.entries)
    if (e.values.size() < 100)
      throw InsufficientData("fluctuation_exponent: need at least 100 replicas per level");

  std::vector<double> lx, ly;
  ScalingEstimate est;
  for (const auto& e : series.entries) {
    lx.push_back(std::log(static_cast<double>(e.n)));
    ly.push_back(std::log(sample_sd(e.values)));
    est.n_used.push_back(e.n);
  }
  const auto fit = detail::ols(lx, ly);
  est.exponent = fit.slope;
  est.constant = std::exp(fit.intercept);
  est.residual_diagnostic = fit.rms_residual;

  std::vector<double> boot(kBootstrapResamples);
  for (int b = 0; b < kBootstrapResamples; ++b) {
    Stream stream(detail::bootstrap_key(boot_key, static_cast<uint32_t>(b)));
    std::vector<double> yb;
    for (const auto& e : series.entries) {
      double sd = 0.0;
      do {
        sd = sample_sd(detail::resample(e.values, stream));
      } while (!(sd > 0.0));
      yb.push_back(std::log(sd));
    }
    boot[static_cast<std::size_t>(b)] = detail::ols(lx, yb).slope;
  }
  detail::percentile_ci(boot, est.ci_low, est.ci_high);
  return est;
}

// xi-hat: slope of log mean transversal fluctuation against log n.
inline ScalingEstimate transversal_exponent(const SampleSeries& series,
                                            const StreamKey& boot_key = {0, 0, 0}) {
  series.validate();
  if (series.entries.size() < 4)
    throw InsufficientData("transversal_exponent: need at least 4 distinct n levels");

  std::vector<double> lx, ly;
  ScalingEstimate est;
  for (const auto& e : series.entries) {
    const double m = mean_of(e.values);
    if (!(m > 0.0)) throw InsufficientData("transversal_exponent: nonpositive mean fluctuation");
    lx.push_back(std::log(static_cast<double>(e.n)));
    ly.push_back(std::log(m));
    est.n_used.push_back(e.n);
  }
  const auto fit = detail::ols(lx, ly);
  est.exponent = fit.slope;
  est.constant = std::exp(fit.intercept);
  est.residual_diagnostic = fit.rms_residual;

  std::vector<double> boot(kBootstrapResamples);
  for (int b = 0; b < kBootstrapResamples; ++b) {
    Stream stream(detail::bootstrap_key(boot_key, static_cast<uint32_t>(b)));
    std::vector<double> yb;
    for (const auto& e : series.entries) {
      double m = 0.0;
      do {
        m = mean_of(detail::resample(e.values, stream));
      } while (!(m > 0.0));
      yb.push_back(std::log(m));
    }
    boot[static_cast<std::size_t>(b)] = detail::ols(lx, yb).slope;
  }
  detail::percentile_ci(boot, est.ci_low, est.ci_high);
  return est;
}

struct TailPoint {
  double s = 0.0;
  double log_survival = 0.0;
  double s_three_halves = 0.0;  // abscissa for the moderate-deviation diagnostic
};

struct TailProfile {
  std::vector<TailPoint> points;
  bool truncated = false;  // stopped before s_max for lack of tail events
};

inline constexpr std::size_t kMinTailCount = 10;

// Empirical log survival of (v - center)/scale at s = 1, 1.5, ..., s_max.
inline TailProfile tail_profile(const std::vector<double>& values, double center, double scale,
                                double s_max = 5.0) {
  if (values.size() < 10000)
    throw InsufficientData("tail_profile: need at least 1e4 values");
  if (!(scale > 0.0)) throw std::invalid_argument("tail_profile: scale must be > 0");

  std::vector<double> s(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) s[i] = (values[i] - center) / scale;
  std::sort(s.begin(), s.end());

  TailProfile out;
  for (double sv = 1.0; sv <= s_max + 1e-12; sv += 0.5) {
    const auto it = std::lower_bound(s.begin(), s.end(), sv);
    const std::size_t count = static_cast<std::size_t>(s.end() - it);
    if (count < kMinTailCount) {
      out.truncated = true;
      break;
    }
    out.points.push_back({sv,
                          std::log(static_cast<double>(count) / static_cast<double>(s.size())),
                          std::pow(sv, 1.5)});
  }
  return out;
}

struct ShapeReport {
  double skewness = 0.0;
  double skewness_se = 0.0;  // jackknife
  double excess_kurtosis = 0.0;
  double kurtosis_se = 0.0;  // jackknife
  double normality_p = 0.0;  // Jarque-Bera omnibus
  double skewness_p = 0.0;   // two-sided z-test of skewness against 0
  std::size_t count = 0;
};

// Standardized third and fourth moments with jackknife errors and a
// moment-based normality p-value.
inline ShapeReport shape_report(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 1000) throw InsufficientData("shape_report: need at least 1e3 values");

  const double mean = mean_of(values);
  std::vector<double> c(n);
  double s2 = 0, s3 = 0, s4 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = values[i] - mean;
    const double d2 = c[i] * c[i];
    s2 += d2;
    s3 += d2 * c[i];
    s4 += d2 * d2;
  }
  const double m2 = s2 / n;
  if (!(m2 > 0.0)) throw std::domain_error("shape_report: degenerate variance");

  ShapeReport rep;
  rep.count = n;
  rep.skewness = (s3 / n) / std::pow(m2, 1.5);
  rep.excess_kurtosis = (s4 / n) / (m2 * m2) - 3.0;

  // leave-one-out replicates from the centered power sums
  double g1_sum = 0, g1_sq = 0, g2_sum = 0, g2_sq = 0;
  const double nm1 = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double ci = c[i];
    const double t1 = -ci;
    const double t2 = s2 - ci * ci;
    const double t3 = s3 - ci * ci * ci;
    const double t4 = s4 - ci * ci * ci * ci;
    const double mu = t1 / nm1;
    const double m2i = t2 / nm1 - mu * mu;
    const double m3i = (t3 - 3.0 * mu * t2 + 3.0 * mu * mu * t1) / nm1 - mu * mu * mu;
    const double m4i =
        (t4 - 4.0 * mu * t3 + 6.0 * mu * mu * t2 - 4.0 * mu * mu * mu * t1) / nm1 +
        mu * mu * mu * mu;
    const double g1 = m3i / std::pow(m2i, 1.5);
    const double g2 = m4i / (m2i * m2i) - 3.0;
    g1_sum += g1;
    g1_sq += g1 * g1;
    g2_sum += g2;
    g2_sq += g2 * g2;
  }
  const double nn = static_cast<double>(n);
  rep.skewness_se = std::sqrt(std::max(0.0, (nm1 / nn) * (g1_sq - g1_sum * g1_sum / nn)));
  rep.kurtosis_se = std::sqrt(std::max(0.0, (nm1 / nn) * (g2_sq - g2_sum * g2_sum / nn)));

  const double jb = nn * (rep.skewness * rep.skewness / 6.0 +
                          rep.excess_kurtosis * rep.excess_kurtosis / 24.0);
  rep.normality_p = std::exp(-jb / 2.0);  // chi-square(2) survival

  const double z = rep.skewness_se > 0 ? std::fabs(rep.skewness) / rep.skewness_se : INFINITY;
  rep.skewness_p = std::erfc(z / std::sqrt(2.0));
  return rep;
}

}  // namespace lpplab
