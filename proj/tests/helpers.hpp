#pragma once

// Test-only statistical machinery: Kolmogorov-Smirnov distances, chi-square
// goodness of fit for Poisson counts, and critical values at significance
// 0.01. Kept out of the library on purpose; these back the distributional
// assertions in the test suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace testhelp {

// sqrt(-ln(alpha/2)/2) for alpha = 0.01
inline constexpr double kKsC01 = 1.6276236115189503;
inline constexpr double kZ995 = 2.5758293035489004;   // two-sided 99% normal quantile
inline constexpr double kZ99 = 2.3263478740408408;    // one-sided 99% normal quantile

inline double two_sample_ks_stat(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] <= b[ib])
      ++ia;
    else
      ++ib;
    d = std::max(d, std::fabs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
  }
  return d;
}

inline double two_sample_ks_critical_01(std::size_t n, std::size_t m) {
  return kKsC01 * std::sqrt((static_cast<double>(n) + static_cast<double>(m)) /
                            (static_cast<double>(n) * static_cast<double>(m)));
}

// One-sample KS against Exp(rate).
inline double ks_stat_vs_exponential(std::vector<double> v, double rate) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double cdf = 1.0 - std::exp(-rate * v[i]);
    d = std::max(d, std::fabs(cdf - static_cast<double>(i) / n));
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - cdf));
  }
  return d;
}

inline double one_sample_ks_critical_01(std::size_t n) {
  return kKsC01 / std::sqrt(static_cast<double>(n));
}

// Wilson-Hilferty approximation to the chi-square quantile.
inline double chi2_quantile(double df, double z) {
  const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
  return df * t * t * t;
}

struct Chi2Result {
  double stat = 0.0;
  double critical_01 = 0.0;
  int dof = 0;
  bool pass() const { return stat < critical_01; }
};

// Goodness of fit of observed counts against Poisson(mu); adjacent bins are
// merged until every expected count is at least 5.
inline Chi2Result chi2_poisson_gof(const std::vector<int64_t>& counts, double mu) {
  int64_t kmax = 0;
  for (int64_t c : counts) kmax = std::max(kmax, c);
  const double total = static_cast<double>(counts.size());

  // Poisson pmf over 0..kmax, remainder mass in the last cell
  std::vector<double> expected(static_cast<std::size_t>(kmax) + 2, 0.0);
  double cum = 0.0;
  for (int64_t k = 0; k <= kmax; ++k) {
    const double logp = static_cast<double>(k) * std::log(mu) - mu - std::lgamma(static_cast<double>(k) + 1.0);
    expected[static_cast<std::size_t>(k)] = total * std::exp(logp);
    cum += std::exp(logp);
  }
  expected[static_cast<std::size_t>(kmax) + 1] = total * std::max(0.0, 1.0 - cum);

  std::vector<double> observed(expected.size(), 0.0);
  for (int64_t c : counts) observed[static_cast<std::size_t>(c)] += 1.0;

  // merge low-expectation cells left to right
  std::vector<double> eb, ob;
  double ec = 0.0, oc = 0.0;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    ec += expected[k];
    oc += observed[k];
    if (ec >= 5.0) {
      eb.push_back(ec);
      ob.push_back(oc);
      ec = oc = 0.0;
    }
  }
  if (ec > 0.0 && !eb.empty()) {
    eb.back() += ec;
    ob.back() += oc;
  }

  Chi2Result r;
  for (std::size_t k = 0; k < eb.size(); ++k)
    r.stat += (ob[k] - eb[k]) * (ob[k] - eb[k]) / eb[k];
  r.dof = static_cast<int>(eb.size()) - 1;
  r.critical_01 = chi2_quantile(static_cast<double>(r.dof), kZ99);
  return r;
}

inline double pearson_correlation(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) ma += a[i], mb += b[i];
  ma /= n;
  mb /= n;
  double saa = 0, sbb = 0, sab = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
    sab += (a[i] - ma) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace testhelp
