#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperalloc::stats {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

/// Unbiased sample variance; zero for fewer than two samples.
inline double variance(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double mu = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - mu) * (x - mu);
  return ss / static_cast<double>(xs.size() - 1);
}

inline double standard_error(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::sqrt(variance(xs) / static_cast<double>(xs.size()));
}

/// Standard error of mean(a) - mean(b) for independent samples.
inline double welch_standard_error(std::span<const double> a, std::span<const double> b) {
  const double sa = standard_error(a);
  const double sb = standard_error(b);
  return std::sqrt(sa * sa + sb * sb);
}

inline std::vector<double> paired_differences(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("paired_differences: size mismatch");
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

/// One-sided 95% normal quantile.
inline constexpr double kZ95OneSided = 1.6448536269514722;

/// P(X >= successes) for X ~ Binomial(trials, 1/2).
inline double binomial_upper_tail_half(std::size_t successes, std::size_t trials) {
  if (successes == 0) return 1.0;
  if (successes > trials) return 0.0;
  double tail = 0.0;
  for (std::size_t k = successes; k <= trials; ++k) {
    const double log_term = std::lgamma(static_cast<double>(trials) + 1.0) -
                            std::lgamma(static_cast<double>(k) + 1.0) -
                            std::lgamma(static_cast<double>(trials - k) + 1.0) -
                            static_cast<double>(trials) * std::log(2.0);
    tail += std::exp(log_term);
  }
  return std::min(1.0, tail);
}

/// One-sided sign test that a exceeds b more often than not. Ties drop out.
struct SignTest {
  std::size_t wins = 0;
  std::size_t losses = 0;
  std::size_t ties = 0;
  double p_value = 1.0;
};

inline SignTest sign_test_greater(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sign_test: size mismatch");
  SignTest t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      ++t.wins;
    } else if (a[i] < b[i]) {
      ++t.losses;
    } else {
      ++t.ties;
    }
  }
  t.p_value = binomial_upper_tail_half(t.wins, t.wins + t.losses);
  return t;
}

/// Empirical CDF of the samples: (sorted value, fraction <= value) steps.
inline std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  std::vector<std::pair<double, double>> steps;
  steps.reserve(samples.size());
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i + 1 < samples.size() && samples[i + 1] == samples[i]) continue;
    steps.emplace_back(samples[i], static_cast<double>(i + 1) / n);
  }
  return steps;
}

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("loglog_slope: values must be positive");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const double mx = mean(lx);
  const double my = mean(ly);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace hyperalloc::stats
