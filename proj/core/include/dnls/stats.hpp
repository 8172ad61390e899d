#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace dnls {

struct MeanWithError {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

MeanWithError mean_with_error(const std::vector<double>& xs);

double sample_variance(const std::vector<double>& xs);

// Survival function of the Kolmogorov distribution, Q(lam) = 2 sum (-1)^{j-1} exp(-2 j^2 lam^2).
double kolmogorov_survival(double lam);

struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
};

// Two-sample Kolmogorov-Smirnov test (asymptotic p-value).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// One-sample KS against a CDF (asymptotic p-value).
KsResult ks_one_sample(std::vector<double> xs, const std::function<double(double)>& cdf);

// Regularized lower incomplete gamma P(a, x); used for Gamma/Erlang tail
// probabilities.
double gamma_p(double a, double x);

// Least-squares line fit y ~= intercept + slope * x.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Bootstrap standard error of a weighted-mean-style statistic.
double bootstrap_std_error(const std::vector<double>& xs,
                           const std::function<double(const std::vector<double>&)>& statistic,
                           int resamples, std::uint64_t seed);

}  // namespace dnls
