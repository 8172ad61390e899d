#pragma once

#include <map>
#include <vector>

#include "dnls/torus.hpp"

namespace dnls {

// Symbol of the torus Laplacian: f(x) = 4 * sum_i sin^2(pi x_i), range [0, 4d].
double symbol_f(const std::vector<double>& x);

// Eigenvalue of -Delta on the discrete torus at mode k in {0,...,n-1}^d:
// lambda_k = f(k/n). Throws std::invalid_argument for out-of-range modes.
double eigenvalue(const std::vector<int>& k, const TorusSpec& spec);

// All N eigenvalues, enumerated row-major by mode rank. Sorted ascending when
// `sorted` is set; the zero mode contributes the leading 0.
std::vector<double> all_eigenvalues(const TorusSpec& spec, bool sorted = false);

// K_N(y) = (1/N) sum_{k != 0} log(y + lambda_k). Requires y >= 0.
double K_N(double y, const TorusSpec& spec);

// K_N'(y) = (1/N) sum_{k != 0} 1/(y + lambda_k). Requires y >= 0, n >= 2.
double K_N_prime(double y, const TorusSpec& spec);

// m_N(p) = (1/N) sum_{k != 0} lambda_k^{-p}, p > 0.
double m_N(double p, const TorusSpec& spec);

struct RootResult {
  double y = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

// Solves K_N'(y) = theta for y >= 0. Requires 0 < theta <= K_N'(0); throws
// no_solution_error when theta exceeds K_N'(0) and std::invalid_argument for
// theta <= 0.
RootResult solve_y_N(double theta, const TorusSpec& spec, double tol = 1e-12);

struct SpectrumSummary {
  double y = 0.0;
  double K_N = 0.0;
  double K_N_prime = 0.0;
  std::map<double, double> m_N;  // exponent -> value
};

SpectrumSummary spectrum_summary(double y, const TorusSpec& spec,
                                 const std::vector<double>& exponents = {0.5, 1.0, 1.5, 2.0});

// Eigenvalues of one torus, cached and sorted ascending, for repeated
// evaluation of the spectral sums at many y values.
class CachedSpectrum {
 public:
  explicit CachedSpectrum(const TorusSpec& spec);

  const TorusSpec& spec() const { return spec_; }
  // Nonzero eigenvalues, ascending.
  const std::vector<double>& nonzero() const { return nonzero_; }

  double K_N(double y) const;
  double K_N_prime(double y) const;
  double m_N(double p) const;

 private:
  TorusSpec spec_;
  std::vector<double> nonzero_;
};

// Compensated (Neumaier) accumulation of a range of doubles.
double compensated_sum(const std::vector<double>& values);

}  // namespace dnls
