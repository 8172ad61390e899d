#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnls/quadrature.hpp"

namespace dnls {

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

// K(y) = int_{[0,1]^d} log(y + f(x)) dx, evaluated per the quadrature spec.
// Throws accuracy_error when the error estimate exceeds spec.tolerance.
ValueWithError K_integral(double y, int d, const QuadratureSpec& quad);

// K'(y) = int_{[0,1]^d} 1/(y + f(x)) dx (integrable at the origin iff d >= 3).
ValueWithError K_prime_integral(double y, int d, const QuadratureSpec& quad);

// C_d = K'(0). Throws std::domain_error for d < 3 (the constant diverges).
ValueWithError compute_C_d(int d, const QuadratureSpec& quad);

// Monte-Carlo estimate of the expected number of visits to the origin
// (including time 0) of the simple random walk on Z^d, truncated at `horizon`
// steps with an analytic local-CLT tail correction. C_d equals this quantity
// divided by 2d.
struct RandomWalkEstimate {
  double visits = 0.0;
  double std_error = 0.0;
  double tail_correction = 0.0;
};

RandomWalkEstimate rw_origin_visits(int d, std::int64_t walks, std::int64_t horizon,
                                    std::uint64_t seed);

double C_d_random_walk(int d, std::int64_t walks, std::int64_t horizon, std::uint64_t seed);

// Infinite-volume thermodynamic function bundle at fixed dimension.
//
// K' is tabulated once on a y-grid (QMC with origin subtraction) and
// interpolated monotonically; K is reconstructed as K(0) + int_0^y K' so that
// the pair stays an exact derivative/antiderivative pair, which makes the
// Legendre identities W' = -L and K'(L(b)) = b hold to solver precision.
// Beyond the grid, matched asymptotic series in 1/y take over.
class ThermoFunctions {
 public:
  struct Node {
    double y = 0.0;
    double K = 0.0;
    double K_prime = 0.0;
    double error = 0.0;
  };

  static ThermoFunctions build(int d, const QuadratureSpec& quad,
                               const std::string& cache_dir = default_cache_dir());

  int dimension() const { return d_; }
  double C_d() const { return C_d_; }
  double K0() const { return K0_; }
  double quad_error() const { return quad_error_; }

  double K(double y) const;
  double K_prime(double y) const;

  // Inverse of K' on (0, C_d], extended by 0 for b >= C_d. Requires b > 0.
  double L(double b) const;
  // Free-field energy W(b) = K(L(b)) - b L(b) for b < C_d, K(0) otherwise.
  double W(double b) const;
  // W_hat(b) = W(b) + 1 + log b on (0, C_d].
  double W_hat(double b) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::string& cache_file() const { return cache_file_; }

  static std::string default_cache_dir();

 private:
  ThermoFunctions() = default;
  void finalize();  // spline, integrals, series setup from nodes_

  int d_ = 0;
  QuadratureSpec quad_;
  std::vector<Node> nodes_;
  double C_d_ = 0.0;
  double K0_ = 0.0;
  double quad_error_ = 0.0;
  std::string cache_file_;

  // monotone cubic interpolant of K' with per-interval antiderivative
  std::vector<double> ys_, kp_, slope_, cumint_;
  // asymptotic series beyond y_cut: moments E[f^j]
  double y_cut_ = 0.0;
  std::vector<double> moments_;
  double K_at_cut_ = 0.0;

  double K_prime_series(double y) const;
  double K_antiderivative_series(double y) const;  // int of series K'
};

// Moments E[f(x)^j] over the unit cube for j = 0..order.
std::vector<double> symbol_moments(int d, int order);

}  // namespace dnls
