#include "dnls/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dnls/errors.hpp"

namespace dnls {

namespace {

// Neumaier's variant of Kahan summation.
struct CompensatedAccumulator {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Per-axis sin^2 table: sin^2(pi k / n) for k = 0..n-1.
std::vector<double> sin2_table(int n) {
  std::vector<double> t(n);
  for (int k = 0; k < n; ++k) {
    const double s = std::sin(M_PI * k / n);
    t[k] = s * s;
  }
  return t;
}

// Streams lambda_k over mode ranks in row-major order.
template <typename F>
void for_each_eigenvalue(const TorusSpec& spec, F&& fn) {
  const std::vector<double> tab = sin2_table(spec.n);
  std::vector<int> idx(spec.d, 0);
  std::vector<double> prefix(spec.d + 1, 0.0);
  std::int64_t r = 0;
  while (true) {
    for (int axis = 0; axis < spec.d; ++axis) prefix[axis + 1] = prefix[axis] + tab[idx[axis]];
    fn(r, 4.0 * prefix[spec.d]);
    // advance the innermost axis; carry as needed
    int axis = spec.d - 1;
    while (axis >= 0) {
      if (++idx[axis] < spec.n) break;
      idx[axis] = 0;
      --axis;
    }
    ++r;
    if (axis < 0) break;
  }
}

}  // namespace

double compensated_sum(const std::vector<double>& values) {
  CompensatedAccumulator acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

double symbol_f(const std::vector<double>& x) {
  double acc = 0.0;
  for (double xi : x) {
    if (xi < 0.0 || xi > 1.0) throw std::invalid_argument("symbol_f: coordinate outside [0,1]");
    const double s = std::sin(M_PI * xi);
    acc += s * s;
  }
  return 4.0 * acc;
}

double eigenvalue(const std::vector<int>& k, const TorusSpec& spec) {
  if (static_cast<int>(k.size()) != spec.d)
    throw std::invalid_argument("eigenvalue: mode index has wrong dimension");
  double acc = 0.0;
  for (int ki : k) {
    if (ki < 0 || ki >= spec.n)
      throw std::invalid_argument("eigenvalue: mode coordinate outside {0,...,n-1}");
    const double s = std::sin(M_PI * ki / spec.n);
    acc += s * s;
  }
  return 4.0 * acc;
}

std::vector<double> all_eigenvalues(const TorusSpec& spec, bool sorted) {
  std::vector<double> values(static_cast<std::size_t>(spec.N));
  for_each_eigenvalue(spec, [&](std::int64_t r, double lam) { values[r] = lam; });
  if (sorted) std::sort(values.begin(), values.end());
  return values;
}

CachedSpectrum::CachedSpectrum(const TorusSpec& spec) : spec_(spec) {
  std::vector<double> values = all_eigenvalues(spec, /*sorted=*/true);
  // values[0] is the zero mode
  nonzero_.assign(values.begin() + 1, values.end());
}

double CachedSpectrum::K_N(double y) const {
  if (y < 0.0) throw std::invalid_argument("K_N: y must be >= 0");
  CompensatedAccumulator acc;
  for (double lam : nonzero_) acc.add(std::log(y + lam));
  return acc.value() / static_cast<double>(spec_.N);
}

double CachedSpectrum::K_N_prime(double y) const {
  if (y < 0.0) throw std::invalid_argument("K_N_prime: y must be >= 0");
  CompensatedAccumulator acc;
  for (double lam : nonzero_) acc.add(1.0 / (y + lam));
  return acc.value() / static_cast<double>(spec_.N);
}

double CachedSpectrum::m_N(double p) const {
  if (p <= 0.0) throw std::invalid_argument("m_N: exponent must be > 0");
  CompensatedAccumulator acc;
  for (double lam : nonzero_) acc.add(std::pow(lam, -p));
  return acc.value() / static_cast<double>(spec_.N);
}

double K_N(double y, const TorusSpec& spec) {
  return CachedSpectrum(spec).K_N(y);
}

double K_N_prime(double y, const TorusSpec& spec) {
  return CachedSpectrum(spec).K_N_prime(y);
}

double m_N(double p, const TorusSpec& spec) {
  return CachedSpectrum(spec).m_N(p);
}

RootResult solve_y_N(double theta, const TorusSpec& spec, double tol) {
  if (theta <= 0.0) throw std::invalid_argument("solve_y_N: theta must be > 0");
  const CachedSpectrum cache(spec);
  const double at_zero = cache.K_N_prime(0.0);
  if (theta > at_zero)
    throw no_solution_error("solve_y_N: theta=" + std::to_string(theta) +
                            " exceeds K_N'(0)=" + std::to_string(at_zero));
  RootResult out;
  if (theta == at_zero) {
    out.y = 0.0;
    out.residual = 0.0;
    return out;
  }
  const double frac = 1.0 - 1.0 / static_cast<double>(spec.N);
  double lo = 0.0;
  double hi = std::max(1.0, frac / theta);
  while (cache.K_N_prime(hi) > theta) hi *= 2.0;  // K'_N < (1-1/N)/y guarantees termination
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = cache.K_N_prime(mid);
    if (v > theta)
      lo = mid;
    else
      hi = mid;
    ++out.iterations;
    if (hi - lo < 1e-14 * std::max(1.0, hi)) break;
  }
  out.y = 0.5 * (lo + hi);
  // secant polish on the (monotone) residual
  double y0 = lo, y1 = hi;
  double f0 = cache.K_N_prime(y0) - theta;
  double f1 = cache.K_N_prime(y1) - theta;
  for (int it = 0; it < 8 && f1 != f0; ++it) {
    const double y2 = y1 - f1 * (y1 - y0) / (f1 - f0);
    if (!(y2 >= 0.0) || !std::isfinite(y2)) break;
    y0 = y1;
    f0 = f1;
    y1 = y2;
    f1 = cache.K_N_prime(y1) - theta;
    ++out.iterations;
    if (std::abs(f1) < tol) break;
  }
  if (std::abs(f1) < std::abs(cache.K_N_prime(out.y) - theta)) out.y = y1;
  out.residual = std::abs(cache.K_N_prime(out.y) - theta);
  return out;
}

SpectrumSummary spectrum_summary(double y, const TorusSpec& spec,
                                 const std::vector<double>& exponents) {
  const CachedSpectrum cache(spec);
  SpectrumSummary s;
  s.y = y;
  s.K_N = cache.K_N(y);
  s.K_N_prime = cache.K_N_prime(y);
  for (double p : exponents) s.m_N[p] = cache.m_N(p);
  return s;
}

}  // namespace dnls
