#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace dnls {

enum class QuadMethod {
  kLowDiscrepancy,       // Sobol points with a random digital shift
  kTensorGrid,           // midpoint tensor grid (periodized rectangle rule)
  kLatticeExtrapolation  // finite-torus sums, Richardson-extrapolated in n
};

enum class SingularityHandling {
  kNone,
  kOriginSubtraction,  // windowed subtraction of the |2 pi x|^{-2} / log|2 pi x|^2 part
  kExclusionBall       // drop a small ball around the origin, add an analytic patch
};

struct QuadratureSpec {
  QuadMethod method = QuadMethod::kLowDiscrepancy;
  std::int64_t points = 1 << 22;
  std::uint64_t seed = 0;
  SingularityHandling singularity = SingularityHandling::kOriginSubtraction;
  int replicates = 8;        // independent digital shifts for the error estimate
  double tolerance = 1e-4;   // absolute, for accuracy-not-met reporting
  double subtraction_radius = 0.25;  // torus-metric radius of the window

  std::string cache_key() const;  // stable string identifying the numerical setup
  void validate(double y) const;  // enforces the singularity-handling invariant
};

// Sobol sequence in up to 11 dimensions (direction numbers embedded).
class SobolSequence {
 public:
  explicit SobolSequence(int dimension);
  static int max_dimension();

  // Writes point i (0-based, Gray-code order) as 32-bit integer coordinates.
  void point(std::int64_t i, std::uint32_t* out);

  // Streams `count` consecutive points starting at index `start` through fn,
  // as doubles in [0,1)^dim after XOR with `shift`.
  void stream(std::int64_t start, std::int64_t count, const std::uint32_t* shift,
              const std::function<void(const double*)>& fn);

 private:
  int dim_;
  std::vector<std::uint32_t> v_;  // direction numbers, dim x 32
};

struct QmcResult {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t points = 0;
};

// Randomized-QMC mean of fn over [0,1)^d: `replicates` digital shifts derived
// from spec.seed, each with spec.points/replicates points. The reported error
// is the standard error over replicate means.
QmcResult qmc_integrate(int d, const QuadratureSpec& spec,
                        const std::function<double(const double*)>& fn);

// As above, but fn accumulates several integrands at once (out has `width`
// slots per call). Returns one QmcResult per slot.
std::vector<QmcResult> qmc_integrate_multi(
    int d, const QuadratureSpec& spec, int width,
    const std::function<void(const double*, double*)>& fn);

// Distance to the lattice Z^d in the torus metric, squared: sum min(x_i,1-x_i)^2.
double torus_dist2(const double* x, int d);

// Smooth window w(rho) = (1 - (rho/r)^2)^2 on [0,r), 0 beyond.
double subtraction_window(double rho2, double r);

// Surface area of the unit sphere in R^d.
double sphere_area(int d);

// Integral over the ball of radius r of w(|x|)/(y + 4 pi^2 |x|^2) dx.
double patch_integral_inverse(int d, double r, double y);

// Integral over the ball of radius r of w(|x|) log(y + 4 pi^2 |x|^2) dx.
double patch_integral_log(int d, double r, double y);

}  // namespace dnls
