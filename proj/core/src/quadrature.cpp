#include "dnls/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dnls/rng.hpp"

namespace dnls {

namespace {

// Joe-Kuo direction-number table, dimensions 2..11 (dimension 1 is the
// van der Corput sequence). Columns: s, a, m_1..m_s.
struct JoeKuoRow {
  int s;
  std::uint32_t a;
  std::uint32_t m[6];
};

constexpr JoeKuoRow kJoeKuo[] = {
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}},
};

constexpr int kBits = 32;

struct NeumaierVec {
  std::vector<double> acc;
  std::vector<double> comp;

  explicit NeumaierVec(int width) : acc(width, 0.0), comp(width, 0.0) {}

  void add(int w, double v) {
    const double t = acc[w] + v;
    if (std::abs(acc[w]) >= std::abs(v))
      comp[w] += (acc[w] - t) + v;
    else
      comp[w] += (v - t) + acc[w];
    acc[w] = t;
  }
  double value(int w) const { return acc[w] + comp[w]; }
};

}  // namespace

int SobolSequence::max_dimension() {
  return 1 + static_cast<int>(sizeof(kJoeKuo) / sizeof(kJoeKuo[0]));
}

SobolSequence::SobolSequence(int dimension) : dim_(dimension) {
  if (dimension < 1 || dimension > max_dimension())
    throw std::invalid_argument("SobolSequence: dimension out of range (1.." +
                                std::to_string(max_dimension()) + ")");
  v_.assign(static_cast<std::size_t>(dim_) * kBits, 0);
  // dimension 0: van der Corput, v_j = 2^{31-j}
  for (int j = 0; j < kBits; ++j) v_[j] = 1u << (31 - j);
  for (int dim = 1; dim < dim_; ++dim) {
    const JoeKuoRow& row = kJoeKuo[dim - 1];
    std::uint32_t* v = &v_[static_cast<std::size_t>(dim) * kBits];
    const int s = row.s;
    for (int j = 0; j < s; ++j) v[j] = row.m[j] << (31 - j);
    for (int j = s; j < kBits; ++j) {
      std::uint32_t value = v[j - s] ^ (v[j - s] >> s);
      for (int k = 1; k < s; ++k)
        if ((row.a >> (s - 1 - k)) & 1u) value ^= v[j - k];
      v[j] = value;
    }
  }
}

void SobolSequence::point(std::int64_t i, std::uint32_t* out) {
  // Gray-code construction: x_i = XOR of v_j over set bits of gray(i).
  const std::uint64_t g = static_cast<std::uint64_t>(i) ^ (static_cast<std::uint64_t>(i) >> 1);
  for (int d = 0; d < dim_; ++d) out[d] = 0;
  for (int j = 0; j < kBits; ++j) {
    if ((g >> j) & 1u)
      for (int d = 0; d < dim_; ++d) out[d] ^= v_[static_cast<std::size_t>(d) * kBits + j];
  }
}

void SobolSequence::stream(std::int64_t start, std::int64_t count, const std::uint32_t* shift,
                           const std::function<void(const double*)>& fn) {
  std::vector<std::uint32_t> x(dim_);
  std::vector<double> u(dim_);
  point(start, x.data());
  constexpr double kScale = 0x1.0p-32;
  for (std::int64_t i = start; i < start + count; ++i) {
    for (int d = 0; d < dim_; ++d) u[d] = (x[d] ^ shift[d]) * kScale;
    fn(u.data());
    // advance to point i+1 by toggling direction number ctz(i+1)
    const int j = std::countr_zero(static_cast<std::uint64_t>(i) + 1);
    if (j < kBits)
      for (int d = 0; d < dim_; ++d) x[d] ^= v_[static_cast<std::size_t>(d) * kBits + j];
  }
}

std::string QuadratureSpec::cache_key() const {
  std::ostringstream os;
  os << "m" << static_cast<int>(method) << "_p" << points << "_s" << seed << "_g"
     << static_cast<int>(singularity) << "_r" << replicates << "_rad" << subtraction_radius;
  return os.str();
}

void QuadratureSpec::validate(double y) const {
  if (points < 10000)
    throw std::invalid_argument("QuadratureSpec: need at least 10^4 points");
  if (replicates < 2) throw std::invalid_argument("QuadratureSpec: need >= 2 replicates");
  if (y == 0.0 && singularity == SingularityHandling::kNone)
    throw std::invalid_argument(
        "QuadratureSpec: singularity handling required for y = 0 integrands");
  if (subtraction_radius <= 0.0 || subtraction_radius > 0.5)
    throw std::invalid_argument("QuadratureSpec: subtraction radius must lie in (0, 1/2]");
}

std::vector<QmcResult> qmc_integrate_multi(
    int d, const QuadratureSpec& spec, int width,
    const std::function<void(const double*, double*)>& fn) {
  if (d < 1) throw std::invalid_argument("qmc_integrate_multi: d >= 1 required");
  const int reps = spec.replicates;
  const std::int64_t per_rep = std::max<std::int64_t>(1, spec.points / reps);
  std::vector<std::vector<double>> rep_means(reps, std::vector<double>(width, 0.0));

  // Fixed chunk count keeps the reduction order (hence the result bits)
  // independent of the worker count.
  const int chunks = 64;
  unsigned hw = std::thread::hardware_concurrency();
  const int workers = static_cast<int>(std::clamp<unsigned>(hw == 0 ? 1 : hw, 1, 8));

  for (int r = 0; r < reps; ++r) {
    std::vector<std::uint32_t> shift(d);
    Rng rng(spec.seed, 0x5b01 + static_cast<std::uint64_t>(r));
    for (int i = 0; i < d; ++i) shift[i] = rng.next_u32();

    std::vector<NeumaierVec> chunk_sums(chunks, NeumaierVec(width));
    std::vector<std::thread> pool;
    std::atomic<int> next_chunk{0};
    auto work = [&]() {
      SobolSequence sobol(d);
      std::vector<double> slot(width);
      for (;;) {
        const int c = next_chunk.fetch_add(1);
        if (c >= chunks) break;
        const std::int64_t lo = per_rep * c / chunks;
        const std::int64_t hi = per_rep * (c + 1) / chunks;
        NeumaierVec& acc = chunk_sums[c];
        sobol.stream(lo, hi - lo, shift.data(), [&](const double* u) {
          fn(u, slot.data());
          for (int w = 0; w < width; ++w) acc.add(w, slot[w]);
        });
      }
    };
    if (workers == 1) {
      work();
    } else {
      for (int t = 0; t < workers; ++t) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    NeumaierVec total(width);
    for (int c = 0; c < chunks; ++c)
      for (int w = 0; w < width; ++w) total.add(w, chunk_sums[c].value(w));
    for (int w = 0; w < width; ++w) rep_means[r][w] = total.value(w) / per_rep;
  }

  std::vector<QmcResult> out(width);
  for (int w = 0; w < width; ++w) {
    double mean = 0.0;
    for (int r = 0; r < reps; ++r) mean += rep_means[r][w];
    mean /= reps;
    double ss = 0.0;
    for (int r = 0; r < reps; ++r) ss += (rep_means[r][w] - mean) * (rep_means[r][w] - mean);
    out[w].value = mean;
    out[w].std_error = std::sqrt(ss / (reps - 1.0) / reps);
    out[w].points = per_rep * reps;
  }
  return out;
}

QmcResult qmc_integrate(int d, const QuadratureSpec& spec,
                        const std::function<double(const double*)>& fn) {
  auto res = qmc_integrate_multi(d, spec, 1,
                                 [&](const double* u, double* out) { out[0] = fn(u); });
  return res[0];
}

double torus_dist2(const double* x, int d) {
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    const double t = std::min(x[i], 1.0 - x[i]);
    acc += t * t;
  }
  return acc;
}

double subtraction_window(double rho2, double r) {
  const double q = rho2 / (r * r);
  if (q >= 1.0) return 0.0;
  const double t = 1.0 - q;
  return t * t;
}

double sphere_area(int d) {
  return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

namespace {

// 16-point Gauss-Legendre on [0,1].
struct GaussNode {
  double x, w;
};

const std::vector<GaussNode>& gauss16() {
  static const std::vector<GaussNode> table = [] {
    const int n = 16;
    std::vector<GaussNode> t(n);
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double p0 = 0.0, p1 = 0.0, dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        p0 = 1.0;
        p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        dp = n * (x * p0 - p1) / (x * x - 1.0);
        const double dx = p0 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      t[i] = {0.5 * (x + 1.0), 1.0 / ((1.0 - x * x) * dp * dp)};
    }
    return t;
  }();
  return table;
}

// Integrates fn over [0, r] with panels refined geometrically toward 0 so the
// length scale `scale` near the origin is resolved.
double panel_integrate(double r, double scale, const std::function<double(double)>& fn) {
  std::vector<double> cuts;
  cuts.push_back(r);
  double edge = std::clamp(scale, r * 1e-12, r);
  while (edge < r * 0.999) {
    cuts.push_back(edge);
    edge *= 2.0;
  }
  cuts.push_back(0.0);
  std::sort(cuts.begin(), cuts.end());
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    double panel = 0.0;
    for (const auto& g : gauss16()) panel += g.w * fn(a + (b - a) * g.x);
    acc += (b - a) * panel;
  }
  return acc;
}

}  // namespace

double patch_integral_inverse(int d, double r, double y) {
  // int_{|x|<r} w(|x|) / (y + 4 pi^2 |x|^2) dx
  const double area = sphere_area(d);
  const double scale = std::max(std::sqrt(std::max(y, 0.0)) / (2.0 * M_PI), r * 1e-9);
  return area * panel_integrate(r, scale, [&](double rho) {
    return subtraction_window(rho * rho, r) * std::pow(rho, d - 1) /
           (y + 4.0 * M_PI * M_PI * rho * rho);
  });
}

double patch_integral_log(int d, double r, double y) {
  const double area = sphere_area(d);
  const double scale = std::max(std::sqrt(std::max(y, 0.0)) / (2.0 * M_PI), r * 1e-9);
  if (y == 0.0) {
    // closed form: w(rho) rho^{d-1} log(4 pi^2 rho^2) integrates term by term
    // with int_0^r rho^m log(rho) drho = r^{m+1} (log r - 1/(m+1)) / (m+1).
    auto moment = [&](int m) {
      return std::pow(r, m + 1) / (m + 1.0);
    };
    auto moment_log = [&](int m) {
      return std::pow(r, m + 1) * (std::log(r) - 1.0 / (m + 1.0)) / (m + 1.0);
    };
    const double c = std::log(4.0 * M_PI * M_PI);
    // w(rho) = 1 - 2 rho^2/r^2 + rho^4/r^4
    const double r2 = r * r, r4 = r2 * r2;
    const int m0 = d - 1;
    double with_log = moment_log(m0) - 2.0 / r2 * moment_log(m0 + 2) + moment_log(m0 + 4) / r4;
    double plain = moment(m0) - 2.0 / r2 * moment(m0 + 2) + moment(m0 + 4) / r4;
    return area * (2.0 * with_log + c * plain);
  }
  return area * panel_integrate(r, scale, [&](double rho) {
    return subtraction_window(rho * rho, r) * std::pow(rho, d - 1) *
           std::log(y + 4.0 * M_PI * M_PI * rho * rho);
  });
}

}  // namespace dnls
