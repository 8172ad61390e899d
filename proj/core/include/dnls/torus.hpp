#pragma once

#include <cstdint>
#include <vector>

namespace dnls {

// Geometry of the discrete torus with vertex set {0,...,n-1}^d, N = n^d sites.
// Site and Fourier-mode multi-indices share the same index arithmetic; flat
// ranks enumerate multi-indices in row-major order (last coordinate fastest).
struct TorusSpec {
  int d = 0;
  int n = 0;
  std::int64_t N = 0;

  TorusSpec() = default;
  TorusSpec(int d_, int n_);

  std::vector<int> unrank(std::int64_t rank) const;
  std::int64_t rank(const std::vector<int>& index) const;

  // Rank of the site shifted by +1/-1 along axis, with periodic wraparound.
  std::int64_t neighbor(std::int64_t rank, int axis, int step) const;

  bool operator==(const TorusSpec& other) const { return d == other.d && n == other.n; }
};

// n^d with overflow guard; throws std::invalid_argument on overflow or bad args.
std::int64_t checked_power(int n, int d);

}  // namespace dnls
