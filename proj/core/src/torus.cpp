#include "dnls/torus.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace dnls {

std::int64_t checked_power(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("checked_power: need n >= 1, d >= 1");
  std::int64_t result = 1;
  for (int i = 0; i < d; ++i) {
    if (result > std::numeric_limits<std::int64_t>::max() / n)
      throw std::invalid_argument("checked_power: n^d overflows int64 (n=" + std::to_string(n) +
                                  ", d=" + std::to_string(d) + ")");
    result *= n;
  }
  return result;
}

TorusSpec::TorusSpec(int d_, int n_) : d(d_), n(n_) {
  if (d < 1) throw std::invalid_argument("TorusSpec: dimension must be >= 1");
  if (n < 2) throw std::invalid_argument("TorusSpec: side length must be >= 2");
  N = checked_power(n, d);
}

std::vector<int> TorusSpec::unrank(std::int64_t r) const {
  if (r < 0 || r >= N) throw std::invalid_argument("TorusSpec::unrank: rank out of range");
  std::vector<int> idx(d);
  for (int axis = d - 1; axis >= 0; --axis) {
    idx[axis] = static_cast<int>(r % n);
    r /= n;
  }
  return idx;
}

std::int64_t TorusSpec::rank(const std::vector<int>& index) const {
  if (static_cast<int>(index.size()) != d)
    throw std::invalid_argument("TorusSpec::rank: index has wrong dimension");
  std::int64_t r = 0;
  for (int axis = 0; axis < d; ++axis) {
    if (index[axis] < 0 || index[axis] >= n)
      throw std::invalid_argument("TorusSpec::rank: coordinate out of range");
    r = r * n + index[axis];
  }
  return r;
}

std::int64_t TorusSpec::neighbor(std::int64_t rank, int axis, int step) const {
  // stride of `axis` in row-major order is n^(d-1-axis)
  std::int64_t stride = 1;
  for (int i = axis + 1; i < d; ++i) stride *= n;
  const std::int64_t coord = (rank / stride) % n;
  std::int64_t shifted = coord + step;
  if (shifted < 0) shifted += n;
  if (shifted >= n) shifted -= n;
  return rank + (shifted - coord) * stride;
}

}  // namespace dnls
