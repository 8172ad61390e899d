#include "dnls/rng.hpp"

#include <cmath>

namespace dnls {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void round_once(std::array<std::uint32_t, 4>& x, std::uint32_t k0, std::uint32_t k1) {
  const std::uint64_t m0 = static_cast<std::uint64_t>(kMul0) * x[0];
  const std::uint64_t m1 = static_cast<std::uint64_t>(kMul1) * x[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(m0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(m0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(m1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(m1);
  x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
}

}  // namespace

PhiloxBlock philox4x32(std::uint64_t counter_lo, std::uint64_t counter_hi, std::uint64_t key) {
  std::array<std::uint32_t, 4> x = {
      static_cast<std::uint32_t>(counter_lo), static_cast<std::uint32_t>(counter_lo >> 32),
      static_cast<std::uint32_t>(counter_hi), static_cast<std::uint32_t>(counter_hi >> 32)};
  std::uint32_t k0 = static_cast<std::uint32_t>(key);
  std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
  for (int r = 0; r < 10; ++r) {
    round_once(x, k0, k1);
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  return PhiloxBlock{x};
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

void Rng::refill() {
  buffer_ = philox4x32(counter_++, stream_, seed_);
  buffer_pos_ = 0;
}

std::uint32_t Rng::next_u32() {
  if (buffer_pos_ >= 4) refill();
  return buffer_.words[buffer_pos_++];
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return lo | (hi << 32);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = 1.0 - uniform();  // (0,1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(t);
  has_cached_normal_ = true;
  return r * std::cos(t);
}

double Rng::exponential() {
  return -std::log(1.0 - uniform());
}

std::complex<double> Rng::complex_gaussian() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1));  // |z|^2 = -log(u1) ~ Exp(1)
  const double t = 2.0 * M_PI * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  for (;;) {
    const std::uint64_t v = next_u64();
    if (v <= limit) return v % bound;
  }
}

void Rng::set_counter(std::uint64_t counter) {
  counter_ = counter;
  buffer_pos_ = 4;
  has_cached_normal_ = false;
}

std::complex<double> indexed_complex_gaussian(std::uint64_t seed, std::uint64_t stream,
                                              std::uint64_t index) {
  const PhiloxBlock b = philox4x32(index, stream ^ 0x636f6d706c657860ull, seed);
  const std::uint64_t w0 =
      static_cast<std::uint64_t>(b.words[0]) | (static_cast<std::uint64_t>(b.words[1]) << 32);
  const std::uint64_t w1 =
      static_cast<std::uint64_t>(b.words[2]) | (static_cast<std::uint64_t>(b.words[3]) << 32);
  const double u1 = 1.0 - static_cast<double>(w0 >> 11) * 0x1.0p-53;
  const double u2 = static_cast<double>(w1 >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-std::log(u1));
  const double t = 2.0 * M_PI * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

double indexed_exponential(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const PhiloxBlock b = philox4x32(index, stream ^ 0x6578706f6e656e74ull, seed);
  const std::uint64_t w0 =
      static_cast<std::uint64_t>(b.words[0]) | (static_cast<std::uint64_t>(b.words[1]) << 32);
  const double u = static_cast<double>(w0 >> 11) * 0x1.0p-53;
  return -std::log(1.0 - u);
}

}  // namespace dnls
