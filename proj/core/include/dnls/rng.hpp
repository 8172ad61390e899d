#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace dnls {

// Philox4x32-10 counter-based generator. A fixed (seed, stream) pair defines
// an entire random sequence; any 128-bit counter block can be generated out of
// order, which keeps mode-indexed field synthesis deterministic under
// parallel evaluation.
struct PhiloxBlock {
  std::array<std::uint32_t, 4> words;
};

PhiloxBlock philox4x32(std::uint64_t counter_lo, std::uint64_t counter_hi,
                       std::uint64_t key);

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on [0,1) with 53-bit resolution.
  double uniform();
  // Standard normal via Box-Muller (pairs cached).
  double normal();
  // Exponential with rate 1.
  double exponential();
  // Standard complex Gaussian: E z = 0, E|z|^2 = 1 (|z|^2 is Exp(1)).
  std::complex<double> complex_gaussian();
  // Uniform integer in [0, bound) by rejection.
  std::uint64_t uniform_below(std::uint64_t bound);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  // Blocks consumed so far; (seed, stream, counter) fully determine the state.
  std::uint64_t counter() const { return counter_; }
  void set_counter(std::uint64_t counter);

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  PhiloxBlock buffer_{};
  int buffer_pos_ = 4;  // empty
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// One complex standard Gaussian tied to an absolute index. Used for spectral
// field synthesis: coefficient k depends only on (seed, stream, index).
std::complex<double> indexed_complex_gaussian(std::uint64_t seed, std::uint64_t stream,
                                              std::uint64_t index);

// One Exp(1) variate tied to an absolute index.
double indexed_exponential(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace dnls
