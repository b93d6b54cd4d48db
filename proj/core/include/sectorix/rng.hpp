#pragma once

// Deterministic random number generation. The engine is std::mt19937_64 (its
// output sequence is pinned by the standard); all distributions are hand-built
// from raw 64-bit draws so streams are identical across platforms and
// standard-library implementations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace sectorix {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Independent stream seed for (base seed, stream index); used to give every
// trial and every instance family its own reproducible stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ull));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (eng_() & 1u) != 0; }

  // Standard normal via Box-Muller.
  double normal() {
    double u = 1.0 - uniform01();  // (0, 1]
    double r = std::sqrt(-2.0 * std::log(u));
    double t = 6.283185307179586476925286766559 * uniform01();
    return r * std::cos(t);
  }

  // Standard complex normal: E|z|^2 = 1.
  std::complex<double> cnormal() {
    double re = normal();
    double im = normal();
    return {re * 0.7071067811865475244, im * 0.7071067811865475244};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace sectorix
