#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace steklov {

inline constexpr const char* kVersion = "1.0.0";

// Deterministic RNG with a fixed bit-level algorithm (splitmix64 core), so that
// seeded runs produce identical streams independent of the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::uint64_t state() const { return state_; }
  void set_state(std::uint64_t s) { state_ = s; }

 private:
  std::uint64_t state_;
};

// Halton sequence (index starts at 1), bases 2 and 3 for the planar set.
inline double halton(std::uint64_t index, unsigned base) {
  double f = 1.0, r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

// Golden-section maximization of a unimodal (possibly kinked) scalar function.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double xtol, int max_iter = 400);

// Bisection root of a monotone function with f(lo), f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double xtol, int max_iter = 400);

// FNV-1a 64-bit hash, hex-encoded; used to stamp outputs with their config.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace steklov
