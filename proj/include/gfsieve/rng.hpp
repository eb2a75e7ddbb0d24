#ifndef GFSIEVE_RNG_HPP
#define GFSIEVE_RNG_HPP

#include <cstdint>

namespace gfsieve {

/// Deterministic splitmix64 stream. Used everywhere randomness is needed so
/// that identical seeds give identical results on every platform (the std
/// distributions are implementation-defined and would break byte-identical
/// reports).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive. Rejection sampling, unbiased.
  int64_t range(int64_t lo, int64_t hi) {
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<int64_t>(next());  // full 64-bit range
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return lo + static_cast<int64_t>(v % span);
  }

  /// Uniform double in [0, 1).
  double uniform() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

 private:
  uint64_t state_;
};

}  // namespace gfsieve

#endif
