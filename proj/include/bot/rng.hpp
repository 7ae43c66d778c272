#ifndef BOT_RNG_HPP
#define BOT_RNG_HPP

#include <cstdint>

#include "bot/vec.hpp"

namespace bot {

/// Deterministic xoshiro-style generator. Distributions are derived from
/// raw bits directly so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // splitmix64 expansion of the seed
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 4; ++i) {
      z ^= z >> 30;
      z *= 0xbf58476d1ce4e5b9ull;
      z ^= z >> 27;
      z *= 0x94d049bb133111ebull;
      z ^= z >> 31;
      s_[i] = z;
      z += 0x9e3779b97f4a7c15ull;
    }
  }

  std::uint64_t next() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  Vec uniform_vec(int dim, double lo, double hi) {
    Vec v = Vec::zero(dim);
    for (int i = 0; i < dim; ++i) v[i] = uniform(lo, hi);
    return v;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace bot

#endif  // BOT_RNG_HPP
