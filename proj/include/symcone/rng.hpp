#pragma once

// Seeded randomness with reproducible streams. Each (master seed, check id,
// sample index) triple gets its own engine, so results do not depend on how
// samples are divided across worker threads. mt19937_64 raw output is pinned
// by the C++ standard; the uniform and normal transforms below are spelled
// out here because the <random> distribution objects are not.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace symcone {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_raw() { return engine_(); }

  // Uniform on [0, 1), 53-bit mantissa.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [0, bound) by rejection on the top multiple of bound.
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Standard normal via Box-Muller; pairs are generated together and the
  // second one cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    const double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stream for one sample of one check. splitmix64 whitens the combination so
// nearby indices do not produce correlated engines.
inline RandomStream sample_stream(std::uint64_t master_seed, std::string_view check_id,
                                  std::uint64_t sample_index) {
  std::uint64_t state = master_seed;
  state ^= 0x9e3779b97f4a7c15ULL + fnv1a64(check_id);
  (void)splitmix64(state);
  state ^= sample_index * 0xda942042e4dd58b5ULL + 1;
  const std::uint64_t a = splitmix64(state);
  const std::uint64_t b = splitmix64(state);
  return RandomStream(a ^ (b << 1));
}

}  // namespace symcone
