#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fedgbm {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable derivation of per-purpose, per-iteration streams from one seed, so a
// resumed session replays exactly the draws of the original run.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t purpose,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(base ^ purpose) ^ index);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound) via rejection; stable across standard libraries.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  // k distinct indices from [0, n), order-independent of k's position in the
  // stream; implemented as a partial Fisher-Yates over 0..n-1.
  std::vector<std::uint32_t> sample_without_replacement(std::uint64_t n,
                                                        std::uint64_t k);

 private:
  std::mt19937_64 engine_;
};

inline std::vector<std::uint32_t> Rng::sample_without_replacement(
    std::uint64_t n, std::uint64_t k) {
  std::vector<std::uint32_t> pool(n);
  for (std::uint64_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
  if (k > n) k = n;
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t j = i + below(n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

inline std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace fedgbm
