#ifndef SEMINF_RNG_HPP
#define SEMINF_RNG_HPP

#include <cstdint>

namespace seminf {

/// splitmix64; deterministic across platforms, cheap to seed per work item.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n) by rejection; n >= 1.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Independent stream for work item `index` under the same master seed.
  static Rng fork(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
    return Rng(mix.next());
  }

private:
  std::uint64_t state_;
};

}  // namespace seminf

#endif  // SEMINF_RNG_HPP
