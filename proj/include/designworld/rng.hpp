#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace designworld {

// splitmix64 finalizer. Derives decorrelated substream seeds from
// (base, tag) pairs; every batch component gets its own stream so results
// do not depend on execution order.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t tag) {
  std::uint64_t z = base ^ (tag * 0x9e3779b97f4a7c15ULL + (base << 6) + (base >> 2));
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// mt19937_64 plus hand-rolled bounded draws. The engine's output sequence is
// fixed by the standard; std::uniform_int_distribution is not, so all
// bounded/shuffle logic lives here to keep runs reproducible everywhere.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Unbiased draw in [0, n), n >= 1. Rejection sampling on the top range.
  std::uint32_t next_below(std::uint32_t n) {
    const std::uint64_t limit = std::uint64_t(~std::uint64_t{0}) - (std::uint64_t(~std::uint64_t{0}) % n);
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return std::uint32_t(v % n);
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + int(next_below(std::uint32_t(hi - lo + 1)));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = next_below(std::uint32_t(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace designworld
