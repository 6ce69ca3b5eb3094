#pragma once

#include <cstdint>
#include <random>

#include "sesq/matrix.hpp"

namespace sesq {

/// splitmix64 finalizer; used to derive per-trial seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ull));
}

/// Seeded generator with a platform-independent bounded draw (the standard
/// distributions are not portable across library implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = engine_(); while (x >= limit);
    return x % n;
  }
  bool coin() { return below(2) == 1; }
  std::uint64_t next() { return engine_(); }

  Elem element(const Field& k) {
    if (k.finite()) return k.element(below(k.order()));
    // Small integers for infinite fields.
    return k.from_int(static_cast<std::int64_t>(below(7)) - 3);
  }
  Vec vec(const Field& k, std::size_t n) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(element(k));
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sesq
