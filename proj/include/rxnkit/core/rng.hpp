#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace rxnkit {

// Portable RNG: std::mt19937_64 is fully specified, but the standard
// distributions are not, so sampling is done here by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);

  // Uniform on [lo, hi] inclusive.
  int uniform_int(int lo, int hi);

  // Uniform on [0, 1).
  double uniform01();

  double uniform_real(double lo, double hi);

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// splitmix64-based combination of two 64-bit values.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// FNV-1a, 64 bit.
std::uint64_t hash_string(std::string_view s);

}  // namespace rxnkit
