#include <algorithm>
#include <cmath>
#include <numeric>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/core/rng.hpp"
#include "rxnkit/synthgen/dataset.hpp"

namespace rxnkit::synthgen {

std::array<std::size_t, 3> split_sizes(std::size_t n, const std::array<double, 3>& ratios) {
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error(ErrorCode::InvalidRatios, "split ratios must be finite and non-negative");
    }
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidRatios,
                "split ratios must sum to 1, got " + std::to_string(sum));
  }
  std::array<std::size_t, 3> sizes{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    double quota = static_cast<double>(n) * ratios[i];
    sizes[i] = static_cast<std::size_t>(std::floor(quota));
    remainder[i] = quota - std::floor(quota);
    assigned += sizes[i];
  }
  std::array<std::size_t, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < n; k = (k + 1) % 3) {
    if (ratios[order[k]] > 0.0) {
      ++sizes[order[k]];
      ++assigned;
    }
  }
  return sizes;
}

std::array<Manifest, 3> split_dataset(const Manifest& manifest, const std::array<double, 3>& ratios,
                                      std::uint64_t seed) {
  auto sizes = split_sizes(manifest.size(), ratios);
  Manifest shuffled = manifest;
  Rng rng(seed);
  rng.shuffle(std::span<ManifestEntry>(shuffled));
  std::array<Manifest, 3> out;
  auto it = shuffled.begin();
  for (std::size_t i = 0; i < 3; ++i) {
    auto end = it + static_cast<std::ptrdiff_t>(sizes[i]);
    out[i].assign(it, end);
    it = end;
  }
  return out;
}

}  // namespace rxnkit::synthgen
