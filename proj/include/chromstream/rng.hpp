#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace chromstream {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based split: the seed of sub-stream `index` under `master`.
// Trial i of an experiment seeded with s uses derive_seed(s, i).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(mix64(master) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool random_bit(Rng& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

// Uniform `size`-subset of the given pool, returned in ascending order.
template <typename T>
std::vector<T> random_subset(Rng& rng, const std::vector<T>& pool, std::size_t size) {
  std::vector<T> picked;
  picked.reserve(size);
  std::sample(pool.begin(), pool.end(), std::back_inserter(picked), size, rng);
  std::sort(picked.begin(), picked.end());
  return picked;
}

// Uniform `size`-subset of [0, universe), ascending.
inline std::vector<std::uint32_t> random_subset(Rng& rng, std::size_t universe, std::size_t size) {
  std::vector<std::uint32_t> pool(universe);
  std::iota(pool.begin(), pool.end(), 0u);
  return random_subset(rng, pool, size);
}

inline std::vector<std::uint32_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace chromstream
