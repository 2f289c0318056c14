#ifndef HGSPARSE_RANDOM_HPP_
#define HGSPARSE_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace hgsparse {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

/// Derives an independent child seed from (seed, key).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key);

/// Counter-based fair coins keyed by (seed, round, id). A coin depends only
/// on its key, never on how many other coins were drawn or in what order.
class CoinStream {
 public:
  CoinStream(std::uint64_t seed, std::uint64_t round)
      : key_(derive_seed(seed, round)) {}

  bool flip(std::uint64_t id) const { return (mix64(key_ ^ mix64(id)) >> 63) != 0; }

 private:
  std::uint64_t key_;
};

/// Engine for sequential draws (generators, probes).
inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(mix64(seed));
}

}  // namespace hgsparse

#endif  // HGSPARSE_RANDOM_HPP_
