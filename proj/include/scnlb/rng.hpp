#pragma once

#include <cstdint>
#include <random>

namespace scnlb {

// Uniform draw with an explicit mantissa construction so the stream depends
// only on the mt19937_64 output, not on the standard library's distribution
// implementation.
inline double rng_uniform(std::mt19937_64& gen, double lo, double hi) {
  double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

inline int rng_index(std::mt19937_64& gen, int n) {
  return static_cast<int>(gen() % static_cast<std::uint64_t>(n));
}

}  // namespace scnlb
