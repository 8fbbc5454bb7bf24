#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace latentgeo {

using Rng = std::mt19937_64;

/// Independent stream for a (master seed, path...) pair. Replicates derive
/// their stream from the replicate index, so results never depend on the
/// order in which workers pick up replicates.
Rng make_stream(std::uint64_t master_seed, std::initializer_list<std::uint64_t> path);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double standard_normal(Rng& rng) {
  return std::normal_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace latentgeo
