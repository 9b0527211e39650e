#pragma once

#include <cstdint>
#include <random>

namespace gromov {

/// Same (seed, stream) gives the same draw sequence; different streams give
/// independent-looking sequences.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngSeed with_stream(std::uint64_t s) const { return {seed, s}; }
};

using Engine = std::mt19937_64;

Engine make_engine(RngSeed seed);

}  // namespace gromov
