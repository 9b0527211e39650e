#include "gromov/random.hpp"

namespace gromov {

Engine make_engine(RngSeed seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed.seed),
                    static_cast<std::uint32_t>(seed.seed >> 32),
                    static_cast<std::uint32_t>(seed.stream),
                    static_cast<std::uint32_t>(seed.stream >> 32),
                    0x9e3779b9u};
  return Engine(seq);
}

}  // namespace gromov
