#pragma once

// Seeded random context generation.

#include <cstddef>
#include <cstdint>

#include "fcar/context.hpp"

namespace fcar {

// Coin-toss context: every (object, attribute) cell is incident with
// probability p, decided independently.
//
// Reproducibility contract: the PRNG is the standard 64-bit Mersenne
// Twister (mt19937_64) seeded directly with `seed`; cells are drawn in
// row-major order, one draw per cell, and the cell is set exactly when
// (draw >> 11) * 2^-53 < p. Objects are named o1..oN, attributes a1..aM.
FormalContext cointoss_context(std::size_t n_objects, std::size_t n_attrs, double p,
                               std::uint64_t seed);

}  // namespace fcar
