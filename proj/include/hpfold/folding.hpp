#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "hpfold/conformation.hpp"

namespace hpfold {

struct RoutingError : std::runtime_error {
    explicit RoutingError(const std::string& what) : std::runtime_error(what) {}
};

// Stacks the H's in hexagonal rings of six, one ring per layer, climbing to
// the next layer through a layer-diagonal edge; P-runs detour outside the
// ring stack. Requires seq.n >= 1.
Conformation helix_arrangement(const HPSequence& seq);

// Packs the first floor(n/2) H's into serpentine chains filling one layer
// and the remaining H's into the layer directly below; P-runs detour into
// the free layers above/below. Requires seq.n >= 2.
Conformation layer_arrangement(const HPSequence& seq);

// Divisor pair (i, j) of m1 with minimal |i - j|, returned as (min, max).
// For prime m1 > 3 the single-chain pair (1, m1) degenerates, so the
// near-square pair (floor(sqrt(m1)), ceil(m1/r)) is used instead and the
// last chain runs short.
std::pair<int, int> chain_factorization(int m1);

struct BruteForceResult {
    // Empty only if the budget ran out before any complete placement.
    std::optional<Conformation> best;
    long max_contacts = 0;
    bool exhausted = true;  // false: budget hit, result is only a lower bound
    std::int64_t nodes = 0;
};

// Exhaustive search over all conformations, with the first residue pinned at
// the origin and the second restricted to one representative per symmetry
// orbit of the 20 neighbors. `use_symmetry = false` disables the orbit
// reduction (slower; used to cross-check the reduction).
BruteForceResult brute_force_max(const HPSequence& seq, std::int64_t budget,
                                 bool use_symmetry = true);

}  // namespace hpfold
