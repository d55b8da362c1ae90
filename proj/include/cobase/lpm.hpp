#pragma once

// Lattice path matroids: bases are the North-step sets of monotone paths
// between a lower and an upper boundary path.  Duality is reflection in
// the diagonal, and for square diagrams the base-cobases are themselves
// the bases of an envelope diagram.

#include <optional>
#include <string>
#include <vector>

#include "cobase/matroid.hpp"

namespace cobase {

// Two non-crossing monotone paths from (0,0) to (m,r); bit i set = step
// i+1 goes North.  Envelope arithmetic runs on prefix-height arrays.
struct LatticePathPair {
    int m = 0;
    int r = 0;
    Mask upper = 0;
    Mask lower = 0;

    int steps() const { return m + r; }
    bool operator==(const LatticePathPair&) const = default;
};

// Parses strings over {N,E}; validates step counts and non-crossing.
LatticePathPair make_path_pair(const std::string& upper, const std::string& lower);
LatticePathPair make_path_pair(int m, int r, Mask upper, Mask lower);

std::string path_to_string(Mask path, int steps);

// Heights h[0..steps]: number of North steps among the first i.
std::vector<int> prefix_heights(Mask path, int steps);

// All monotone paths between the boundaries, as sorted North-step masks.
std::vector<Mask> lpm_bases(const LatticePathPair& pair,
                            std::uint64_t budget = kDefaultEnumBudget);
std::uint64_t lpm_base_count(const LatticePathPair& pair);

Matroid lpm_matroid(const LatticePathPair& pair, std::uint64_t budget = kDefaultEnumBudget);

// Reflection in y = x: swaps N and E and exchanges the boundary roles.
LatticePathPair lpm_dual(const LatticePathPair& pair);

// For a square diagram (m == r): the diagram whose bases are exactly the
// base-cobases, or nullopt when that family is empty.
std::optional<LatticePathPair> bc_envelope(const LatticePathPair& pair);

struct SpexReport {
    bool block = false;           // |E| = 2r at the top
    bool vacuous = false;         // not block, nothing to verify
    bool peel_agrees = false;     // factored prediction equals enumeration
    bool mat_holds = false;
    int peeled_steps = 0;
};

// Peels 2-circuits / 2-cocircuits down to a core, predicts the
// base-cobase family from the factorization, and compares against direct
// enumeration; also reports whether the family satisfies exchange.
SpexReport verify_spex_preservation(const Matroid& m,
                                    std::uint64_t budget = kDefaultEnumBudget);

}  // namespace cobase
