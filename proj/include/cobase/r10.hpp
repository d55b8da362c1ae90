#pragma once

// The 10-element regular matroid whose ground set is the ten 3-subsets of
// {1..5}: circuit classification, the two symmetry classes of
// base-cobases, the predicted combinatorial adjacency of its base-cobase
// graph, and Hamiltonian laceability by orbit-reduced search.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cobase/hamsearch.hpp"
#include "cobase/matroid.hpp"

namespace cobase {

Matroid r10_matroid();

// Ground element <-> lexicographic 3-subset of {1..5} (1-based elements).
int triple_index(int a, int b, int c);
std::array<int, 3> triple_elements(int index);

enum class CircuitKind { NotCircuit, Circuit4, Circuit6 };

struct CircuitClass {
    CircuitKind kind = CircuitKind::NotCircuit;
    // For circuits: permutation abcde realizing the canonical template
    // {abc, abe, acd, ade} (size 4) or its complement (size 6).
    std::array<int, 5> word{};
};

CircuitClass classify_circuit(Mask triples);

struct BcClass {
    enum class Kind { S2, D5 } kind = Kind::S2;
    std::array<int, 5> word{};  // canonical representative

    bool operator==(const BcClass&) const = default;
    bool operator<(const BcClass& o) const {
        return kind != o.kind ? kind < o.kind : word < o.word;
    }
    std::string to_string() const;
};

// Classifies a base-cobase by its degree signature (a permutation of
// 24342, or 33333) and extracts the canonical class representative.
BcClass classify_bc(Mask b);
// Rebuilds the triple set from a class representative.
Mask bc_from_class(const BcClass& c);

// Neighbor classes in the base-cobase graph, from the combinatorial
// description (five per vertex).
std::vector<BcClass> predicted_neighbors(const BcClass& c);

struct R10DescriptionReport {
    std::size_t s2_count = 0;
    std::size_t d5_count = 0;
    bool counts_match = false;     // 60 and 12
    bool edges_match = false;      // computed graph == predicted graph
    bool degrees_five = false;
    bool bipartite = false;
    int part_x = 0, part_y = 0;    // sign-based sides
    bool sign_partition_valid = false;
    bool ham_fails = false;

    bool ok() const {
        return counts_match && edges_match && degrees_five && bipartite &&
               part_x == 36 && part_y == 36 && sign_partition_valid && ham_fails;
    }
};

R10DescriptionReport verify_r10_description();

struct LaceabilityReport {
    bool verified = false;
    bool full_sweep = false;
    std::size_t orbit_count = 0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_total = 0;
    std::uint64_t nodes = 0;
};

// Hamiltonian paths between cross-color pairs; by default one
// representative per orbit of the relabeling action, the full 1296-pair
// sweep on request.
LaceabilityReport verify_laceability(bool full_sweep = false, const SearchOptions& opt = {},
                                     int threads = 1);

}  // namespace cobase
