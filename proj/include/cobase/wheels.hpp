#pragma once

// Wheels, whirls and necklaces, together with the stitched two-cube model
// of their base-cobase graphs: two copies of the n-cube (minus, or with
// identified, all-zero/all-one vertices) joined by stitching edges between
// lean vertices, plus the explicit bijection onto base-cobases.
//
// Ground set convention: the wheel on n spokes has 2n elements ordered
// e1,f1,e2,f2,...  (rim edge e_i at position 2(i-1), spoke f_i at
// position 2i-1); cube coordinate i corresponds to bit i-1.

#include <vector>

#include "cobase/matroid.hpp"

namespace cobase {

Matroid wheel_matroid(int n);
Matroid whirl_matroid(int n);
Matroid necklace_matroid(int n);

Mask wheel_rim_mask(int n);

enum class WWKind { Wheel, Whirl };

struct ModelVertex {
    Mask bits = 0;
    int copy = 1;  // +1 / -1; 0 marks the shared all-zero/all-one whirl vertices

    bool operator==(const ModelVertex&) const = default;
};

struct StitchedModel {
    int n = 0;
    WWKind kind = WWKind::Wheel;
    std::vector<ModelVertex> verts;        // sorted by (bits, copy)
    std::vector<std::vector<int>> adj;     // sorted neighbor lists

    int index_of(ModelVertex v) const;     // canonicalizes first; -1 if absent
    ModelVertex canonical(ModelVertex v) const;
    bool adjacent(int i, int j) const;
    std::size_t num_edges() const;
};

StitchedModel build_model(int n, WWKind kind);

// Support is a cyclic interval of {1..n}; the all-zero and all-one
// vectors count as lean.
bool is_lean(Mask v, int n);
// Start of the unique cyclic block of a proper lean vector (bit index).
int lean_block_start(Mask v, int n);

// The stitched partners of a proper lean vector: same block, block
// shifted by one, block without its start (length >= 2), block grown past
// its end (length <= n-2).
std::vector<Mask> stitch_targets(Mask v, int n);

// The base-cobase of the wheel/whirl corresponding to a model vertex.
Mask model_base(int n, ModelVertex v);

// Model automorphisms (used by the Hamiltonian constructions and tested
// against the model edges): complementing the bits fixes each copy;
// reversing the coordinate order swaps the copies.
ModelVertex auto_complement(int n, ModelVertex v);
ModelVertex auto_reverse_swap(int n, ModelVertex v);

// Exact comparison of the predicted model with the computed base-cobase
// graph (vertex bijection via model_base plus edge-set equality).
bool model_matches_bc_graph(const StitchedModel& model, const Matroid& m,
                            std::uint64_t budget = kDefaultEnumBudget);
bool verify_structure(int n, WWKind kind, std::uint64_t budget = kDefaultEnumBudget);

struct LowerBoundReport {
    Mask plus_base = 0;
    Mask minus_base = 0;
    int exchange_lower_bound = 0;  // |delta|/2, always 2 here
    int distance = 0;              // BFS distance in the base-cobase graph
    int expected = 0;              // 2*floor(n/4)+1
    bool matches = false;
};

// Distance between the two copies of the four-block vector; the report
// surfaces any mismatch with the predicted value rather than hiding it.
LowerBoundReport verify_lower_bound(int n, WWKind kind,
                                    std::uint64_t budget = kDefaultEnumBudget);

// The identity relabeling carries whirl bases onto necklace bases.
bool verify_necklace_iso(int n, std::uint64_t budget = kDefaultEnumBudget);

// Lean edges in direction coord (1..n) avoiding the all-zero/all-one
// vertices; equals 2(n-2).
int lean_edge_count(int n, int coord);

}  // namespace cobase
