#pragma once

// Flats, flacets and tight sets of a matroid, the affine dimension of the
// base-cobase polytope (exact integer arithmetic throughout), and the
// three-way equivalence between tight sets, dimension deficiency and
// flacet splits on connected block matroids.

#include <vector>

#include "cobase/matroid.hpp"

namespace cobase {

struct FlatInfo {
    Mask mask = 0;
    int rank = 0;
    bool inseparable_in_m = false;
    bool complement_inseparable_in_dual = false;
    bool is_flacet = false;  // nonempty proper, both inseparability conditions
};

struct TightSet {
    Mask mask = 0;
};

// All flats with separability data; n <= 20 (full subset scan).
std::vector<FlatInfo> flats(const Matroid& m);

// All F with |F| = 2 r(F); the nontrivial filter drops the empty set and E.
std::vector<TightSet> tight_sets(const Matroid& m, bool nontrivial_only = false);

// Affine dimension of the convex hull of the base-cobase incidence
// vectors, as the exact integer rank of the difference vectors.
int bc_polytope_dim(const Matroid& m, std::uint64_t budget = kDefaultEnumBudget);

// Exact rank over the rationals of integer rows (fraction-free).
int integer_matrix_rank(std::vector<std::vector<long long>> rows);

struct CodimReport {
    bool tight_exists = false;
    Mask tight_witness = 0;
    int dim = -1;
    bool dim_deficient = false;         // dim < |E| - 1
    // Some nontrivial flacet F has M|F and M/F block with the base-cobase
    // family splitting as their product.
    bool flacet_split_exists = false;
    Mask flacet_witness = 0;
    bool agree = false;
};

// Evaluates the three equivalent conditions on a connected block matroid
// (n <= 16) and reports whether they agree.
CodimReport verify_codim_equivalence(const Matroid& m);

bool is_identically_self_dual(const Matroid& m, std::uint64_t budget = kDefaultEnumBudget);

}  // namespace cobase
