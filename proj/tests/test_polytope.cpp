#include "cobase/bcgraph.hpp"
#include "cobase/polytope.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace cobase;

namespace {

const std::vector<std::pair<int, int>> k4_edges = {
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
Matroid k4() { return graphic_matroid(4, k4_edges); }

// |E| = 2r fixture carrying a 2-circuit {0,4} and a 2-cocircuit {1,5}.
Matroid extended_u24() {
    return series_extend(parallel_extend(uniform_matroid(4, 2), 0), 1);
}

}  // namespace

TEST_CASE("flats of the named examples") {
    auto u24 = flats(uniform_matroid(4, 2));
    // Empty set, four singletons, E.
    CHECK(u24.size() == 6);
    for (const auto& f : u24) CHECK(!f.is_flacet);

    auto fk4 = flats(k4());
    CHECK(fk4.size() == 15);
    int by_rank[4] = {0, 0, 0, 0};
    for (const auto& f : fk4) ++by_rank[f.rank];
    CHECK(by_rank[0] == 1);
    CHECK(by_rank[1] == 6);
    CHECK(by_rank[2] == 7);
    CHECK(by_rank[3] == 1);
}

TEST_CASE("tight sets") {
    // Any 2-circuit is tight.
    Matroid ext = extended_u24();
    auto ts = tight_sets(ext, true);
    bool has_circuit = false;
    for (const auto& t : ts) has_circuit |= (t.mask == (bit(0) | bit(4)));
    CHECK(has_circuit);

    CHECK(tight_sets(uniform_matroid(4, 2), true).empty());

    Matroid sum = direct_sum(uniform_matroid(2, 1), uniform_matroid(2, 1));
    auto st = tight_sets(sum, true);
    bool block0 = false, block1 = false;
    for (const auto& t : st) {
        block0 |= t.mask == 0b0011;
        block1 |= t.mask == 0b1100;
    }
    CHECK(block0);
    CHECK(block1);
}

TEST_CASE("integer matrix rank is exact") {
    CHECK(integer_matrix_rank({{1, 0}, {0, 1}, {1, 1}}) == 2);
    CHECK(integer_matrix_rank({{2, 4}, {3, 6}}) == 1);
    CHECK(integer_matrix_rank({{0, 0, 0}}) == 0);
    // A case where floating point would be shaky: nearly dependent rows.
    CHECK(integer_matrix_rank({{1, 1, 1}, {1, 1, 2}, {2, 2, 3}}) == 2);
}

TEST_CASE("bc polytope dimension") {
    CHECK(bc_polytope_dim(uniform_matroid(4, 2)) == 3);
    CHECK(bc_polytope_dim(direct_sum(uniform_matroid(2, 1), uniform_matroid(2, 1))) == 2);
    CHECK(bc_polytope_dim(uniform_matroid(2, 1)) == 1);
}

TEST_CASE("codim equivalence on fixtures") {
    auto u24 = verify_codim_equivalence(uniform_matroid(4, 2));
    CHECK(u24.agree);
    CHECK(!u24.tight_exists);
    CHECK(!u24.dim_deficient);
    CHECK(!u24.flacet_split_exists);

    auto ext = verify_codim_equivalence(extended_u24());
    CHECK(ext.agree);
    CHECK(ext.tight_exists);
    CHECK(ext.dim_deficient);
    CHECK(ext.flacet_split_exists);

    auto g = verify_codim_equivalence(k4());
    CHECK(g.agree);

    CHECK_THROWS_AS(verify_codim_equivalence(direct_sum(uniform_matroid(2, 1),
                                                        uniform_matroid(2, 1))),
                    std::invalid_argument);
}

TEST_CASE("identically self-dual") {
    CHECK(is_identically_self_dual(uniform_matroid(2, 1)));
    CHECK(is_identically_self_dual(uniform_matroid(4, 2)));
    CHECK(!is_identically_self_dual(k4()));
}

TEST_CASE("flat inequalities hold at every base vertex, tight at flacets") {
    for (const Matroid& m : {uniform_matroid(4, 2), k4(), extended_u24(),
                             direct_sum(uniform_matroid(2, 1), uniform_matroid(4, 2))}) {
        auto fam = enumerate_bases(m);
        for (const auto& f : flats(m)) {
            bool tight_somewhere = false;
            for (Mask b : fam.masks) {
                CHECK(popcount(b & f.mask) <= f.rank);
                tight_somewhere |= popcount(b & f.mask) == f.rank;
            }
            if (f.is_flacet) CHECK(tight_somewhere);
        }
    }
}

TEST_CASE("lattice points in both flat systems are exactly the base-cobases") {
    for (const Matroid& m : {uniform_matroid(4, 2), k4(), extended_u24()}) {
        const int n = m.size();
        const int r = m.rank();
        REQUIRE(n == 2 * r);
        auto fm = flats(m);
        auto fd = flats(dual(m));
        auto bc = base_cobases(m);
        Mask s = first_subset_of_size(r);
        do {
            bool in_both = true;
            for (const auto& f : fm)
                if (popcount(s & f.mask) > f.rank) {
                    in_both = false;
                    break;
                }
            if (in_both)
                for (const auto& f : fd)
                    if (popcount(s & f.mask) > f.rank) {
                        in_both = false;
                        break;
                    }
            CHECK(in_both == bc.contains(s));
        } while (next_subset_same_size(s, n));
    }
}

TEST_CASE("matroidality of a bc-family matches identical self-duality") {
    for (const Matroid& m : {uniform_matroid(4, 2), uniform_matroid(6, 3), k4(),
                             extended_u24()}) {
        auto bc = base_cobases(m);
        if (bc.masks.empty()) continue;
        bool mat = check_mat(bc).verdict == Verdict::Holds;
        bool exchange = test_oracle::exchange_axiom_oracle(bc.masks, bc.n);
        CHECK(mat == exchange);
        if (mat) {
            Matroid nm = explicit_matroid(m.size(), bc.masks);
            CHECK(is_identically_self_dual(nm));
        }
    }
}
