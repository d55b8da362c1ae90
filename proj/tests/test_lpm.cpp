#include <random>

#include "cobase/bcgraph.hpp"
#include "cobase/lpm.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace cobase;

namespace {

// Independent path oracle: scan all r-subsets and keep those whose prefix
// heights stay inside the band.
std::vector<Mask> band_paths_oracle(const LatticePathPair& p) {
    std::vector<Mask> out;
    Mask s = first_subset_of_size(p.r);
    auto hu = prefix_heights(p.upper, p.steps());
    auto hl = prefix_heights(p.lower, p.steps());
    do {
        int h = 0;
        bool ok = true;
        for (int i = 1; i <= p.steps() && ok; ++i) {
            h += test_bit(s, i - 1);
            ok = h >= hl[static_cast<std::size_t>(i)] && h <= hu[static_cast<std::size_t>(i)];
        }
        if (ok) out.push_back(s);
    } while (next_subset_same_size(s, p.steps()));
    return out;
}

LatticePathPair random_block_pair(std::mt19937& rng, int r) {
    auto random_path = [&](int len, int norths) {
        std::vector<int> steps(static_cast<std::size_t>(len), 0);
        for (int i = 0; i < norths; ++i) steps[static_cast<std::size_t>(i)] = 1;
        std::shuffle(steps.begin(), steps.end(), rng);
        Mask m = 0;
        for (int i = 0; i < len; ++i)
            if (steps[static_cast<std::size_t>(i)]) m |= bit(i);
        return m;
    };
    Mask a = random_path(2 * r, r);
    Mask b = random_path(2 * r, r);
    auto ha = prefix_heights(a, 2 * r);
    auto hb = prefix_heights(b, 2 * r);
    std::vector<int> hu(ha.size()), hl(ha.size());
    for (std::size_t i = 0; i < ha.size(); ++i) {
        hu[i] = std::max(ha[i], hb[i]);
        hl[i] = std::min(ha[i], hb[i]);
    }
    Mask upper = 0, lower = 0;
    for (std::size_t i = 1; i < hu.size(); ++i) {
        if (hu[i] == hu[i - 1] + 1) upper |= bit(static_cast<int>(i) - 1);
        if (hl[i] == hl[i - 1] + 1) lower |= bit(static_cast<int>(i) - 1);
    }
    return make_path_pair(r, r, upper, lower);
}

}  // namespace

TEST_CASE("degenerate diagram has exactly one base") {
    auto p = make_path_pair("NENE", "NENE");
    CHECK(lpm_bases(p) == std::vector<Mask>{0b0101});
}

TEST_CASE("the full square is the uniform matroid") {
    auto p = make_path_pair("NNEE", "EENN");
    auto bases = lpm_bases(p);
    CHECK(bases.size() == 6);
    CHECK(bases == enumerate_bases(uniform_matroid(4, 2)).masks);
}

TEST_CASE("band diagrams match the subset-scan oracle") {
    for (auto [u, l] : {std::pair<const char*, const char*>{"NENENE", "ENENEN"},
                        {"NNEENE", "ENEENN"},
                        {"NNNEEE", "ENENEN"}}) {
        auto p = make_path_pair(u, l);
        CHECK(lpm_bases(p) == band_paths_oracle(p));
        CHECK(lpm_base_count(p) == band_paths_oracle(p).size());
    }
}

TEST_CASE("invalid pairs are rejected") {
    CHECK_THROWS_AS(make_path_pair("ENNE", "NEEN"), std::invalid_argument);  // upper dips below
    CHECK_THROWS_AS(make_path_pair("NNEE", "EENE"), std::invalid_argument);  // wrong step count
    CHECK_THROWS_AS(make_path_pair("NXEE", "EENN"), std::invalid_argument);  // bad alphabet
}

TEST_CASE("duality is reflection") {
    auto square = make_path_pair("NNEE", "EENN");
    CHECK(lpm_dual(square) == square);

    auto stair = make_path_pair("NNENEE", "ENENEN");
    CHECK(lpm_dual(lpm_dual(stair)) == stair);

    // Base family of the dual diagram = complement family of the primal.
    auto primal = lpm_bases(stair);
    auto dual_bases = lpm_bases(lpm_dual(stair));
    CHECK(dual_bases == test_oracle::complement_family(primal, stair.steps()));
    CHECK(enumerate_bases(dual(lpm_matroid(stair))).masks == dual_bases);
}

TEST_CASE("envelope of the full square is the full square") {
    auto square = make_path_pair("NNEE", "EENN");
    auto env = bc_envelope(square);
    REQUIRE(env.has_value());
    CHECK(*env == square);
    CHECK(base_cobases(lpm_matroid(square)).masks == lpm_bases(*env));
}

TEST_CASE("degenerate square has empty base-cobase family") {
    auto p = make_path_pair("NNEE", "NNEE");
    CHECK(!bc_envelope(p).has_value());
    CHECK(base_cobases(lpm_matroid(p)).masks.empty());
}

TEST_CASE("envelope equals the base-cobase family on a staircase") {
    auto stair = make_path_pair("NNENEE", "ENENEN");
    auto env = bc_envelope(stair);
    REQUIRE(env.has_value());
    CHECK(base_cobases(lpm_matroid(stair)).masks == lpm_bases(*env));
}

TEST_CASE("envelope is idempotent") {
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        auto p = random_block_pair(rng, 2 + it % 5);
        auto env = bc_envelope(p);
        if (!env) continue;
        auto env2 = bc_envelope(*env);
        REQUIRE(env2.has_value());
        CHECK(*env2 == *env);
    }
}

TEST_CASE("randomized square diagrams: envelope bases are the base-cobases") {
    std::mt19937 rng(99);
    int nonempty = 0;
    for (int it = 0; it < 12; ++it) {
        auto p = random_block_pair(rng, 2 + it % 6);
        Matroid m = lpm_matroid(p);
        auto bc = base_cobases(m);
        auto env = bc_envelope(p);
        if (!env) {
            CHECK(bc.masks.empty());
            continue;
        }
        ++nonempty;
        CHECK(bc.masks == lpm_bases(*env));
        if (!bc.masks.empty()) CHECK(check_mat(bc).verdict == Verdict::Holds);
    }
    CHECK(nonempty > 0);
}

TEST_CASE("series-parallel towers factor and stay matroidal") {
    // Tower over the U_{2,4} square: one parallel + one series extension.
    Matroid core = lpm_matroid(make_path_pair("NNEE", "EENN"));
    Matroid tower = series_extend(parallel_extend(core, 0), 1);
    auto rep = verify_spex_preservation(tower);
    CHECK(rep.block);
    CHECK(rep.peel_agrees);
    CHECK(rep.mat_holds);
    CHECK(rep.peeled_steps >= 1);

    // A series-parallel graphic block matroid: C4 with two opposite edges
    // doubled.
    Matroid sp = graphic_matroid(
        4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}, {2, 3}});
    auto sp_rep = verify_spex_preservation(sp);
    CHECK(sp_rep.block);
    CHECK(sp_rep.peel_agrees);
    CHECK(sp_rep.mat_holds);

    // Wheels are not series-parallel: peeling finds no 2-(co)circuits and
    // the family is not matroidal.
    Matroid wheel3 = graphic_matroid(
        4, {{1, 2}, {0, 1}, {2, 3}, {0, 2}, {3, 1}, {0, 3}});
    auto w_rep = verify_spex_preservation(wheel3);
    CHECK(w_rep.block);
    CHECK(w_rep.peeled_steps == 0);
    CHECK(w_rep.peel_agrees);
    CHECK(!w_rep.mat_holds);

    // Odd ground sets are vacuous.
    auto odd = verify_spex_preservation(parallel_extend(core, 0));
    CHECK(odd.vacuous);
}
