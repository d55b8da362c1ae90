#include <random>

#include "cobase/matroid.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace cobase;

namespace {

const std::vector<std::pair<int, int>> k4_edges = {
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

Matroid k4() { return graphic_matroid(4, k4_edges); }

// The six 2-subsets of a 4-set, for hand checks against U_{2,4}.
const std::vector<Mask> u24_bases = {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100};

}  // namespace

TEST_CASE("rank oracle dispatch on the named examples") {
    CHECK(uniform_matroid(4, 2).rank(0b0111) == 2);

    CHECK(k4().rank(full_mask(6)) == 3);
    // Independent route: DFS component count.
    for (Mask a = 0; a < 64; ++a)
        CHECK(k4().rank(a) == test_oracle::graphic_rank_oracle(4, k4_edges, a));

    // Dual rank against the complement-family definition.
    Matroid du = dual(uniform_matroid(4, 2));
    auto cobases = test_oracle::complement_family(u24_bases, 4);
    CHECK(du.rank(0b0111) == 2);
    for (Mask a = 0; a < 16; ++a)
        CHECK(du.rank(a) == test_oracle::family_rank_oracle(cobases, a));
}

TEST_CASE("rank rejects out-of-range masks") {
    CHECK_THROWS_AS((void)uniform_matroid(4, 2).rank(Mask{1} << 10), std::domain_error);
}

TEST_CASE("gf2 rank agrees with column elimination oracle") {
    // 3x5 parity-check style matrix.
    std::vector<Mask> rows = {0b10011, 0b01010, 0b00111};
    Matroid m = gf2_matroid(5, rows);
    std::vector<std::uint32_t> cols(5);
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 3; ++i)
            if (test_bit(rows[static_cast<std::size_t>(i)], j))
                cols[static_cast<std::size_t>(j)] |= 1u << i;
    for (Mask a = 0; a < 32; ++a)
        CHECK(m.rank(a) == test_oracle::gf2_column_rank_oracle(cols, a));
}

TEST_CASE("transversal rank via matching") {
    // Two overlapping intervals on 4 elements: rank 2 overall.
    Matroid m = transversal_matroid(4, {0b0111, 0b1110});
    CHECK(m.rank() == 2);
    CHECK(m.rank(0b0010) == 1);
    CHECK(m.rank(0b0110) == 2);
    CHECK(m.rank(0b1001) == 2);
}

TEST_CASE("enumerate_bases") {
    CHECK(enumerate_bases(uniform_matroid(2, 1)).masks == std::vector<Mask>{1, 2});

    // Spanning trees of K4: brute-force count frozen at 16.
    auto fam = enumerate_bases(k4());
    auto expect = test_oracle::enumerate_bases_oracle(6, 3, [&](Mask s) {
        return test_oracle::graphic_rank_oracle(4, k4_edges, s);
    });
    CHECK(fam.masks.size() == 16);
    CHECK(fam.masks == expect);
    CHECK(std::is_sorted(fam.masks.begin(), fam.masks.end()));

    CHECK_THROWS_AS(enumerate_bases(uniform_matroid(40, 20)), BudgetError);
}

TEST_CASE("base_cobases") {
    CHECK(base_cobases(uniform_matroid(2, 1)).masks == std::vector<Mask>{1, 2});

    // Non-block sizes give the empty family.
    CHECK(base_cobases(uniform_matroid(5, 2)).masks.empty());

    auto bc = base_cobases(k4());
    for (Mask b : bc.masks) CHECK(bc.contains(complement(b, 6)));
    // Star trees have cycle complements, so not every tree qualifies.
    CHECK(bc.masks.size() < 16);
    CHECK(!bc.masks.empty());
}

TEST_CASE("dual, sum, minor behave per the standard formulas") {
    Matroid u = uniform_matroid(4, 2);
    CHECK(enumerate_bases(dual(u)).masks == u24_bases);

    Matroid s = direct_sum(uniform_matroid(2, 1), uniform_matroid(2, 1));
    CHECK(enumerate_bases(s).masks.size() == 4);

    // Contractions of K4: 8 spanning trees, checked by brute force.
    Matroid con = minor(k4(), bit(0), 0);
    std::vector<std::pair<int, int>> merged = {{0, 2}, {0, 3}, {0, 2}, {0, 3}, {2, 3}};
    auto expect = test_oracle::enumerate_bases_oracle(5, 2, [&](Mask s2) {
        return test_oracle::graphic_rank_oracle(4, merged, s2);
    });
    CHECK(enumerate_bases(con).masks == expect);
    CHECK(expect.size() == 8);

    CHECK_THROWS_AS(minor(k4(), 0b11, 0b10), std::invalid_argument);

    // dual(dual(M)) has the same oracle on every mask.
    Matroid dd = dual(dual(k4()));
    for (Mask a = 0; a < 64; ++a) CHECK(dd.rank(a) == k4().rank(a));
}

TEST_CASE("series and parallel extension") {
    Matroid one = uniform_matroid(1, 1);
    Matroid par = parallel_extend(one, 0);
    CHECK(enumerate_bases(par).masks == std::vector<Mask>{1, 2});

    // Series extension of U_{1,2} at element 0: both original elements are
    // parallel, so the result is U_{2,3} and {0,2} is a 2-cocircuit.
    Matroid ser = series_extend(uniform_matroid(2, 1), 0);
    CHECK(ser.size() == 3);
    CHECK(ser.rank() == 2);
    CHECK(enumerate_bases(ser).masks == std::vector<Mask>{0b011, 0b101, 0b110});
    CHECK(dual(ser).rank(0b101) == 1);  // {0,2} is a cocircuit

    // Contracting the new element undoes a series extension.
    Matroid back = minor(ser, bit(2), 0);
    CHECK(enumerate_bases(back).masks == enumerate_bases(uniform_matroid(2, 1)).masks);

    // Deleting the new element undoes a parallel extension.
    Matroid par2 = parallel_extend(uniform_matroid(4, 2), 1);
    Matroid del = minor(par2, 0, bit(4));
    CHECK(enumerate_bases(del).masks == enumerate_bases(uniform_matroid(4, 2)).masks);

    CHECK_THROWS_AS(parallel_extend(one, 3), std::invalid_argument);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(uniform_matroid(4, 2)));
    CHECK(!is_connected(direct_sum(uniform_matroid(2, 1), uniform_matroid(2, 1))));
    CHECK(is_connected(k4()));
}

TEST_CASE("relaxation of a circuit-hyperplane adds exactly one base") {
    // In K4 every triangle is a circuit-hyperplane.
    Mask triangle = 0b001011;  // edges 01, 02, 12
    CHECK(k4().rank(triangle) == 2);
    Matroid relaxed = relax_circuit_hyperplane(k4(), triangle);
    auto before = enumerate_bases(k4()).masks;
    auto after = enumerate_bases(relaxed).masks;
    CHECK(after.size() == before.size() + 1);
    CHECK(std::binary_search(after.begin(), after.end(), triangle));

    CHECK_THROWS_AS(relax_circuit_hyperplane(k4(), 0b000111), std::invalid_argument);
}

TEST_CASE("rank axioms hold on random triples for every family") {
    std::mt19937 rng(12345);
    std::vector<Matroid> fams = {
        uniform_matroid(7, 3),
        k4(),
        gf2_matroid(6, {0b110101, 0b011011, 0b101110}),
        transversal_matroid(6, {0b000111, 0b011100, 0b110001}),
        dual(k4()),
        direct_sum(uniform_matroid(3, 1), uniform_matroid(3, 2)),
        minor(k4(), bit(5), bit(0)),
        parallel_extend(uniform_matroid(4, 2), 2),
        series_extend(k4(), 1),
    };
    for (const Matroid& m : fams) {
        const int n = m.size();
        CHECK(m.rank(0) == 0);
        for (int it = 0; it < 1000; ++it) {
            Mask a = test_oracle::random_mask(rng, n);
            Mask b = test_oracle::random_mask(rng, n);
            int ra = m.rank(a), rb = m.rank(b);
            CHECK(ra <= popcount(a));
            // Monotone + unit increase.
            std::uniform_int_distribution<int> pick(0, n - 1);
            int e = pick(rng);
            int rae = m.rank(a | bit(e));
            CHECK(rae >= ra);
            CHECK(rae <= ra + 1);
            // Submodular.
            CHECK(m.rank(a | b) + m.rank(a & b) <= ra + rb);
        }
    }
}

TEST_CASE("duality and exchange properties of the enumerated families") {
    std::vector<Matroid> fams = {
        uniform_matroid(6, 3),
        k4(),
        transversal_matroid(6, {0b000111, 0b011100, 0b110001}),
        gf2_matroid(6, {0b110101, 0b011011, 0b101110}),
        direct_sum(uniform_matroid(2, 1), k4()),
    };
    for (const Matroid& m : fams) {
        auto fam = enumerate_bases(m);
        auto dual_fam = enumerate_bases(dual(m));
        CHECK(dual_fam.masks == test_oracle::complement_family(fam.masks, m.size()));
        CHECK(test_oracle::exchange_axiom_oracle(fam.masks, m.size()));
        CHECK(base_cobases(m).masks == base_cobases(dual(m)).masks);
    }
}

TEST_CASE("two-element circuits factor out of the base-cobase family") {
    // For a block matroid with 2-circuit {e,f}: the base-cobases coincide
    // with those of U_{1,2} on {e,f} summed with the contraction, after
    // putting the sum's ground set back in the original positions.
    auto check_factor = [](const Matroid& m, int e, int f) {
        REQUIRE(m.size() == 2 * m.rank());
        REQUIRE(m.rank(bit(e) | bit(f)) == 1);
        auto bc = base_cobases(m);
        Matroid contracted = minor(m, bit(e) | bit(f), 0);
        auto inner = base_cobases(contracted);
        // Lift a mask over E \ {e,f} to original positions.
        std::vector<int> keep;
        for (int i = 0; i < m.size(); ++i)
            if (i != e && i != f) keep.push_back(i);
        std::vector<Mask> lifted;
        for (Mask s : inner.masks) {
            Mask base = 0;
            for (int i = 0; i < static_cast<int>(keep.size()); ++i)
                if (test_bit(s, i)) base |= bit(keep[static_cast<std::size_t>(i)]);
            lifted.push_back(base | bit(e));
            lifted.push_back(base | bit(f));
        }
        std::sort(lifted.begin(), lifted.end());
        CHECK(bc.masks == lifted);
    };

    // Parallel then series extension keeps |E| = 2r and plants a 2-circuit.
    Matroid t1 = series_extend(parallel_extend(uniform_matroid(4, 2), 0), 1);
    check_factor(t1, 0, 4);

    Matroid t2 = series_extend(parallel_extend(k4(), 3), 0);
    check_factor(t2, 3, 6);
}
