#include "cobase/bcgraph.hpp"
#include "cobase/wheels.hpp"
#include "doctest.h"
#include "test_oracles.hpp"

using namespace cobase;

TEST_CASE("wheel, whirl and necklace base counts at n = 3") {
    // Spanning trees of the 3-wheel (= K4): 16, frozen from brute force.
    auto wheel_bases = enumerate_bases(wheel_matroid(3));
    CHECK(wheel_bases.masks.size() == 16);

    // The relaxation adds exactly the rim.
    auto whirl_bases = enumerate_bases(whirl_matroid(3));
    CHECK(whirl_bases.masks.size() == 17);
    CHECK(whirl_bases.contains(wheel_rim_mask(3)));
    CHECK(!wheel_bases.contains(wheel_rim_mask(3)));

    CHECK(enumerate_bases(necklace_matroid(3)).masks.size() == 17);
}

TEST_CASE("whirl oracle agrees with the explicit wheel-plus-rim family") {
    for (int n = 3; n <= 6; ++n) {
        auto fam = enumerate_bases(wheel_matroid(n)).masks;
        fam.push_back(wheel_rim_mask(n));
        Matroid by_list = explicit_matroid(2 * n, fam);
        Matroid by_relax = whirl_matroid(n);
        CHECK(enumerate_bases(by_relax).masks == enumerate_bases(by_list).masks);
        if (n <= 4)
            for (Mask a = 0; a <= full_mask(2 * n); ++a)
                CHECK(by_relax.rank(a) == by_list.rank(a));
    }
}

TEST_CASE("base-cobase counts follow the two-cube model") {
    for (int n = 3; n <= 10; ++n) {
        CHECK(base_cobases(wheel_matroid(n)).masks.size() ==
              static_cast<std::size_t>(2 * ((1 << n) - 2)));
        CHECK(base_cobases(whirl_matroid(n)).masks.size() ==
              static_cast<std::size_t>((1 << (n + 1)) - 2));
    }
}

TEST_CASE("exchange distances on wheels and whirls at small rank") {
    // Wheels are regular, so every base-cobase sits at full exchange
    // distance from its complement; verified by BFS rather than assumed.
    Matroid w4 = wheel_matroid(4);
    BCGraph g4 = build_bc_graph(w4);
    CHECK(check_scirc(w4, g4).verdict == Verdict::Holds);
    CHECK(check_circ(w4, g4).verdict == Verdict::Holds);
    CHECK(check_con(g4).verdict == Verdict::Holds);

    Matroid h5 = whirl_matroid(5);
    BCGraph g5 = build_bc_graph(h5);
    auto diam = check_diam(h5, g5);
    CHECK(diam.verdict == Verdict::Holds);
    CHECK(diam.witness["diameter"] == 5);
}

TEST_CASE("lean vectors and stitch targets") {
    CHECK(is_lean(0, 5));
    CHECK(is_lean(full_mask(5), 5));
    CHECK(is_lean(0b00110, 5));
    CHECK(is_lean(0b10011, 5));  // wraps around
    CHECK(!is_lean(0b10110, 5));

    // Block {1,2} in n=5: same, shifted, shrunk, grown.
    auto t = stitch_targets(0b00110, 5);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == 0b00110);
    CHECK(t[1] == 0b01100);
    CHECK(t[2] == 0b00100);
    CHECK(t[3] == 0b01110);

    // Singletons cannot shrink, co-singletons cannot grow.
    CHECK(stitch_targets(0b00010, 5).size() == 3);
    CHECK(stitch_targets(0b11011, 5).size() == 3);
}

TEST_CASE("the model bijection lands on base-cobases") {
    for (int n : {3, 4, 5}) {
        for (WWKind kind : {WWKind::Wheel, WWKind::Whirl}) {
            Matroid m = kind == WWKind::Wheel ? wheel_matroid(n) : whirl_matroid(n);
            auto bc = base_cobases(m);
            StitchedModel model = build_model(n, kind);
            CHECK(model.verts.size() == bc.masks.size());
            for (const auto& v : model.verts) CHECK(bc.contains(model_base(n, v)));
        }
    }
    // Named values: all spokes for the zero vector, the rim for all-ones.
    CHECK(model_base(4, ModelVertex{0, 0}) == complement(wheel_rim_mask(4), 8));
    CHECK(model_base(4, ModelVertex{full_mask(4), 0}) == wheel_rim_mask(4));
}

TEST_CASE("structure theorem: model equals the computed bc-graph") {
    for (int n = 3; n <= 6; ++n) {
        CHECK(verify_structure(n, WWKind::Wheel));
        CHECK(verify_structure(n, WWKind::Whirl));
    }
}

TEST_CASE("perturbed stitching rules are detected") {
    StitchedModel model = build_model(4, WWKind::Wheel);
    // Remove one stitching edge (a cross-copy pair).
    bool removed = false;
    for (std::size_t i = 0; i < model.verts.size() && !removed; ++i) {
        for (int j : model.adj[i]) {
            if (model.verts[i].copy == 1 &&
                model.verts[static_cast<std::size_t>(j)].copy == -1) {
                auto& ai = model.adj[i];
                auto& aj = model.adj[static_cast<std::size_t>(j)];
                ai.erase(std::find(ai.begin(), ai.end(), j));
                aj.erase(std::find(aj.begin(), aj.end(), static_cast<int>(i)));
                removed = true;
                break;
            }
        }
    }
    REQUIRE(removed);
    CHECK(!model_matches_bc_graph(model, wheel_matroid(4)));
}

TEST_CASE("stitching degrees follow the four rules") {
    for (int n : {3, 4, 5, 6}) {
        StitchedModel model = build_model(n, WWKind::Wheel);
        for (std::size_t i = 0; i < model.verts.size(); ++i) {
            const auto& v = model.verts[i];
            if (v.copy != 1 || !is_lean(v.bits, n)) continue;
            int stitched = 0;
            for (int j : model.adj[i])
                if (model.verts[static_cast<std::size_t>(j)].copy == -1) ++stitched;
            int len = popcount(v.bits);
            int expect = 4 - (len == 1) - (len == n - 1);
            CHECK(stitched == expect);
        }
    }
}

TEST_CASE("every stitched lean vertex lies in a triangle") {
    for (int n : {4, 5, 6}) {
        StitchedModel model = build_model(n, WWKind::Wheel);
        for (std::size_t i = 0; i < model.verts.size(); ++i) {
            const auto& v = model.verts[i];
            if (v.copy != 1 || !is_lean(v.bits, n)) continue;
            std::vector<int> partners;
            for (int j : model.adj[i])
                if (model.verts[static_cast<std::size_t>(j)].copy == -1) partners.push_back(j);
            bool triangle = false;
            for (std::size_t a = 0; a < partners.size() && !triangle; ++a)
                for (std::size_t b = a + 1; b < partners.size() && !triangle; ++b)
                    triangle = model.adjacent(partners[a], partners[b]);
            CHECK(triangle);
        }
    }
}

TEST_CASE("wheel and whirl bc-graphs are not bipartite") {
    for (int n : {3, 4, 5}) {
        CHECK(!two_coloring(build_bc_graph(wheel_matroid(n))).has_value());
        CHECK(!two_coloring(build_bc_graph(whirl_matroid(n))).has_value());
    }
}

TEST_CASE("model automorphisms preserve edges") {
    for (int n : {3, 4, 5}) {
        for (WWKind kind : {WWKind::Wheel, WWKind::Whirl}) {
            StitchedModel model = build_model(n, kind);
            for (std::size_t i = 0; i < model.verts.size(); ++i) {
                for (int j : model.adj[i]) {
                    int ci = model.index_of(auto_complement(n, model.verts[i]));
                    int cj = model.index_of(
                        auto_complement(n, model.verts[static_cast<std::size_t>(j)]));
                    REQUIRE(ci >= 0);
                    REQUIRE(cj >= 0);
                    CHECK(model.adjacent(ci, cj));
                    int ri = model.index_of(auto_reverse_swap(n, model.verts[i]));
                    int rj = model.index_of(
                        auto_reverse_swap(n, model.verts[static_cast<std::size_t>(j)]));
                    REQUIRE(ri >= 0);
                    REQUIRE(rj >= 0);
                    CHECK(model.adjacent(ri, rj));
                }
            }
        }
    }
}

TEST_CASE("distance between the two copies of the four-block vector") {
    for (int n : {3, 4, 5, 6}) {
        for (WWKind kind : {WWKind::Wheel, WWKind::Whirl}) {
            auto rep = verify_lower_bound(n, kind);
            CHECK(rep.matches);
            CHECK(rep.distance == 2 * (n / 4) + 1);
            if (n >= 4) CHECK(rep.exchange_lower_bound == 2);
        }
    }
}

TEST_CASE("necklaces are whirls under the identity map") {
    for (int n : {3, 4, 5}) CHECK(verify_necklace_iso(n));
    // The rim maps to the odd-labelled elements, which form a transversal.
    Matroid neck = necklace_matroid(4);
    CHECK(neck.rank(wheel_rim_mask(4)) == 4);
    CHECK(enumerate_bases(neck).contains(wheel_rim_mask(4)));
}

TEST_CASE("lean edge counts per coordinate") {
    for (int i = 1; i <= 4; ++i) CHECK(lean_edge_count(4, i) == 4);
    for (int i = 1; i <= 3; ++i) CHECK(lean_edge_count(3, i) == 2);
    CHECK(lean_edge_count(7, 5) == 10);
    for (int n : {5, 6})
        for (int i = 1; i <= n; ++i) CHECK(lean_edge_count(n, i) == 2 * (n - 2));
}
