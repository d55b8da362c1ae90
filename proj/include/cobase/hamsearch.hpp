#pragma once

// Pruned backtracking search for Hamiltonian paths and prescribed-endpoint
// path covers on small graphs (at most 512 vertices).
//
// The searcher prunes on remaining-degree, forced moves (a neighbor whose
// only other connection is the current vertex must be taken immediately),
// connectivity of the unvisited region, and a parity balance test when the
// host is bipartite.  Path covers and forced edges reduce to plain
// Hamiltonian path search on an augmented graph: a forced edge becomes a
// degree-2 subdivision vertex, and consecutive endpoint pairs are joined
// by degree-2 connector vertices.
//
// Every result is re-checked by `check_cover`, an independent validator
// that only consults a caller-supplied adjacency oracle.

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace cobase {

struct Bits512 {
    static constexpr int kWords = 8;
    static constexpr int kCapacity = 512;
    std::array<std::uint64_t, kWords> w{};

    void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const {
        return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
    }
    int count() const;
    bool any() const;
    bool intersects(const Bits512& o) const;
    bool subset_of(const Bits512& o) const;

    Bits512& operator|=(const Bits512& o);
    Bits512& operator&=(const Bits512& o);
    Bits512 and_not(const Bits512& o) const;

    template <typename Fn>
    void for_each(Fn fn) const {
        for (int wi = 0; wi < kWords; ++wi) {
            std::uint64_t x = w[static_cast<std::size_t>(wi)];
            while (x) {
                int b = std::countr_zero(x);
                x &= x - 1;
                fn((wi << 6) | b);
            }
        }
    }
};

struct SearchGraph {
    int n = 0;
    std::vector<Bits512> adj;

    explicit SearchGraph(int num_vertices = 0);
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return adj[static_cast<std::size_t>(u)].test(v); }
    int degree(int v) const { return adj[static_cast<std::size_t>(v)].count(); }
};

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000;
    std::uint32_t seed = 0;
};

struct HamResult {
    bool found = false;
    bool exhausted = false;  // search space fully explored (proof of absence)
    std::vector<int> path;
    std::uint64_t nodes = 0;
};

// Hamiltonian s-t path covering every vertex of g except `excluded`.
HamResult find_ham_path(const SearchGraph& g, int s, int t, const Bits512& excluded,
                        const SearchOptions& opt = {});
HamResult find_ham_path(const SearchGraph& g, int s, int t, const SearchOptions& opt = {});

// A set of vertex-disjoint paths with declared endpoints that jointly cover
// the host minus the forbidden vertices exactly once.
struct PathCover {
    std::vector<std::vector<int>> paths;
    std::vector<std::pair<int, int>> declared_endpoints;
    std::vector<std::pair<int, int>> forced_edges;
    std::vector<int> forbidden;
};

struct CoverRequest {
    std::vector<std::pair<int, int>> pairs;  // endpoints of path i
    std::vector<std::pair<int, int>> forced_edges;
    std::vector<int> excluded;
};

struct CoverResult {
    bool found = false;
    bool exhausted = false;
    PathCover cover;
    std::uint64_t nodes = 0;
};

CoverResult find_path_cover(const SearchGraph& g, const CoverRequest& req,
                            const SearchOptions& opt = {});

// Independent validator: adjacency of consecutive vertices, vertex
// disjointness, exact coverage of {0..host_size-1} minus forbidden,
// declared endpoints, and presence of each forced edge.  Returns an empty
// string when the cover is valid, else a diagnostic.
std::string check_cover(const std::function<bool(int, int)>& adjacent, int host_size,
                        const PathCover& cover);

}  // namespace cobase
