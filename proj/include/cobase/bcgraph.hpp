#pragma once

// Base graphs and base-cobase graphs: vertices are subset masks, adjacency
// is "symmetric difference has size 2".  Includes BFS utilities and the
// graph-level property checkers (connectivity, exchange distance to the
// complement, diameter, Hamiltonian connectivity, matroidality of a
// family).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobase/hamsearch.hpp"
#include "cobase/matroid.hpp"

#include "json.hpp"

namespace cobase {

enum class GraphKind { BaseGraph, BaseCobaseGraph };

struct BCGraph {
    GraphKind kind = GraphKind::BaseGraph;
    int ground_size = 0;
    std::vector<Mask> vertices;              // increasing
    std::vector<std::vector<int>> adj;       // sorted neighbor indices

    int index_of(Mask m) const;              // -1 if absent
    std::size_t num_vertices() const { return vertices.size(); }
    std::size_t num_edges() const;
    bool operator==(const BCGraph&) const = default;
};

BCGraph graph_from_family(GraphKind kind, const BaseFamily& family);
BCGraph build_base_graph(const Matroid& m, std::uint64_t budget = kDefaultEnumBudget);
BCGraph build_bc_graph(const Matroid& m, std::uint64_t budget = kDefaultEnumBudget);

std::vector<int> bfs_distances(const BCGraph& g, int src);
// -1 when unreachable.
int distance(const BCGraph& g, int src, int dst);
// Largest finite eccentricity; -1 on a disconnected graph.
int diameter(const BCGraph& g);
// 2-coloring attempt; returns colors or nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_coloring(const BCGraph& g);

// True iff g is isomorphic to the hypercube of dimension log2 |V|, decided
// by canonical relabeling from BFS layers.
bool is_hypercube(const BCGraph& g);

// Product on concatenated masks; matches the graph of a direct sum.
BCGraph cartesian_product(const BCGraph& a, const BCGraph& b);

SearchGraph to_search_graph(const BCGraph& g);

// --- property reports --------------------------------------------------------

enum class Property { Con, Circ, SCirc, Diam, Poly, Ham, Mat };
enum class Verdict { Holds, Fails, Unknown };

struct PropertyReport {
    Property property;
    Verdict verdict = Verdict::Unknown;
    nlohmann::json witness;       // failure witness / certificate details
    std::int64_t elapsed_ms = 0;
    std::uint64_t nodes_expanded = 0;
};

std::string property_name(Property p);
std::string verdict_name(Verdict v);

PropertyReport check_con(const BCGraph& g);
PropertyReport check_circ(const Matroid& m, const BCGraph& g);
PropertyReport check_scirc(const Matroid& m, const BCGraph& g);
PropertyReport check_diam(const Matroid& m, const BCGraph& g);
// Measured diameter only; no verdict beyond Unknown.
PropertyReport check_poly(const BCGraph& g);

struct HamCheckOptions {
    std::size_t all_pairs_cap = 100;   // largest |V| for exhaustive all-pairs search
    std::uint64_t node_budget = 10'000'000;
    std::uint32_t seed = 0;
    int threads = 1;
};

// Holds iff a Hamiltonian path exists between every vertex pair, or the
// graph is a hypercube.  Bipartite graphs on >= 3 vertices fail with the
// two-coloring as witness.
PropertyReport check_ham(const BCGraph& g, const HamCheckOptions& opt = {});

// Holds iff the family satisfies the basis exchange axiom; the family then
// is the base family of a matroid, returned inside the witness.
PropertyReport check_mat(const BaseFamily& family);

// Plain boolean core of check_mat, reused by other modules.
bool exchange_axiom_holds(const BaseFamily& family);

}  // namespace cobase
