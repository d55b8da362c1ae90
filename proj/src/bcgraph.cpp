#include "cobase/bcgraph.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <queue>
#include <thread>
#include <unordered_map>

namespace cobase {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

}  // namespace

int BCGraph::index_of(Mask m) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
    if (it == vertices.end() || *it != m) return -1;
    return static_cast<int>(it - vertices.begin());
}

std::size_t BCGraph::num_edges() const {
    std::size_t deg = 0;
    for (const auto& a : adj) deg += a.size();
    return deg / 2;
}

BCGraph graph_from_family(GraphKind kind, const BaseFamily& family) {
    BCGraph g;
    g.kind = kind;
    g.ground_size = family.n;
    g.vertices = family.masks;
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
    const int nv = static_cast<int>(g.vertices.size());
    g.adj.assign(static_cast<std::size_t>(nv), {});
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (popcount(g.vertices[static_cast<std::size_t>(i)] ^
                         g.vertices[static_cast<std::size_t>(j)]) == 2) {
                g.adj[static_cast<std::size_t>(i)].push_back(j);
                g.adj[static_cast<std::size_t>(j)].push_back(i);
            }
    return g;
}

BCGraph build_base_graph(const Matroid& m, std::uint64_t budget) {
    return graph_from_family(GraphKind::BaseGraph, enumerate_bases(m, budget));
}

BCGraph build_bc_graph(const Matroid& m, std::uint64_t budget) {
    return graph_from_family(GraphKind::BaseCobaseGraph, base_cobases(m, budget));
}

std::vector<int> bfs_distances(const BCGraph& g, int src) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int distance(const BCGraph& g, int src, int dst) {
    if (src == dst) return 0;
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                if (w == dst) return dist[static_cast<std::size_t>(w)];
                queue.push_back(w);
            }
        }
    }
    return -1;
}

int diameter(const BCGraph& g) {
    int best = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        auto dist = bfs_distances(g, static_cast<int>(v));
        for (int d : dist) {
            if (d < 0) return -1;
            best = std::max(best, d);
        }
    }
    return best;
}

std::optional<std::vector<int>> two_coloring(const BCGraph& g) {
    std::vector<int> color(g.num_vertices(), -1);
    for (std::size_t s = 0; s < g.num_vertices(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{static_cast<int>(s)};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : g.adj[static_cast<std::size_t>(v)]) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_hypercube(const BCGraph& g) {
    const std::size_t nv = g.num_vertices();
    if (nv == 0 || (nv & (nv - 1)) != 0) return false;
    int d = std::countr_zero(nv);
    if (nv == 1) return true;
    for (const auto& a : g.adj)
        if (static_cast<int>(a.size()) != d) return false;
    if (g.num_edges() != nv / 2 * static_cast<std::size_t>(d)) return false;

    // Assign cube labels by BFS from vertex 0: neighbors get single bits,
    // later vertices the OR of their already-labelled neighbors.
    std::vector<std::uint64_t> label(nv, 0);
    std::vector<int> dist(nv, -1);
    dist[0] = 0;
    std::vector<int> queue{0};
    int next_bit = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.adj[static_cast<std::size_t>(v)]) {
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                if (dist[static_cast<std::size_t>(w)] == 1)
                    label[static_cast<std::size_t>(w)] = std::uint64_t{1} << next_bit++;
                queue.push_back(w);
            }
        }
    }
    if (queue.size() != nv || next_bit != d) return false;
    for (int v : queue) {
        if (dist[static_cast<std::size_t>(v)] < 2) continue;
        std::uint64_t lab = 0;
        int below = 0;
        for (int w : g.adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1) {
                lab |= label[static_cast<std::size_t>(w)];
                ++below;
            }
        if (below != dist[static_cast<std::size_t>(v)]) return false;
        if (std::popcount(lab) != dist[static_cast<std::size_t>(v)]) return false;
        label[static_cast<std::size_t>(v)] = lab;
    }
    // Labels must be a bijection onto {0,1}^d and every edge a cube edge.
    std::vector<std::uint64_t> sorted = label;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < nv; ++i)
        if (sorted[i] != i) return false;
    for (std::size_t v = 0; v < nv; ++v)
        for (int w : g.adj[v])
            if (std::popcount(label[v] ^ label[static_cast<std::size_t>(w)]) != 1) return false;
    return true;
}

BCGraph cartesian_product(const BCGraph& a, const BCGraph& b) {
    if (a.ground_size + b.ground_size > kMaxGround)
        throw std::invalid_argument("product exceeds 64 ground elements");
    BCGraph g;
    g.kind = (a.kind == b.kind) ? a.kind : GraphKind::BaseGraph;
    g.ground_size = a.ground_size + b.ground_size;
    const int na = static_cast<int>(a.num_vertices());
    const int nb = static_cast<int>(b.num_vertices());
    std::vector<std::pair<Mask, std::pair<int, int>>> order;
    order.reserve(static_cast<std::size_t>(na) * static_cast<std::size_t>(nb));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            order.push_back({a.vertices[static_cast<std::size_t>(i)] |
                                 (b.vertices[static_cast<std::size_t>(j)] << a.ground_size),
                             {i, j}});
    std::sort(order.begin(), order.end());
    std::vector<std::vector<int>> pos(static_cast<std::size_t>(na),
                                      std::vector<int>(static_cast<std::size_t>(nb)));
    g.vertices.reserve(order.size());
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        g.vertices.push_back(order[idx].first);
        pos[static_cast<std::size_t>(order[idx].second.first)]
           [static_cast<std::size_t>(order[idx].second.second)] = static_cast<int>(idx);
    }
    g.adj.assign(order.size(), {});
    for (std::size_t idx = 0; idx < order.size(); ++idx) {
        auto [i, j] = order[idx].second;
        for (int i2 : a.adj[static_cast<std::size_t>(i)])
            g.adj[idx].push_back(pos[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j)]);
        for (int j2 : b.adj[static_cast<std::size_t>(j)])
            g.adj[idx].push_back(pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)]);
        std::sort(g.adj[idx].begin(), g.adj[idx].end());
    }
    return g;
}

SearchGraph to_search_graph(const BCGraph& g) {
    SearchGraph s(static_cast<int>(g.num_vertices()));
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        for (int w : g.adj[v])
            if (w > static_cast<int>(v)) s.add_edge(static_cast<int>(v), w);
    return s;
}

// --- reports -----------------------------------------------------------------

std::string property_name(Property p) {
    switch (p) {
        case Property::Con: return "Con";
        case Property::Circ: return "Circ";
        case Property::SCirc: return "SCirc";
        case Property::Diam: return "Diam";
        case Property::Poly: return "Poly";
        case Property::Ham: return "Ham";
        case Property::Mat: return "Mat";
    }
    return "?";
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Fails: return "Fails";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

PropertyReport check_con(const BCGraph& g) {
    auto t0 = Clock::now();
    PropertyReport rep{Property::Con, Verdict::Holds, {}, 0, 0};
    if (g.num_vertices() == 0) {
        rep.verdict = Verdict::Fails;
        rep.witness["reason"] = "empty graph";
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }
    auto dist = bfs_distances(g, 0);
    for (std::size_t v = 0; v < dist.size(); ++v) {
        if (dist[v] < 0) {
            rep.verdict = Verdict::Fails;
            rep.witness["component_a"] = mask_to_string(g.vertices[0], g.ground_size);
            rep.witness["component_b"] = mask_to_string(g.vertices[v], g.ground_size);
            break;
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

namespace {

// Distances from every vertex to its complement vertex; -2 when the
// complement is missing (never happens for genuine base-cobase graphs).
std::vector<int> complement_distances(const BCGraph& g) {
    std::vector<int> out(g.num_vertices(), -2);
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        int cv = g.index_of(complement(g.vertices[v], g.ground_size));
        if (cv >= 0) out[v] = distance(g, static_cast<int>(v), cv);
    }
    return out;
}

}  // namespace

PropertyReport check_circ(const Matroid& m, const BCGraph& g) {
    auto t0 = Clock::now();
    PropertyReport rep{Property::Circ, Verdict::Fails, {}, 0, 0};
    if (g.num_vertices() == 0) throw std::invalid_argument("check_circ: empty graph");
    const int r = m.rank();
    auto dists = complement_distances(g);
    for (std::size_t v = 0; v < dists.size(); ++v) {
        if (dists[v] == r) {
            rep.verdict = Verdict::Holds;
            rep.witness["base"] = mask_to_string(g.vertices[v], g.ground_size);
            break;
        }
    }
    if (rep.verdict == Verdict::Fails) rep.witness["distances"] = dists;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

PropertyReport check_scirc(const Matroid& m, const BCGraph& g) {
    auto t0 = Clock::now();
    PropertyReport rep{Property::SCirc, Verdict::Holds, {}, 0, 0};
    if (g.num_vertices() == 0) throw std::invalid_argument("check_scirc: empty graph");
    const int r = m.rank();
    auto dists = complement_distances(g);
    for (std::size_t v = 0; v < dists.size(); ++v) {
        if (dists[v] != r) {
            rep.verdict = Verdict::Fails;
            rep.witness["base"] = mask_to_string(g.vertices[v], g.ground_size);
            rep.witness["distance"] = dists[v];
            rep.witness["rank"] = r;
            break;
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

PropertyReport check_diam(const Matroid& m, const BCGraph& g) {
    auto t0 = Clock::now();
    PropertyReport rep{Property::Diam, Verdict::Holds, {}, 0, 0};
    if (g.num_vertices() == 0) throw std::invalid_argument("check_diam: empty graph");
    const int r = m.rank();
    int diam = diameter(g);
    rep.witness["diameter"] = diam;
    rep.witness["rank"] = r;
    if (diam != r) rep.verdict = Verdict::Fails;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

PropertyReport check_poly(const BCGraph& g) {
    auto t0 = Clock::now();
    PropertyReport rep{Property::Poly, Verdict::Unknown, {}, 0, 0};
    rep.witness["diameter"] = g.num_vertices() ? diameter(g) : -1;
    rep.witness["note"] = "measured diameter only; no asymptotic claim from one instance";
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

PropertyReport check_ham(const BCGraph& g, const HamCheckOptions& opt) {
    auto t0 = Clock::now();
    PropertyReport rep{Property::Ham, Verdict::Unknown, {}, 0, 0};
    const std::size_t nv = g.num_vertices();
    if (nv == 0) throw std::invalid_argument("check_ham: empty graph");

    if (is_hypercube(g)) {
        rep.verdict = Verdict::Holds;
        rep.witness["hypercube"] = true;
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }
    if (nv >= 3) {
        if (auto coloring = two_coloring(g)) {
            // Same-colored pairs cannot be joined by a Hamiltonian path of
            // even order; with |V| >= 3 some such pair exists.
            rep.verdict = Verdict::Fails;
            rep.witness["bipartite"] = true;
            rep.witness["coloring"] = *coloring;
            int sizes[2] = {0, 0};
            for (int col : *coloring) ++sizes[col];
            rep.witness["bipartition_sizes"] = {sizes[0], sizes[1]};
            int a = -1, b = -1;
            for (std::size_t v = 1; v < nv && b < 0; ++v)
                if ((*coloring)[v] == (*coloring)[0]) b = static_cast<int>(v);
            if (b < 0) {
                for (std::size_t v = 1; v < nv && b < 0; ++v)
                    for (std::size_t u = v + 1; u < nv && b < 0; ++u)
                        if ((*coloring)[u] == (*coloring)[v]) {
                            a = static_cast<int>(v);
                            b = static_cast<int>(u);
                        }
            } else {
                a = 0;
            }
            rep.witness["pair"] = {mask_to_string(g.vertices[static_cast<std::size_t>(a)], g.ground_size),
                                   mask_to_string(g.vertices[static_cast<std::size_t>(b)], g.ground_size)};
            rep.elapsed_ms = ms_since(t0);
            return rep;
        }
    }
    if (nv > opt.all_pairs_cap) {
        rep.verdict = Verdict::Unknown;
        rep.witness["reason"] = "graph exceeds all-pairs search cap";
        rep.witness["cap"] = opt.all_pairs_cap;
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }

    SearchGraph sg = to_search_graph(g);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < static_cast<int>(nv); ++u)
        for (int v = u + 1; v < static_cast<int>(nv); ++v) pairs.emplace_back(u, v);

    struct PairOutcome {
        int status = 0;  // 0 ok, 1 no path, 2 budget, 3 checker rejected a found path
        std::uint64_t nodes = 0;
    };
    std::vector<PairOutcome> outcomes(pairs.size());
    int threads = std::max(1, opt.threads);
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            auto [u, v] = pairs[i];
            SearchOptions sopt{opt.node_budget, opt.seed};
            HamResult hr = find_ham_path(sg, u, v, sopt);
            outcomes[i].nodes = hr.nodes;
            if (hr.found) {
                PathCover pc;
                pc.paths = {hr.path};
                pc.declared_endpoints = {{u, v}};
                auto err = check_cover(
                    [&](int x, int y) {
                        return popcount(g.vertices[static_cast<std::size_t>(x)] ^
                                        g.vertices[static_cast<std::size_t>(y)]) == 2;
                    },
                    static_cast<int>(nv), pc);
                outcomes[i].status = err.empty() ? 0 : 3;
            } else {
                outcomes[i].status = hr.exhausted ? 1 : 2;
            }
        }
    };
    if (threads == 1 || pairs.size() < 2) {
        worker(0, pairs.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (pairs.size() + static_cast<std::size_t>(threads) - 1) /
                            static_cast<std::size_t>(threads);
        for (int th = 0; th < threads; ++th) {
            std::size_t b = static_cast<std::size_t>(th) * chunk;
            std::size_t e = std::min(pairs.size(), b + chunk);
            if (b < e) pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }

    rep.verdict = Verdict::Holds;
    std::size_t done = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        rep.nodes_expanded += outcomes[i].nodes;
        if (outcomes[i].status == 3)
            throw std::logic_error("check_ham: a found path failed re-verification");
        if (outcomes[i].status == 1) {
            rep.verdict = Verdict::Fails;
            rep.witness["pair"] = {
                mask_to_string(g.vertices[static_cast<std::size_t>(pairs[i].first)], g.ground_size),
                mask_to_string(g.vertices[static_cast<std::size_t>(pairs[i].second)], g.ground_size)};
            break;
        }
        if (outcomes[i].status == 2 && rep.verdict == Verdict::Holds) {
            rep.verdict = Verdict::Unknown;
            rep.witness["reason"] = "node budget exhausted";
            rep.witness["pairs_completed"] = done;
            rep.witness["pairs_total"] = pairs.size();
            break;
        }
        ++done;
    }
    if (rep.verdict == Verdict::Holds) rep.witness["exhaustive"] = true;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

bool exchange_axiom_holds(const BaseFamily& family) {
    const auto& masks = family.masks;
    for (Mask b1 : masks) {
        for (int e : mask_elements(b1)) {
            // All f with b1 - e + f again in the family, as one mask.
            Mask swaps = 0;
            Mask base = b1 & ~bit(e);
            for (int f = 0; f < family.n; ++f) {
                if (test_bit(b1, f)) continue;
                if (family.contains(base | bit(f))) swaps |= bit(f);
            }
            for (Mask b2 : masks) {
                if (test_bit(b2, e)) continue;
                if (!(b2 & swaps)) return false;
            }
        }
    }
    return true;
}

PropertyReport check_mat(const BaseFamily& family) {
    auto t0 = Clock::now();
    PropertyReport rep{Property::Mat, Verdict::Holds, {}, 0, 0};
    if (family.masks.empty()) throw std::invalid_argument("check_mat: empty family");

    const auto& masks = family.masks;
    for (Mask b1 : masks) {
        for (int e : mask_elements(b1)) {
            Mask swaps = 0;
            Mask base = b1 & ~bit(e);
            for (int f = 0; f < family.n; ++f) {
                if (test_bit(b1, f)) continue;
                if (family.contains(base | bit(f))) swaps |= bit(f);
            }
            for (Mask b2 : masks) {
                if (test_bit(b2, e)) continue;
                if (!(b2 & swaps)) {
                    rep.verdict = Verdict::Fails;
                    rep.witness["base_a"] = mask_to_string(b1, family.n);
                    rep.witness["base_b"] = mask_to_string(b2, family.n);
                    rep.witness["element"] = e;
                    rep.elapsed_ms = ms_since(t0);
                    return rep;
                }
            }
        }
    }

    // Exchange holds, so the family is itself the base family of a matroid;
    // on a base-cobase family that matroid must be identically self-dual.
    std::vector<Mask> comp;
    comp.reserve(masks.size());
    for (Mask b : masks) comp.push_back(complement(b, family.n));
    std::sort(comp.begin(), comp.end());
    rep.witness["identically_self_dual"] = (comp == masks);
    nlohmann::json base_list = nlohmann::json::array();
    for (Mask b : masks) base_list.push_back(mask_to_string(b, family.n));
    rep.witness["bases"] = base_list;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace cobase
