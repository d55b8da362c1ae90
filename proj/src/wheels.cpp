#include "cobase/wheels.hpp"

#include <algorithm>

#include "cobase/bcgraph.hpp"

namespace cobase {

namespace {

void check_n(int n) {
    if (n < 3) throw std::invalid_argument("wheels and whirls need n >= 3");
    if (2 * n > kMaxGround) throw std::invalid_argument("ground set exceeds 64 elements");
}

}  // namespace

namespace {

// Position of rim e_{b+1} and of the spoke at rim vertex v_{b+1}, for the
// 0-based cube coordinate b.  Odd labels are rims; each even label 2i is
// the spoke at the vertex shared by rims 2i-1 and 2i+1, so that three
// consecutive labels form a claw (this is what makes the necklace
// intervals line up under the identity map).
int rim_pos(int b) { return 2 * b; }
int spoke_pos(int b, int n) { return 2 * ((b + n - 1) % n) + 1; }

}  // namespace

Matroid wheel_matroid(int n) {
    check_n(n);
    // Hub is vertex 0, rim vertices 1..n.
    std::vector<std::pair<int, int>> edges(static_cast<std::size_t>(2 * n));
    for (int b = 0; b < n; ++b) {
        edges[static_cast<std::size_t>(rim_pos(b))] = {b + 1, (b + 1) % n + 1};
        edges[static_cast<std::size_t>(spoke_pos(b, n))] = {0, b + 1};
    }
    return graphic_matroid(n + 1, edges);
}

Mask wheel_rim_mask(int n) {
    Mask m = 0;
    for (int i = 0; i < n; ++i) m |= bit(2 * i);
    return m;
}

Matroid whirl_matroid(int n) {
    check_n(n);
    return relax_circuit_hyperplane(wheel_matroid(n), wheel_rim_mask(n));
}

Matroid necklace_matroid(int n) {
    check_n(n);
    std::vector<Mask> intervals;
    intervals.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Mask iv = bit(2 * i - 2) | bit(2 * i - 1) | bit((2 * i) % (2 * n));
        intervals.push_back(iv);
    }
    return transversal_matroid(2 * n, intervals);
}

bool is_lean(Mask v, int n) {
    if (v == 0 || v == full_mask(n)) return true;
    // One cyclic block of ones <=> exactly two 01/10 transitions.
    return popcount(v ^ rotl_n(v, 1, n)) == 2;
}

int lean_block_start(Mask v, int n) {
    for (int j = 0; j < n; ++j)
        if (test_bit(v, j) && !test_bit(v, (j + n - 1) % n)) return j;
    throw std::invalid_argument("vector has no block start");
}

std::vector<Mask> stitch_targets(Mask v, int n) {
    if (!is_lean(v, n) || v == 0 || v == full_mask(n))
        throw std::invalid_argument("stitching is defined on proper lean vectors");
    int len = popcount(v);
    int start = lean_block_start(v, n);
    std::vector<Mask> out;
    out.push_back(v);                  // same block
    out.push_back(rotl_n(v, 1, n));    // block shifted by one
    if (len >= 2) out.push_back(v & ~bit(start));
    if (len <= n - 2) out.push_back(v | bit((start + len) % n));
    return out;
}

Mask model_base(int n, ModelVertex v) {
    check_in_range(v.bits, n);
    Mask base = 0;
    for (int j = 0; j < n; ++j) {
        if (test_bit(v.bits, j))
            base |= bit(rim_pos(j));  // rim at support positions
        else
            base |= bit(spoke_pos(j, n));  // spoke elsewhere
    }
    if (v.copy >= 0) {
        // Plus copy: each block trades the spoke after its end for the
        // spoke at its start.  (Minus keeps the after-end spokes, which
        // the complement rule above already placed.)
        for (int j = 0; j < n; ++j) {
            if (test_bit(v.bits, j) && !test_bit(v.bits, (j + 1) % n)) {
                base &= ~bit(spoke_pos((j + 1) % n, n));  // drop spoke after the end
            }
            if (test_bit(v.bits, j) && !test_bit(v.bits, (j + n - 1) % n)) {
                base |= bit(spoke_pos(j, n));  // take the spoke at the start
            }
        }
    }
    return base;
}

ModelVertex auto_complement(int n, ModelVertex v) {
    return ModelVertex{complement(v.bits, n), v.copy};
}

ModelVertex auto_reverse_swap(int n, ModelVertex v) {
    Mask rev = 0;
    for (int j = 0; j < n; ++j)
        if (test_bit(v.bits, j)) rev |= bit(n - 1 - j);
    return ModelVertex{rev, -v.copy};
}

ModelVertex StitchedModel::canonical(ModelVertex v) const {
    if (kind == WWKind::Whirl && (v.bits == 0 || v.bits == full_mask(n))) v.copy = 0;
    return v;
}

int StitchedModel::index_of(ModelVertex v) const {
    v = canonical(v);
    auto cmp = [](const ModelVertex& a, const ModelVertex& b) {
        return a.bits != b.bits ? a.bits < b.bits : a.copy < b.copy;
    };
    auto it = std::lower_bound(verts.begin(), verts.end(), v, cmp);
    if (it == verts.end() || !(*it == v)) return -1;
    return static_cast<int>(it - verts.begin());
}

bool StitchedModel::adjacent(int i, int j) const {
    const auto& a = adj[static_cast<std::size_t>(i)];
    return std::binary_search(a.begin(), a.end(), j);
}

std::size_t StitchedModel::num_edges() const {
    std::size_t total = 0;
    for (const auto& a : adj) total += a.size();
    return total / 2;
}

StitchedModel build_model(int n, WWKind kind) {
    check_n(n);
    if (n > 12) throw BudgetError("stitched model too large");
    StitchedModel model;
    model.n = n;
    model.kind = kind;
    const Mask full = full_mask(n);

    for (Mask v = 0; v <= full; ++v) {
        bool shared = (v == 0 || v == full);
        if (shared) {
            if (kind == WWKind::Whirl) model.verts.push_back(ModelVertex{v, 0});
        } else {
            model.verts.push_back(ModelVertex{v, -1});
            model.verts.push_back(ModelVertex{v, 1});
        }
    }
    // Construction order is already (bits, copy)-sorted.
    model.adj.assign(model.verts.size(), {});

    auto add_edge = [&](ModelVertex a, ModelVertex b) {
        int ia = model.index_of(a), ib = model.index_of(b);
        if (ia < 0 || ib < 0 || ia == ib) return;
        if (!model.adjacent(ia, ib)) {
            auto& va = model.adj[static_cast<std::size_t>(ia)];
            auto& vb = model.adj[static_cast<std::size_t>(ib)];
            va.insert(std::lower_bound(va.begin(), va.end(), ib), ib);
            vb.insert(std::lower_bound(vb.begin(), vb.end(), ia), ia);
        }
    };

    for (Mask v = 0; v <= full; ++v) {
        // Within-copy cube edges.
        for (int j = 0; j < n; ++j) {
            Mask w = v ^ bit(j);
            if (w < v) continue;
            for (int copy : {-1, 1}) add_edge(ModelVertex{v, copy}, ModelVertex{w, copy});
        }
        // Stitching edges from the plus copy to the minus copy.
        if (v != 0 && v != full && is_lean(v, n))
            for (Mask w : stitch_targets(v, n))
                add_edge(ModelVertex{v, 1}, ModelVertex{w, -1});
    }
    return model;
}

bool model_matches_bc_graph(const StitchedModel& model, const Matroid& m,
                            std::uint64_t budget) {
    BCGraph g = build_bc_graph(m, budget);
    if (g.num_vertices() != model.verts.size()) return false;

    std::vector<int> to_graph(model.verts.size(), -1);
    std::vector<char> hit(g.num_vertices(), 0);
    for (std::size_t i = 0; i < model.verts.size(); ++i) {
        int gi = g.index_of(model_base(model.n, model.verts[i]));
        if (gi < 0 || hit[static_cast<std::size_t>(gi)]) return false;  // not a bijection
        hit[static_cast<std::size_t>(gi)] = 1;
        to_graph[i] = gi;
    }
    if (model.num_edges() != g.num_edges()) return false;
    for (std::size_t i = 0; i < model.verts.size(); ++i)
        for (int j : model.adj[i]) {
            if (j < static_cast<int>(i)) continue;
            int gi = to_graph[i], gj = to_graph[static_cast<std::size_t>(j)];
            if (!std::binary_search(g.adj[static_cast<std::size_t>(gi)].begin(),
                                    g.adj[static_cast<std::size_t>(gi)].end(), gj))
                return false;
        }
    return true;
}

bool verify_structure(int n, WWKind kind, std::uint64_t budget) {
    Matroid m = kind == WWKind::Wheel ? wheel_matroid(n) : whirl_matroid(n);
    return model_matches_bc_graph(build_model(n, kind), m, budget);
}

LowerBoundReport verify_lower_bound(int n, WWKind kind, std::uint64_t budget) {
    check_n(n);
    // Four cyclic blocks 1^a 0^b 1^c 0^d, as equal as possible with
    // a >= c and b >= d.
    int q = n / 4, k = n % 4;
    int a = q + (k >= 1), b = q + (k >= 2), c = q + (k >= 3);
    Mask v = 0;
    for (int j = 0; j < a; ++j) v |= bit(j);
    for (int j = 0; j < c; ++j) v |= bit(a + b + j);

    LowerBoundReport rep;
    rep.plus_base = model_base(n, ModelVertex{v, 1});
    rep.minus_base = model_base(n, ModelVertex{v, -1});
    rep.exchange_lower_bound = popcount(rep.plus_base ^ rep.minus_base) / 2;
    rep.expected = 2 * q + 1;

    Matroid m = kind == WWKind::Wheel ? wheel_matroid(n) : whirl_matroid(n);
    BCGraph g = build_bc_graph(m, budget);
    int src = g.index_of(rep.plus_base);
    int dst = g.index_of(rep.minus_base);
    if (src < 0 || dst < 0) throw std::runtime_error("block vector is not a base-cobase");
    rep.distance = distance(g, src, dst);
    rep.matches = rep.distance == rep.expected;
    return rep;
}

bool verify_necklace_iso(int n, std::uint64_t budget) {
    check_n(n);
    if (n > 8) throw BudgetError("necklace comparison capped at n = 8");
    return enumerate_bases(whirl_matroid(n), budget).masks ==
           enumerate_bases(necklace_matroid(n), budget).masks;
}

int lean_edge_count(int n, int coord) {
    check_n(n);
    if (coord < 1 || coord > n) throw std::invalid_argument("coordinate out of range");
    const int j = coord - 1;
    const Mask full = full_mask(n);
    int count = 0;
    for (Mask v = 0; v <= full; ++v) {
        if (test_bit(v, j)) continue;
        Mask w = v | bit(j);
        if (v == 0 || w == full) continue;
        if (is_lean(v, n) && is_lean(w, n)) ++count;
    }
    return count;
}

}  // namespace cobase
