#include "cobase/ham.hpp"

#include <algorithm>

namespace cobase {

SearchGraph hypercube_graph(int n) {
    if (n < 1 || (1 << n) > Bits512::kCapacity)
        throw std::invalid_argument("hypercube dimension out of range");
    SearchGraph g(1 << n);
    for (Mask v = 0; v < (Mask{1} << n); ++v)
        for (int j = 0; j < n; ++j)
            if (!test_bit(v, j)) g.add_edge(static_cast<int>(v), static_cast<int>(v | bit(j)));
    return g;
}

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_distinct(std::initializer_list<Mask> vs, const char* msg) {
    std::vector<Mask> sorted(vs);
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), msg);
}

// One group of anchors shares a color, the other group the opposite one.
void require_colors(std::initializer_list<Mask> group_a, std::initializer_list<Mask> group_b,
                    const char* msg) {
    bool first = true, color_a = false;
    for (Mask v : group_a) {
        if (first) {
            color_a = cube_green(v);
            first = false;
        } else {
            require(cube_green(v) == color_a, msg);
        }
    }
    for (Mask v : group_b) require(cube_green(v) != color_a, msg);
}

PathCover run_cube_request(int n, const CoverRequest& req, const SearchOptions& opt,
                           const char* what, std::uint64_t* nodes_out = nullptr) {
    SearchGraph g = hypercube_graph(n);
    CoverResult res = find_path_cover(g, req, opt);
    if (nodes_out) *nodes_out += res.nodes;
    if (!res.found) throw PrimitiveFailure(what, res.nodes, res.exhausted);
    auto err = check_cover(
        [](int a, int b) {
            return popcount(static_cast<Mask>(a) ^ static_cast<Mask>(b)) == 1;
        },
        1 << n, res.cover);
    if (!err.empty()) throw std::logic_error(std::string(what) + ": " + err);
    return res.cover;
}

int as_int(Mask m) { return static_cast<int>(m); }

}  // namespace

PathCover primitive_a(int n, Mask r, Mask g, CubeEdge e, const SearchOptions& opt) {
    require(n >= 4, "primitive (a): n >= 4");
    require_colors({r}, {g}, "primitive (a): endpoints must have opposite colors");
    require(popcount(e.first ^ e.second) == 1, "primitive (a): not an edge");
    require(!((e.first == r && e.second == g) || (e.first == g && e.second == r)),
            "primitive (a): edge may not equal {r,g}");
    CoverRequest req;
    req.pairs = {{as_int(r), as_int(g)}};
    req.forced_edges = {{as_int(e.first), as_int(e.second)}};
    return run_cube_request(n, req, opt, "primitive (a)");
}

PathCover primitive_b(int n, Mask rstar, Mask gstar, Mask r, Mask g, const SearchOptions& opt) {
    require(n >= 4, "primitive (b): n >= 4");
    require_colors({r, rstar}, {g, gstar}, "primitive (b): anchor colors");
    require_distinct({r, rstar}, "primitive (b): r distinct from r*");
    require_distinct({g, gstar}, "primitive (b): g distinct from g*");
    CoverRequest req;
    req.pairs = {{as_int(r), as_int(g)}};
    req.excluded = {as_int(rstar), as_int(gstar)};
    return run_cube_request(n, req, opt, "primitive (b)");
}

PathCover primitive_c(int n, Mask rstar, Mask r1, Mask g1, Mask g2, Mask g3,
                      const SearchOptions& opt) {
    require(n >= 4, "primitive (c): n >= 4");
    require_colors({rstar, r1}, {g1, g2, g3}, "primitive (c): anchor colors");
    require_distinct({rstar, r1}, "primitive (c): r1 distinct from r*");
    require_distinct({g1, g2, g3}, "primitive (c): greens distinct");
    CoverRequest req;
    req.pairs = {{as_int(r1), as_int(g1)}, {as_int(g2), as_int(g3)}};
    req.excluded = {as_int(rstar)};
    return run_cube_request(n, req, opt, "primitive (c)");
}

PathCover primitive_d(int n, Mask gstar, Mask r1, Mask r2, const SearchOptions& opt) {
    require(n >= 4, "primitive (d): n >= 4");
    require_colors({r1, r2}, {gstar}, "primitive (d): anchor colors");
    require_distinct({r1, r2}, "primitive (d): endpoints distinct");
    CoverRequest req;
    req.pairs = {{as_int(r1), as_int(r2)}};
    req.excluded = {as_int(gstar)};
    return run_cube_request(n, req, opt, "primitive (d)");
}

PathCover primitive_d(int n, Mask gstar, Mask r1, Mask r2, CubeEdge e,
                      const SearchOptions& opt) {
    require(n >= 4, "primitive (d): n >= 4");
    require_colors({r1, r2}, {gstar}, "primitive (d): anchor colors");
    require_distinct({r1, r2}, "primitive (d): endpoints distinct");
    require(popcount(e.first ^ e.second) == 1, "primitive (d): not an edge");
    require(e.first != gstar && e.second != gstar, "primitive (d): edge touches g*");
    CoverRequest req;
    req.pairs = {{as_int(r1), as_int(r2)}};
    req.forced_edges = {{as_int(e.first), as_int(e.second)}};
    req.excluded = {as_int(gstar)};
    return run_cube_request(n, req, opt, "primitive (d)");
}

PathCover primitive_e(int n, Mask gstar, Mask r1star, Mask r2star, Mask g1, Mask g2,
                      const SearchOptions& opt) {
    require(n >= 4, "primitive (e): n >= 4");
    require_colors({gstar, g1, g2}, {r1star, r2star}, "primitive (e): anchor colors");
    require_distinct({gstar, g1, g2}, "primitive (e): greens distinct");
    require_distinct({r1star, r2star}, "primitive (e): excluded reds distinct");
    CoverRequest req;
    req.pairs = {{as_int(g1), as_int(g2)}};
    req.excluded = {as_int(gstar), as_int(r1star), as_int(r2star)};
    return run_cube_request(n, req, opt, "primitive (e)");
}

PathCover primitive_f(int n, Mask r1star, Mask r2star, Mask g1, Mask g2, Mask g3, Mask g4,
                      const SearchOptions& opt) {
    require(n >= 4, "primitive (f): n >= 4");
    require_colors({r1star, r2star}, {g1, g2, g3, g4}, "primitive (f): anchor colors");
    require_distinct({r1star, r2star}, "primitive (f): excluded reds distinct");
    require_distinct({g1, g2, g3, g4}, "primitive (f): greens distinct");
    CoverRequest req;
    req.pairs = {{as_int(g1), as_int(g2)}, {as_int(g3), as_int(g4)}};
    req.excluded = {as_int(r1star), as_int(r2star)};
    return run_cube_request(n, req, opt, "primitive (f)");
}

PathCover primitive_g(int n, Mask rstar, Mask gstar, Mask r1, Mask g1, Mask r2, Mask g2,
                      const SearchOptions& opt) {
    require(n >= 4, "primitive (g): n >= 4");
    require_colors({rstar, r1, r2}, {gstar, g1, g2}, "primitive (g): anchor colors");
    require_distinct({rstar, r1, r2}, "primitive (g): reds distinct");
    require_distinct({gstar, g1, g2}, "primitive (g): greens distinct");
    CoverRequest req;
    req.pairs = {{as_int(r1), as_int(g1)}, {as_int(r2), as_int(g2)}};
    req.excluded = {as_int(rstar), as_int(gstar)};
    return run_cube_request(n, req, opt, "primitive (g)");
}

PathCover primitive_h(int n, Mask r1star, Mask r2star, Mask g1, Mask g2, Mask g3, Mask g4,
                      Mask g5, Mask r1, const SearchOptions& opt) {
    require(n >= 6, "primitive (h): n >= 6");
    require_colors({r1star, r2star, r1}, {g1, g2, g3, g4, g5}, "primitive (h): anchor colors");
    require_distinct({r1star, r2star, r1}, "primitive (h): reds distinct");
    require_distinct({g1, g2, g3, g4, g5}, "primitive (h): greens distinct");
    CoverRequest req;
    req.pairs = {{as_int(g1), as_int(g2)}, {as_int(g3), as_int(g4)}, {as_int(g5), as_int(r1)}};
    req.excluded = {as_int(r1star), as_int(r2star)};
    return run_cube_request(n, req, opt, "primitive (h)");
}

// --- lemma-level constructions ------------------------------------------------

namespace {

bool proper_lean(Mask v, int n) { return v != 0 && v != full_mask(n) && is_lean(v, n); }

std::vector<int> half_vertices(int n, int coord_bit, bool value) {
    std::vector<int> out;
    for (Mask v = 0; v < (Mask{1} << n); ++v)
        if (test_bit(v, coord_bit) == value) out.push_back(as_int(v));
    return out;
}

// Single path from a one-pair cube request.
std::vector<int> cube_path(int n, std::pair<Mask, Mask> ends, std::vector<int> excluded,
                           std::vector<CubeEdge> forced, const SearchOptions& opt,
                           const char* what, std::uint64_t* nodes) {
    CoverRequest req;
    req.pairs = {{as_int(ends.first), as_int(ends.second)}};
    req.excluded = std::move(excluded);
    for (auto [a, b] : forced) req.forced_edges.emplace_back(as_int(a), as_int(b));
    PathCover cover = run_cube_request(n, req, opt, what, nodes);
    return cover.paths.front();
}

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
    std::vector<int> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<int> reversed(std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

}  // namespace

LeanPathResult lemma_36_plus(int n, Mask rstar, Mask gstar, Mask r, Mask g,
                             const SearchOptions& opt) {
    require(n >= 4, "lemma 3.6+: n >= 4");
    require_colors({r, rstar}, {g, gstar}, "lemma 3.6+: anchor colors");
    require_distinct({r, rstar}, "lemma 3.6+: r distinct from r*");
    require_distinct({g, gstar}, "lemma 3.6+: g distinct from g*");

    LeanPathResult result;
    std::string last_error = "no splitting coordinate admitted a lean edge";
    for (int k = 0; k < n; ++k) {
        if (test_bit(r, k) == test_bit(rstar, k)) continue;
        const bool rside = test_bit(r, k);
        auto in_q = [&](Mask x) { return test_bit(x, k) == rside; };
        auto qstar_verts = half_vertices(n, k, !rside);
        auto q_verts = half_vertices(n, k, rside);

        // Candidate lean cross edges {x, y}, x on r's side.
        std::vector<CubeEdge> cands;
        for (Mask x = 0; x < (Mask{1} << n); ++x) {
            if (!in_q(x) || !proper_lean(x, n)) continue;
            Mask y = x ^ bit(k);
            if (proper_lean(y, n)) cands.push_back({x, y});
        }

        const bool g_in_q = in_q(g);
        const bool gstar_in_q = in_q(gstar);
        for (auto [x, y] : cands) {
            try {
                std::vector<int> path;
                if (!g_in_q && !gstar_in_q) {  // case a
                    if (cube_green(x) == cube_green(r) || y == rstar || y == gstar || y == g)
                        continue;
                    auto p1 = cube_path(n, {r, x}, qstar_verts, {}, opt, "lemma 3.6+ (a1)",
                                        &result.nodes);
                    auto ex2 = q_verts;
                    ex2.push_back(as_int(rstar));
                    ex2.push_back(as_int(gstar));
                    auto p2 = cube_path(n, {y, g}, ex2, {}, opt, "lemma 3.6+ (a2)",
                                        &result.nodes);
                    path = concat({p1, p2});
                } else if (!g_in_q && gstar_in_q) {  // case b
                    if (cube_green(x) != cube_green(r) || x == r || y == g || y == rstar)
                        continue;
                    auto ex1 = qstar_verts;
                    ex1.push_back(as_int(gstar));
                    auto p1 = cube_path(n, {r, x}, ex1, {}, opt, "lemma 3.6+ (b1)",
                                        &result.nodes);
                    auto ex2 = q_verts;
                    ex2.push_back(as_int(rstar));
                    auto p2 = cube_path(n, {y, g}, ex2, {}, opt, "lemma 3.6+ (b2)",
                                        &result.nodes);
                    path = concat({p1, p2});
                } else if (g_in_q && !gstar_in_q) {  // case c
                    if (cube_green(x) != cube_green(r) || x == r || y == gstar) continue;
                    // Second, unconstrained cross edge {x2, y2}.
                    CubeEdge back{0, 0};
                    bool have_back = false;
                    for (Mask x2 = 0; x2 < (Mask{1} << n) && !have_back; ++x2) {
                        if (!in_q(x2) || cube_green(x2) == cube_green(r) || x2 == g) continue;
                        Mask y2 = x2 ^ bit(k);
                        if (y2 == rstar || y2 == y) continue;
                        if (x2 == x) continue;
                        back = {x2, y2};
                        have_back = true;
                    }
                    if (!have_back) continue;
                    CoverRequest req;
                    req.pairs = {{as_int(r), as_int(x)}, {as_int(back.first), as_int(g)}};
                    req.excluded = qstar_verts;
                    PathCover cov = run_cube_request(n, req, opt, "lemma 3.6+ (c1)",
                                                     &result.nodes);
                    auto ex2 = q_verts;
                    ex2.push_back(as_int(rstar));
                    ex2.push_back(as_int(gstar));
                    auto p2 = cube_path(n, {y, back.second}, ex2, {}, opt, "lemma 3.6+ (c2)",
                                        &result.nodes);
                    path = concat({cov.paths[0], p2, cov.paths[1]});
                } else {  // case d: g and g* both on r's side
                    // Red-red path in Q - {g*} from r to x, then cut at g's
                    // predecessor and reroute through the far half so the
                    // path can end at g.
                    if (cube_green(x) != cube_green(r) || x == r) continue;
                    auto ex1 = qstar_verts;
                    ex1.push_back(as_int(gstar));
                    auto p1 = cube_path(n, {r, x}, ex1, {}, opt, "lemma 3.6+ (d1)",
                                        &result.nodes);
                    auto it = std::find(p1.begin(), p1.end(), as_int(g));
                    if (it == p1.end() || it == p1.begin()) continue;
                    std::size_t gpos = static_cast<std::size_t>(it - p1.begin());
                    Mask pred = static_cast<Mask>(p1[gpos - 1]);
                    Mask wsecond = pred ^ bit(k);
                    if (wsecond == y) continue;
                    auto ex2 = q_verts;
                    ex2.push_back(as_int(rstar));
                    auto p2 = cube_path(n, {wsecond, y}, ex2, {}, opt, "lemma 3.6+ (d2)",
                                        &result.nodes);
                    std::vector<int> front(p1.begin(), p1.begin() + static_cast<long>(gpos));
                    std::vector<int> tail(p1.begin() + static_cast<long>(gpos), p1.end());
                    path = concat({front, p2, reversed(tail)});
                }
                if (path.empty()) continue;
                result.lean_edge = {x, y};
                PathCover pc;
                pc.paths = {path};
                pc.declared_endpoints = {{as_int(r), as_int(g)}};
                pc.forbidden = {as_int(rstar), as_int(gstar)};
                auto err = check_cover(
                    [](int a, int b) {
                        return popcount(static_cast<Mask>(a) ^ static_cast<Mask>(b)) == 1;
                    },
                    1 << n, pc);
                if (!err.empty()) throw std::logic_error("lemma 3.6+: " + err);
                // The lean edge must really be on the path.
                bool lean_used = false;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    Mask a = static_cast<Mask>(path[i]), b = static_cast<Mask>(path[i + 1]);
                    if ((a == result.lean_edge.first && b == result.lean_edge.second) ||
                        (b == result.lean_edge.first && a == result.lean_edge.second))
                        lean_used = true;
                }
                if (!lean_used) throw std::logic_error("lemma 3.6+: lean edge missing");
                result.cover = std::move(pc);
                return result;
            } catch (const PrimitiveFailure& pf) {
                last_error = pf.what();
                continue;  // try the next candidate edge
            }
        }
    }
    throw PrimitiveFailure("lemma 3.6+: " + last_error, result.nodes, false);
}

PathCover lemma_43_plus(int n, Mask u1, Mask v1, Mask w1, Mask u2, Mask v2, Mask z1,
                        const SearchOptions& opt) {
    require(n >= 7, "lemma 4.3+: n >= 7");
    const Mask full = full_mask(n);
    require(popcount(u1) == 1 && popcount(v1) == 1 && popcount(w1) == 1,
            "lemma 4.3+: u1,v1,w1 must be singletons");
    require(popcount(u2) == n - 1 && popcount(v2) == n - 1,
            "lemma 4.3+: u2,v2 must be co-singletons");
    require_distinct({u1, v1, w1}, "lemma 4.3+: u1,v1,w1 distinct");
    require_distinct({u2, v2}, "lemma 4.3+: u2,v2 distinct");
    require(popcount(z1) == 2 && (z1 & w1) == w1 && is_lean(z1, n),
            "lemma 4.3+: z1 must be a lean neighbor of w1 one level up");

    int k = -1;
    for (int j = 0; j < n && k < 0; ++j) {
        Mask low = u1 | v1 | w1 | z1;
        if (!test_bit(low, j) && test_bit(u2, j) && test_bit(v2, j)) k = j;
    }
    require(k >= 0, "lemma 4.3+: no splitting coordinate (impossible for n >= 7)");

    std::uint64_t nodes = 0;
    auto ex1 = half_vertices(n, k, true);
    ex1.push_back(0);
    auto p1 = cube_path(n, {u1, v1}, ex1, {{w1, z1}}, opt, "lemma 4.3+ (low half)", &nodes);
    auto ex2 = half_vertices(n, k, false);
    ex2.push_back(as_int(full));
    auto p2 = cube_path(n, {u2, v2}, ex2, {}, opt, "lemma 4.3+ (high half)", &nodes);

    PathCover cover;
    cover.paths = {p1, p2};
    cover.declared_endpoints = {{as_int(u1), as_int(v1)}, {as_int(u2), as_int(v2)}};
    cover.forced_edges = {{as_int(w1), as_int(z1)}};
    cover.forbidden = {0, as_int(full)};
    auto err = check_cover(
        [](int a, int b) { return popcount(static_cast<Mask>(a) ^ static_cast<Mask>(b)) == 1; },
        1 << n, cover);
    if (!err.empty()) throw std::logic_error("lemma 4.3+: " + err);
    return cover;
}

// --- stitched-model constructions ----------------------------------------------

namespace {

struct Builder {
    int n;
    WWKind kind;
    SearchOptions opt;
    StitchedModel model;
    Mask full;
    std::vector<std::string> log;
    std::uint64_t nodes = 0;

    Builder(int n_, WWKind kind_, SearchOptions opt_)
        : n(n_), kind(kind_), opt(opt_), model(build_model(n_, kind_)), full(full_mask(n_)) {}

    int mid(Mask bits, int copy) const {
        int i = model.index_of(ModelVertex{bits, copy});
        if (i < 0) throw std::logic_error("model vertex missing");
        return i;
    }

    std::vector<int> to_model(const std::vector<int>& cube_path, int copy) const {
        std::vector<int> out;
        out.reserve(cube_path.size());
        for (int vm : cube_path) out.push_back(mid(static_cast<Mask>(vm), copy));
        return out;
    }

    // Stitch partners of a proper lean vertex, as masks on the other copy.
    std::vector<Mask> partners(Mask bits, int copy) const {
        std::vector<Mask> out;
        int i = model.index_of(ModelVertex{bits, copy});
        if (i < 0) return out;
        for (int j : model.adj[static_cast<std::size_t>(i)]) {
            const auto& w = model.verts[static_cast<std::size_t>(j)];
            if (w.copy == -copy) out.push_back(w.bits);
        }
        return out;
    }

    Mask partner_with_color(Mask bits, int copy, bool green,
                            const std::vector<Mask>& avoid = {}) const {
        for (Mask w : partners(bits, copy)) {
            if (cube_green(w) != green) continue;
            if (std::find(avoid.begin(), avoid.end(), w) != avoid.end()) continue;
            return w;
        }
        throw std::logic_error("no stitch partner with requested color");
    }

    // Vertices on the opposite copy stitched to both ends of a lean edge.
    std::vector<Mask> grab_candidates(Mask x, Mask y, int copy) const {
        auto px = partners(x, copy);
        auto py = partners(y, copy);
        std::vector<Mask> out;
        for (Mask a : px)
            if (std::find(py.begin(), py.end(), a) != py.end()) out.push_back(a);
        return out;
    }

    static std::vector<Mask> concat_masks(std::vector<Mask> a, const std::vector<Mask>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }

    Mask pick_lean(bool green, const std::vector<Mask>& avoid) const {
        for (Mask v = 1; v < full; ++v) {
            if (!is_lean(v, n) || cube_green(v) != green) continue;
            if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
            return v;
        }
        throw std::logic_error("no lean vertex available");
    }

    std::vector<Mask> pick_lean_many(bool green, std::vector<Mask> avoid, int count) const {
        std::vector<Mask> out;
        for (int i = 0; i < count; ++i) {
            Mask v = pick_lean(green, avoid);
            out.push_back(v);
            avoid.push_back(v);
        }
        return out;
    }

    std::vector<CubeEdge> lean_edges(const std::vector<Mask>& avoid, int len_min,
                                     int len_max) const {
        std::vector<CubeEdge> out;
        for (Mask v = 1; v < full; ++v) {
            if (!is_lean(v, n)) continue;
            for (int j = 0; j < n; ++j) {
                if (test_bit(v, j)) continue;
                Mask w = v | bit(j);
                if (w == full || !is_lean(w, n)) continue;
                if (popcount(v) < len_min || popcount(w) > len_max) continue;
                if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
                if (std::find(avoid.begin(), avoid.end(), w) != avoid.end()) continue;
                out.push_back({v, w});
            }
        }
        return out;
    }

    // Singletons / co-singletons avoiding the listed masks.
    std::vector<Mask> levels(int weight, const std::vector<Mask>& avoid, int count) const {
        std::vector<Mask> out;
        for (int j = 0; j < n && static_cast<int>(out.size()) < count; ++j) {
            Mask v = weight == 1 ? bit(j) : (full ^ bit(j));
            if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
            out.push_back(v);
        }
        if (static_cast<int>(out.size()) < count)
            throw std::logic_error("not enough level vertices");
        return out;
    }

    PathCover cube_cover(const std::vector<std::pair<Mask, Mask>>& pairs,
                         const std::vector<Mask>& excluded,
                         const std::vector<CubeEdge>& forced, const char* what) {
        CoverRequest req;
        for (auto [a, b] : pairs) req.pairs.emplace_back(as_int(a), as_int(b));
        for (Mask e : excluded) req.excluded.push_back(as_int(e));
        for (auto [a, b] : forced) req.forced_edges.emplace_back(as_int(a), as_int(b));
        log.push_back(what);
        return run_cube_request(n, req, opt, what, &nodes);
    }

    void insert_detour(std::vector<int>& path, std::size_t i, std::vector<int> detour) const {
        if (!(model.adjacent(path[i], detour.front()) &&
              model.adjacent(detour.back(), path[i + 1])))
            std::reverse(detour.begin(), detour.end());
        if (!(model.adjacent(path[i], detour.front()) &&
              model.adjacent(detour.back(), path[i + 1])))
            throw std::logic_error("detour does not attach");
        path.insert(path.begin() + static_cast<long>(i) + 1, detour.begin(), detour.end());
    }

    void splice_edge(std::vector<int>& path, int a, int b, const std::vector<int>& detour) const {
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if ((path[i] == a && path[i + 1] == b) || (path[i] == b && path[i + 1] == a)) {
                insert_detour(path, i, detour);
                return;
            }
        throw std::logic_error("edge to splice not found");
    }

    // Map a plus-copy cube path into the model, replacing the given cube
    // vertices (interior ones) by prepared minus-side detours.
    std::vector<int> assemble_plus(const std::vector<int>& cube_p1,
                                   const std::vector<std::pair<Mask, std::vector<int>>>& detours) const {
        std::vector<int> out;
        for (int cv : cube_p1) {
            Mask v = static_cast<Mask>(cv);
            const std::vector<int>* det = nullptr;
            for (const auto& [key, d] : detours)
                if (key == v) det = &d;
            if (!det) {
                out.push_back(mid(v, 1));
                continue;
            }
            std::vector<int> d = *det;
            if (!model.adjacent(out.back(), d.front())) std::reverse(d.begin(), d.end());
            if (!model.adjacent(out.back(), d.front()))
                throw std::logic_error("excision detour does not attach");
            out.insert(out.end(), d.begin(), d.end());
        }
        return out;
    }

    HamCertificate finish(std::vector<int> path, std::string label) {
        PathCover pc;
        pc.paths = {std::move(path)};
        pc.declared_endpoints = {{pc.paths[0].front(), pc.paths[0].back()}};
        auto err = check_cover([this](int a, int b) { return model.adjacent(a, b); },
                               static_cast<int>(model.verts.size()), pc);
        if (!err.empty()) throw std::logic_error("case " + label + ": " + err);
        HamCertificate cert;
        cert.cover = std::move(pc);
        cert.case_label = std::move(label);
        cert.log = log;
        cert.nodes = nodes;
        return cert;
    }

    HamCertificate direct_search(ModelVertex u, ModelVertex v, const char* label) {
        SearchGraph g(static_cast<int>(model.verts.size()));
        for (std::size_t i = 0; i < model.verts.size(); ++i)
            for (int j : model.adj[i])
                if (j > static_cast<int>(i)) g.add_edge(static_cast<int>(i), j);
        int iu = model.index_of(u), iv = model.index_of(v);
        HamResult hr = find_ham_path(g, iu, iv, opt);
        nodes += hr.nodes;
        if (!hr.found) throw PrimitiveFailure(label, hr.nodes, hr.exhausted);
        log.push_back(label);
        return finish(hr.path, label);
    }

    // --- odd cases (shared bits allowed for the whirl) ---

    // u plus-copy red, v plus-copy green.
    HamCertificate case_1a(ModelVertex u, ModelVertex v) {
        if (kind == WWKind::Wheel) {
            auto lr = lemma_36_plus(n, full, 0, u.bits, v.bits, opt);
            nodes += lr.nodes;
            log.push_back("lemma 3.6+ in plus copy");
            auto path = to_model(lr.cover.paths[0], 1);
            auto [x, y] = lr.lean_edge;
            auto p2 = cube_cover({{x, y}}, {0, full}, {}, "1a: minus copy").paths[0];
            splice_edge(path, mid(x, 1), mid(y, 1), to_model(p2, -1));
            return finish(std::move(path), "wheel-1a");
        }
        for (auto [x, y] : lean_edges({u.bits, v.bits}, 1, n - 1)) {
            auto p1 =
                cube_cover({{u.bits, v.bits}}, {}, {{x, y}}, "1a: plus copy").paths[0];
            auto p2 = cube_cover({{x, y}}, {0, full}, {}, "1a: minus copy").paths[0];
            auto path = to_model(p1, 1);
            splice_edge(path, mid(x, 1), mid(y, 1), to_model(p2, -1));
            return finish(std::move(path), "whirl-1a");
        }
        throw std::logic_error("1a: no lean edge available");
    }

    // u, v plus-copy red.
    HamCertificate case_1b(ModelVertex u, ModelVertex v) {
        if (kind == WWKind::Wheel) {
            Mask g1 = pick_lean(true, {});
            Mask g2 = pick_lean(true, {g1});
            Mask g1m = partner_with_color(g1, 1, true);
            Mask g2m = partner_with_color(g2, 1, false);
            auto cov = cube_cover({{u.bits, g1}, {g2, v.bits}}, {0, full}, {},
                                  "1b: plus cover");
            auto p3 = cube_cover({{g1m, g2m}}, {0, full}, {}, "1b: minus path").paths[0];
            auto path = concat({to_model(cov.paths[0], 1), to_model(p3, -1),
                                to_model(cov.paths[1], 1)});
            return finish(std::move(path), "wheel-1b");
        }
        for (auto [x, y] : lean_edges({u.bits, v.bits}, 1, n - 1)) {
            Mask gx = cube_green(x) ? x : y;  // green endpoint
            Mask rx = cube_green(x) ? y : x;
            Mask g1m, g2m;
            try {
                g1m = partner_with_color(gx, 1, true);
                g2m = partner_with_color(rx, 1, true, {g1m});
            } catch (const std::logic_error&) {
                continue;
            }
            auto p1 = cube_cover({{u.bits, v.bits}}, {0}, {{x, y}}, "1b: plus path").paths[0];
            auto p2 = cube_cover({{g1m, g2m}}, {full}, {}, "1b: minus path").paths[0];
            auto path = to_model(p1, 1);
            splice_edge(path, mid(gx, 1), mid(rx, 1), to_model(p2, -1));
            return finish(std::move(path), "whirl-1b");
        }
        throw std::logic_error("1b: no lean edge available");
    }

    // u plus-copy red, v minus-copy green.
    HamCertificate case_1c(ModelVertex u, ModelVertex v) {
        std::vector<Mask> tried;
        if (kind == WWKind::Wheel) {
            // Mixed path to a green lean junction, red partner across, then
            // a second mixed path down to v.
            for (;;) {
                Mask g = pick_lean(true, tried);
                tried.push_back(g);
                Mask rm;
                try {
                    rm = partner_with_color(g, 1, false, {v.bits});
                } catch (const std::logic_error&) {
                    continue;
                }
                auto p1 = cube_cover({{u.bits, g}}, {0, full}, {}, "1c: plus path").paths[0];
                auto p2 = cube_cover({{rm, v.bits}}, {0, full}, {}, "1c: minus path").paths[0];
                return finish(concat({to_model(p1, 1), to_model(p2, -1)}), "wheel-1c");
            }
        }
        // Whirl: the all-zero vertex stays with the plus half and the
        // all-one vertex with the minus half, so both hosts lose one green.
        for (;;) {
            Mask r = pick_lean(false, concat_masks(tried, {u.bits}));
            tried.push_back(r);
            Mask gm;
            try {
                gm = partner_with_color(r, 1, true, {v.bits});
            } catch (const std::logic_error&) {
                continue;
            }
            auto p1 = cube_cover({{u.bits, r}}, {0}, {}, "1c: plus path").paths[0];
            auto p2 = cube_cover({{gm, v.bits}}, {full}, {}, "1c: minus path").paths[0];
            return finish(concat({to_model(p1, 1), to_model(p2, -1)}), "whirl-1c");
        }
    }

    // u plus-copy red, v minus-copy red.
    HamCertificate case_1d(ModelVertex u, ModelVertex v) {
        std::vector<Mask> tried;
        for (;;) {
            Mask g = pick_lean(true, tried);
            tried.push_back(g);
            Mask gm;
            try {
                gm = partner_with_color(g, 1, true, {v.bits});
            } catch (const std::logic_error&) {
                continue;
            }
            if (kind == WWKind::Wheel) {
                auto p1 = cube_cover({{u.bits, g}}, {0, full}, {}, "1d: plus path").paths[0];
                auto p2 = cube_cover({{gm, v.bits}}, {0, full}, {}, "1d: minus path").paths[0];
                return finish(concat({to_model(p1, 1), to_model(p2, -1)}), "wheel-1d");
            }
            auto p1 = cube_cover({{u.bits, g}}, {}, {}, "1d: plus path").paths[0];
            auto p2 = cube_cover({{gm, v.bits}}, {0, full}, {}, "1d: minus path").paths[0];
            return finish(concat({to_model(p1, 1), to_model(p2, -1)}), "whirl-1d");
        }
    }

    // --- even wheel cases (n >= 8) ---

    std::vector<Mask> pins(const std::vector<Mask>& avoid) const {
        auto lo = levels(1, avoid, 2);
        auto hi = levels(n - 1, avoid, 2);
        return {lo[0], lo[1], hi[0], hi[1]};
    }

    HamCertificate wheel_2a(ModelVertex u, ModelVertex v) {
        auto p = pins({u.bits, v.bits});
        auto p1 = cube_cover({{u.bits, v.bits}}, {},
                             {{0, p[0]}, {0, p[1]}, {full, p[2]}, {full, p[3]}},
                             "wheel 2a: plus path")
                      .paths[0];
        auto covm = cube_cover({{p[0], p[1]}, {p[2], p[3]}}, {0, full}, {},
                               "wheel 2a: minus cover");
        auto path = assemble_plus(
            p1, {{0, to_model(covm.paths[0], -1)}, {full, to_model(covm.paths[1], -1)}});
        return finish(std::move(path), "wheel-2a");
    }

    HamCertificate wheel_2b(ModelVertex u, ModelVertex v) {
        for (auto [x, y] : lean_edges({u.bits, v.bits}, 2, n - 2)) {
            Mask grab = 0;
            bool have = false;
            for (Mask c : grab_candidates(x, y, 1))
                if (!cube_green(c)) {
                    grab = c;
                    have = true;
                }
            if (!have) continue;
            auto p = pins({u.bits, v.bits, x, y});
            auto p1 = cube_cover({{u.bits, v.bits}}, {full},
                                 {{0, p[0]}, {0, p[1]}, {x, y}}, "wheel 2b: plus path")
                          .paths[0];
            auto p2 = cube_cover({{p[0], p[1]}}, {0, full, grab}, {},
                                 "wheel 2b: minus path")
                          .paths[0];
            auto path = assemble_plus(p1, {{0, to_model(p2, -1)}});
            splice_edge(path, mid(x, 1), mid(y, 1), {mid(grab, -1)});
            return finish(std::move(path), "wheel-2b");
        }
        throw std::logic_error("wheel 2b: no grabbable lean edge");
    }

    HamCertificate wheel_2c(ModelVertex u, ModelVertex v) {
        Mask r = bit(0);
        auto p = pins({r, u.bits, v.bits});
        Mask z1 = r | bit(1);  // lean level-2 neighbor of r
        auto p1 = cube_cover({{u.bits, v.bits}}, {r},
                             {{0, p[0]}, {0, p[1]}, {full, p[2]}, {full, p[3]}},
                             "wheel 2c: plus path")
                      .paths[0];
        PathCover covm = lemma_43_plus(n, p[0], p[1], r, p[2], p[3], z1, opt);
        log.push_back("lemma 4.3+ in minus copy");
        auto det1 = to_model(covm.paths[0], -1);
        splice_edge(det1, mid(r, -1), mid(z1, -1), {mid(r, 1)});  // grab r+ back
        auto path = assemble_plus(p1, {{0, det1}, {full, to_model(covm.paths[1], -1)}});
        return finish(std::move(path), "wheel-2c");
    }

    HamCertificate wheel_2d(ModelVertex u, ModelVertex v) {
        Mask r = levels(1, {v.bits}, 1)[0];
        Mask z = partner_with_color(r, 1, true, {});  // green stitch partner
        auto p = pins({r, u.bits, v.bits});
        auto p1 = cube_cover({{u.bits, r}}, {},
                             {{0, p[0]}, {0, p[1]}, {full, p[2]}, {full, p[3]}},
                             "wheel 2d: plus path")
                      .paths[0];
        auto covm = cube_cover({{p[0], p[1]}, {p[2], p[3]}, {z, v.bits}}, {0, full}, {},
                               "wheel 2d: minus cover (3 paths)");
        auto path = assemble_plus(
            p1, {{0, to_model(covm.paths[0], -1)}, {full, to_model(covm.paths[1], -1)}});
        auto tail = to_model(covm.paths[2], -1);
        if (!model.adjacent(path.back(), tail.front()))
            throw std::logic_error("wheel 2d: tail does not attach");
        path.insert(path.end(), tail.begin(), tail.end());
        return finish(std::move(path), "wheel-2d");
    }

    HamCertificate wheel_2e(ModelVertex u, ModelVertex v) {
        auto rs = pick_lean_many(false, {u.bits, v.bits}, 3);
        auto covp = cube_cover({{u.bits, rs[0]}, {rs[1], rs[2]}}, {0, full}, {},
                               "wheel 2e: plus cover");
        auto covm = cube_cover({{rs[0], rs[1]}, {rs[2], v.bits}}, {0, full}, {},
                               "wheel 2e: minus cover");
        auto path = concat({to_model(covp.paths[0], 1), to_model(covm.paths[0], -1),
                            to_model(covp.paths[1], 1), to_model(covm.paths[1], -1)});
        return finish(std::move(path), "wheel-2e");
    }

    HamCertificate wheel_2f(ModelVertex u, ModelVertex v) {
        Mask r = bit(0);
        auto p = pins({r, u.bits, v.bits});
        auto p1 = cube_cover({{u.bits, r}}, {},
                             {{0, p[0]}, {0, p[1]}, {full, p[2]}, {full, p[3]}},
                             "wheel 2f: plus path")
                      .paths[0];
        auto covm = cube_cover({{p[0], p[1]}, {p[2], p[3]}, {r, v.bits}}, {0, full}, {},
                               "wheel 2f: minus cover (3 paths)");
        auto path = assemble_plus(
            p1, {{0, to_model(covm.paths[0], -1)}, {full, to_model(covm.paths[1], -1)}});
        auto tail = to_model(covm.paths[2], -1);
        if (!model.adjacent(path.back(), tail.front()))
            throw std::logic_error("wheel 2f: tail does not attach");
        path.insert(path.end(), tail.begin(), tail.end());
        return finish(std::move(path), "wheel-2f");
    }

    // --- even whirl cases (n >= 4) ---

    HamCertificate whirl_shared_pair(ModelVertex u, ModelVertex v) {
        // Endpoints are the two shared vertices; route through a wheel
        // Hamiltonian path between neighbors of each.
        Mask ubits = u.bits, vbits = v.bits;
        ModelVertex up{ubits == 0 ? bit(0) : (full ^ bit(0)), 1};
        ModelVertex vp{vbits == 0 ? bit(0) : (full ^ bit(0)), 1};
        HamCertificate inner = ham_path_wheel(n, up, vp, opt);
        nodes += inner.nodes;
        log.push_back("wheel path between shared-vertex neighbors");
        for (const auto& entry : inner.log) log.push_back("  " + entry);
        StitchedModel wheel_model = build_model(n, WWKind::Wheel);
        std::vector<int> path{mid(ubits, 0)};
        for (int idx : inner.cover.paths[0]) {
            const auto& w = wheel_model.verts[static_cast<std::size_t>(idx)];
            path.push_back(mid(w.bits, w.copy));
        }
        path.push_back(mid(vbits, 0));
        return finish(std::move(path), "whirl-2c-shared");
    }

    HamCertificate whirl_2a(ModelVertex u, ModelVertex v) {
        auto rs = pick_lean_many(false, {u.bits}, 2);
        auto covp = cube_cover({{u.bits, rs[0]}, {rs[1], v.bits}}, {0}, {},
                               "whirl 2a: plus cover");
        auto p3 = cube_cover({{rs[0], rs[1]}}, {full}, {}, "whirl 2a: minus path").paths[0];
        auto path = concat({to_model(covp.paths[0], 1), to_model(p3, -1),
                            to_model(covp.paths[1], 1)});
        return finish(std::move(path), "whirl-2a");
    }

    HamCertificate whirl_2b(ModelVertex u, ModelVertex v) {
        for (auto [x, y] : lean_edges({u.bits, v.bits}, 1, n - 1)) {
            Mask rx = cube_green(x) ? y : x;
            Mask gx = cube_green(x) ? x : y;
            Mask rm1 = partner_with_color(rx, 1, false);
            Mask rm2 = 0;
            bool have = false;
            for (Mask c : partners(gx, 1))
                if (!cube_green(c) && c != rm1) {
                    rm2 = c;
                    have = true;
                    break;
                }
            if (!have) continue;
            auto p1 = cube_cover({{u.bits, v.bits}}, {0}, {{x, y}}, "whirl 2b: plus path")
                          .paths[0];
            auto p2 =
                cube_cover({{rm1, rm2}}, {full}, {}, "whirl 2b: minus path").paths[0];
            auto path = to_model(p1, 1);
            splice_edge(path, mid(rx, 1), mid(gx, 1), to_model(p2, -1));
            return finish(std::move(path), "whirl-2b");
        }
        throw std::logic_error("whirl 2b: no usable lean edge");
    }

    HamCertificate whirl_2c(ModelVertex u, ModelVertex v) {
        Mask r2 = pick_lean(false, {});
        auto r2_partners = partners(r2, 1);
        std::vector<Mask> red_partners;
        for (Mask c : r2_partners)
            if (!cube_green(c)) red_partners.push_back(c);
        if (red_partners.size() < 2) throw std::logic_error("whirl 2c: partner shortage");
        Mask rm2a = red_partners[0], rm2b = red_partners[1];
        Mask r1 = pick_lean(false, {r2, rm2a, rm2b});
        Mask r5 = levels(n - 1, {rm2a, rm2b, r1}, 1)[0];
        auto covp = cube_cover({{u.bits, full}, {r1, v.bits}}, {r2}, {},
                               "whirl 2c: plus cover");
        auto covm = cube_cover({{r5, rm2a}, {rm2b, r1}}, {0, full}, {},
                               "whirl 2c: minus cover");
        auto path = concat({to_model(covp.paths[0], 1), to_model(covm.paths[0], -1),
                            {mid(r2, 1)}, to_model(covm.paths[1], -1),
                            to_model(covp.paths[1], 1)});
        return finish(std::move(path), "whirl-2c");
    }

    HamCertificate whirl_2d(ModelVertex u, ModelVertex v, bool v_green) {
        Mask r1 = pick_lean(false, {u.bits});
        for (auto [x, y] : lean_edges({u.bits, r1}, 1, n - 1)) {
            Mask grab = 0;
            bool have = false;
            for (Mask c : grab_candidates(x, y, 1))
                if (!cube_green(c) && c != v.bits) {
                    grab = c;
                    have = true;
                }
            if (!have) continue;
            Mask start = 0;
            try {
                start = v_green ? partner_with_color(r1, 1, false, {grab})
                                : partner_with_color(r1, 1, true, {grab});
            } catch (const std::logic_error&) {
                continue;
            }
            if (start == v.bits) continue;
            auto p1 = cube_cover({{u.bits, r1}}, {0}, {{x, y}},
                                 v_green ? "whirl 2d: plus path" : "whirl 2e: plus path")
                          .paths[0];
            auto p2 = cube_cover({{start, v.bits}}, {full, grab}, {},
                                 v_green ? "whirl 2d: minus path" : "whirl 2e: minus path")
                          .paths[0];
            auto path = to_model(p1, 1);
            splice_edge(path, mid(x, 1), mid(y, 1), {mid(grab, -1)});
            auto tail = to_model(p2, -1);
            if (!model.adjacent(path.back(), tail.front()))
                throw std::logic_error("whirl 2d/2e: tail does not attach");
            path.insert(path.end(), tail.begin(), tail.end());
            return finish(std::move(path), v_green ? "whirl-2d" : "whirl-2e");
        }
        throw std::logic_error("whirl 2d/2e: no usable lean edge");
    }

    HamCertificate whirl_2f(ModelVertex u, ModelVertex v) {
        auto rs = pick_lean_many(false, {u.bits, v.bits}, 3);
        auto covp = cube_cover({{u.bits, rs[0]}, {rs[1], rs[2]}}, {0}, {},
                               "whirl 2f: plus cover");
        auto covm = cube_cover({{rs[0], rs[1]}, {rs[2], v.bits}}, {full}, {},
                               "whirl 2f: minus cover");
        auto path = concat({to_model(covp.paths[0], 1), to_model(covm.paths[0], -1),
                            to_model(covp.paths[1], 1), to_model(covm.paths[1], -1)});
        return finish(std::move(path), "whirl-2f");
    }
};

// Effective copies for dispatch; shared whirl vertices take the other
// endpoint's copy so that they always land in a same-copy case.
void effective_copies(const Builder& b, const ModelVertex& u, const ModelVertex& v, int& cu,
                      int& cv) {
    bool su = b.kind == WWKind::Whirl && (u.bits == 0 || u.bits == b.full);
    bool sv = b.kind == WWKind::Whirl && (v.bits == 0 || v.bits == b.full);
    if (su && sv) {
        cu = cv = 1;
    } else if (su) {
        cu = cv = v.copy;
    } else if (sv) {
        cu = cv = u.copy;
    } else {
        cu = u.copy;
        cv = v.copy;
    }
}

HamCertificate construct(int n, WWKind kind, ModelVertex u0, ModelVertex v0,
                         const SearchOptions& opt) {
    Builder b(n, kind, opt);
    ModelVertex u = b.model.canonical(u0), v = b.model.canonical(v0);
    if (b.model.index_of(u) < 0 || b.model.index_of(v) < 0)
        throw std::invalid_argument("endpoint is not a model vertex");
    if (b.model.index_of(u) == b.model.index_of(v))
        throw std::invalid_argument("endpoints must be distinct");

    const bool small = (kind == WWKind::Wheel && n <= 6) || (kind == WWKind::Whirl && n == 3);
    if (small) return b.direct_search(u, v, kind == WWKind::Wheel ? "wheel-direct" : "whirl-direct");
    if (2 * (1 << n) > Bits512::kCapacity)
        throw BudgetError("constructive route limited to n <= 8");

    // Normalization: copy-swap via coordinate reversal, endpoint swap via
    // path reversal, and (for odd n) color swap via complementation.
    std::vector<int> transforms;  // 0 = complement, 1 = reverse+swap
    bool swapped = false;
    auto apply = [&](int t) {
        u = b.model.canonical(t == 0 ? auto_complement(n, u) : auto_reverse_swap(n, u));
        v = b.model.canonical(t == 0 ? auto_complement(n, v) : auto_reverse_swap(n, v));
        transforms.push_back(t);
    };

    if (kind == WWKind::Whirl && n % 2 == 0 &&
        ((u.bits == 0 && v.bits == b.full) || (u.bits == b.full && v.bits == 0))) {
        HamCertificate cert = b.whirl_shared_pair(u, v);
        cert.cover.declared_endpoints = {{b.model.index_of(u0), b.model.index_of(v0)}};
        if (cert.cover.paths[0].front() != b.model.index_of(u)) {
            std::reverse(cert.cover.paths[0].begin(), cert.cover.paths[0].end());
        }
        return cert;
    }

    int cu, cv;
    effective_copies(b, u, v, cu, cv);
    if (cu < 0 && cv < 0) {
        apply(1);
        effective_copies(b, u, v, cu, cv);
    }
    if (cu < 0 && cv > 0) {
        std::swap(u, v);
        std::swap(cu, cv);
        swapped = !swapped;
    }

    HamCertificate cert;
    bool gu = cube_green(u.bits), gv = cube_green(v.bits);
    if (n % 2 == 1) {
        if (cv > 0) {  // same copy
            if (gu == gv) {
                if (gu) {
                    apply(0);
                    gu = gv = false;
                }
                cert = b.case_1b(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            } else {
                if (gu) {
                    std::swap(u, v);
                    std::swap(gu, gv);
                    swapped = !swapped;
                }
                cert = b.case_1a(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            }
        } else {
            if (gu) {
                apply(0);
                gu = !gu;
                gv = !gv;
            }
            cert = gv ? b.case_1c(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1})
                      : b.case_1d(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1});
        }
    } else if (kind == WWKind::Wheel) {
        if (cv > 0) {
            if (gu && !gv) {
                cert = b.wheel_2a(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            } else if (!gu && gv) {
                std::swap(u, v);
                swapped = !swapped;
                cert = b.wheel_2a(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            } else if (!gu) {
                cert = b.wheel_2b(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            } else {
                cert = b.wheel_2c(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            }
        } else {
            if (gu && !gv) {
                cert = b.wheel_2d(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1});
            } else if (!gu && !gv) {
                cert = b.wheel_2e(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1});
            } else if (gu && gv) {
                cert = b.wheel_2f(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1});
            } else {  // red-green: swap endpoints, then restore u to the plus copy
                std::swap(u, v);
                swapped = !swapped;
                apply(1);
                cert = b.wheel_2d(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1});
            }
        }
    } else {  // even whirl
        if (cv > 0) {
            if (gu && !gv) {
                std::swap(u, v);
                std::swap(gu, gv);
                swapped = !swapped;
            }
            if (!gu && gv) {
                // Keep the all-zero shared vertex inside the searched host.
                if (v.bits == 0) apply(0);
                cert = b.whirl_2a(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            } else if (!gu) {
                cert = b.whirl_2b(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            } else {
                // Both green; keep the all-one shared vertex usable as the
                // internal junction.
                if (u.bits == full_mask(n) || v.bits == full_mask(n)) apply(0);
                cert = b.whirl_2c(ModelVertex{u.bits, 1}, ModelVertex{v.bits, 1});
            }
        } else {
            if (!gu && gv) {
                cert = b.whirl_2d(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1}, true);
            } else if (!gu && !gv) {
                cert = b.whirl_2d(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1}, false);
            } else if (gu && gv) {
                cert = b.whirl_2f(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1});
            } else {
                std::swap(u, v);
                swapped = !swapped;
                apply(1);
                cert = b.whirl_2d(ModelVertex{u.bits, 1}, ModelVertex{v.bits, -1}, true);
            }
        }
    }

    // Undo the normalization on the finished path.
    auto& path = cert.cover.paths[0];
    for (auto it = transforms.rbegin(); it != transforms.rend(); ++it) {
        for (int& idx : path) {
            ModelVertex w = b.model.verts[static_cast<std::size_t>(idx)];
            w = *it == 0 ? auto_complement(n, w) : auto_reverse_swap(n, w);
            idx = b.model.index_of(w);
        }
    }
    if (swapped) std::reverse(path.begin(), path.end());
    cert.cover.declared_endpoints = {{b.model.index_of(u0), b.model.index_of(v0)}};
    auto err = check_cover([&b](int a, int c) { return b.model.adjacent(a, c); },
                           static_cast<int>(b.model.verts.size()), cert.cover);
    if (!err.empty()) throw std::logic_error("denormalized path invalid: " + err);
    return cert;
}

}  // namespace

HamCertificate ham_path_wheel(int n, ModelVertex u, ModelVertex v, const SearchOptions& opt) {
    return construct(n, WWKind::Wheel, u, v, opt);
}

HamCertificate ham_path_whirl(int n, ModelVertex u, ModelVertex v, const SearchOptions& opt) {
    return construct(n, WWKind::Whirl, u, v, opt);
}

}  // namespace cobase
