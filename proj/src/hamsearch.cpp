#include "cobase/hamsearch.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cobase {

int Bits512::count() const {
    int c = 0;
    for (std::uint64_t x : w) c += std::popcount(x);
    return c;
}

bool Bits512::any() const {
    for (std::uint64_t x : w)
        if (x) return true;
    return false;
}

bool Bits512::intersects(const Bits512& o) const {
    for (int i = 0; i < kWords; ++i)
        if (w[static_cast<std::size_t>(i)] & o.w[static_cast<std::size_t>(i)]) return true;
    return false;
}

bool Bits512::subset_of(const Bits512& o) const {
    for (int i = 0; i < kWords; ++i)
        if (w[static_cast<std::size_t>(i)] & ~o.w[static_cast<std::size_t>(i)]) return false;
    return true;
}

Bits512& Bits512::operator|=(const Bits512& o) {
    for (int i = 0; i < kWords; ++i)
        w[static_cast<std::size_t>(i)] |= o.w[static_cast<std::size_t>(i)];
    return *this;
}

Bits512& Bits512::operator&=(const Bits512& o) {
    for (int i = 0; i < kWords; ++i)
        w[static_cast<std::size_t>(i)] &= o.w[static_cast<std::size_t>(i)];
    return *this;
}

Bits512 Bits512::and_not(const Bits512& o) const {
    Bits512 r;
    for (int i = 0; i < kWords; ++i)
        r.w[static_cast<std::size_t>(i)] =
            w[static_cast<std::size_t>(i)] & ~o.w[static_cast<std::size_t>(i)];
    return r;
}

SearchGraph::SearchGraph(int num_vertices) : n(num_vertices) {
    if (num_vertices < 0 || num_vertices > Bits512::kCapacity)
        throw std::invalid_argument("search graph limited to 512 vertices");
    adj.resize(static_cast<std::size_t>(num_vertices));
}

void SearchGraph::add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("bad edge");
    adj[static_cast<std::size_t>(u)].set(v);
    adj[static_cast<std::size_t>(v)].set(u);
}

namespace {

std::uint32_t mix(std::uint32_t x) {
    x ^= x >> 16;
    x *= 0x7feb352du;
    x ^= x >> 15;
    x *= 0x846ca68bu;
    x ^= x >> 16;
    return x;
}

// Backtracking search for a system of vertex-disjoint paths with
// prescribed endpoints covering a vertex universe.  Segments are searched
// in order; reaching the current segment's target "jumps" (no edge) to
// the next segment's start.  Declared endpoints can never be interior
// vertices, which pins the requested pairing exactly.
class CoverSearcher {
  public:
    CoverSearcher(const SearchGraph& g, Bits512 universe,
                  const std::vector<std::pair<int, int>>& segs, const SearchOptions& opt)
        : g_(g), universe_(universe), segs_(segs), opt_(opt) {
        endpoint_of_.assign(static_cast<std::size_t>(g.n), -1);
        for (std::size_t m = 0; m < segs_.size(); ++m) {
            endpoint_of_[static_cast<std::size_t>(segs_[m].first)] = static_cast<int>(m);
            endpoint_of_[static_cast<std::size_t>(segs_[m].second)] = static_cast<int>(m);
        }
        bipartite_ = two_color();
        if (bipartite_) {
            // Suffix color-imbalance required by the segments after index m.
            suffix_diff_.assign(segs_.size() + 1, 0);
            for (std::size_t m = segs_.size(); m-- > 0;) {
                int d = 0;
                int cs = color_[static_cast<std::size_t>(segs_[m].first)];
                int ct = color_[static_cast<std::size_t>(segs_[m].second)];
                if (cs == ct) d = (cs == 0) ? 1 : -1;
                suffix_diff_[m] = suffix_diff_[m + 1] + d;
            }
        }
    }

    struct Outcome {
        bool found = false;
        bool exhausted = false;
        std::vector<std::vector<int>> segments;
        std::uint64_t nodes = 0;
    };

    Outcome run() {
        Outcome out;
        total_ = universe_.count();
        for (auto [s, t] : segs_)
            if (!universe_.test(s) || !universe_.test(t)) {
                out.exhausted = true;
                return out;
            }
        if (bipartite_) {
            rem_color_ = {0, 0};
            universe_.for_each([&](int v) {
                ++rem_color_[static_cast<std::size_t>(color_[static_cast<std::size_t>(v)])];
            });
        }

        std::vector<Frame> stack;
        stack.reserve(static_cast<std::size_t>(total_));
        push(stack, segs_[0].first, false);
        while (!stack.empty()) {
            if (done_) {
                out.found = true;
                out.nodes = nodes_;
                out.segments.emplace_back();
                for (const Frame& fr : stack) {
                    if (fr.jumped) out.segments.emplace_back();
                    out.segments.back().push_back(fr.vertex);
                }
                return out;
            }
            if (nodes_ >= opt_.node_budget) {
                out.nodes = nodes_;
                return out;  // budget hit: neither found nor exhausted
            }
            Frame& f = stack.back();
            if (f.next < f.cands.size()) {
                int w = f.cands[f.next++];
                push(stack, w, f.jump_next);
            } else {
                pop(stack);
            }
        }
        out.exhausted = true;
        out.nodes = nodes_;
        return out;
    }

  private:
    struct Frame {
        int vertex;
        bool jumped;     // entered as the start of a new segment
        bool jump_next;  // children are segment starts, not neighbors
        std::vector<int> cands;
        std::size_t next = 0;
    };

    bool two_color() {
        color_.assign(static_cast<std::size_t>(g_.n), -1);
        std::vector<int> queue;
        bool ok = true;
        universe_.for_each([&](int v) {
            if (!ok || color_[static_cast<std::size_t>(v)] != -1) return;
            color_[static_cast<std::size_t>(v)] = 0;
            queue.assign(1, v);
            while (!queue.empty() && ok) {
                int x = queue.back();
                queue.pop_back();
                Bits512 nb = g_.adj[static_cast<std::size_t>(x)];
                nb &= universe_;
                nb.for_each([&](int y) {
                    if (color_[static_cast<std::size_t>(y)] == -1) {
                        color_[static_cast<std::size_t>(y)] =
                            1 - color_[static_cast<std::size_t>(x)];
                        queue.push_back(y);
                    } else if (color_[static_cast<std::size_t>(y)] ==
                               color_[static_cast<std::size_t>(x)]) {
                        ok = false;
                    }
                });
            }
        });
        return ok;
    }

    void push(std::vector<Frame>& stack, int v, bool jumped) {
        ++nodes_;
        visited_.set(v);
        if (bipartite_) --rem_color_[static_cast<std::size_t>(color_[static_cast<std::size_t>(v)])];
        if (jumped) ++seg_;
        stack.push_back(Frame{v, jumped, false, {}, 0});
        Frame& f = stack.back();

        const int k = static_cast<int>(segs_.size());
        const bool at_target = v == segs_[static_cast<std::size_t>(seg_)].second;
        ++visited_count_;
        if (at_target && seg_ == k - 1) {
            if (visited_count_ == total_) done_ = true;
            return;  // otherwise a dead end: cands stay empty
        }
        if (at_target) {
            f.jump_next = true;
            f.cands = {segs_[static_cast<std::size_t>(seg_) + 1].first};
            return;
        }
        f.cands = candidates(v);
    }

    void pop(std::vector<Frame>& stack) {
        const Frame& f = stack.back();
        visited_.reset(f.vertex);
        if (bipartite_)
            ++rem_color_[static_cast<std::size_t>(color_[static_cast<std::size_t>(f.vertex)])];
        if (f.jumped) --seg_;
        --visited_count_;
        stack.pop_back();
    }

    std::vector<int> candidates(int cur) {
        Bits512 rem = universe_.and_not(visited_);
        const int k = static_cast<int>(segs_.size());
        const int t_cur = segs_[static_cast<std::size_t>(seg_)].second;

        if (bipartite_) {
            // Color balance over the remaining vertices plus cur must match
            // what the remaining segment endpoints dictate.
            int diff = rem_color_[0] - rem_color_[1];  // green minus red counts
            int ccur = color_[static_cast<std::size_t>(cur)];
            diff += (ccur == 0) ? 1 : -1;
            int need = suffix_diff_[static_cast<std::size_t>(seg_) + 1];
            int ct = color_[static_cast<std::size_t>(t_cur)];
            if (ccur == ct) need += (ccur == 0) ? 1 : -1;
            if (diff != need) return {};
        }

        Bits512 curnb = g_.adj[static_cast<std::size_t>(cur)];
        int forced = -1;
        bool dead = false;
        std::vector<std::pair<int, int>> order;
        rem.for_each([&](int x) {
            if (dead) return;
            Bits512 nb = g_.adj[static_cast<std::size_t>(x)];
            nb &= rem;
            int dr = nb.count();
            bool adj_cur = curnb.test(x);
            int ep = endpoint_of_[static_cast<std::size_t>(x)];
            if (ep >= 0) {
                // Remaining endpoints only ever take one path edge; future
                // ones cannot lean on cur.
                int needed = (x == t_cur) ? dr + (adj_cur ? 1 : 0) : dr;
                if (needed < 1) {
                    dead = true;
                    return;
                }
            } else {
                if (dr + (adj_cur ? 1 : 0) < 2) {
                    dead = true;
                    return;
                }
            }
            if (adj_cur && dr == 0) {
                // Only remaining connection is cur: must be taken now, and
                // only the current target may end a path here.
                if (x != t_cur || forced != -1) {
                    dead = true;
                    return;
                }
                forced = x;
            }
            if (adj_cur) order.emplace_back(dr, x);
        });
        if (dead) return {};

        Bits512 remnt = rem;
        remnt.reset(t_cur);
        const bool only_target_left = !remnt.any();
        auto close_legal = [&] { return seg_ < k - 1 || only_target_left; };

        if (forced != -1) {
            if (!close_legal()) return {};
            return {forced};
        }

        // Connectivity: every unvisited vertex must be reachable inside the
        // remaining region from cur or from a future segment endpoint.
        {
            Bits512 live = rem;
            live.set(cur);
            Bits512 reach{}, frontier{};
            reach.set(cur);
            frontier.set(cur);
            for (int m = seg_ + 1; m < k; ++m) {
                frontier.set(segs_[static_cast<std::size_t>(m)].first);
                frontier.set(segs_[static_cast<std::size_t>(m)].second);
            }
            frontier &= live;
            reach |= frontier;
            while (frontier.any()) {
                Bits512 nxt{};
                frontier.for_each([&](int v) { nxt |= g_.adj[static_cast<std::size_t>(v)]; });
                nxt &= live;
                nxt = nxt.and_not(reach);
                reach |= nxt;
                frontier = nxt;
            }
            if (!rem.subset_of(reach)) return {};
        }

        if (opt_.seed != 0) {
            std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
                if (a.first != b.first) return a.first < b.first;
                return mix(opt_.seed ^ static_cast<std::uint32_t>(a.second) * 0x9e3779b9u) <
                       mix(opt_.seed ^ static_cast<std::uint32_t>(b.second) * 0x9e3779b9u);
            });
        } else {
            std::stable_sort(order.begin(), order.end());
        }
        std::vector<int> out;
        out.reserve(order.size());
        for (auto [key, x] : order) {
            (void)key;
            int ep = endpoint_of_[static_cast<std::size_t>(x)];
            if (ep >= 0) {
                if (x != t_cur) continue;  // foreign endpoints are never interior
                if (!close_legal()) continue;
            }
            out.push_back(x);
        }
        return out;
    }

    const SearchGraph& g_;
    Bits512 universe_;
    std::vector<std::pair<int, int>> segs_;
    SearchOptions opt_;
    Bits512 visited_{};
    std::vector<int> color_;
    std::vector<int> endpoint_of_;
    std::vector<int> suffix_diff_;
    std::array<int, 2> rem_color_{};
    bool bipartite_ = false;
    bool done_ = false;
    int total_ = 0;
    int seg_ = 0;
    int visited_count_ = 0;
    std::uint64_t nodes_ = 0;
};

// A stuck ordering is usually bad luck rather than hardness: restart with
// perturbed tie-breaking on a doubling budget schedule.  A run that proves
// absence (exhausted) ends the ladder immediately.
CoverSearcher::Outcome run_with_restarts(const SearchGraph& g, const Bits512& universe,
                                         const std::vector<std::pair<int, int>>& segs,
                                         const SearchOptions& opt) {
    const std::uint64_t total = opt.node_budget;
    std::uint64_t spent = 0;
    std::uint64_t slice = std::max<std::uint64_t>(20'000, total / 64);
    std::uint32_t attempt = 0;
    CoverSearcher::Outcome last;
    while (spent < total) {
        SearchOptions o = opt;
        o.node_budget = std::min(slice, total - spent);
        o.seed = opt.seed + attempt;
        CoverSearcher searcher(g, universe, segs, o);
        auto res = searcher.run();
        spent += res.nodes;
        res.nodes = spent;
        if (res.found || res.exhausted) return res;
        slice *= 2;
        ++attempt;
        last = res;
    }
    last.nodes = spent;
    return last;
}

}  // namespace

HamResult find_ham_path(const SearchGraph& g, int s, int t, const Bits512& excluded,
                        const SearchOptions& opt) {
    if (s < 0 || t < 0 || s >= g.n || t >= g.n || s == t)
        throw std::invalid_argument("ham path endpoints invalid");
    Bits512 universe;
    for (int v = 0; v < g.n; ++v)
        if (!excluded.test(v)) universe.set(v);
    auto res = run_with_restarts(g, universe, {{s, t}}, opt);
    HamResult out;
    out.found = res.found;
    out.exhausted = res.exhausted;
    out.nodes = res.nodes;
    if (res.found) out.path = std::move(res.segments[0]);
    return out;
}

HamResult find_ham_path(const SearchGraph& g, int s, int t, const SearchOptions& opt) {
    return find_ham_path(g, s, t, Bits512{}, opt);
}

CoverResult find_path_cover(const SearchGraph& g, const CoverRequest& req,
                            const SearchOptions& opt) {
    if (req.pairs.empty()) throw std::invalid_argument("cover needs at least one pair");
    Bits512 excluded;
    for (int v : req.excluded) {
        if (v < 0 || v >= g.n) throw std::invalid_argument("excluded vertex out of range");
        excluded.set(v);
    }
    std::vector<char> endpoint_seen(static_cast<std::size_t>(g.n));
    for (auto [s, t] : req.pairs) {
        if (s < 0 || t < 0 || s >= g.n || t >= g.n || s == t)
            throw std::invalid_argument("bad endpoint pair");
        if (excluded.test(s) || excluded.test(t))
            throw std::invalid_argument("endpoint is excluded");
        if (endpoint_seen[static_cast<std::size_t>(s)]++ ||
            endpoint_seen[static_cast<std::size_t>(t)]++)
            throw std::invalid_argument("endpoints must be distinct across pairs");
    }

    // Forced edges become degree-2 subdivision vertices; the original edge
    // is removed so covering the new vertex forces the edge.
    const int nf = static_cast<int>(req.forced_edges.size());
    SearchGraph aug(g.n + nf);
    for (int u = 0; u < g.n; ++u) {
        Bits512 nb = g.adj[static_cast<std::size_t>(u)];
        nb.for_each([&](int v) {
            if (v > u && !excluded.test(u) && !excluded.test(v)) aug.add_edge(u, v);
        });
    }
    for (int i = 0; i < nf; ++i) {
        auto [x, y] = req.forced_edges[static_cast<std::size_t>(i)];
        if (!g.adjacent(x, y)) throw std::invalid_argument("forced edge not in host graph");
        if (excluded.test(x) || excluded.test(y))
            throw std::invalid_argument("forced edge touches excluded vertex");
        int w = g.n + i;
        aug.adj[static_cast<std::size_t>(x)].reset(y);
        aug.adj[static_cast<std::size_t>(y)].reset(x);
        aug.add_edge(w, x);
        aug.add_edge(w, y);
    }

    Bits512 universe;
    for (int v = 0; v < aug.n; ++v)
        if (v >= g.n || !excluded.test(v)) universe.set(v);
    auto res = run_with_restarts(aug, universe, req.pairs, opt);

    CoverResult out;
    out.nodes = res.nodes;
    out.exhausted = res.exhausted;
    if (!res.found) return out;

    out.found = true;
    out.cover.declared_endpoints = req.pairs;
    out.cover.forced_edges = req.forced_edges;
    out.cover.forbidden = req.excluded;
    for (auto& seg : res.segments) {
        std::vector<int> cleaned;
        cleaned.reserve(seg.size());
        for (int v : seg)
            if (v < g.n) cleaned.push_back(v);  // drop subdivision vertices
        out.cover.paths.push_back(std::move(cleaned));
    }
    return out;
}

std::string check_cover(const std::function<bool(int, int)>& adjacent, int host_size,
                        const PathCover& cover) {
    std::vector<int> times_seen(static_cast<std::size_t>(host_size), 0);
    for (const auto& path : cover.paths) {
        if (path.empty()) return "empty path";
        for (std::size_t i = 0; i < path.size(); ++i) {
            int v = path[i];
            if (v < 0 || v >= host_size) return "vertex out of range";
            ++times_seen[static_cast<std::size_t>(v)];
            if (i > 0 && !adjacent(path[i - 1], v)) return "consecutive vertices not adjacent";
        }
    }
    std::vector<char> forbidden(static_cast<std::size_t>(host_size));
    for (int v : cover.forbidden) forbidden[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < host_size; ++v) {
        int expect = forbidden[static_cast<std::size_t>(v)] ? 0 : 1;
        if (times_seen[static_cast<std::size_t>(v)] != expect)
            return "vertex " + std::to_string(v) + " covered " +
                   std::to_string(times_seen[static_cast<std::size_t>(v)]) + " times";
    }
    if (cover.declared_endpoints.size() != cover.paths.size())
        return "endpoint count mismatch";
    for (std::size_t i = 0; i < cover.paths.size(); ++i) {
        const auto& p = cover.paths[i];
        auto [s, t] = cover.declared_endpoints[i];
        if (p.front() != s || p.back() != t) return "path endpoints do not match declaration";
    }
    for (auto [x, y] : cover.forced_edges) {
        bool present = false;
        for (const auto& p : cover.paths)
            for (std::size_t i = 0; i + 1 < p.size() && !present; ++i)
                present = (p[i] == x && p[i + 1] == y) || (p[i] == y && p[i + 1] == x);
        if (!present)
            return "forced edge {" + std::to_string(x) + "," + std::to_string(y) + "} missing";
    }
    return {};
}

}  // namespace cobase
