#include "cobase/r10.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "cobase/bcgraph.hpp"

namespace cobase {

namespace {

// Lexicographic 3-subsets of {1..5}.
constexpr std::array<std::array<int, 3>, 10> kTriples = {{{1, 2, 3},
                                                          {1, 2, 4},
                                                          {1, 2, 5},
                                                          {1, 3, 4},
                                                          {1, 3, 5},
                                                          {1, 4, 5},
                                                          {2, 3, 4},
                                                          {2, 3, 5},
                                                          {2, 4, 5},
                                                          {3, 4, 5}}};

std::array<int, 5> degrees(Mask triples) {
    std::array<int, 5> deg{};
    for (int i = 0; i < 10; ++i)
        if (test_bit(triples, i))
            for (int e : kTriples[static_cast<std::size_t>(i)])
                ++deg[static_cast<std::size_t>(e - 1)];
    return deg;
}

using Word = std::array<int, 5>;

Word shift_word(const Word& w) { return {w[1], w[2], w[3], w[4], w[0]}; }
Word reverse_word(const Word& w) { return {w[4], w[3], w[2], w[1], w[0]}; }

// Triples of the first base-cobase template: abd, acd, bcd, bce, bde.
Mask type1_triples(const Word& w) {
    auto [a, b, c, d, e] = w;
    Mask m = 0;
    m |= bit(triple_index(a, b, d));
    m |= bit(triple_index(a, c, d));
    m |= bit(triple_index(b, c, d));
    m |= bit(triple_index(b, c, e));
    m |= bit(triple_index(b, d, e));
    return m;
}

// Second template: abd, acd, ace, bce, bde.
Mask type2_triples(const Word& w) {
    auto [a, b, c, d, e] = w;
    Mask m = 0;
    m |= bit(triple_index(a, b, d));
    m |= bit(triple_index(a, c, d));
    m |= bit(triple_index(a, c, e));
    m |= bit(triple_index(b, c, e));
    m |= bit(triple_index(b, d, e));
    return m;
}

Word canonical_s2(Word w) { return std::min(w, reverse_word(w)); }

Word canonical_d5(Word w) {
    Word best = w;
    Word cur = w;
    for (int k = 0; k < 5; ++k) {
        best = std::min(best, cur);
        best = std::min(best, reverse_word(cur));
        cur = shift_word(cur);
    }
    return best;
}

bool word_parity_even(const Word& w) {
    int inversions = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)]) ++inversions;
    return inversions % 2 == 0;
}

const std::array<Word, 120>& all_words() {
    static const std::array<Word, 120> words = [] {
        std::array<Word, 120> out{};
        Word w = {1, 2, 3, 4, 5};
        int i = 0;
        do {
            out[static_cast<std::size_t>(i++)] = w;
        } while (std::next_permutation(w.begin(), w.end()));
        return out;
    }();
    return words;
}

}  // namespace

int triple_index(int a, int b, int c) {
    std::array<int, 3> t = {a, b, c};
    std::sort(t.begin(), t.end());
    for (int i = 0; i < 10; ++i)
        if (kTriples[static_cast<std::size_t>(i)] == t) return i;
    throw std::invalid_argument("not a 3-subset of {1..5}");
}

std::array<int, 3> triple_elements(int index) {
    if (index < 0 || index >= 10) throw std::invalid_argument("triple index out of range");
    return kTriples[static_cast<std::size_t>(index)];
}

Matroid r10_matroid() {
    // Rows of the GF(2) representation; column j is the incidence vector
    // of the j-th triple.
    std::vector<Mask> rows(5, 0);
    for (int j = 0; j < 10; ++j)
        for (int e : kTriples[static_cast<std::size_t>(j)])
            rows[static_cast<std::size_t>(e - 1)] |= bit(j);
    return gf2_matroid(10, rows);
}

CircuitClass classify_circuit(Mask triples) {
    check_in_range(triples, 10);
    static const Matroid m = r10_matroid();
    CircuitClass out;
    const int size = popcount(triples);
    if (size == 0 || m.rank(triples) == size) return out;  // independent
    for (int i = 0; i < 10; ++i) {
        if (!test_bit(triples, i)) continue;
        Mask sub = triples & ~bit(i);
        if (m.rank(sub) < popcount(sub)) return out;  // a proper subset is dependent
    }
    // A circuit; only sizes 4 and 6 exist.
    Mask four = size == 4 ? triples : complement(triples, 10);
    if (popcount(four) != 4) return out;
    // Size-4 shape {abc, abe, acd, ade}: one element of degree 4, and the
    // remaining four form a 4-cycle through the triples at it.
    auto deg = degrees(four);
    int a = -1;
    for (int e = 1; e <= 5; ++e)
        if (deg[static_cast<std::size_t>(e - 1)] == 4) a = e;
    if (a < 0) throw std::logic_error("size-4 circuit without a degree-4 element");
    for (const Word& w : all_words()) {
        if (w[0] != a) continue;
        Mask probe = 0;
        probe |= bit(triple_index(w[0], w[1], w[2]));
        probe |= bit(triple_index(w[0], w[1], w[4]));
        probe |= bit(triple_index(w[0], w[2], w[3]));
        probe |= bit(triple_index(w[0], w[3], w[4]));
        if (probe == four) {
            out.kind = size == 4 ? CircuitKind::Circuit4 : CircuitKind::Circuit6;
            out.word = w;
            return out;
        }
    }
    throw std::logic_error("circuit does not match the size-4 template");
}

std::string BcClass::to_string() const {
    std::string s = "[";
    for (int x : word) s += static_cast<char>('0' + x);
    s += kind == Kind::S2 ? "]_S2" : "]_D5";
    return s;
}

BcClass classify_bc(Mask b) {
    check_in_range(b, 10);
    static const Matroid m = r10_matroid();
    if (popcount(b) != 5 || m.rank(b) != 5 || m.rank(complement(b, 10)) != 5)
        throw std::invalid_argument("not a base-cobase");
    for (const Word& w : all_words()) {
        if (type1_triples(w) == b) return BcClass{BcClass::Kind::S2, canonical_s2(w)};
        if (type2_triples(w) == b) return BcClass{BcClass::Kind::D5, canonical_d5(w)};
    }
    throw std::logic_error("base-cobase matches neither template");
}

Mask bc_from_class(const BcClass& c) {
    return c.kind == BcClass::Kind::S2 ? type1_triples(c.word) : type2_triples(c.word);
}

std::vector<BcClass> predicted_neighbors(const BcClass& c) {
    std::vector<BcClass> out;
    auto [a, b, cc, d, e] = c.word;
    if (c.kind == BcClass::Kind::S2) {
        out.push_back({BcClass::Kind::D5, canonical_d5(c.word)});
        out.push_back({BcClass::Kind::S2, canonical_s2({cc, b, a, d, e})});
        out.push_back({BcClass::Kind::S2, canonical_s2({a, cc, b, d, e})});
        out.push_back({BcClass::Kind::S2, canonical_s2({a, b, d, cc, e})});
        out.push_back({BcClass::Kind::S2, canonical_s2({a, b, e, d, cc})});
    } else {
        Word w = c.word;
        for (int k = 0; k < 5; ++k) {
            out.push_back({BcClass::Kind::S2, canonical_s2(w)});
            w = shift_word(w);
        }
    }
    return out;
}

R10DescriptionReport verify_r10_description() {
    R10DescriptionReport rep;
    Matroid m = r10_matroid();
    auto bc = base_cobases(m);
    BCGraph g = graph_from_family(GraphKind::BaseCobaseGraph, bc);

    std::vector<BcClass> classes;
    classes.reserve(bc.masks.size());
    std::map<BcClass, int> index_of;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        BcClass c = classify_bc(g.vertices[i]);
        if (c.kind == BcClass::Kind::S2)
            ++rep.s2_count;
        else
            ++rep.d5_count;
        classes.push_back(c);
        index_of[c] = static_cast<int>(i);
        if (bc_from_class(c) != g.vertices[i])
            throw std::logic_error("class representative does not rebuild the base-cobase");
    }
    rep.counts_match = rep.s2_count == 60 && rep.d5_count == 12;

    rep.degrees_five = true;
    rep.edges_match = true;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.adj[i].size() != 5) rep.degrees_five = false;
        std::vector<int> predicted;
        for (const BcClass& nb : predicted_neighbors(classes[i])) {
            auto it = index_of.find(nb);
            if (it == index_of.end()) {
                rep.edges_match = false;
                break;
            }
            predicted.push_back(it->second);
        }
        std::sort(predicted.begin(), predicted.end());
        if (predicted != g.adj[i]) rep.edges_match = false;
    }

    rep.bipartite = two_coloring(g).has_value();
    // Sign sides: even-sign two-element classes with odd-sign cyclic ones.
    for (std::size_t i = 0; i < classes.size(); ++i) {
        bool even = word_parity_even(classes[i].word);
        bool side_x = (classes[i].kind == BcClass::Kind::S2) ? even : !even;
        if (side_x)
            ++rep.part_x;
        else
            ++rep.part_y;
    }
    rep.sign_partition_valid = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        bool even_i = word_parity_even(classes[i].word);
        bool side_i = (classes[i].kind == BcClass::Kind::S2) ? even_i : !even_i;
        for (int j : g.adj[i]) {
            bool even_j = word_parity_even(classes[static_cast<std::size_t>(j)].word);
            bool side_j = (classes[static_cast<std::size_t>(j)].kind == BcClass::Kind::S2)
                              ? even_j
                              : !even_j;
            if (side_i == side_j) rep.sign_partition_valid = false;
        }
    }

    rep.ham_fails = check_ham(g).verdict == Verdict::Fails;
    return rep;
}

LaceabilityReport verify_laceability(bool full_sweep, const SearchOptions& opt, int threads) {
    LaceabilityReport rep;
    rep.full_sweep = full_sweep;
    Matroid m = r10_matroid();
    BCGraph g = build_bc_graph(m);
    const int nv = static_cast<int>(g.num_vertices());
    auto coloring = two_coloring(g);
    if (!coloring) throw std::logic_error("base-cobase graph is unexpectedly non-bipartite");

    // Vertex permutations induced by relabeling the five points.
    std::vector<std::vector<int>> vperms;
    vperms.reserve(120);
    for (const Word& w : all_words()) {
        std::vector<int> perm(static_cast<std::size_t>(nv));
        for (int i = 0; i < nv; ++i) {
            Mask image = 0;
            for (int t = 0; t < 10; ++t) {
                if (!test_bit(g.vertices[static_cast<std::size_t>(i)], t)) continue;
                auto tri = triple_elements(t);
                image |= bit(triple_index(w[static_cast<std::size_t>(tri[0] - 1)],
                                          w[static_cast<std::size_t>(tri[1] - 1)],
                                          w[static_cast<std::size_t>(tri[2] - 1)]));
            }
            int target = g.index_of(image);
            if (target < 0) throw std::logic_error("relabeling left the base-cobase family");
            perm[static_cast<std::size_t>(i)] = target;
        }
        vperms.push_back(std::move(perm));
    }

    std::vector<std::pair<int, int>> cross;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if ((*coloring)[static_cast<std::size_t>(i)] !=
                (*coloring)[static_cast<std::size_t>(j)])
                cross.emplace_back(i, j);
    rep.pairs_total = cross.size();

    std::vector<std::pair<int, int>> work;
    if (full_sweep) {
        work = cross;
        rep.orbit_count = 0;
        std::vector<std::pair<int, int>> canon_seen;
        for (auto [i, j] : cross) {
            std::pair<int, int> canon{nv, nv};
            for (const auto& p : vperms) {
                int a = p[static_cast<std::size_t>(i)], b = p[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                canon = std::min(canon, {a, b});
            }
            if (!std::binary_search(canon_seen.begin(), canon_seen.end(), canon)) {
                canon_seen.insert(
                    std::lower_bound(canon_seen.begin(), canon_seen.end(), canon), canon);
            }
        }
        rep.orbit_count = canon_seen.size();
    } else {
        // One representative per orbit: pairs that are their own canonical form.
        for (auto [i, j] : cross) {
            std::pair<int, int> canon{nv, nv};
            for (const auto& p : vperms) {
                int a = p[static_cast<std::size_t>(i)], b = p[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                canon = std::min(canon, {a, b});
            }
            if (canon == std::make_pair(i, j)) work.emplace_back(i, j);
        }
        rep.orbit_count = work.size();
    }

    SearchGraph sg = to_search_graph(g);
    std::vector<char> ok(work.size(), 0);
    std::vector<std::uint64_t> node_counts(work.size(), 0);
    auto runner = [&](std::size_t begin, std::size_t end) {
        for (std::size_t w = begin; w < end; ++w) {
            auto [i, j] = work[w];
            HamResult hr = find_ham_path(sg, i, j, opt);
            node_counts[w] = hr.nodes;
            if (!hr.found) continue;
            PathCover pc;
            pc.paths = {hr.path};
            pc.declared_endpoints = {{i, j}};
            auto err = check_cover(
                [&g](int a, int b) {
                    return popcount(g.vertices[static_cast<std::size_t>(a)] ^
                                    g.vertices[static_cast<std::size_t>(b)]) == 2;
                },
                nv, pc);
            ok[w] = err.empty();
        }
    };
    threads = std::max(1, threads);
    if (threads == 1) {
        runner(0, work.size());
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk =
            (work.size() + static_cast<std::size_t>(threads) - 1) / static_cast<std::size_t>(threads);
        for (int t = 0; t < threads; ++t) {
            std::size_t b = static_cast<std::size_t>(t) * chunk;
            std::size_t e = std::min(work.size(), b + chunk);
            if (b < e) pool.emplace_back(runner, b, e);
        }
        for (auto& th : pool) th.join();
    }

    rep.verified = true;
    for (std::size_t w = 0; w < work.size(); ++w) {
        rep.nodes += node_counts[w];
        if (ok[w]) {
            ++rep.pairs_checked;
        } else {
            rep.verified = false;
        }
    }
    return rep;
}

}  // namespace cobase
