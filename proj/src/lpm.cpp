#include "cobase/lpm.hpp"

#include <algorithm>

#include "cobase/bcgraph.hpp"

namespace cobase {

namespace {

void validate(const LatticePathPair& p) {
    if (p.m < 0 || p.r < 0 || p.steps() < 1 || p.steps() > kMaxGround)
        throw std::invalid_argument("path pair dimensions out of range");
    check_in_range(p.upper, p.steps());
    check_in_range(p.lower, p.steps());
    if (popcount(p.upper) != p.r || popcount(p.lower) != p.r)
        throw std::invalid_argument("boundary paths need exactly r North steps");
    auto hu = prefix_heights(p.upper, p.steps());
    auto hl = prefix_heights(p.lower, p.steps());
    for (int i = 0; i <= p.steps(); ++i)
        if (hu[static_cast<std::size_t>(i)] < hl[static_cast<std::size_t>(i)])
            throw std::invalid_argument("upper path dips below lower path");
}

Mask heights_to_mask(const std::vector<int>& h) {
    Mask m = 0;
    for (std::size_t i = 1; i < h.size(); ++i)
        if (h[i] == h[i - 1] + 1) m |= bit(static_cast<int>(i) - 1);
    return m;
}

}  // namespace

LatticePathPair make_path_pair(int m, int r, Mask upper, Mask lower) {
    LatticePathPair p{m, r, upper, lower};
    validate(p);
    return p;
}

LatticePathPair make_path_pair(const std::string& upper, const std::string& lower) {
    if (upper.size() != lower.size() || upper.empty())
        throw std::invalid_argument("boundary paths must share a positive length");
    auto parse = [](const std::string& s) {
        Mask m = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'N')
                m |= bit(static_cast<int>(i));
            else if (s[i] != 'E')
                throw std::invalid_argument("paths are strings over {N,E}");
        }
        return m;
    };
    Mask u = parse(upper);
    int r = popcount(u);
    int m = static_cast<int>(upper.size()) - r;
    return make_path_pair(m, r, u, parse(lower));
}

std::string path_to_string(Mask path, int steps) {
    std::string s(static_cast<std::size_t>(steps), 'E');
    for (int i = 0; i < steps; ++i)
        if (test_bit(path, i)) s[static_cast<std::size_t>(i)] = 'N';
    return s;
}

std::vector<int> prefix_heights(Mask path, int steps) {
    std::vector<int> h(static_cast<std::size_t>(steps) + 1, 0);
    for (int i = 0; i < steps; ++i)
        h[static_cast<std::size_t>(i) + 1] = h[static_cast<std::size_t>(i)] + test_bit(path, i);
    return h;
}

std::uint64_t lpm_base_count(const LatticePathPair& pair) {
    validate(pair);
    auto hu = prefix_heights(pair.upper, pair.steps());
    auto hl = prefix_heights(pair.lower, pair.steps());
    // Paths per (position, height), column by column.
    std::vector<std::uint64_t> cur(static_cast<std::size_t>(pair.r) + 1, 0);
    cur[0] = 1;
    for (int i = 1; i <= pair.steps(); ++i) {
        std::vector<std::uint64_t> nxt(cur.size(), 0);
        for (int h = hl[static_cast<std::size_t>(i)]; h <= hu[static_cast<std::size_t>(i)]; ++h) {
            std::uint64_t ways = cur[static_cast<std::size_t>(h)];  // East step
            if (h > 0) ways += cur[static_cast<std::size_t>(h) - 1];  // North step
            nxt[static_cast<std::size_t>(h)] = ways;
        }
        cur = std::move(nxt);
    }
    return cur[static_cast<std::size_t>(pair.r)];
}

std::vector<Mask> lpm_bases(const LatticePathPair& pair, std::uint64_t budget) {
    std::uint64_t count = lpm_base_count(pair);
    if (count > budget) throw BudgetError("lpm_bases: too large (" + std::to_string(count) + ")");
    auto hu = prefix_heights(pair.upper, pair.steps());
    auto hl = prefix_heights(pair.lower, pair.steps());
    std::vector<Mask> out;
    out.reserve(count);
    // DFS over steps, keeping the running height inside the band.
    struct Item {
        int step;
        int height;
        Mask mask;
    };
    std::vector<Item> stack{{0, 0, 0}};
    while (!stack.empty()) {
        auto [step, height, mask] = stack.back();
        stack.pop_back();
        if (step == pair.steps()) {
            out.push_back(mask);
            continue;
        }
        int lo = hl[static_cast<std::size_t>(step) + 1];
        int hi = hu[static_cast<std::size_t>(step) + 1];
        // North first so the DFS emits in decreasing mask order.
        if (height + 1 <= hi && height + 1 >= lo && height + 1 <= pair.r)
            stack.push_back({step + 1, height + 1, mask | bit(step)});
        if (height <= hi && height >= lo) stack.push_back({step + 1, height, mask});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matroid lpm_matroid(const LatticePathPair& pair, std::uint64_t budget) {
    return explicit_matroid(pair.steps(), lpm_bases(pair, budget), FamilyTag::LatticePath);
}

LatticePathPair lpm_dual(const LatticePathPair& pair) {
    validate(pair);
    const int steps = pair.steps();
    // Reflection swaps N and E in place, i.e. complements the masks, and
    // the reflected lower boundary becomes the new upper one.
    return LatticePathPair{pair.r, pair.m, complement(pair.lower, steps),
                           complement(pair.upper, steps)};
}

std::optional<LatticePathPair> bc_envelope(const LatticePathPair& pair) {
    validate(pair);
    if (pair.m != pair.r)
        throw std::invalid_argument("bc_envelope: diagram must be square (m = r)");
    const int steps = pair.steps();
    auto hu = prefix_heights(pair.upper, steps);
    auto hl = prefix_heights(pair.lower, steps);
    std::vector<int> hu2(hu.size()), hl2(hu.size());
    for (std::size_t i = 0; i < hu.size(); ++i) {
        int reflected_l = static_cast<int>(i) - hl[i];  // heights of the reflected lower path
        int reflected_u = static_cast<int>(i) - hu[i];
        hu2[i] = std::min(hu[i], reflected_l);
        hl2[i] = std::max(hl[i], reflected_u);
        if (hu2[i] < hl2[i]) return std::nullopt;  // boundaries cross: no base-cobase
    }
    return LatticePathPair{pair.r, pair.r, heights_to_mask(hu2), heights_to_mask(hl2)};
}

namespace {

// One peeling step: a 2-circuit is contracted, a 2-cocircuit deleted; in
// both cases exactly one of the two elements joins every base-cobase.
std::vector<Mask> predicted_bc(const Matroid& m, std::uint64_t budget, int& steps) {
    const int n = m.size();
    if (n <= 2) return base_cobases(m, budget).masks;
    int e = -1, f = -1;
    bool circuit = false;
    for (int i = 0; i < n && e < 0; ++i)
        for (int j = i + 1; j < n && e < 0; ++j) {
            Mask pair_mask = bit(i) | bit(j);
            if (m.rank(bit(i)) == 1 && m.rank(bit(j)) == 1 && m.rank(pair_mask) == 1) {
                e = i;
                f = j;
                circuit = true;
            }
        }
    if (e < 0) {
        Matroid md = dual(m);
        for (int i = 0; i < n && e < 0; ++i)
            for (int j = i + 1; j < n && e < 0; ++j) {
                Mask pair_mask = bit(i) | bit(j);
                if (md.rank(bit(i)) == 1 && md.rank(bit(j)) == 1 && md.rank(pair_mask) == 1) {
                    e = i;
                    f = j;
                }
            }
    }
    if (e < 0) return base_cobases(m, budget).masks;  // core reached

    ++steps;
    Mask pair_mask = bit(e) | bit(f);
    Matroid reduced = circuit ? minor(m, pair_mask, 0) : minor(m, 0, pair_mask);
    auto inner = predicted_bc(reduced, budget, steps);
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (i != e && i != f) keep.push_back(i);
    std::vector<Mask> out;
    out.reserve(inner.size() * 2);
    for (Mask s : inner) {
        Mask lifted = 0;
        for (std::size_t i = 0; i < keep.size(); ++i)
            if (test_bit(s, static_cast<int>(i))) lifted |= bit(keep[i]);
        out.push_back(lifted | bit(e));
        out.push_back(lifted | bit(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

SpexReport verify_spex_preservation(const Matroid& m, std::uint64_t budget) {
    SpexReport rep;
    rep.block = (m.size() == 2 * m.rank());
    if (!rep.block) {
        rep.vacuous = true;
        return rep;
    }
    auto direct = base_cobases(m, budget);
    int steps = 0;
    auto predicted = predicted_bc(m, budget, steps);
    rep.peeled_steps = steps;
    rep.peel_agrees = predicted == direct.masks;
    if (direct.masks.empty()) {
        rep.vacuous = true;
        return rep;
    }
    rep.mat_holds = check_mat(direct).verdict == Verdict::Holds;
    return rep;
}

}  // namespace cobase
