#include "cobase/polytope.hpp"

#include <algorithm>
#include <numeric>

namespace cobase {

namespace {

// Separable: some nontrivial partition F = F1 u F2 has r(F) = r(F1) + r(F2).
bool is_separable(const std::vector<std::uint8_t>& rk, Mask f) {
    if (popcount(f) < 2) return false;
    int rf = rk[f];
    Mask low = f & (~f + 1);
    // Only sub-masks containing the lowest element: partitions are unordered.
    for (Mask s = (f - 1) & f; s; s = (s - 1) & f) {
        if (!(s & low)) continue;
        if (rk[s] + rk[f ^ s] == rf) return true;
    }
    return false;
}

}  // namespace

std::vector<FlatInfo> flats(const Matroid& m) {
    const int n = m.size();
    auto rk = rank_table(m);
    const int rfull = rk[full_mask(n)];
    // Dual ranks from the same table.
    auto dual_rank = [&](Mask a) {
        return popcount(a) - rfull + rk[complement(a, n)];
    };

    std::vector<FlatInfo> out;
    for (Mask f = 0;; ++f) {
        bool flat = true;
        for (int e = 0; e < n && flat; ++e)
            if (!test_bit(f, e) && rk[f | bit(e)] == rk[f]) flat = false;
        if (flat) {
            FlatInfo info;
            info.mask = f;
            info.rank = rk[f];
            info.inseparable_in_m = !is_separable(rk, f);
            // Complement must be an inseparable flat of the dual.
            Mask fc = complement(f, n);
            bool dual_flat = true;
            for (int e = 0; e < n && dual_flat; ++e)
                if (!test_bit(fc, e) && dual_rank(fc | bit(e)) == dual_rank(fc))
                    dual_flat = false;
            bool dual_insep = true;
            if (popcount(fc) >= 2) {
                int rfc = dual_rank(fc);
                Mask low = fc & (~fc + 1);
                for (Mask s = (fc - 1) & fc; s; s = (s - 1) & fc) {
                    if (!(s & low)) continue;
                    if (dual_rank(s) + dual_rank(fc ^ s) == rfc) {
                        dual_insep = false;
                        break;
                    }
                }
            }
            info.complement_inseparable_in_dual = dual_flat && dual_insep;
            info.is_flacet = f != 0 && f != full_mask(n) && info.inseparable_in_m &&
                             info.complement_inseparable_in_dual;
            out.push_back(info);
        }
        if (f == full_mask(n)) break;
    }
    return out;
}

std::vector<TightSet> tight_sets(const Matroid& m, bool nontrivial_only) {
    const int n = m.size();
    auto rk = rank_table(m);
    std::vector<TightSet> out;
    for (Mask a = 0;; ++a) {
        if (popcount(a) == 2 * rk[a]) {
            bool trivial = (a == 0) || (a == full_mask(n));
            if (!nontrivial_only || !trivial) out.push_back(TightSet{a});
        }
        if (a == full_mask(n)) break;
    }
    return out;
}

int integer_matrix_rank(std::vector<std::vector<long long>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    // Echelon basis with gcd-normalized integer rows; cross-multiplication
    // keeps everything exact.
    std::vector<std::pair<std::size_t, std::vector<long long>>> pivots;
    auto normalize = [](std::vector<long long>& v) {
        long long g = 0;
        for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
        if (g > 1)
            for (long long& x : v) x /= g;
    };
    int rank = 0;
    for (auto& v : rows) {
        for (auto& [col, p] : pivots) {
            if (v[col] == 0) continue;
            long long a = p[col], b = v[col];
            long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
            long long ma = a / g, mb = b / g;
            for (std::size_t j = 0; j < cols; ++j) v[j] = v[j] * ma - p[j] * mb;
            normalize(v);
        }
        std::size_t lead = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (v[j] != 0) {
                lead = j;
                break;
            }
        if (lead == cols) continue;
        normalize(v);
        pivots.emplace_back(lead, v);
        std::sort(pivots.begin(), pivots.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        ++rank;
    }
    return rank;
}

int bc_polytope_dim(const Matroid& m, std::uint64_t budget) {
    auto bc = base_cobases(m, budget);
    if (bc.masks.empty()) throw std::invalid_argument("bc_polytope_dim: empty family");
    const int n = m.size();
    Mask b0 = bc.masks.front();
    std::vector<std::vector<long long>> rows;
    rows.reserve(bc.masks.size() - 1);
    for (std::size_t i = 1; i < bc.masks.size(); ++i) {
        std::vector<long long> row(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
            row[static_cast<std::size_t>(j)] =
                static_cast<long long>(test_bit(bc.masks[i], j)) -
                static_cast<long long>(test_bit(b0, j));
        rows.push_back(std::move(row));
    }
    return integer_matrix_rank(std::move(rows));
}

namespace {

bool is_block(const Matroid& m) {
    if (m.size() != 2 * m.rank()) return false;
    return !base_cobases(m).masks.empty();
}

}  // namespace

CodimReport verify_codim_equivalence(const Matroid& m) {
    const int n = m.size();
    if (n > 16) throw BudgetError("verify_codim_equivalence: n > 16");
    if (!is_block(m)) throw std::invalid_argument("verify_codim_equivalence: not a block matroid");
    if (!is_connected(m)) throw std::invalid_argument("verify_codim_equivalence: not connected");

    CodimReport rep;
    auto tights = tight_sets(m, /*nontrivial_only=*/true);
    rep.tight_exists = !tights.empty();
    if (rep.tight_exists) rep.tight_witness = tights.front().mask;

    rep.dim = bc_polytope_dim(m);
    rep.dim_deficient = rep.dim < n - 1;

    auto bc = base_cobases(m);
    for (const FlatInfo& f : flats(m)) {
        if (!f.is_flacet) continue;
        Mask fm = f.mask;
        Matroid restr = minor(m, 0, complement(fm, n));          // M | F
        Matroid dcontr = minor(m, fm, 0);                        // M / F
        if (!is_block(restr) || !is_block(dcontr)) continue;
        // Base-cobases of the split, put back into the original positions.
        auto in_f = mask_elements(fm);
        auto out_f = mask_elements(complement(fm, n));
        auto bc_f = base_cobases(restr);
        auto bc_c = base_cobases(dcontr);
        std::vector<Mask> combined;
        combined.reserve(bc_f.masks.size() * bc_c.masks.size());
        for (Mask a : bc_f.masks) {
            Mask lifted_a = 0;
            for (std::size_t i = 0; i < in_f.size(); ++i)
                if (test_bit(a, static_cast<int>(i))) lifted_a |= bit(in_f[i]);
            for (Mask b : bc_c.masks) {
                Mask lifted = lifted_a;
                for (std::size_t i = 0; i < out_f.size(); ++i)
                    if (test_bit(b, static_cast<int>(i))) lifted |= bit(out_f[i]);
                combined.push_back(lifted);
            }
        }
        std::sort(combined.begin(), combined.end());
        if (combined == bc.masks) {
            rep.flacet_split_exists = true;
            rep.flacet_witness = fm;
            break;
        }
    }

    rep.agree = (rep.tight_exists == rep.dim_deficient) &&
                (rep.dim_deficient == rep.flacet_split_exists);
    return rep;
}

bool is_identically_self_dual(const Matroid& m, std::uint64_t budget) {
    auto fam = enumerate_bases(m, budget);
    std::vector<Mask> comp;
    comp.reserve(fam.masks.size());
    for (Mask b : fam.masks) comp.push_back(complement(b, m.size()));
    std::sort(comp.begin(), comp.end());
    return comp == fam.masks;
}

}  // namespace cobase
