#include "cobase/matroid.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace cobase {
namespace detail {

class MatroidImpl {
  public:
    MatroidImpl(int n, FamilyTag tag) : n_(n), tag_(tag) {
        if (n < 1 || n > kMaxGround)
            throw std::invalid_argument("ground set size must be in 1..64");
    }
    virtual ~MatroidImpl() = default;

    int size() const { return n_; }
    FamilyTag tag() const { return tag_; }
    virtual int rank_of(Mask a) const = 0;
    virtual std::string describe() const = 0;

  private:
    int n_;
    FamilyTag tag_;
};

namespace {

class UniformImpl final : public MatroidImpl {
  public:
    UniformImpl(int n, int r) : MatroidImpl(n, FamilyTag::Uniform), r_(r) {
        if (r < 0 || r > n) throw std::invalid_argument("uniform rank out of range");
    }
    int rank_of(Mask a) const override { return std::min(popcount(a), r_); }
    std::string describe() const override {
        return "U_{" + std::to_string(r_) + "," + std::to_string(size()) + "}";
    }

  private:
    int r_;
};

class GF2Impl final : public MatroidImpl {
  public:
    GF2Impl(int n, std::vector<Mask> rows)
        : MatroidImpl(n, FamilyTag::LinearGF2), rows_(std::move(rows)) {
        for (Mask r : rows_) check_in_range(r, n);
    }

    int rank_of(Mask a) const override {
        // Column rank of the submatrix: eliminate on masked rows.
        std::array<Mask, 64> piv{};
        int rank = 0;
        for (Mask row : rows_) {
            Mask v = row & a;
            while (v) {
                int lead = std::countr_zero(v);
                if (piv[static_cast<std::size_t>(lead)]) {
                    v ^= piv[static_cast<std::size_t>(lead)];
                } else {
                    piv[static_cast<std::size_t>(lead)] = v;
                    ++rank;
                    break;
                }
            }
        }
        return rank;
    }

    std::string describe() const override {
        return "GF(2)[" + std::to_string(rows_.size()) + "x" + std::to_string(size()) + "]";
    }

  private:
    std::vector<Mask> rows_;
};

class GraphicImpl final : public MatroidImpl {
  public:
    GraphicImpl(int num_vertices, std::vector<std::pair<int, int>> edges)
        : MatroidImpl(static_cast<int>(edges.size()), FamilyTag::Graphic),
          nv_(num_vertices),
          edges_(std::move(edges)) {
        if (nv_ < 1) throw std::invalid_argument("graph needs at least one vertex");
        for (auto [u, v] : edges_)
            if (u < 0 || v < 0 || u >= nv_ || v >= nv_)
                throw std::invalid_argument("edge endpoint out of range");
    }

    int rank_of(Mask a) const override {
        // |A| minus cycles, via union-find over incident vertices.
        std::array<int, 64> parent;
        std::iota(parent.begin(), parent.begin() + nv_, 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        int rank = 0;
        Mask m = a;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            auto [u, v] = edges_[static_cast<std::size_t>(i)];
            int ru = find(u), rv = find(v);
            if (ru != rv) {
                parent[static_cast<std::size_t>(ru)] = rv;
                ++rank;
            }
        }
        return rank;
    }

    std::string describe() const override {
        return "graphic[" + std::to_string(nv_) + "v," + std::to_string(size()) + "e]";
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  private:
    int nv_;
    std::vector<std::pair<int, int>> edges_;
};

class TransversalImpl final : public MatroidImpl {
  public:
    TransversalImpl(int n, std::vector<Mask> sets)
        : MatroidImpl(n, FamilyTag::Transversal), sets_(std::move(sets)) {
        for (Mask s : sets_) check_in_range(s, n);
    }

    int rank_of(Mask a) const override {
        // Maximum matching between elements of a and the presented sets,
        // by augmenting paths.
        const int k = static_cast<int>(sets_.size());
        std::vector<int> match_set(static_cast<std::size_t>(k), -1);
        auto elems = mask_elements(a);
        int matched = 0;
        std::vector<char> seen(static_cast<std::size_t>(k));
        for (int e : elems) {
            std::fill(seen.begin(), seen.end(), 0);
            if (augment(e, seen, match_set)) ++matched;
        }
        return matched;
    }

    std::string describe() const override {
        return "transversal[" + std::to_string(sets_.size()) + " sets]";
    }

  private:
    bool augment(int e, std::vector<char>& seen, std::vector<int>& match_set) const {
        for (std::size_t i = 0; i < sets_.size(); ++i) {
            if (!test_bit(sets_[i], e) || seen[i]) continue;
            seen[i] = 1;
            if (match_set[i] < 0 || augment(match_set[i], seen, match_set)) {
                match_set[i] = e;
                return true;
            }
        }
        return false;
    }

    std::vector<Mask> sets_;
};

class ExplicitImpl final : public MatroidImpl {
  public:
    ExplicitImpl(int n, std::vector<Mask> bases, FamilyTag tag)
        : MatroidImpl(n, tag), bases_(std::move(bases)) {
        if (bases_.empty()) throw std::invalid_argument("base list must be nonempty");
        std::sort(bases_.begin(), bases_.end());
        bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
        r_ = popcount(bases_[0]);
        for (Mask b : bases_) {
            check_in_range(b, n);
            if (popcount(b) != r_)
                throw std::invalid_argument("bases must share cardinality");
        }
    }

    int rank_of(Mask a) const override {
        // Valid for any matroid given its full base list.
        int best = 0;
        for (Mask b : bases_) best = std::max(best, popcount(a & b));
        return best;
    }

    std::string describe() const override {
        return "explicit[" + std::to_string(bases_.size()) + " bases]";
    }

    const std::vector<Mask>& bases() const { return bases_; }

  private:
    std::vector<Mask> bases_;
    int r_;
};

class DualImpl final : public MatroidImpl {
  public:
    explicit DualImpl(Matroid inner)
        : MatroidImpl(inner.size(), FamilyTag::Dual),
          inner_(std::move(inner)),
          full_rank_(inner_.rank(full_mask(inner_.size()))) {}

    int rank_of(Mask a) const override {
        return popcount(a) - full_rank_ + inner_.rank(complement(a, size()));
    }

    std::string describe() const override { return "dual(" + inner_.describe() + ")"; }

    const Matroid& inner() const { return inner_; }

  private:
    Matroid inner_;
    int full_rank_;
};

class SumImpl final : public MatroidImpl {
  public:
    SumImpl(Matroid a, Matroid b)
        : MatroidImpl(a.size() + b.size(), FamilyTag::DirectSum),
          a_(std::move(a)),
          b_(std::move(b)) {
        if (a_.size() + b_.size() > kMaxGround)
            throw std::invalid_argument("direct sum exceeds 64 elements");
    }

    int rank_of(Mask m) const override {
        Mask lo = m & full_mask(a_.size());
        Mask hi = m >> a_.size();
        return a_.rank(lo) + b_.rank(hi);
    }

    std::string describe() const override {
        return a_.describe() + " + " + b_.describe();
    }

  private:
    Matroid a_, b_;
};

class MinorImpl final : public MatroidImpl {
  public:
    MinorImpl(Matroid parent, Mask contract, Mask del, int kept)
        : MatroidImpl(kept, FamilyTag::Minor),
          parent_(std::move(parent)),
          contract_(contract) {
        Mask keep = complement(contract | del, parent_.size());
        keep_ = mask_elements(keep);
        rc_ = parent_.rank(contract_);
    }

    int rank_of(Mask a) const override {
        Mask lifted = contract_;
        Mask m = a;
        while (m) {
            int i = std::countr_zero(m);
            m &= m - 1;
            lifted |= bit(keep_[static_cast<std::size_t>(i)]);
        }
        return parent_.rank(lifted) - rc_;
    }

    std::string describe() const override { return "minor(" + parent_.describe() + ")"; }

  private:
    Matroid parent_;
    Mask contract_;
    std::vector<int> keep_;
    int rc_;
};

class RelaxationImpl final : public MatroidImpl {
  public:
    RelaxationImpl(Matroid parent, Mask h)
        : MatroidImpl(parent.size(), FamilyTag::Relaxation),
          parent_(std::move(parent)),
          h_(h) {}

    int rank_of(Mask a) const override {
        // Relaxing a circuit-hyperplane raises exactly its own rank by one.
        return parent_.rank(a) + (a == h_ ? 1 : 0);
    }

    std::string describe() const override {
        return "relax(" + parent_.describe() + ")";
    }

  private:
    Matroid parent_;
    Mask h_;
};

class ParallelExtImpl final : public MatroidImpl {
  public:
    ParallelExtImpl(Matroid parent, int e)
        : MatroidImpl(parent.size() + 1, FamilyTag::ParallelExt),
          parent_(std::move(parent)),
          e_(e) {
        if (e < 0 || e >= parent_.size())
            throw std::invalid_argument("parallel extension of unknown element");
        if (parent_.size() + 1 > kMaxGround)
            throw std::invalid_argument("extension exceeds 64 elements");
    }

    int rank_of(Mask a) const override {
        Mask inner = a & full_mask(parent_.size());
        if (test_bit(a, parent_.size())) inner |= bit(e_);
        return parent_.rank(inner);
    }

    std::string describe() const override {
        return "par_ext(" + parent_.describe() + "," + std::to_string(e_) + ")";
    }

  private:
    Matroid parent_;
    int e_;
};

}  // namespace
}  // namespace detail

int Matroid::size() const { return impl_->size(); }
int Matroid::rank() const { return impl_->rank_of(full_mask(impl_->size())); }
int Matroid::rank(Mask a) const {
    check_in_range(a, impl_->size());
    return impl_->rank_of(a);
}
FamilyTag Matroid::family() const { return impl_->tag(); }
std::string Matroid::describe() const { return impl_->describe(); }

bool BaseFamily::contains(Mask m) const {
    return std::binary_search(masks.begin(), masks.end(), m);
}

Matroid uniform_matroid(int n, int r) {
    return Matroid(std::make_shared<detail::UniformImpl>(n, r));
}

Matroid gf2_matroid(int n, const std::vector<Mask>& rows) {
    return Matroid(std::make_shared<detail::GF2Impl>(n, rows));
}

Matroid graphic_matroid(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
    return Matroid(std::make_shared<detail::GraphicImpl>(num_vertices, edges));
}

Matroid transversal_matroid(int n, const std::vector<Mask>& sets) {
    return Matroid(std::make_shared<detail::TransversalImpl>(n, sets));
}

Matroid explicit_matroid(int n, const std::vector<Mask>& bases, FamilyTag tag) {
    return Matroid(std::make_shared<detail::ExplicitImpl>(n, bases, tag));
}

Matroid dual(const Matroid& m) {
    // dual(dual(M)) collapses back to M; the oracles agree either way.
    if (m.family() == FamilyTag::Dual)
        return static_cast<const detail::DualImpl&>(m.impl()).inner();
    return Matroid(std::make_shared<detail::DualImpl>(m));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
    return Matroid(std::make_shared<detail::SumImpl>(a, b));
}

Matroid minor(const Matroid& m, Mask contract, Mask del) {
    check_in_range(contract, m.size());
    check_in_range(del, m.size());
    if (contract & del)
        throw std::invalid_argument("contract and delete sets overlap");
    int kept = m.size() - popcount(contract | del);
    if (kept < 1) throw std::invalid_argument("minor has empty ground set");
    return Matroid(std::make_shared<detail::MinorImpl>(m, contract, del, kept));
}

Matroid parallel_extend(const Matroid& m, int e) {
    return Matroid(std::make_shared<detail::ParallelExtImpl>(m, e));
}

Matroid series_extend(const Matroid& m, int e) {
    return dual(parallel_extend(dual(m), e));
}

Matroid relax_circuit_hyperplane(const Matroid& m, Mask h) {
    check_in_range(h, m.size());
    const int r = m.rank();
    if (popcount(h) != r || m.rank(h) != r - 1)
        throw std::invalid_argument("relaxation: set is not a circuit-hyperplane");
    for (int e : mask_elements(h))
        if (m.rank(h & ~bit(e)) != r - 1)
            throw std::invalid_argument("relaxation: set is not a circuit");
    for (int e = 0; e < m.size(); ++e)
        if (!test_bit(h, e) && m.rank(h | bit(e)) != r)
            throw std::invalid_argument("relaxation: set is not a hyperplane");
    return Matroid(std::make_shared<detail::RelaxationImpl>(m, h));
}

namespace {

void check_scan_budget(int n, int r, std::uint64_t budget, const char* what) {
    std::uint64_t count = binomial(n, r);
    if (count > budget)
        throw BudgetError(std::string(what) + ": too large (C(" + std::to_string(n) + "," +
                          std::to_string(r) + ") = " + std::to_string(count) +
                          " exceeds budget " + std::to_string(budget) + ")");
}

}  // namespace

BaseFamily enumerate_bases(const Matroid& m, std::uint64_t budget) {
    const int n = m.size();
    const int r = m.rank();
    check_scan_budget(n, r, budget, "enumerate_bases");
    BaseFamily out{n, r, {}};
    Mask s = first_subset_of_size(r);
    do {
        if (m.rank(s) == r) out.masks.push_back(s);
    } while (next_subset_same_size(s, n));
    return out;
}

BaseFamily base_cobases(const Matroid& m, std::uint64_t budget) {
    const int n = m.size();
    const int r = m.rank();
    if (n != 2 * r) return BaseFamily{n, r, {}};
    check_scan_budget(n, r, budget, "base_cobases");
    BaseFamily out{n, r, {}};
    Mask s = first_subset_of_size(r);
    do {
        if (m.rank(s) == r && m.rank(complement(s, n)) == r) out.masks.push_back(s);
    } while (next_subset_same_size(s, n));
    return out;
}

bool is_connected(const Matroid& m) {
    const int n = m.size();
    if (n > 20) throw BudgetError("is_connected: ground set too large for separator scan");
    if (n == 1) return true;
    const int r = m.rank();
    // Separators are complement-symmetric, so only scan F containing 0.
    Mask top = full_mask(n - 1);
    for (Mask half = 0; half < top; ++half) {
        Mask f = (half << 1) | 1;
        if (f == full_mask(n)) continue;
        if (m.rank(f) + m.rank(complement(f, n)) == r) return false;
    }
    return true;
}

std::vector<std::uint8_t> rank_table(const Matroid& m) {
    const int n = m.size();
    if (n > 20) throw BudgetError("rank_table: ground set too large");
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (Mask a = 0; a < (Mask{1} << n); ++a)
        table[a] = static_cast<std::uint8_t>(m.rank(a));
    return table;
}

}  // namespace cobase
