#pragma once

// Exact matroid representations behind a shared rank oracle, plus the
// closure operations (dual, minor, direct sum, series/parallel extension)
// and exhaustive base / base-cobase enumeration.
//
// Every matroid is an immutable value; rank oracles are pure, so all
// types here are safe for concurrent reads.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cobase/mask.hpp"

namespace cobase {

// Thrown when an enumeration would exceed its subset-scan budget.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultEnumBudget = 5'000'000;

enum class FamilyTag {
    Uniform,
    LinearGF2,
    Graphic,
    Transversal,
    LatticePath,
    ExplicitBases,
    Relaxation,
    DirectSum,
    Dual,
    Minor,
    ParallelExt,
};

namespace detail {
class MatroidImpl;
}

class Matroid {
  public:
    Matroid() = default;

    int size() const;                // |E|
    int rank() const;                // r(E)
    int rank(Mask a) const;          // rank oracle; throws on out-of-range masks
    FamilyTag family() const;
    std::string describe() const;    // short human-readable label

    bool valid() const { return impl_ != nullptr; }

    explicit Matroid(std::shared_ptr<const detail::MatroidImpl> impl)
        : impl_(std::move(impl)) {}
    const detail::MatroidImpl& impl() const { return *impl_; }

  private:
    std::shared_ptr<const detail::MatroidImpl> impl_;
};

// A duplicate-free list of equal-cardinality masks in increasing numeric
// order, so family equality is plain list equality.
struct BaseFamily {
    int n = 0;
    int r = 0;
    std::vector<Mask> masks;

    bool operator==(const BaseFamily&) const = default;
    bool contains(Mask m) const;
};

// --- constructors -----------------------------------------------------------

Matroid uniform_matroid(int n, int r);
// rows[i] is the i-th row of a GF(2) matrix, bit j = column j.
Matroid gf2_matroid(int n, const std::vector<Mask>& rows);
// Ground elements are the edges, in the order given.
Matroid graphic_matroid(int num_vertices, const std::vector<std::pair<int, int>>& edges);
// Ground set {0..n-1}; sets[i] is the i-th presented set.
Matroid transversal_matroid(int n, const std::vector<Mask>& sets);
Matroid explicit_matroid(int n, const std::vector<Mask>& bases,
                         FamilyTag tag = FamilyTag::ExplicitBases);

Matroid dual(const Matroid& m);
Matroid direct_sum(const Matroid& a, const Matroid& b);
// Standard minor semantics; contracting dependent sets is permitted.
Matroid minor(const Matroid& m, Mask contract, Mask del);
// Adds element n parallel to e (2-circuit {e, n}); series_extend is dual.
Matroid parallel_extend(const Matroid& m, int e);
Matroid series_extend(const Matroid& m, int e);
// Declares the circuit-hyperplane h a base; validates that h is one.
Matroid relax_circuit_hyperplane(const Matroid& m, Mask h);

// --- enumeration ------------------------------------------------------------

BaseFamily enumerate_bases(const Matroid& m, std::uint64_t budget = kDefaultEnumBudget);
// All B with B and E\B bases.  Empty unless |E| = 2r.  Closed under complement.
BaseFamily base_cobases(const Matroid& m, std::uint64_t budget = kDefaultEnumBudget);

// True iff no nonempty proper F has r(F) + r(E\F) = r(E).  Scans 2^(n-1)
// separators, so callers should keep n <= 20.
bool is_connected(const Matroid& m);

// Full rank table indexed by mask; n <= 20.
std::vector<std::uint8_t> rank_table(const Matroid& m);

}  // namespace cobase
