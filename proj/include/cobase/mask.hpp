#pragma once

// Subsets of a ground set {0,...,n-1} packed into one 64-bit word.
// All matroid ground sets in this library are capped at 64 elements,
// so a single word is the universal currency for bases, flats and
// circuits throughout.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cobase {

using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

inline Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline int popcount(Mask m) { return std::popcount(m); }

inline bool test_bit(Mask m, int i) { return (m >> i) & 1; }

inline Mask bit(int i) { return Mask{1} << i; }

inline Mask complement(Mask m, int n) { return ~m & full_mask(n); }

inline void check_in_range(Mask m, int n) {
    if (n < 0 || n > kMaxGround)
        throw std::invalid_argument("ground set size out of range");
    if (m & ~full_mask(n))
        throw std::domain_error("mask has elements outside the ground set");
}

// Cyclic left rotation within the low n bits.
inline Mask rotl_n(Mask m, int s, int n) {
    s %= n;
    if (s < 0) s += n;
    Mask f = full_mask(n);
    return ((m << s) | (m >> (n - s))) & f;
}

// Next n-bit mask with the same popcount (Gosper's hack); masks are
// visited in increasing numeric order.  Returns false when exhausted.
inline bool next_subset_same_size(Mask& m, int n) {
    if (m == 0) return false;
    Mask c = m & (~m + 1);
    Mask r = m + c;
    if (r & ~full_mask(n)) return false;
    m = (((r ^ m) >> 2) / c) | r;
    return (m & ~full_mask(n)) == 0;
}

inline Mask first_subset_of_size(int k) { return (k == 0) ? 0 : full_mask(k); }

// C(n,k) with saturation; used for enumeration budget checks.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > UINT64_MAX / num) return UINT64_MAX;
        r = r * num / i;
    }
    return r;
}

inline std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_from_elements(const std::vector<int>& elems, int n) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 0 || e >= n) throw std::domain_error("element outside ground set");
        m |= bit(e);
    }
    return m;
}

// Bit-string rendering, position 0 first ("0110..." for {1,2}).
inline std::string mask_to_string(Mask m, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if (test_bit(m, i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline Mask mask_from_string(const std::string& s) {
    if (s.size() > kMaxGround) throw std::invalid_argument("bit string too long");
    Mask m = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            m |= bit(static_cast<int>(i));
        else if (s[i] != '0')
            throw std::invalid_argument("bit string must consist of 0/1");
    }
    return m;
}

}  // namespace cobase
