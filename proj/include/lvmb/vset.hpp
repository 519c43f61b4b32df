/**
 * Vertex subsets of a ground set {1,...,n} as 64-bit masks (bit v-1 holds
 * label v). Everything downstream is desk scale, so n <= 63 throughout.
 */

#ifndef LVMB_VSET_HPP
#define LVMB_VSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "lvmb/errors.hpp"

namespace lvmb {

using VSet = std::uint64_t;

inline constexpr int kMaxGround = 63;

inline VSet vs_full(int n) { return (n >= 64) ? ~VSet(0) : ((VSet(1) << n) - 1); }
inline bool vs_contains(VSet s, int v) { return (s >> (v - 1)) & 1u; }
inline VSet vs_with(VSet s, int v) { return s | (VSet(1) << (v - 1)); }
inline VSet vs_without(VSet s, int v) { return s & ~(VSet(1) << (v - 1)); }
inline int vs_size(VSet s) { return std::popcount(s); }
inline bool vs_subset(VSet a, VSet b) { return (a & ~b) == 0; }

inline std::vector<int> vs_to_sorted(VSet s) {
    std::vector<int> out;
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

inline VSet vs_from(const std::vector<int>& labels, int n) {
    VSet s = 0;
    for (int v : labels) {
        if (v < 1 || v > n) throw LabelOverflow("label out of 1..n");
        s = vs_with(s, v);
    }
    return s;
}

/// Visits every subset of s with exactly k elements, in increasing mask order.
template <class F>
void vs_for_each_subset_of_size(VSet s, int k, F&& f) {
    std::vector<int> elems = vs_to_sorted(s);
    const int sz = static_cast<int>(elems.size());
    if (k < 0 || k > sz) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        VSet sub = 0;
        for (int i : idx) sub = vs_with(sub, elems[i]);
        f(sub);
        int i = k - 1;
        while (i >= 0 && idx[i] == sz - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace lvmb

#endif  // LVMB_VSET_HPP
