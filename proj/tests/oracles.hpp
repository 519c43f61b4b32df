/**
 * Test-only oracles, deliberately independent of the implementation
 * paths they check: invariant factors through minor gcds, hull
 * membership through bounded-denominator grid search, and a tiny
 * deterministic generator for random fundamental sets.
 */

#ifndef LVMB_TESTS_ORACLES_HPP
#define LVMB_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "lvmb/fundsys.hpp"
#include "lvmb/intmatrix.hpp"

namespace lvmb::testing {

/// d_1 * ... * d_t = gcd of all t x t minors; classical and entirely
/// separate from the elimination used by snf().
inline IntVec invariant_factors_by_minors(const IntMatrix& A) {
    const int r = std::min(A.rows, A.cols);
    IntVec out;
    Int prev = 1;
    for (int t = 1; t <= r; ++t) {
        Int g = 0;
        std::vector<int> ri(t), ci(t);
        for (int i = 0; i < t; ++i) ri[i] = i;
        auto next_comb = [](std::vector<int>& idx, int limit) {
            int k = static_cast<int>(idx.size());
            int i = k - 1;
            while (i >= 0 && idx[i] == limit - k + i) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        };
        do {
            for (int i = 0; i < t; ++i) ci[i] = i;
            do {
                IntMatrix sub(t, t);
                for (int i = 0; i < t; ++i)
                    for (int j = 0; j < t; ++j) sub.at(i, j) = A.at(ri[i], ci[j]);
                g = gcd_int(g, det(sub));
            } while (next_comb(ci, A.cols));
        } while (next_comb(ri, A.rows));
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// Deterministic random integer matrix with entries in [-bound, bound].
inline IntMatrix random_int_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix A(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) A.at(i, j) = dist(rng);
    return A;
}

/// Random pure complex on n vertices with facets of size s (nonempty).
inline SimplicialComplex random_pure_complex(std::mt19937_64& rng, int n, int s,
                                             int facet_count) {
    std::vector<VSet> all;
    vs_for_each_subset_of_size(vs_full(n), s, [&](VSet f) { all.push_back(f); });
    std::shuffle(all.begin(), all.end(), rng);
    facet_count = std::min<int>(facet_count, static_cast<int>(all.size()));
    std::vector<VSet> chosen(all.begin(), all.begin() + std::max(1, facet_count));
    return SimplicialComplex::from_facets(n, chosen);
}

}  // namespace lvmb::testing

#endif  // LVMB_TESTS_ORACLES_HPP
