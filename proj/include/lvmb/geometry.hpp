/**
 * Exact geometry of direction families. A family assigns to each ground
 * element a rational vector in R^{2m} (real parts first, then imaginary
 * parts). Provides the affine-spanning acceptability test, the pairwise
 * hull-interior imbrication condition via exact LP, the composite good-
 * system verdict, witness checking for the bounded-component
 * characterization, Siegel translation, and the polytope combinatorics
 * with the dual-boundary comparison.
 */

#ifndef LVMB_GEOMETRY_HPP
#define LVMB_GEOMETRY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lvmb/fundsys.hpp"
#include "lvmb/lp.hpp"
#include "lvmb/rational.hpp"

namespace lvmb {

struct DirectionFamily {
    int m = 0;                      // half-dimension: vectors live in R^{2m}
    std::vector<RatVec> vectors;    // one per ground element, each of size 2m

    static DirectionFamily create(int m, std::vector<RatVec> vectors);

    int count() const { return static_cast<int>(vectors.size()); }
    const RatVec& at(int label) const { return vectors[label - 1]; }  // 1-based
    bool integral() const;          // already in integer (condition-K) form
    Int denominator_lcm() const;
};

/// Every member's points must affinely span R^{2m}; members must have
/// exactly 2m+1 elements (DimensionMismatch otherwise).
bool check_acceptable(const FundamentalSet& E, const DirectionFamily& l);

/// Affine span test for one point set.
bool affinely_spans(const std::vector<RatVec>& pts, int dim);

struct HullIntersection {
    bool intersect = false;
    Rational margin;              // optimal t; interiors meet iff t > 0
    RatVec witness;               // common point when intersect
    RatVec separator;             // functional h when disjoint
    Rational sep_low, sep_high;   // h.l_q <= sep_low <= sep_high <= h.l_p
};

/// Interior intersection of Conv(l_p, p in P) and Conv(l_q, q in Q) by
/// maximizing the smallest barycentric weight. Requires both hulls
/// full-dimensional (NotFullDimensional otherwise). When disjoint, the
/// returned separator is verified exactly before returning.
HullIntersection hull_interior_point(VSet P, VSet Q, const DirectionFamily& l);

struct GoodSystemReport {
    bool acceptable = false;
    bool se = false;
    bool imbrication = false;
    bool imbrication_evaluated = false;  // false when acceptability already failed
    std::optional<std::pair<VSet, VSet>> failing_pair;
    bool verdict = false;
    bool minimality = false;
    bool condition_k_integral = false;   // family already has integer coordinates
};

/// Runs acceptability, SE, and pairwise imbrication; verdict is their
/// conjunction. A true verdict with a non-minimal family would
/// contradict the theory and raises InternalInconsistency.
GoodSystemReport check_good_system(const FundamentalSet& E, const DirectionFamily& l);

struct LvmWitnessReport {
    bool is_lvm_witness = false;
    bool avoids_small_hulls = false;           // condition (a)
    bool members_match = false;                // condition (b)
    std::optional<VSet> offending_small_hull;  // witness for a failed (a)
    std::vector<VSet> hull_members;            // E_x
};

/// Checks a candidate point for the bounded-component characterization:
/// (a) x avoids the hull of every 2m-subset, (b) the members whose hulls
/// contain x are exactly E. Closed hulls; boundary contact counts as a
/// violation of (a) and as membership for (b). Requires a verified good
/// system (NotGoodSystem otherwise).
LvmWitnessReport lvm_witness_check(const FundamentalSet& E, const DirectionFamily& l,
                                   const RatVec& x);

/// Barycenter heuristic: tries barycenters of all member hulls as
/// witnesses; empty optional means inconclusive, never a refutation.
std::optional<std::pair<RatVec, LvmWitnessReport>> lvm_witness_search(
    const FundamentalSet& E, const DirectionFamily& l);

DirectionFamily siegel_translate(const DirectionFamily& l, const RatVec& x);

/// Closed-hull membership: weights of a convex combination when one exists.
std::optional<RatVec> convex_combination(const std::vector<RatVec>& pts, const RatVec& x);

struct PolytopeCombinatorics {
    int n = 0;
    std::vector<VSet> face_sets;  // I with 0 in Conv(l_k, k in I^c), sorted
};

/// Enumerates the polytope's combinatorics by exact membership LPs.
/// Requires Siegel's condition, 0 in Conv(l_1..l_n) (SiegelViolated).
PolytopeCombinatorics polytope_combinatorics(const FundamentalSet& E,
                                             const DirectionFamily& l);

struct DualReport {
    bool equal_sets = false;
    bool downward_closed = false;
    bool grading_consistent = false;  // face ranks reverse inclusion
    bool verdict = false;
};

/// Asserts the enumerated collection equals the associated complex as a
/// set and that the graded orders are mutually reversed.
DualReport verify_dual(const FundamentalSet& E, const DirectionFamily& l);

/// Pairwise imbrication kernel over all unordered member pairs (P <= Q in
/// sorted order). Serial reference and parallel version; identical output.
std::vector<HullIntersection> imbrication_pairs_serial(const FundamentalSet& E,
                                                       const DirectionFamily& l);
std::vector<HullIntersection> imbrication_pairs_parallel(const FundamentalSet& E,
                                                         const DirectionFamily& l);

/// Subset scan kernel behind polytope_combinatorics.
std::vector<VSet> polytope_scan_serial(int n, const DirectionFamily& l);
std::vector<VSet> polytope_scan_parallel(int n, const DirectionFamily& l);

}  // namespace lvmb

#endif  // LVMB_GEOMETRY_HPP
