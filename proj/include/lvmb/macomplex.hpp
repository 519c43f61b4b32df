/**
 * Combinatorial model of moment-angle complexes: one block per facet
 * (disk coordinates on the facet, circle coordinates elsewhere), the
 * subset-level identity between acceptability and block coverage, and
 * the indispensable-element reduction to one ambient coordinate fewer.
 */

#ifndef LVMB_MACOMPLEX_HPP
#define LVMB_MACOMPLEX_HPP

#include <optional>
#include <vector>

#include "lvmb/fundsys.hpp"

namespace lvmb {

struct MABlock {
    VSet sigma;       // disk coordinates
    VSet torus_part;  // complement in {1..n}: circle coordinates
};

struct MomentAngleModel {
    int n = 0;
    SimplicialComplex K;
    std::vector<MABlock> blocks;            // one per facet of K
    int dimension = 0;                      // n + max facet size
    std::vector<int> label_map;             // old label -> new label (reductions)
};

/// Blocks for facets only; smaller faces' blocks are contained in them.
/// Throws LabelOverflow when K uses a label above n.
MomentAngleModel build_ma(const SimplicialComplex& K, int n);

struct M1IdentityReport {
    bool holds = false;
    std::optional<VSet> violation;  // subset where the two sides differ
};

/// Exhaustive subset check that "acceptable" and "contains some facet
/// complement" coincide (the set shadow of the disk-model identity).
/// Throws TooLarge above n = 22.
M1IdentityReport verify_m1_identity(const FundamentalSet& E);

/// Serial/parallel scan kernels behind verify_m1_identity; both report
/// the smallest violating subset when one exists.
std::optional<VSet> m1_scan_serial(const FundamentalSet& E);
std::optional<VSet> m1_scan_parallel(const FundamentalSet& E);

/// Rotates an indispensable element into the last position and drops it
/// from the ambient set: the moment-angle model of the quotient by the
/// diagonal circle. Throws NoIndispensable when every element occurs
/// outside some member.
MomentAngleModel reduce_indispensable(const FundamentalSet& E);

}  // namespace lvmb

#endif  // LVMB_MACOMPLEX_HPP
