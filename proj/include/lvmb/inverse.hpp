/**
 * Realization theorems: from an integer-vertex starshaped realization of
 * a simplicial sphere back to a verified good system (separate
 * constructions for even and odd vertex counts), plus the two-circle
 * stabilization that extends a good system while preserving its complex.
 */

#ifndef LVMB_INVERSE_HPP
#define LVMB_INVERSE_HPP

#include <string>
#include <vector>

#include "lvmb/geometry.hpp"
#include "lvmb/toricfan.hpp"

namespace lvmb {

struct Realization {
    int d = 0;                           // sphere dimension; ambient rank d+1
    std::vector<IntVec> vertex_coords;   // one (d+1)-vector per vertex 1..v
    SimplicialComplex complex;           // pure of dimension d on v vertices

    static Realization create(int d, std::vector<IntVec> coords, SimplicialComplex K);
    int vertex_count() const { return static_cast<int>(vertex_coords.size()); }
};

struct StarshapeReport {
    bool starshaped = false;
    std::string reason;  // set when false
};

/// Facet vectors independent and the vertex-ray fan complete; the exact
/// stand-in for "every ray from the origin meets the realization once".
StarshapeReport validate_starshaped(const Realization& R);

/// x_j divided by the gcd of its entries. Throws ZeroVertex.
std::vector<IntVec> primitive_generators(const Realization& R);

enum class Parity { Even, Odd };

struct ConstructedSystem {
    FundamentalSet E;
    DirectionFamily l;
    Parity parity = Parity::Even;
    TypeSignature type;
    // label_shift maps internal label i to external label i - label_shift
    // (the even construction grounds at 0, the odd one at -1)
    int label_shift = 0;
};

/// Even vertex count: ground {0..v+d+1}, directions
/// (0, e_1..e_v, -p^1..-p^{d+1}) in R^v. The result is re-verified: its
/// associated complex must equal the input complex and the system must
/// pass the good-system check (VerificationFailed otherwise).
ConstructedSystem construct_even(const Realization& R);

/// Odd vertex count: ground {-1,0,..,v+d+1}, directions
/// (0, e_0..e_v, (0,-p^1)..(0,-p^{d+1})) in R^{v+1}.
ConstructedSystem construct_odd(const Realization& R);

/// Dispatches on parity.
ConstructedSystem construct_system(const Realization& R);

/// Adjoins two indispensable elements and one complex coordinate: each
/// old vector gains real and imaginary parts -1, the two new vectors are
/// (0,..,0, 1 | 0,..,0, -1) and (0,..,0, 0 | 0,..,0, 1). Verifies the
/// extended system is good and re-derives the unchanged complex.
/// Throws NotGoodSystem when the input system is not good.
ConstructedSystem stabilize(const FundamentalSet& E, const DirectionFamily& l);

/// Facets of the constructed system's complex mapped back to the
/// realization's labels (for round-trip comparison).
SimplicialComplex external_complex(const ConstructedSystem& cs, int ground);

}  // namespace lvmb

#endif  // LVMB_INVERSE_HPP
