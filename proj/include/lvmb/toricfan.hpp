/**
 * Rational simplicial fans and the lattice machinery tying a fundamental
 * set's ambient fan to its quotient fan: the exact integer factorization
 * G of the direction matrix F via Smith normal form, the induced
 * projection of cones, the wall-crossing completeness test, and the
 * finiteness profile of character kernels.
 */

#ifndef LVMB_TORICFAN_HPP
#define LVMB_TORICFAN_HPP

#include <map>
#include <string>
#include <vector>

#include "lvmb/fundsys.hpp"
#include "lvmb/geometry.hpp"
#include "lvmb/intmatrix.hpp"

namespace lvmb {

struct Fan {
    int rank = 0;                     // lattice rank
    std::vector<IntVec> generators;   // primitive, indexed 1..count in masks
    std::vector<VSet> max_cones;      // generator index sets, sorted

    static Fan create(int rank, std::vector<IntVec> generators,
                      std::vector<VSet> max_cones);

    int generator_count() const { return static_cast<int>(generators.size()); }
    /// Indices that actually appear in some cone.
    VSet used_generators() const;
};

/// Fan of the coordinate-subspace-arrangement complement in R^n:
/// standard basis generators, one cone per facet of the associated
/// complex.
Fan ambient_fan(const FundamentalSet& E);

/// Orbit-cone correspondence: every face I of the associated complex
/// labels the cone on the basis vectors indexed by I (dimension |I|).
std::vector<std::pair<VSet, int>> orbit_cone_table(const FundamentalSet& E);

struct KernelProfile {
    int rank_defect = 0;   // k - rank of the exponent matrix
    Int torsion_order = 1; // product of the nonzero invariant factors
    bool finite() const { return rank_defect == 0; }
    bool trivial() const { return rank_defect == 0 && torsion_order == 1; }
};

/// Kernel of the torus map with the given exponent rows, via SNF.
KernelProfile character_kernel(const IntMatrix& exponents);

struct LatticeProjection {
    IntMatrix F;          // n x (2m+1), row j = (1, l_j)
    IntMatrix G;          // (n-2m-1) x n, G*F = 0, surjective over Z
    Int saturation_index; // product of the invariant factors of F
};

/// Requires integer directions (NotConditionK) of full rank
/// (RankDeficient). G is read off the unimodular row transform of
/// snf(F), so exactness holds over the integers by construction.
LatticeProjection build_projection(const FundamentalSet& E, const DirectionFamily& l);

/// Exponent matrix whose rows are (1, l_j); the character-map shadow of
/// the family. Requires integer directions.
IntMatrix direction_exponents(const FundamentalSet& E, const DirectionFamily& l);

/// Applies G to every generator, primitivizes, keeps the cone index
/// sets. Throws CollapsedCone when a used generator dies, a cone loses
/// dimension, or two used rays collide.
Fan project_fan(const Fan& fan, const LatticeProjection& proj);

/// Wall-crossing completeness: every wall in exactly two max cones, the
/// two on opposite sides, adjacency connected. A deterministic probe
/// layer re-checks coverage and raises InternalInconsistency if it ever
/// disagrees. Throws NotFullDimensional unless all max cones are
/// full-dimensional and simplicial.
bool is_complete(const Fan& fan);

struct CompletenessReport {
    bool complete = false;
    bool full_dimensional = false;
    std::string reason;
};

/// is_complete with the precondition failure folded into the report.
CompletenessReport completeness_report(const Fan& fan);

/// Complex on generator indices whose faces are the cone index sets.
SimplicialComplex underlying_complex(const Fan& fan);

struct PipelineReport {
    bool condition_k = false;
    bool gf_zero = false;
    bool g_unimodular_profile = false;  // SNF(G) all ones
    bool projected_simplicial = false;
    bool complete = false;
    bool complex_matches = false;
    Int saturation_index;
    bool verdict = false;
    std::string failure_stage;  // empty when verdict holds
    Fan projected;
};

/// Runs ambient fan -> projection -> projected fan -> completeness and
/// the complex comparison; true when the projected fan is complete and
/// its underlying complex equals the associated complex.
PipelineReport verify_fan_pipeline(const FundamentalSet& E, const DirectionFamily& l);

}  // namespace lvmb

#endif  // LVMB_TORICFAN_HPP
