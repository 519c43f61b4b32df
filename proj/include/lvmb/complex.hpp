/**
 * Pure simplicial complexes given by their facets. Faces are derived on
 * demand; nothing global is stored. Provides the purity/ridge/pseudo-
 * manifold tests, the facet adjacency graph, rational homology via exact
 * boundary-matrix ranks, and the sphere certificate built from them.
 */

#ifndef LVMB_COMPLEX_HPP
#define LVMB_COMPLEX_HPP

#include <optional>
#include <string>
#include <vector>

#include "lvmb/vset.hpp"

namespace lvmb {

struct SimplicialComplex {
    int n = 0;                  // ground set {1,...,n}
    std::vector<VSet> facets;   // inclusion-maximal, sorted, deduplicated

    /// Normalizes: drops duplicates and faces contained in another facet.
    static SimplicialComplex from_facets(int n, std::vector<VSet> facets);

    bool is_face(VSet s) const;
    VSet vertices() const;  // union of facets
    bool same_facets(const SimplicialComplex& o) const { return facets == o.facets; }

    /// All faces with exactly k vertices, sorted by mask.
    std::vector<VSet> faces_of_size(int k) const;
};

struct PurityReport {
    bool pure = false;
    int dimension = -2;  // meaningful only when pure; {emptyset} has dim -1
};

struct RidgeReport {
    bool two_facet = false;
    std::vector<VSet> violations;  // ridges not in exactly two facets
};

struct FacetGraph {
    std::vector<VSet> nodes;                    // facets
    std::vector<std::pair<int, int>> edges;     // indices into nodes, i < j
};

struct HomologyProfile {
    std::vector<long long> betti;  // b_0..b_d, rational coefficients
    bool operator==(const HomologyProfile&) const = default;
};

struct SphereCertificate {
    bool pass = false;
    bool pure = false;
    int dimension = -2;
    bool pseudo_manifold = false;
    HomologyProfile homology;
    std::string note;  // necessary-conditions caveat
};

PurityReport is_pure(const SimplicialComplex& K);                 // EmptyComplex
RidgeReport ridges_two_facet_property(const SimplicialComplex& K);  // NotPure
bool is_pseudo_manifold(const SimplicialComplex& K);              // NotPure
FacetGraph facet_graph(const SimplicialComplex& K);               // NotPure
std::vector<std::vector<int>> connected_components(const FacetGraph& g);
HomologyProfile homology(const SimplicialComplex& K);             // EmptyComplex
SphereCertificate sphere_certificate(const SimplicialComplex& K, int expected_dim);

/// Inclusion-minimal subsets of {1..n} that are not faces of K.
std::vector<VSet> minimal_non_faces(const SimplicialComplex& K);

/// Euler characteristic from face counts (f_0 - f_1 + f_2 - ...).
long long euler_characteristic(const SimplicialComplex& K);

HomologyProfile sphere_profile(int d);

}  // namespace lvmb

#endif  // LVMB_COMPLEX_HPP
