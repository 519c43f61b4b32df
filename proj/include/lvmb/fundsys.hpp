/**
 * Fundamental sets: families of M-subsets of {1..n} and their pure
 * combinatorics — indispensable elements, the substitute-existence
 * properties SE/SEU, the associated complex whose facets are member
 * complements, minimal decomposition along the replacement graph, and
 * the coordinate-subspace description of the associated open set.
 */

#ifndef LVMB_FUNDSYS_HPP
#define LVMB_FUNDSYS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lvmb/complex.hpp"
#include "lvmb/vset.hpp"

namespace lvmb {

struct TypeSignature {
    int M = 0;
    int n = 0;
    int k = 0;  // number of indispensable elements
    bool operator==(const TypeSignature&) const = default;
};

struct FundamentalSet {
    int n = 0;
    int M = 0;
    std::vector<VSet> members;  // sorted, unique, each of size M

    static FundamentalSet create(int n, int M, std::vector<VSet> members);

    TypeSignature type() const;
};

/// Elements common to every member.
VSet indispensable(const FundamentalSet& E);

struct SEReport {
    bool holds = true;
    std::optional<std::pair<VSet, int>> witness;  // failing (member, k)
};

SEReport check_se(const FundamentalSet& E);
bool check_seu(const FundamentalSet& E);

/// Complex on {1..n} with facets the member complements; pure of
/// dimension n-M-1 with the non-indispensable elements as vertices.
SimplicialComplex associated_complex(const FundamentalSet& E);

/// Members recovered from a complex by complementing facets. Requires a
/// pure complex (equal complement sizes come for free).
FundamentalSet fundamental_set_of(const SimplicialComplex& K);

struct SeuEquivalenceReport {
    bool seu = false;
    bool facet_exchange = false;
    bool two_facet_ridges = false;
    bool agree = false;
};

/// Evaluates the three equivalent formulations independently and checks
/// they coincide.
SeuEquivalenceReport seu_equivalences(const FundamentalSet& E);

/// Replacement graph: members adjacent iff they differ by one element.
FacetGraph replacement_graph(const FundamentalSet& E);

/// Partition into the connected components of the replacement graph.
/// Each part satisfies SEU and is minimal. Throws SEUViolated when the
/// input does not satisfy SEU.
std::vector<FundamentalSet> decompose_minimal(const FundamentalSet& E);

/// SEU holds and the replacement graph is connected.
bool is_minimal(const FundamentalSet& E);

struct MinimalityReport {
    bool minimal = false;
    bool pseudo_manifold = false;
};

/// Computes both booleans and asserts they agree. Throws DegenerateType
/// when n == M (the {emptyset} complex is excluded by construction).
MinimalityReport minimality_pseudomanifold_check(const FundamentalSet& E);

struct ArrangementDescription {
    std::vector<VSet> zero_sets;  // minimal non-faces; the open set is the
                                  // complement of the union of {z : z_i = 0, i in s}
};

ArrangementDescription arrangement_description(const FundamentalSet& E);

}  // namespace lvmb

#endif  // LVMB_FUNDSYS_HPP
