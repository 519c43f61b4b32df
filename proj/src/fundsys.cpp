#include "lvmb/fundsys.hpp"

#include <algorithm>
#include <set>

#include "lvmb/errors.hpp"

namespace lvmb {

FundamentalSet FundamentalSet::create(int n, int M, std::vector<VSet> members) {
    if (n < 1 || n > kMaxGround) throw MalformedInput("ground size out of range");
    if (M < 0 || M > n) throw MalformedInput("member size must satisfy 0 <= M <= n");
    if (members.empty()) throw MalformedInput("fundamental set must be nonempty");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (VSet P : members) {
        if (!vs_subset(P, vs_full(n))) throw LabelOverflow("member exceeds ground set");
        if (vs_size(P) != M) throw MalformedInput("member of wrong cardinality");
    }
    FundamentalSet E;
    E.n = n;
    E.M = M;
    E.members = std::move(members);
    return E;
}

VSet indispensable(const FundamentalSet& E) {
    VSet s = vs_full(E.n);
    for (VSet P : E.members) s &= P;
    return s;
}

TypeSignature FundamentalSet::type() const {
    return TypeSignature{M, n, vs_size(indispensable(*this))};
}

namespace {

bool is_member(const FundamentalSet& E, VSet P) {
    return std::binary_search(E.members.begin(), E.members.end(), P);
}

// Number of substitutes k' in P with (P \ {k'}) u {k} a member. For
// k in P the unique substitute is k itself (any other swap shrinks the
// set below size M).
int substitute_count(const FundamentalSet& E, VSet P, int k) {
    if (vs_contains(P, k)) return 1;
    int cnt = 0;
    for (int kp : vs_to_sorted(P))
        if (is_member(E, vs_with(vs_without(P, kp), k))) ++cnt;
    return cnt;
}

}  // namespace

SEReport check_se(const FundamentalSet& E) {
    for (VSet P : E.members)
        for (int k = 1; k <= E.n; ++k)
            if (substitute_count(E, P, k) < 1) return SEReport{false, std::make_pair(P, k)};
    return SEReport{};
}

bool check_seu(const FundamentalSet& E) {
    for (VSet P : E.members)
        for (int k = 1; k <= E.n; ++k)
            if (substitute_count(E, P, k) != 1) return false;
    return true;
}

SimplicialComplex associated_complex(const FundamentalSet& E) {
    std::vector<VSet> facets;
    facets.reserve(E.members.size());
    const VSet full = vs_full(E.n);
    for (VSet P : E.members) facets.push_back(full & ~P);
    return SimplicialComplex::from_facets(E.n, std::move(facets));
}

FundamentalSet fundamental_set_of(const SimplicialComplex& K) {
    PurityReport pr = is_pure(K);
    if (!pr.pure) throw NotPure("fundamental_set_of: complex not pure");
    std::vector<VSet> members;
    const VSet full = vs_full(K.n);
    for (VSet f : K.facets) members.push_back(full & ~f);
    return FundamentalSet::create(K.n, K.n - (pr.dimension + 1), std::move(members));
}

SeuEquivalenceReport seu_equivalences(const FundamentalSet& E) {
    SeuEquivalenceReport rep;
    rep.seu = check_seu(E);

    // facet exchange on the associated complex, evaluated from scratch
    SimplicialComplex K = associated_complex(E);
    std::set<VSet> fs(K.facets.begin(), K.facets.end());
    rep.facet_exchange = true;
    for (VSet Q : K.facets) {
        for (int k = 1; k <= E.n && rep.facet_exchange; ++k) {
            int cnt = 0;
            for (int kp = 1; kp <= E.n; ++kp) {
                if (vs_contains(Q, kp)) continue;
                if (fs.count(vs_without(vs_with(Q, kp), k))) ++cnt;
            }
            if (cnt != 1) rep.facet_exchange = false;
        }
        if (!rep.facet_exchange) break;
    }

    rep.two_facet_ridges = ridges_two_facet_property(K).two_facet;
    rep.agree = (rep.seu == rep.facet_exchange) && (rep.seu == rep.two_facet_ridges);
    return rep;
}

FacetGraph replacement_graph(const FundamentalSet& E) {
    FacetGraph g;
    g.nodes = E.members;
    const int m = static_cast<int>(E.members.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (vs_size(E.members[i] & E.members[j]) == E.M - 1)
                g.edges.emplace_back(i, j);
    return g;
}

std::vector<FundamentalSet> decompose_minimal(const FundamentalSet& E) {
    if (!check_seu(E)) throw SEUViolated("decompose_minimal: SEU precondition fails");
    auto parts = connected_components(replacement_graph(E));
    std::vector<FundamentalSet> out;
    for (const auto& part : parts) {
        std::vector<VSet> members;
        for (int idx : part) members.push_back(E.members[idx]);
        out.push_back(FundamentalSet::create(E.n, E.M, std::move(members)));
    }
    return out;
}

bool is_minimal(const FundamentalSet& E) {
    if (!check_seu(E)) return false;
    return connected_components(replacement_graph(E)).size() == 1;
}

MinimalityReport minimality_pseudomanifold_check(const FundamentalSet& E) {
    if (E.n == E.M) throw DegenerateType("n == M: associated complex is {emptyset}");
    MinimalityReport rep;
    rep.minimal = is_minimal(E);
    rep.pseudo_manifold = is_pseudo_manifold(associated_complex(E));
    if (rep.minimal != rep.pseudo_manifold)
        throw InternalInconsistency("minimality and pseudo-manifold disagree");
    return rep;
}

ArrangementDescription arrangement_description(const FundamentalSet& E) {
    return ArrangementDescription{minimal_non_faces(associated_complex(E))};
}

}  // namespace lvmb
