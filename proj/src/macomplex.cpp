#include "lvmb/macomplex.hpp"

#include <algorithm>

#include "lvmb/errors.hpp"
#include "lvmb/parallel.hpp"

namespace lvmb {

MomentAngleModel build_ma(const SimplicialComplex& K, int n) {
    if (n < 0 || n > kMaxGround) throw LabelOverflow("ambient count out of range");
    MomentAngleModel m;
    m.n = n;
    const VSet ambient = vs_full(n);
    int maxcard = 0;
    std::vector<VSet> facets;
    for (VSet f : K.facets) {
        if (!vs_subset(f, ambient)) throw LabelOverflow("facet label above the ambient count");
        facets.push_back(f);
        maxcard = std::max(maxcard, vs_size(f));
    }
    m.K = SimplicialComplex::from_facets(n, facets);
    for (VSet f : m.K.facets) m.blocks.push_back(MABlock{f, ambient & ~f});
    m.dimension = n + maxcard;
    m.label_map.resize(n + 1);
    for (int v = 0; v <= n; ++v) m.label_map[v] = v;
    return m;
}

namespace {

bool acceptable(const FundamentalSet& E, VSet J) {
    for (VSet P : E.members)
        if (vs_subset(P, J)) return true;
    return false;
}

bool covered(const std::vector<VSet>& facet_complements, VSet J) {
    for (VSet c : facet_complements)
        if (vs_subset(c, J)) return true;
    return false;
}

std::vector<VSet> facet_complements_of(const FundamentalSet& E) {
    SimplicialComplex K = associated_complex(E);
    std::vector<VSet> out;
    const VSet full = vs_full(E.n);
    for (VSet f : K.facets) out.push_back(full & ~f);
    return out;
}

}  // namespace

std::optional<VSet> m1_scan_serial(const FundamentalSet& E) {
    const std::vector<VSet> comps = facet_complements_of(E);
    const VSet full = vs_full(E.n);
    for (VSet J = 0; J <= full; ++J)
        if (acceptable(E, J) != covered(comps, J)) return J;
    return std::nullopt;
}

std::optional<VSet> m1_scan_parallel(const FundamentalSet& E) {
    const std::vector<VSet> comps = facet_complements_of(E);
    const VSet full = vs_full(E.n);
    const std::size_t total = static_cast<std::size_t>(full) + 1;
    const std::size_t chunk = 1 << 12;
    const std::size_t nchunks = (total + chunk - 1) / chunk;
    std::vector<VSet> first_bad(nchunks, ~VSet(0));
    parallel_for(nchunks, [&](std::size_t c) {
        const VSet lo = static_cast<VSet>(c) * chunk;
        const VSet hi = std::min<VSet>(lo + chunk, total);
        for (VSet J = lo; J < hi; ++J)
            if (acceptable(E, J) != covered(comps, J)) {
                first_bad[c] = J;
                return;
            }
    });
    VSet best = ~VSet(0);
    for (VSet b : first_bad) best = std::min(best, b);
    if (best == ~VSet(0)) return std::nullopt;
    return best;
}

M1IdentityReport verify_m1_identity(const FundamentalSet& E) {
    if (E.n > 22) throw TooLarge("verify_m1_identity: needs n <= 22");
    M1IdentityReport rep;
    rep.violation = m1_scan_parallel(E);
    rep.holds = !rep.violation.has_value();
    return rep;
}

MomentAngleModel reduce_indispensable(const FundamentalSet& E) {
    VSet ind = indispensable(E);
    if (ind == 0) throw NoIndispensable("no indispensable element to reduce");

    // rotate an indispensable element into position n; prefer n itself
    int t = vs_contains(ind, E.n) ? E.n : vs_to_sorted(ind).back();
    SimplicialComplex K = associated_complex(E);
    std::vector<VSet> facets;
    for (VSet f : K.facets) {
        // swap labels t and n (t is in no facet, so only n moves to t)
        VSet g = f;
        if (vs_contains(g, E.n)) g = vs_with(vs_without(g, E.n), t);
        facets.push_back(g);
    }
    MomentAngleModel m = build_ma(SimplicialComplex::from_facets(E.n - 1, facets), E.n - 1);
    for (int v = 0; v <= E.n - 1; ++v) m.label_map[v] = v;
    if (t >= 1 && t <= E.n - 1) m.label_map[t] = E.n;  // t now carries the old label n
    return m;
}

}  // namespace lvmb
