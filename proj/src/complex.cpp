#include "lvmb/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lvmb/intmatrix.hpp"

namespace lvmb {

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<VSet> facets) {
    if (n < 0 || n > kMaxGround) throw LabelOverflow("ground size out of range");
    SimplicialComplex K;
    K.n = n;
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (VSet f : facets) {
        if (!vs_subset(f, vs_full(n))) throw LabelOverflow("facet exceeds ground set");
        bool maximal = true;
        for (VSet g : facets)
            if (g != f && vs_subset(f, g)) { maximal = false; break; }
        if (maximal) K.facets.push_back(f);
    }
    return K;
}

bool SimplicialComplex::is_face(VSet s) const {
    for (VSet f : facets)
        if (vs_subset(s, f)) return true;
    return false;
}

VSet SimplicialComplex::vertices() const {
    VSet u = 0;
    for (VSet f : facets) u |= f;
    return u;
}

std::vector<VSet> SimplicialComplex::faces_of_size(int k) const {
    std::set<VSet> out;
    for (VSet f : facets)
        if (vs_size(f) >= k)
            vs_for_each_subset_of_size(f, k, [&](VSet s) { out.insert(s); });
    return {out.begin(), out.end()};
}

PurityReport is_pure(const SimplicialComplex& K) {
    if (K.facets.empty()) throw EmptyComplex("is_pure: no facets");
    const int card = vs_size(K.facets.front());
    for (VSet f : K.facets)
        if (vs_size(f) != card) return PurityReport{false, -2};
    return PurityReport{true, card - 1};
}

static void require_pure(const SimplicialComplex& K) {
    if (!is_pure(K).pure) throw NotPure("operation requires a pure complex");
}

RidgeReport ridges_two_facet_property(const SimplicialComplex& K) {
    require_pure(K);
    const int card = vs_size(K.facets.front());
    std::map<VSet, int> count;
    for (VSet f : K.facets)
        vs_for_each_subset_of_size(f, card - 1, [&](VSet r) { ++count[r]; });
    RidgeReport rep;
    rep.two_facet = true;
    if (card == 0) return rep;  // the {emptyset} complex has no ridges: vacuously true
    for (const auto& [r, c] : count)
        if (c != 2) {
            rep.two_facet = false;
            rep.violations.push_back(r);
        }
    return rep;
}

FacetGraph facet_graph(const SimplicialComplex& K) {
    require_pure(K);
    FacetGraph g;
    g.nodes = K.facets;
    const int card = vs_size(K.facets.front());
    const int m = static_cast<int>(g.nodes.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (vs_size(g.nodes[i] & g.nodes[j]) == card - 1 && card >= 1)
                g.edges.emplace_back(i, j);
    return g;
}

std::vector<std::vector<int>> connected_components(const FacetGraph& g) {
    const int m = static_cast<int>(g.nodes.size());
    std::vector<std::vector<int>> adj(m);
    for (auto [i, j] : g.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<int>> parts(ncomp);
    for (int v = 0; v < m; ++v) parts[comp[v]].push_back(v);
    return parts;
}

bool is_pseudo_manifold(const SimplicialComplex& K) {
    require_pure(K);
    if (vs_size(K.facets.front()) == 0) return false;  // the {emptyset} complex
    if (!ridges_two_facet_property(K).two_facet) return false;
    return connected_components(facet_graph(K)).size() == 1;
}

static int boundary_rank(const std::vector<VSet>& lower, const std::vector<VSet>& upper) {
    if (lower.empty() || upper.empty()) return 0;
    std::map<VSet, int> idx;
    for (std::size_t i = 0; i < lower.size(); ++i) idx[lower[i]] = static_cast<int>(i);
    IntMatrix B(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (std::size_t j = 0; j < upper.size(); ++j) {
        std::vector<int> verts = vs_to_sorted(upper[j]);
        for (std::size_t t = 0; t < verts.size(); ++t) {
            VSet face = vs_without(upper[j], verts[t]);
            B.at(idx.at(face), static_cast<int>(j)) = (t % 2 == 0) ? 1 : -1;
        }
    }
    return rank(B);
}

HomologyProfile homology(const SimplicialComplex& K) {
    if (K.facets.empty()) throw EmptyComplex("homology: no facets");
    int maxcard = 0;
    for (VSet f : K.facets) maxcard = std::max(maxcard, vs_size(f));
    HomologyProfile prof;
    if (maxcard == 0) return prof;  // {emptyset}: nothing to report
    std::vector<std::vector<VSet>> faces(maxcard + 1);
    for (int k = 1; k <= maxcard; ++k) faces[k] = K.faces_of_size(k);
    std::vector<int> ranks(maxcard + 1, 0);  // rank of boundary C_k -> C_{k-1}
    for (int k = 2; k <= maxcard; ++k) ranks[k] = boundary_rank(faces[k - 1], faces[k]);
    prof.betti.resize(maxcard);
    for (int k = 1; k <= maxcard; ++k) {
        long long dim_k = static_cast<long long>(faces[k].size());
        long long up = (k + 1 <= maxcard) ? ranks[k + 1] : 0;
        prof.betti[k - 1] = dim_k - ranks[k] - up;
    }
    return prof;
}

long long euler_characteristic(const SimplicialComplex& K) {
    int maxcard = 0;
    for (VSet f : K.facets) maxcard = std::max(maxcard, vs_size(f));
    long long chi = 0;
    for (int k = 1; k <= maxcard; ++k) {
        long long cnt = static_cast<long long>(K.faces_of_size(k).size());
        chi += (k % 2 == 1) ? cnt : -cnt;
    }
    return chi;
}

HomologyProfile sphere_profile(int d) {
    HomologyProfile p;
    if (d < 0) return p;
    p.betti.assign(d + 1, 0);
    p.betti[0] = (d == 0) ? 2 : 1;
    p.betti[d] = (d == 0) ? 2 : 1;
    return p;
}

SphereCertificate sphere_certificate(const SimplicialComplex& K, int expected_dim) {
    SphereCertificate cert;
    PurityReport pr = is_pure(K);
    if (!pr.pure) throw NotPure("sphere_certificate: complex not pure");
    cert.pure = true;
    cert.dimension = pr.dimension;
    cert.pseudo_manifold = is_pseudo_manifold(K);
    if (pr.dimension >= 0) cert.homology = homology(K);
    cert.pass = cert.pseudo_manifold && pr.dimension == expected_dim &&
                cert.homology == sphere_profile(expected_dim);
    cert.note =
        "necessary-conditions certificate (pseudo-manifold + rational homology of "
        "S^d); homology-sphere level evidence, not a homeomorphism proof";
    return cert;
}

std::vector<VSet> minimal_non_faces(const SimplicialComplex& K) {
    // A minimal non-face has every proper subset a face, so its size is at
    // most (max facet size) + 1.
    int maxcard = 0;
    for (VSet f : K.facets) maxcard = std::max(maxcard, vs_size(f));
    std::vector<VSet> out;
    for (int k = 1; k <= std::min(maxcard + 1, K.n); ++k) {
        vs_for_each_subset_of_size(vs_full(K.n), k, [&](VSet s) {
            if (K.is_face(s)) return;
            bool allsub = true;
            std::vector<int> verts = vs_to_sorted(s);
            for (int v : verts)
                if (!K.is_face(vs_without(s, v))) { allsub = false; break; }
            if (allsub) out.push_back(s);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lvmb
