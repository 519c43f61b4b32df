#include "lvmb/toricfan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lvmb/errors.hpp"

namespace lvmb {

Fan Fan::create(int rank, std::vector<IntVec> generators, std::vector<VSet> max_cones) {
    if (rank < 1) throw MalformedInput("fan rank must be positive");
    Fan f;
    f.rank = rank;
    for (const IntVec& g : generators)
        if (static_cast<int>(g.size()) != rank)
            throw DimensionMismatch("generator of wrong length");
    f.generators = std::move(generators);
    std::sort(max_cones.begin(), max_cones.end());
    max_cones.erase(std::unique(max_cones.begin(), max_cones.end()), max_cones.end());
    const VSet valid = vs_full(f.generator_count());
    for (VSet c : max_cones)
        if (!vs_subset(c, valid)) throw LabelOverflow("cone references missing generator");
    f.max_cones = std::move(max_cones);
    return f;
}

VSet Fan::used_generators() const {
    VSet u = 0;
    for (VSet c : max_cones) u |= c;
    return u;
}

Fan ambient_fan(const FundamentalSet& E) {
    std::vector<IntVec> gens(E.n, IntVec(E.n, Int(0)));
    for (int i = 0; i < E.n; ++i) gens[i][i] = 1;
    SimplicialComplex K = associated_complex(E);
    return Fan::create(E.n, std::move(gens), K.facets);
}

std::vector<std::pair<VSet, int>> orbit_cone_table(const FundamentalSet& E) {
    SimplicialComplex K = associated_complex(E);
    std::vector<std::pair<VSet, int>> table;
    table.emplace_back(VSet(0), 0);  // the zero cone carries the dense orbit
    for (int k = 1; k <= K.n; ++k)
        for (VSet f : K.faces_of_size(k)) table.emplace_back(f, k);
    return table;
}

KernelProfile character_kernel(const IntMatrix& exponents) {
    IntVec factors = invariant_factors(exponents);
    KernelProfile p;
    p.rank_defect = exponents.cols - static_cast<int>(factors.size());
    p.torsion_order = 1;
    for (const Int& d : factors) p.torsion_order *= d;
    return p;
}

IntMatrix direction_exponents(const FundamentalSet& E, const DirectionFamily& l) {
    if (E.n != l.count()) throw DimensionMismatch("family size differs from ground size");
    if (!l.integral()) throw NotConditionK("directions must have integer coordinates");
    IntMatrix F(E.n, 2 * l.m + 1);
    for (int j = 0; j < E.n; ++j) {
        F.at(j, 0) = 1;
        for (int k = 0; k < 2 * l.m; ++k) F.at(j, k + 1) = rat_num(l.vectors[j][k]);
    }
    return F;
}

LatticeProjection build_projection(const FundamentalSet& E, const DirectionFamily& l) {
    IntMatrix F = direction_exponents(E, l);
    const int n = F.rows, r = F.cols;
    SNFResult s = snf(F);
    if (s.rank != r) throw RankDeficient("direction matrix is rank-deficient");

    LatticeProjection proj;
    proj.F = F;
    proj.G = IntMatrix(n - r, n);
    for (int i = 0; i < n - r; ++i)
        for (int j = 0; j < n; ++j) proj.G.at(i, j) = s.U.at(r + i, j);
    proj.saturation_index = 1;
    for (int t = 0; t < r; ++t) proj.saturation_index *= s.D.at(t, t);

    if (!mul(proj.G, proj.F).is_zero())
        throw InternalInconsistency("build_projection: G*F != 0");
    for (const Int& d : invariant_factors(proj.G))
        if (d != 1) throw InternalInconsistency("build_projection: G not surjective over Z");
    return proj;
}

Fan project_fan(const Fan& fan, const LatticeProjection& proj) {
    if (proj.G.cols != fan.rank)
        throw DimensionMismatch("projection does not match fan rank");
    const int k = proj.G.rows;
    const VSet used = fan.used_generators();

    std::vector<IntVec> images;
    images.reserve(fan.generators.size());
    for (std::size_t i = 0; i < fan.generators.size(); ++i) {
        IntVec img = mul(proj.G, fan.generators[i]);
        Int g = content(img);
        if (g == 0) {
            if (vs_contains(used, static_cast<int>(i) + 1))
                throw CollapsedCone("generator in use projects to zero");
        } else {
            for (Int& e : img) e /= g;
        }
        images.push_back(std::move(img));
    }

    // distinct used vertices must stay on distinct rays
    std::set<IntVec> seen;
    for (int v : vs_to_sorted(used))
        if (!seen.insert(images[v - 1]).second)
            throw CollapsedCone("two rays collide under the projection");

    Fan out = Fan::create(k, images, fan.max_cones);
    for (VSet c : out.max_cones) {
        std::vector<int> idx = vs_to_sorted(c);
        IntMatrix M(static_cast<int>(idx.size()), k);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (int j = 0; j < k; ++j) M.at(static_cast<int>(r), j) = images[idx[r] - 1][j];
        if (rank(M) != static_cast<int>(idx.size()))
            throw CollapsedCone("projected cone loses dimension");
    }
    return out;
}

namespace {

// x in pos(g_i, i in cone)? The cone is simplicial and full-dimensional,
// so barycentric coordinates are a square solve; do it with Cramer.
bool cone_contains(const Fan& fan, VSet cone, const IntVec& x) {
    std::vector<int> idx = vs_to_sorted(cone);
    const int k = fan.rank;
    IntMatrix M(k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) M.at(i, j) = fan.generators[idx[j] - 1][i];
    Int D = det(M);
    if (D == 0) return false;
    for (int j = 0; j < k; ++j) {
        IntMatrix Mj = M;
        for (int i = 0; i < k; ++i) Mj.at(i, j) = x[i];
        Int Dj = det(Mj);
        // coordinate Dj/D must be >= 0
        if (D > 0 ? Dj < 0 : Dj > 0) return false;
    }
    return true;
}

}  // namespace

bool is_complete(const Fan& fan) {
    const int k = fan.rank;
    if (fan.max_cones.empty()) throw NotFullDimensional("fan has no max cones");
    for (VSet c : fan.max_cones) {
        if (vs_size(c) != k) throw NotFullDimensional("max cone is not full-dimensional");
        std::vector<int> idx = vs_to_sorted(c);
        IntMatrix M(k, k);
        for (int r = 0; r < k; ++r)
            for (int j = 0; j < k; ++j) M.at(r, j) = fan.generators[idx[j] - 1][r];
        if (rank(M) != k) throw NotFullDimensional("max cone generators are dependent");
    }

    // (i) every wall is shared by exactly two max cones
    std::map<VSet, std::vector<std::pair<int, int>>> walls;  // wall -> (cone idx, apex label)
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
        for (int v : vs_to_sorted(fan.max_cones[c]))
            walls[vs_without(fan.max_cones[c], v)].emplace_back(static_cast<int>(c), v);
    bool ok = true;
    for (const auto& [w, owners] : walls)
        if (owners.size() != 2) { ok = false; break; }

    // (ii) the two cones lie strictly on opposite sides of each wall
    if (ok && k >= 1) {
        for (const auto& [w, owners] : walls) {
            std::vector<int> idx = vs_to_sorted(w);
            IntMatrix W(k - 1, k);
            for (std::size_t r = 0; r < idx.size(); ++r)
                for (int j = 0; j < k; ++j) W.at(static_cast<int>(r), j) = fan.generators[idx[r] - 1][j];
            IntVec h = kernel_vector(W);
            Int s0 = dot(h, fan.generators[owners[0].second - 1]);
            Int s1 = dot(h, fan.generators[owners[1].second - 1]);
            if (s0 == 0 || s1 == 0 || (s0 > 0) == (s1 > 0)) { ok = false; break; }
        }
    }

    // (iii) wall adjacency connects the max cones
    if (ok) {
        FacetGraph g;
        g.nodes = fan.max_cones;
        for (const auto& [w, owners] : walls)
            if (owners.size() == 2 && owners[0].first != owners[1].first)
                g.edges.emplace_back(std::min(owners[0].first, owners[1].first),
                                     std::max(owners[0].first, owners[1].first));
        ok = connected_components(g).size() == 1;
    }

    // (iv) advisory probe layer: 2k+1 deterministic directions must all
    // be covered when the wall criterion says complete
    if (ok) {
        std::vector<IntVec> probes;
        for (int i = 0; i < k; ++i) {
            IntVec p(k, Int(0));
            p[i] = 1;
            probes.push_back(p);
            p[i] = -1;
            probes.push_back(p);
        }
        probes.emplace_back(k, Int(1));
        for (const IntVec& p : probes) {
            bool covered = false;
            for (VSet c : fan.max_cones)
                if (cone_contains(fan, c, p)) { covered = true; break; }
            if (!covered)
                throw InternalInconsistency("complete fan fails probe coverage");
        }
    }
    return ok;
}

CompletenessReport completeness_report(const Fan& fan) {
    CompletenessReport rep;
    try {
        rep.full_dimensional = true;
        rep.complete = is_complete(fan);
        if (!rep.complete) rep.reason = "wall-crossing criterion fails";
    } catch (const NotFullDimensional& e) {
        rep.full_dimensional = false;
        rep.complete = false;
        rep.reason = e.what();
    }
    return rep;
}

SimplicialComplex underlying_complex(const Fan& fan) {
    return SimplicialComplex::from_facets(fan.generator_count(), fan.max_cones);
}

PipelineReport verify_fan_pipeline(const FundamentalSet& E, const DirectionFamily& l) {
    PipelineReport rep;
    rep.saturation_index = 0;
    rep.condition_k = l.integral();
    if (!rep.condition_k) {
        rep.failure_stage = "condition-K (directions not integral)";
        return rep;
    }
    SimplicialComplex P = associated_complex(E);
    Fan ambient = ambient_fan(E);
    if (!underlying_complex(ambient).same_facets(P))
        throw InternalInconsistency("ambient fan does not carry the associated complex");

    LatticeProjection proj;
    try {
        proj = build_projection(E, l);
    } catch (const RankDeficient&) {
        rep.failure_stage = "projection (direction matrix rank-deficient)";
        return rep;
    }
    rep.gf_zero = mul(proj.G, proj.F).is_zero();
    rep.g_unimodular_profile = true;
    for (const Int& d : invariant_factors(proj.G))
        if (d != 1) rep.g_unimodular_profile = false;
    rep.saturation_index = proj.saturation_index;

    try {
        rep.projected = project_fan(ambient, proj);
        rep.projected_simplicial = true;
    } catch (const CollapsedCone&) {
        rep.failure_stage = "projected fan (collapsed cone)";
        return rep;
    }

    CompletenessReport comp = completeness_report(rep.projected);
    rep.complete = comp.complete;
    rep.complex_matches = underlying_complex(rep.projected).same_facets(P);
    rep.verdict = rep.gf_zero && rep.g_unimodular_profile && rep.projected_simplicial &&
                  rep.complete && rep.complex_matches;
    if (!rep.verdict && rep.failure_stage.empty()) {
        if (!rep.complete)
            rep.failure_stage = "completeness (" + comp.reason + ")";
        else if (!rep.complex_matches)
            rep.failure_stage = "underlying complex differs from the associated complex";
        else
            rep.failure_stage = "lattice factorization";
    }
    return rep;
}

}  // namespace lvmb
