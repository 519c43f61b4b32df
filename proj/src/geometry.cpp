#include "lvmb/geometry.hpp"

#include <algorithm>

#include "lvmb/errors.hpp"
#include "lvmb/intmatrix.hpp"
#include "lvmb/parallel.hpp"

namespace lvmb {

DirectionFamily DirectionFamily::create(int m, std::vector<RatVec> vectors) {
    if (m < 0) throw MalformedInput("negative half-dimension");
    for (const RatVec& v : vectors)
        if (static_cast<int>(v.size()) != 2 * m)
            throw DimensionMismatch("direction vector of wrong length");
    DirectionFamily f;
    f.m = m;
    f.vectors = std::move(vectors);
    return f;
}

bool DirectionFamily::integral() const {
    for (const RatVec& v : vectors)
        for (const Rational& e : v)
            if (!is_integral(e)) return false;
    return true;
}

Int DirectionFamily::denominator_lcm() const {
    Int l = 1;
    for (const RatVec& v : vectors)
        for (const Rational& e : v) l = lcm_int(l, rat_den(e));
    return l;
}

bool affinely_spans(const std::vector<RatVec>& pts, int dim) {
    if (pts.empty()) return dim == 0;
    const std::size_t k = pts.size();
    // scale differences to integers and take the exact rank
    Int scale = 1;
    for (const RatVec& p : pts)
        for (const Rational& e : p) scale = lcm_int(scale, rat_den(e));
    IntMatrix M(static_cast<int>(k - 1), dim);
    for (std::size_t i = 1; i < k; ++i)
        for (int j = 0; j < dim; ++j) {
            Rational d = (pts[i][j] - pts[0][j]) * Rational(scale);
            M.at(static_cast<int>(i - 1), j) = rat_num(d);
        }
    return rank(M) == dim;
}

bool check_acceptable(const FundamentalSet& E, const DirectionFamily& l) {
    if (E.n != l.count()) throw DimensionMismatch("family size differs from ground size");
    if (E.M != 2 * l.m + 1) throw DimensionMismatch("member size must be 2m+1");
    for (VSet P : E.members) {
        std::vector<RatVec> pts;
        for (int p : vs_to_sorted(P)) pts.push_back(l.at(p));
        if (!affinely_spans(pts, 2 * l.m)) return false;
    }
    return true;
}

HullIntersection hull_interior_point(VSet P, VSet Q, const DirectionFamily& l) {
    const int d = 2 * l.m;
    std::vector<int> ps = vs_to_sorted(P), qs = vs_to_sorted(Q);
    {
        std::vector<RatVec> pp, qq;
        for (int p : ps) pp.push_back(l.at(p));
        for (int q : qs) qq.push_back(l.at(q));
        if (!affinely_spans(pp, d) || !affinely_spans(qq, d))
            throw NotFullDimensional("hull_interior_point: hull not full-dimensional");
    }

    // maximize t subject to
    //   sum_p a_p l_p - sum_q b_q l_q = 0,  sum a = 1,  sum b = 1,
    //   a_p >= t, b_q >= t            (variables a, b, t all free)
    const int np = static_cast<int>(ps.size()), nq = static_cast<int>(qs.size());
    const int nv = np + nq + 1;  // t is the last variable
    LPProblem lp;
    lp.objective.assign(nv, Rational(0));
    lp.objective[nv - 1] = 1;
    lp.lower.assign(nv, std::nullopt);
    for (int k = 0; k < d; ++k) {
        RatVec row(nv, Rational(0));
        for (int i = 0; i < np; ++i) row[i] = l.at(ps[i])[k];
        for (int j = 0; j < nq; ++j) row[np + j] = -l.at(qs[j])[k];
        lp.add_row(std::move(row), Rel::EQ, 0);
    }
    {
        RatVec row(nv, Rational(0));
        for (int i = 0; i < np; ++i) row[i] = 1;
        lp.add_row(std::move(row), Rel::EQ, 1);
    }
    {
        RatVec row(nv, Rational(0));
        for (int j = 0; j < nq; ++j) row[np + j] = 1;
        lp.add_row(std::move(row), Rel::EQ, 1);
    }
    for (int i = 0; i < np; ++i) {
        RatVec row(nv, Rational(0));
        row[i] = 1;
        row[nv - 1] = -1;
        lp.add_row(std::move(row), Rel::GE, 0);
    }
    for (int j = 0; j < nq; ++j) {
        RatVec row(nv, Rational(0));
        row[np + j] = 1;
        row[nv - 1] = -1;
        lp.add_row(std::move(row), Rel::GE, 0);
    }

    // Full-dimensional affine spans make the program feasible, and t is
    // bounded above by 1/|P|.
    LPOutcome sol = lp_solve(lp);
    if (sol.status != LPStatus::Optimal)
        throw InternalInconsistency("hull_interior_point: LP not optimal");

    HullIntersection out;
    out.margin = sol.value;
    out.intersect = sol.value > 0;
    if (out.intersect) {
        out.witness.assign(d, Rational(0));
        for (int k = 0; k < d; ++k)
            for (int i = 0; i < np; ++i) out.witness[k] += sol.point[i] * l.at(ps[i])[k];
        return out;
    }

    // Disjoint interiors: the duals of the d balance rows separate the
    // hulls. Orientation depends on conversion details, so try both and
    // verify exactly.
    RatVec h(sol.row_duals.begin(), sol.row_duals.begin() + d);
    for (int attempt = 0; attempt < 2; ++attempt) {
        bool nonzero = std::any_of(h.begin(), h.end(), [](const Rational& e) { return e != 0; });
        if (nonzero) {
            Rational lo, hi;
            bool first = true;
            for (int q : qs) {
                Rational v = dot(h, l.at(q));
                if (first || v > lo) lo = v;
                first = false;
            }
            first = true;
            for (int p : ps) {
                Rational v = dot(h, l.at(p));
                if (first || v < hi) hi = v;
                first = false;
            }
            if (lo <= hi) {
                out.separator = h;
                out.sep_low = lo;
                out.sep_high = hi;
                return out;
            }
        }
        for (Rational& e : h) e = -e;
    }
    throw InternalInconsistency("hull_interior_point: no verified separator");
}

std::vector<HullIntersection> imbrication_pairs_serial(const FundamentalSet& E,
                                                       const DirectionFamily& l) {
    std::vector<std::pair<VSet, VSet>> pairs;
    for (std::size_t i = 0; i < E.members.size(); ++i)
        for (std::size_t j = i; j < E.members.size(); ++j)
            pairs.emplace_back(E.members[i], E.members[j]);
    std::vector<HullIntersection> out(pairs.size());
    for (std::size_t t = 0; t < pairs.size(); ++t)
        out[t] = hull_interior_point(pairs[t].first, pairs[t].second, l);
    return out;
}

std::vector<HullIntersection> imbrication_pairs_parallel(const FundamentalSet& E,
                                                         const DirectionFamily& l) {
    std::vector<std::pair<VSet, VSet>> pairs;
    for (std::size_t i = 0; i < E.members.size(); ++i)
        for (std::size_t j = i; j < E.members.size(); ++j)
            pairs.emplace_back(E.members[i], E.members[j]);
    std::vector<HullIntersection> out(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t t) {
        out[t] = hull_interior_point(pairs[t].first, pairs[t].second, l);
    });
    return out;
}

GoodSystemReport check_good_system(const FundamentalSet& E, const DirectionFamily& l) {
    GoodSystemReport rep;
    rep.condition_k_integral = l.integral();
    rep.acceptable = check_acceptable(E, l);
    rep.se = check_se(E).holds;
    if (rep.acceptable) {
        rep.imbrication_evaluated = true;
        rep.imbrication = true;
        auto results = imbrication_pairs_parallel(E, l);
        std::size_t t = 0;
        for (std::size_t i = 0; i < E.members.size() && rep.imbrication; ++i)
            for (std::size_t j = i; j < E.members.size(); ++j, ++t)
                if (!results[t].intersect) {
                    rep.imbrication = false;
                    rep.failing_pair = std::make_pair(E.members[i], E.members[j]);
                    break;
                }
    }
    rep.verdict = rep.acceptable && rep.se && rep.imbrication;
    rep.minimality = is_minimal(E);
    if (rep.verdict && !rep.minimality)
        throw InternalInconsistency("good verdict with non-minimal family");
    return rep;
}

std::optional<RatVec> convex_combination(const std::vector<RatVec>& pts, const RatVec& x) {
    if (pts.empty()) return std::nullopt;
    const int d = static_cast<int>(x.size());
    const int k = static_cast<int>(pts.size());
    LPProblem lp;
    lp.objective.assign(k, Rational(0));
    lp.lower.assign(k, Rational(0));
    for (int j = 0; j < d; ++j) {
        RatVec row(k);
        for (int i = 0; i < k; ++i) row[i] = pts[i][j];
        lp.add_row(std::move(row), Rel::EQ, x[j]);
    }
    lp.add_row(RatVec(k, Rational(1)), Rel::EQ, 1);
    LPOutcome sol = lp_solve(lp);
    if (sol.status != LPStatus::Optimal) return std::nullopt;
    return sol.point;
}

LvmWitnessReport lvm_witness_check(const FundamentalSet& E, const DirectionFamily& l,
                                   const RatVec& x) {
    if (!check_good_system(E, l).verdict)
        throw NotGoodSystem("lvm_witness_check: system is not good");
    if (static_cast<int>(x.size()) != 2 * l.m)
        throw DimensionMismatch("witness point has wrong dimension");

    LvmWitnessReport rep;
    rep.avoids_small_hulls = true;
    vs_for_each_subset_of_size(vs_full(E.n), 2 * l.m, [&](VSet S) {
        if (!rep.avoids_small_hulls) return;
        std::vector<RatVec> pts;
        for (int v : vs_to_sorted(S)) pts.push_back(l.at(v));
        if (convex_combination(pts, x)) {
            rep.avoids_small_hulls = false;
            rep.offending_small_hull = S;
        }
    });
    vs_for_each_subset_of_size(vs_full(E.n), 2 * l.m + 1, [&](VSet S) {
        std::vector<RatVec> pts;
        for (int v : vs_to_sorted(S)) pts.push_back(l.at(v));
        if (convex_combination(pts, x)) rep.hull_members.push_back(S);
    });
    std::sort(rep.hull_members.begin(), rep.hull_members.end());
    rep.members_match = (rep.hull_members == E.members);
    rep.is_lvm_witness = rep.avoids_small_hulls && rep.members_match;
    return rep;
}

std::optional<std::pair<RatVec, LvmWitnessReport>> lvm_witness_search(
    const FundamentalSet& E, const DirectionFamily& l) {
    for (VSet P : E.members) {
        std::vector<int> vs = vs_to_sorted(P);
        RatVec bary(2 * l.m, Rational(0));
        for (int v : vs)
            for (int j = 0; j < 2 * l.m; ++j) bary[j] += l.at(v)[j];
        for (Rational& e : bary) e /= Rational(static_cast<int>(vs.size()));
        LvmWitnessReport rep = lvm_witness_check(E, l, bary);
        if (rep.is_lvm_witness) return std::make_pair(bary, rep);
    }
    return std::nullopt;
}

DirectionFamily siegel_translate(const DirectionFamily& l, const RatVec& x) {
    if (static_cast<int>(x.size()) != 2 * l.m)
        throw DimensionMismatch("translation point has wrong dimension");
    std::vector<RatVec> vecs = l.vectors;
    for (RatVec& v : vecs)
        for (int j = 0; j < 2 * l.m; ++j) v[j] -= x[j];
    return DirectionFamily::create(l.m, std::move(vecs));
}

static bool zero_in_hull(const DirectionFamily& l, VSet indices) {
    std::vector<RatVec> pts;
    for (int v : vs_to_sorted(indices)) pts.push_back(l.at(v));
    return convex_combination(pts, RatVec(2 * l.m, Rational(0))).has_value();
}

std::vector<VSet> polytope_scan_serial(int n, const DirectionFamily& l) {
    std::vector<VSet> hits;
    const VSet full = vs_full(n);
    for (VSet I = 0; I <= full; ++I)
        if (zero_in_hull(l, full & ~I)) hits.push_back(I);
    return hits;
}

std::vector<VSet> polytope_scan_parallel(int n, const DirectionFamily& l) {
    const VSet full = vs_full(n);
    std::vector<char> hit(static_cast<std::size_t>(full) + 1, 0);
    parallel_for(static_cast<std::size_t>(full) + 1, [&](std::size_t I) {
        hit[I] = zero_in_hull(l, full & ~static_cast<VSet>(I)) ? 1 : 0;
    });
    std::vector<VSet> hits;
    for (std::size_t I = 0; I < hit.size(); ++I)
        if (hit[I]) hits.push_back(static_cast<VSet>(I));
    return hits;
}

PolytopeCombinatorics polytope_combinatorics(const FundamentalSet& E,
                                             const DirectionFamily& l) {
    if (E.n != l.count()) throw DimensionMismatch("family size differs from ground size");
    if (E.n > 20) throw TooLarge("polytope_combinatorics: subset scan needs n <= 20");
    if (!zero_in_hull(l, vs_full(E.n)))
        throw SiegelViolated("0 is not in the convex hull of the family");
    PolytopeCombinatorics out;
    out.n = E.n;
    out.face_sets = polytope_scan_parallel(E.n, l);
    return out;
}

DualReport verify_dual(const FundamentalSet& E, const DirectionFamily& l) {
    PolytopeCombinatorics pc = polytope_combinatorics(E, l);
    SimplicialComplex K = associated_complex(E);

    std::vector<VSet> faces;
    faces.push_back(0);
    for (int k = 1; k <= K.n; ++k)
        for (VSet f : K.faces_of_size(k)) faces.push_back(f);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    DualReport rep;
    rep.equal_sets = (pc.face_sets == faces);

    rep.downward_closed = true;
    std::vector<VSet> sets = pc.face_sets;
    for (VSet I : sets) {
        for (int v : vs_to_sorted(I)) {
            if (!std::binary_search(sets.begin(), sets.end(), vs_without(I, v))) {
                rep.downward_closed = false;
                break;
            }
        }
        if (!rep.downward_closed) break;
    }

    // Dual grading: an I in the collection represents a polytope face of
    // rank (n - M - |I|); ranks must stay nonnegative and strictly
    // reverse inclusion (card grading does exactly that).
    const int top = E.n - E.M;
    rep.grading_consistent = true;
    for (VSet I : sets)
        if (vs_size(I) > top) rep.grading_consistent = false;
    int maximal = 0;
    for (VSet I : sets)
        if (vs_size(I) == top) ++maximal;
    if (maximal != static_cast<int>(K.facets.size())) rep.grading_consistent = false;

    rep.verdict = rep.equal_sets && rep.downward_closed && rep.grading_consistent;
    return rep;
}

}  // namespace lvmb
