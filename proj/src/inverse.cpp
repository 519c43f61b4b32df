#include "lvmb/inverse.hpp"

#include <algorithm>
#include <set>

#include "lvmb/errors.hpp"

namespace lvmb {

Realization Realization::create(int d, std::vector<IntVec> coords, SimplicialComplex K) {
    if (d < 0) throw MalformedInput("negative sphere dimension");
    const int v = static_cast<int>(coords.size());
    if (K.n != v) throw MalformedInput("vertex count differs from coordinate count");
    for (const IntVec& x : coords) {
        if (static_cast<int>(x.size()) != d + 1)
            throw DimensionMismatch("vertex coordinate of wrong length");
        if (content(x) == 0) throw ZeroVertex("vertex at the origin");
    }
    PurityReport pr = is_pure(K);
    if (!pr.pure || pr.dimension != d)
        throw MalformedInput("complex is not pure of the stated dimension");
    if (K.vertices() != vs_full(v))
        throw MalformedInput("complex does not use every vertex");
    Realization R;
    R.d = d;
    R.vertex_coords = std::move(coords);
    R.complex = std::move(K);
    return R;
}

std::vector<IntVec> primitive_generators(const Realization& R) {
    std::vector<IntVec> out;
    out.reserve(R.vertex_coords.size());
    for (const IntVec& x : R.vertex_coords) {
        Int g = content(x);
        if (g == 0) throw ZeroVertex("vertex at the origin");
        IntVec p = x;
        for (Int& e : p) e /= g;
        out.push_back(std::move(p));
    }
    return out;
}

StarshapeReport validate_starshaped(const Realization& R) {
    std::vector<IntVec> p = primitive_generators(R);
    {
        std::set<IntVec> seen;
        for (const IntVec& g : p)
            if (!seen.insert(g).second)
                return {false, "two vertices lie on one ray from the origin"};
    }
    Fan fan;
    try {
        fan = Fan::create(R.d + 1, p, R.complex.facets);
    } catch (const std::exception& e) {
        return {false, e.what()};
    }
    for (VSet c : fan.max_cones) {
        std::vector<int> idx = vs_to_sorted(c);
        IntMatrix M(static_cast<int>(idx.size()), fan.rank);
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (int j = 0; j < fan.rank; ++j)
                M.at(static_cast<int>(r), j) = fan.generators[idx[r] - 1][j];
        if (rank(M) != static_cast<int>(idx.size()))
            return {false, "dependent facet vectors"};
    }
    CompletenessReport comp = completeness_report(fan);
    if (!comp.complete) return {false, "vertex-ray fan is not complete: " + comp.reason};
    return {true, ""};
}

namespace {

// Shared tail of both constructions: verify the claims the theorems make
// about the result before handing it out.
void verify_constructed(const ConstructedSystem& cs, const Realization& R, int expected_k) {
    SimplicialComplex assoc = associated_complex(cs.E);
    SimplicialComplex expected = SimplicialComplex::from_facets(cs.E.n, [&] {
        std::vector<VSet> shifted;
        for (VSet f : R.complex.facets) shifted.push_back(f << cs.label_shift);
        return shifted;
    }());
    if (!assoc.same_facets(expected))
        throw VerificationFailed("constructed system has the wrong associated complex");
    if (cs.type.k != expected_k)
        throw VerificationFailed("constructed system has the wrong indispensable count");
    if (!check_good_system(cs.E, cs.l).verdict)
        throw VerificationFailed("constructed system fails the good-system check");
}

}  // namespace

ConstructedSystem construct_even(const Realization& R) {
    const int v = R.vertex_count(), d = R.d;
    if (v % 2 != 0) throw OddVertexCount("even construction needs an even vertex count");
    StarshapeReport star = validate_starshaped(R);
    if (!star.starshaped) throw StarshapeViolated(star.reason);

    std::vector<IntVec> p = primitive_generators(R);

    // ground {0,...,v+d+1} shifted by +1 to {1,...,v+d+2}
    const int n = v + d + 2;
    std::vector<VSet> members;
    const VSet outer = vs_full(v + d + 1);  // external labels 1..v+d+1
    for (VSet f : R.complex.facets) {
        VSet ext = outer & ~f;           // complement among {1..v+d+1}
        members.push_back(vs_with(ext << 1, 1));  // {0} u P, shifted
    }

    std::vector<RatVec> vecs;
    vecs.emplace_back(v, Rational(0));  // l_0 = 0
    for (int j = 0; j < v; ++j) {
        RatVec e(v, Rational(0));
        e[j] = 1;
        vecs.push_back(std::move(e));
    }
    for (int i = 0; i <= d; ++i) {  // -p^i = negated i-th row of [p_1 .. p_v]
        RatVec row(v);
        for (int j = 0; j < v; ++j) row[j] = Rational(-p[j][i]);
        vecs.push_back(std::move(row));
    }

    ConstructedSystem cs;
    cs.E = FundamentalSet::create(n, v + 1, std::move(members));
    cs.l = DirectionFamily::create(v / 2, std::move(vecs));
    cs.parity = Parity::Even;
    cs.type = cs.E.type();
    cs.label_shift = 1;
    verify_constructed(cs, R, d + 2);
    return cs;
}

ConstructedSystem construct_odd(const Realization& R) {
    const int v = R.vertex_count(), d = R.d;
    if (v % 2 != 1) throw EvenVertexCount("odd construction needs an odd vertex count");
    StarshapeReport star = validate_starshaped(R);
    if (!star.starshaped) throw StarshapeViolated(star.reason);

    std::vector<IntVec> p = primitive_generators(R);

    // ground {-1,0,...,v+d+1} shifted by +2 to {1,...,v+d+3}
    const int n = v + d + 3;
    std::vector<VSet> members;
    const VSet outer = vs_full(v + d + 1);
    for (VSet f : R.complex.facets) {
        VSet ext = outer & ~f;
        members.push_back(vs_with(vs_with(ext << 2, 1), 2));  // {-1,0} u P, shifted
    }

    const int w = v + 1;  // directions live in R^{v+1}
    std::vector<RatVec> vecs;
    vecs.emplace_back(w, Rational(0));  // l_{-1} = 0
    for (int j = 0; j < w; ++j) {       // e_0, e_1, ..., e_v
        RatVec e(w, Rational(0));
        e[j] = 1;
        vecs.push_back(std::move(e));
    }
    for (int i = 0; i <= d; ++i) {  // (0, -p^i)
        RatVec row(w, Rational(0));
        for (int j = 0; j < v; ++j) row[j + 1] = Rational(-p[j][i]);
        vecs.push_back(std::move(row));
    }

    ConstructedSystem cs;
    cs.E = FundamentalSet::create(n, v + 2, std::move(members));
    cs.l = DirectionFamily::create(w / 2, std::move(vecs));
    cs.parity = Parity::Odd;
    cs.type = cs.E.type();
    cs.label_shift = 2;
    verify_constructed(cs, R, d + 3);
    return cs;
}

ConstructedSystem construct_system(const Realization& R) {
    return (R.vertex_count() % 2 == 0) ? construct_even(R) : construct_odd(R);
}

ConstructedSystem stabilize(const FundamentalSet& E, const DirectionFamily& l) {
    GoodSystemReport before = check_good_system(E, l);
    if (!before.verdict) throw NotGoodSystem("stabilize: input system is not good");
    if (E.n + 2 > kMaxGround) throw TooLarge("stabilize: ground set limit");

    const int m = l.m, n = E.n;
    std::vector<VSet> members;
    for (VSet P : E.members) members.push_back(vs_with(vs_with(P, n + 1), n + 2));

    // one fresh complex coordinate: old vectors pick up (-1, -1), the two
    // new columns are read off the stabilization block rows
    std::vector<RatVec> vecs;
    for (int j = 0; j < n; ++j) {
        const RatVec& old = l.vectors[j];
        RatVec w(2 * m + 2);
        for (int t = 0; t < m; ++t) w[t] = old[t];
        w[m] = -1;
        for (int t = 0; t < m; ++t) w[m + 1 + t] = old[m + t];
        w[2 * m + 1] = -1;
        vecs.push_back(std::move(w));
    }
    RatVec c1(2 * m + 2, Rational(0)), c2(2 * m + 2, Rational(0));
    c1[m] = 1;
    c1[2 * m + 1] = -1;
    c2[2 * m + 1] = 1;
    vecs.push_back(std::move(c1));
    vecs.push_back(std::move(c2));

    ConstructedSystem cs;
    cs.E = FundamentalSet::create(n + 2, E.M + 2, std::move(members));
    cs.l = DirectionFamily::create(m + 1, std::move(vecs));
    cs.parity = (E.n % 2 == 0) ? Parity::Even : Parity::Odd;
    cs.type = cs.E.type();
    cs.label_shift = 0;

    if (!associated_complex(cs.E).same_facets(associated_complex(E)))
        throw VerificationFailed("stabilize: associated complex changed");
    if (!check_good_system(cs.E, cs.l).verdict)
        throw VerificationFailed("stabilize: extended system fails the good-system check");
    return cs;
}

SimplicialComplex external_complex(const ConstructedSystem& cs, int ground) {
    std::vector<VSet> facets;
    for (VSet f : associated_complex(cs.E).facets) facets.push_back(f >> cs.label_shift);
    return SimplicialComplex::from_facets(ground, facets);
}

}  // namespace lvmb
