#include "lvmb/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace lvmb {

Json to_json(const Rational& q) { return rat_to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw MalformedInput("rational must be a string \"p/q\" or an integer");
}

namespace {

std::vector<int> int_list(const Json& j) {
    if (!j.is_array()) throw MalformedInput("expected an array of integers");
    std::vector<int> out;
    for (const Json& e : j) {
        if (!e.is_number_integer()) throw MalformedInput("expected an integer label");
        out.push_back(e.get<int>());
    }
    return out;
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw MalformedInput(std::string("missing field '") + name + "'");
    return j.at(name);
}

int int_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_integer()) throw MalformedInput(std::string(name) + " must be an integer");
    return f.get<int>();
}

}  // namespace

Json vset_to_json(VSet s) { return Json(vs_to_sorted(s)); }

Json to_json(const SimplicialComplex& K) {
    Json facets = Json::array();
    for (VSet f : K.facets) facets.push_back(vset_to_json(f));
    return Json{{"n", K.n}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j) {
    int n = int_field(j, "n");
    if (n < 0 || n > kMaxGround) throw MalformedInput("n out of range");
    std::vector<VSet> facets;
    for (const Json& f : field(j, "facets")) facets.push_back(vs_from(int_list(f), n));
    if (facets.empty()) throw MalformedInput("complex needs at least one facet");
    return SimplicialComplex::from_facets(n, std::move(facets));
}

Json to_json(const FundamentalSet& E) {
    Json members = Json::array();
    for (VSet P : E.members) members.push_back(vset_to_json(P));
    return Json{{"n", E.n}, {"M", E.M}, {"members", members}};
}

FundamentalSet fundset_from_json(const Json& j) {
    int n = int_field(j, "n"), M = int_field(j, "M");
    if (n < 1 || n > kMaxGround) throw MalformedInput("n out of range");
    std::vector<VSet> members;
    for (const Json& p : field(j, "members")) members.push_back(vs_from(int_list(p), n));
    return FundamentalSet::create(n, M, std::move(members));
}

Json to_json(const DirectionFamily& l) {
    Json vecs = Json::array();
    for (const RatVec& v : l.vectors) {
        Json row = Json::array();
        for (const Rational& e : v) row.push_back(to_json(e));
        vecs.push_back(row);
    }
    return Json{{"m", l.m}, {"vectors", vecs}};
}

DirectionFamily directions_from_json(const Json& j) {
    int m = int_field(j, "m");
    std::vector<RatVec> vecs;
    for (const Json& row : field(j, "vectors")) {
        if (!row.is_array()) throw MalformedInput("direction vector must be an array");
        RatVec v;
        for (const Json& e : row) v.push_back(rational_from_json(e));
        vecs.push_back(std::move(v));
    }
    return DirectionFamily::create(m, std::move(vecs));
}

Json to_json(const Fan& fan) {
    Json gens = Json::array();
    for (const IntVec& g : fan.generators) {
        Json row = Json::array();
        for (const Int& e : g) row.push_back(e.str());
        gens.push_back(row);
    }
    Json cones = Json::array();
    for (VSet c : fan.max_cones) cones.push_back(vset_to_json(c));
    return Json{{"rank", fan.rank}, {"generators", gens}, {"max_cones", cones}};
}

Fan fan_from_json(const Json& j) {
    int rank = int_field(j, "rank");
    std::vector<IntVec> gens;
    for (const Json& row : field(j, "generators")) {
        IntVec g;
        for (const Json& e : row) {
            if (e.is_number_integer())
                g.emplace_back(static_cast<long long>(e.get<std::int64_t>()));
            else if (e.is_string())
                g.emplace_back(e.get<std::string>());
            else
                throw MalformedInput("generator entries must be integers");
        }
        gens.push_back(std::move(g));
    }
    std::vector<VSet> cones;
    for (const Json& c : field(j, "max_cones"))
        cones.push_back(vs_from(int_list(c), static_cast<int>(gens.size())));
    return Fan::create(rank, std::move(gens), std::move(cones));
}

Json to_json(const Realization& R) {
    Json coords = Json::array();
    for (const IntVec& x : R.vertex_coords) {
        Json row = Json::array();
        for (const Int& e : x) row.push_back(e.str());
        coords.push_back(row);
    }
    Json facets = Json::array();
    for (VSet f : R.complex.facets) facets.push_back(vset_to_json(f));
    return Json{{"d", R.d}, {"coords", coords}, {"facets", facets}};
}

Realization realization_from_json(const Json& j) {
    int d = int_field(j, "d");
    std::vector<IntVec> coords;
    for (const Json& row : field(j, "coords")) {
        IntVec x;
        for (const Json& e : row) {
            if (e.is_number_integer())
                x.emplace_back(static_cast<long long>(e.get<std::int64_t>()));
            else if (e.is_string())
                x.emplace_back(e.get<std::string>());
            else
                throw MalformedInput("coordinates must be integers");
        }
        coords.push_back(std::move(x));
    }
    const int v = static_cast<int>(coords.size());
    std::vector<VSet> facets;
    for (const Json& f : field(j, "facets")) facets.push_back(vs_from(int_list(f), v));
    return Realization::create(d, std::move(coords),
                               SimplicialComplex::from_facets(v, std::move(facets)));
}

Json to_json(const SystemFile& s) {
    return Json{{"schema", kSchemaTag},
                {"fundamental_set", to_json(s.E)},
                {"directions", to_json(s.l)}};
}

SystemFile system_from_json(const Json& j) {
    SystemFile s{fundset_from_json(field(j, "fundamental_set")),
                 directions_from_json(field(j, "directions"))};
    if (s.E.n != s.l.count())
        throw MalformedInput("fundamental set and directions disagree on n");
    return s;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open " + path);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace lvmb
