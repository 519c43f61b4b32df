/**
 * JSON (de)serialization for every domain type, file loading, and the
 * deterministic run-report scaffolding for the command-line tool.
 * Rationals travel as strings "p/q" (just "p" when the denominator is
 * one); integers are accepted in place of rational strings on input.
 */

#ifndef LVMB_IO_HPP
#define LVMB_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "lvmb/fundsys.hpp"
#include "lvmb/geometry.hpp"
#include "lvmb/inverse.hpp"
#include "lvmb/macomplex.hpp"
#include "lvmb/toricfan.hpp"

namespace lvmb {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "lvmb/1";

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);

Json to_json(const FundamentalSet& E);
FundamentalSet fundset_from_json(const Json& j);

Json to_json(const DirectionFamily& l);
DirectionFamily directions_from_json(const Json& j);

Json to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json to_json(const Realization& R);
Realization realization_from_json(const Json& j);

struct SystemFile {
    FundamentalSet E;
    DirectionFamily l;
};

Json to_json(const SystemFile& s);
SystemFile system_from_json(const Json& j);

/// Parses a file; throws MalformedInput on unreadable or invalid JSON.
Json load_json_file(const std::string& path);

/// FNV-1a of the raw bytes, rendered as 16 hex digits.
std::string digest_file(const std::string& path);

Json vset_to_json(VSet s);

}  // namespace lvmb

#endif  // LVMB_IO_HPP
