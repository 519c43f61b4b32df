/**
 * Exact arithmetic scalars. Rational is an arbitrary-precision rational
 * kept in lowest terms with positive denominator (GMP canonical form);
 * Int is an arbitrary-precision integer. All decision paths in the
 * library run on these types; no floating point is used anywhere.
 */

#ifndef LVMB_RATIONAL_HPP
#define LVMB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "lvmb/errors.hpp"

namespace lvmb {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Int>;

inline Int rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return rat_den(q) == 1; }

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Int& z) { return z.sign(); }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string rat_to_string(const Rational& q) {
    if (is_integral(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

/// Parses "p", "-p", or "p/q". Throws MalformedInput on anything else.
inline Rational rat_from_string(const std::string& s) {
    auto bad = [&]() -> Rational { throw MalformedInput("not a rational: '" + s + "'"); };
    if (s.empty()) return bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) return bad();
        return Rational(num) / Rational(den);
    } catch (const std::exception&) {
        return bad();
    }
}

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// gcd of the absolute values of a vector's entries; 0 for the zero vector.
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& e : v) g = gcd_int(g, e);
    return g;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace lvmb

#endif  // LVMB_RATIONAL_HPP
