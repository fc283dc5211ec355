#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace tvb {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int rat_num(const Rat& q) { return Int(numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(denominator(q)); }

// Largest integer <= q.
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && n % d != 0) --t;
    return t;
}

// Smallest integer >= q.
inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Int gcd_int(const Int& a, const Int& b) { return gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return lcm(a, b); }

// "p/q" when the denominator is nontrivial, plain integer otherwise.
inline std::string rat_to_string(const Rat& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

}  // namespace tvb
