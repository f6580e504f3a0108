#pragma once

// Exact arithmetic types used throughout the library. Every computation is
// carried out over arbitrary-precision integers and rationals; floating
// point is never used.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbsq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Exact conversion; throws if r is not an integer.
inline Int to_int(const Rat& r) {
    if (!is_integer(r)) {
        throw std::invalid_argument("to_int: value " + r.str() + " is not an integer");
    }
    return numerator(r);
}

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// Decimal rendering; rationals in lowest terms as "p/q" with positive
// denominator, integers without the "/q" part.
inline std::string int_to_string(const Int& a) { return a.str(); }

inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_int: empty string");
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_int: not a decimal integer: \"" + s + "\"");
    }
}

// Accepts "p", "-p" and "p/q". A negative denominator is folded into the
// numerator (cpp_rational insists on a positive one).
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator in \"" + s + "\"");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

}  // namespace hilbsq
