#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace qyb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// r^k for integer k (k may be negative; r must be nonzero then).
inline Rat rat_pow(const Rat& r, long k) {
    if (k == 0) return Rat(1);
    if (r == 0) {
        if (k > 0) return Rat(0);
        throw std::domain_error("rat_pow: zero base with negative exponent");
    }
    Rat base = k > 0 ? r : Rat(Rat(1) / r);
    unsigned long e = k > 0 ? static_cast<unsigned long>(k) : static_cast<unsigned long>(-k);
    Rat acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// Parses "p" or "p/q"; throws on malformed input.
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("rat_parse: zero denominator");
    return Rat(num, den);
}

inline double rat_double(const Rat& r) { return r.convert_to<double>(); }

using Complex = std::complex<double>;

}  // namespace qyb
