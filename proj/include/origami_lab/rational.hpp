#ifndef ORIGAMI_LAB_RATIONAL_HPP
#define ORIGAMI_LAB_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace origami_lab {

// All coordinates in the library are exact rationals.  No floating point
// enters any computation or file format.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

class OrigamiError : public std::runtime_error {
public:
    explicit OrigamiError(const std::string& what) : std::runtime_error(what) {}
};

class ChordBudgetExceeded : public OrigamiError {
public:
    explicit ChordBudgetExceeded(const std::string& what) : OrigamiError(what) {}
};

// Serialized form is always "p/q" with q > 0 and gcd(p,q) = 1.
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw OrigamiError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw OrigamiError("malformed rational '" + s + "': " + e.what());
    }
}

// Decimal rendering with a fixed number of digits, used only by the SVG
// renderer.  Computed in integer arithmetic so output is platform-stable.
inline std::string rational_to_decimal(const Rational& r, int digits = 5) {
    Integer scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Integer num = numerator(r) * scale;
    Integer den = denominator(r);
    Integer q = num / den;   // truncation toward zero
    if (num < 0 && q * den != num) q -= 1;  // floor
    bool neg = q < 0;
    Integer aq = neg ? Integer(-q) : q;
    std::string ds = aq.str();
    if ((int)ds.size() <= digits)
        ds = std::string(digits + 1 - ds.size(), '0') + ds;
    std::string whole = ds.substr(0, ds.size() - digits);
    std::string frac = ds.substr(ds.size() - digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (neg ? "-" : "") + whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

}  // namespace origami_lab

#endif
