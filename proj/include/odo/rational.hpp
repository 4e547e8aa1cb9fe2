#ifndef ODO_RATIONAL_HPP
#define ODO_RATIONAL_HPP

// Exact rational scalars on top of GMP. mpq_class already keeps the canonical
// form we need (reduced fraction, positive denominator).

#include <gmpxx.h>

#include <string>

#include "odo/error.hpp"

namespace odo {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }

inline Rational rat_pow(const Rational& a, unsigned e) {
    Rational r(1);
    Rational base = a;
    unsigned k = e;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

// gcd on Q: gcd of numerators over lcm of denominators. Nonnegative; gcd(0,0)=0.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    Integer gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational r(gn, ld);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rational& a) { return a.get_den() == 1; }

inline std::string rat_str(const Rational& a) { return a.get_str(); }

// Parses "n" or "n/d"; throws PARSE_ERROR on malformed input.
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) fail(Err::ParseError, "empty rational literal");
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(Err::ParseError, "bad rational literal '" + s + "'");
    }
}

} // namespace odo

#endif
