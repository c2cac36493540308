#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bgg {

// All arithmetic in this project is exact: arbitrary-precision rationals
// (canonical form maintained by GMP) and integers. No floating point.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// Parses "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

inline Int factorial(long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("to_long: value too large");
    return z.get_si();
}

} // namespace bgg
