#ifndef BRANCHDIV_RATIONAL_HPP
#define BRANCHDIV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace branchdiv {

// Exact arithmetic substrate: GMP rationals and integers. mpq_class keeps
// values canonical (reduced, positive denominator), so equality is structural.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_of(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor division helpers for Int
inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat r;
    if (e > 0) {
        mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    } else {
        if (b == 0) throw std::domain_error("rat_pow: zero to negative power");
        mpz_pow_ui(r.get_num_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(r.get_den_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(-e));
    }
    r.canonicalize();
    return r;
}

// Parse "p", "-p", "p/q". Throws on malformed input.
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace branchdiv

#endif
