#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ngonzeta {

// Exact rational scalar used throughout the symbolic layer.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Decimal string forms used by the JSON schema (always canonical, den > 0).
inline std::string num_string(const Rat& r) { return r.get_num().get_str(); }
inline std::string den_string(const Rat& r) { return r.get_den().get_str(); }

// n! as an exact integer, usable as a Rat.
inline Rat factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(f);
}

inline Rat binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

// 2^n as a Rat (n may be negative).
inline Rat pow2(long n) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n < 0 ? -n : n));
    return n >= 0 ? Rat(p) : Rat(1) / Rat(p);
}

}  // namespace ngonzeta
