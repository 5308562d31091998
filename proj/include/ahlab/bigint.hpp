#pragma once

// Exact integer and rational scalars. Backed by GMP: mpz_class is a
// canonical sign-magnitude bignum and mpq_class keeps den > 0 and
// gcd(|num|, den) = 1 after canonicalization, which is exactly the
// representation contract these types need.

#include <gmpxx.h>

#include <string>

namespace ahlab {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigInt numerator(const BigRational& r) { return r.get_num(); }
inline BigInt denominator(const BigRational& r) { return r.get_den(); }

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline bool divides(const BigInt& d, const BigInt& x) {
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Quotient x/d, asserting exactness.
inline BigInt exact_div(const BigInt& x, const BigInt& d) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Floor division toward negative infinity (sign-correct for negative x).
inline BigInt floor_div(const BigInt& x, const BigInt& d) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return q;
}

} // namespace ahlab
