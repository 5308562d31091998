#pragma once

#include "ahlab/artin_hasse.hpp"
#include "ahlab/check.hpp"
#include "ahlab/exact_arith.hpp"
#include "ahlab/fp_poly.hpp"

#include <cstdint>

namespace ahlab {

// gamma(X)      = sum_{n=1}^{p-2} (B_n/n)   X^{p-n}
// gamma_star(X) = sum_{n=1}^{p-2} (B_n/n)   X^n      = X^p gamma(1/X)
// rho(X)        = sum_{n=1}^{p-2} (B_n/n^2) X^{p-n}
struct GammaPolys {
    std::uint32_t p = 0;
    FpPoly gamma;
    FpPoly gamma_star;
    FpPoly rho;
};

GammaPolys build_gamma_polys(std::uint32_t p);

// Right-hand side of the shift functional equation:
// R(X) = pound_1(X) + X^{p-1} - w_p - 1, so gamma(X-1) - gamma(X) = R(X).
FpPoly feq_rhs(std::uint32_t p);

// gamma(X-1) - gamma(X) = pound_1(X) + X^{p-1} - w_p - 1, as an exact
// polynomial identity in F_p[X].
CheckResult verify_feq_gamma(std::uint32_t p);

// gamma(X) + gamma(1-X) = -pound_1(X) - X^{p-1} - (1-X)^{p-1} + w_p + 1.
CheckResult verify_feq_gamma_sym(std::uint32_t p);

// gamma(X) + gamma(-X) = -X^{p-1}, and gamma(X) + X^{p-1}/2 is odd.
CheckResult verify_gamma_parity(std::uint32_t p);

// Independent oracle: propagate gamma(x-1) = gamma(x) + R(x) from
// gamma(0) = 0 across all residues, then Lagrange-interpolate the unique
// polynomial of degree <= p-1 through the collected values.
FpPoly reconstruct_gamma_from_feq(std::uint32_t p);

CheckResult verify_gamma_reconstruction(std::uint32_t p);

// pound_1(X) = (1 - X^p - (1-X)^p) / p, computed with exact integer
// binomials (every interior coefficient is divisible by p).
CheckResult verify_granville_pol(std::uint32_t p);

// sum_k (B_k/k) x^{p-k} = x q_p(x) + w_p x + floor(x/p) mod p for every
// integer x in [xmin, xmax].
CheckResult verify_nielsen(std::uint32_t p, std::int64_t xmin, std::int64_t xmax);

// Power-sum identity sum_{k=0}^{x} k^{p-1} = x mod p for 0 <= x < p, and
// its expansion through Fermat/Wilson quotients and gamma.
CheckResult verify_faulhaber_check(std::uint32_t p);

// pound_1 evaluations at 1, 1/2, sixth and fourth roots of unity, plus
// gamma(i) + gamma(-i).
CheckResult verify_polylog_special_values(std::uint32_t p);

// sum B_n/n = w_p and sum 2^n B_n/n = -q_p(2) + w_p - 1 mod p,
// computed in exact rationals first.
CheckResult verify_numeric_sums(std::uint32_t p);

CheckResult verify_corollary_sixth(std::uint32_t p);
CheckResult verify_corollary_eighth(std::uint32_t p);

// pound_0(g(X)) = X^{p-1} - 1 mod X^p when g'(0) != 0, and = -1
// mod X^{2p-2} otherwise, for seeded random g in 1 + X F_p[[X]];
// cross-checked against (g-1)^{p-1} = pound_0(g) + 1.
CheckResult verify_lemma_pound0(std::uint32_t p, std::uint32_t trials,
                                std::uint64_t seed);

// q_p(2) as a residue.
FpElem fermat_quotient_two(std::uint32_t p);

} // namespace ahlab
