#pragma once

#include "ahlab/bigint.hpp"
#include "ahlab/check.hpp"
#include "ahlab/errors.hpp"
#include "ahlab/fp.hpp"

#include <cstdint>

namespace ahlab {

BigInt factorial(std::uint64_t n);

// C(n, k) exactly; throws UsageError for k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Bernoulli numbers under the B_1 = -1/2 convention, via the recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0 with a thread-safe memo table.
BigRational bernoulli_exact(std::uint64_t n);

// Divided Bernoulli number B_n / n.
BigRational divided_bernoulli(std::uint64_t n);

// Wilson quotient w_p = ((p-1)! + 1) / p.
BigInt wilson_quotient(std::uint32_t p);

// (x^p - x) / p = x * q_p(x), an integer for every integer x.
BigInt x_times_fermat_quotient(std::uint32_t p, const BigInt& x);

// num(r) * den(r)^-1 in F_p; throws NotPIntegral when p | den(r).
FpElem reduce_mod_p(const BigRational& r, std::uint32_t p);

// sum_{n=1}^{k-1} C(k-1, n-1) B_n/n = -1/k for all 2 <= k <= kmax,
// in exact rationals.
CheckResult verify_zagier_identity(std::uint64_t kmax);

// C(2p-1, p-1) = 1 mod p^3 for p > 3.
CheckResult verify_wolstenholme(std::uint32_t p);

// (1 + p B_{p-1}) / p = w_p + 1 mod p.
CheckResult verify_lehmer(std::uint32_t p);

} // namespace ahlab
