#pragma once

#include "ahlab/check.hpp"
#include "ahlab/exact_arith.hpp"
#include "ahlab/fp_poly.hpp"

#include <cstdint>
#include <vector>

namespace ahlab {

// Per-prime table of exact Artin-Hasse coefficients u_n and their
// residues a_n = u_n mod p. Immutable once built.
struct AHTable {
    std::uint32_t p = 0;
    std::uint32_t N = 0;
    std::vector<BigRational> u; // n = 0..N
    std::vector<std::uint32_t> a_raw;

    FpElem a(std::size_t n) const {
        if (n >= a_raw.size())
            throw TableTooShallow("a_n requested beyond table depth N=" +
                                  std::to_string(N));
        return FpElem{std::int64_t{a_raw[n]}, p};
    }
};

// Alternating convolution sums s_k = sum_r (-1)^r a_{rp} a_{(k-r)p}.
struct SkTable {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> s_raw; // k = 0..kmax

    FpElem s(std::ptrdiff_t k) const {
        if (k < 0) return FpElem{0, p}; // read as zero below the range
        if (static_cast<std::size_t>(k) >= s_raw.size())
            throw TableTooShallow("s_k requested beyond computed range");
        return FpElem{std::int64_t{s_raw[static_cast<std::size_t>(k)]}, p};
    }
    std::size_t kmax() const { return s_raw.empty() ? 0 : s_raw.size() - 1; }
};

// u_n = (1/n) sum_i u_{n - p^i} with u_0 = 1 and u_m = 0 for m < 0, in
// exact rationals; a_n reduced mod p. Throws NotPIntegral if any u_n
// has denominator divisible by p (that would falsify the premise the
// rest of the computation rests on).
AHTable compute_table(std::uint32_t p, std::uint32_t N);

// Independent oracle: u_n as a sum over all decompositions
// n = k_0 + k_1 p + ... + k_r p^r of 1 / prod(k_i! p^{i k_i}).
BigRational u_digit_oracle(std::uint32_t p, std::uint32_t n);

// G(X) = sum_{r=0}^{M-1} (-1)^r a_{rp} X^r.
FpPoly g_series(const AHTable& table, std::uint32_t M);

SkTable compute_sk(const AHTable& table, std::uint32_t kmax);

// sum_i s_{k+1-p^i} = 1 if k = 0, 0 otherwise, for all computed k.
CheckResult verify_sk_relation(const SkTable& sk);

struct ClosedFormResult {
    std::uint32_t k = 0;
    FpElem predicted;
    FpElem actual;
    bool conditional = false; // k = 7 rests on the unproved odd-k recursion

    bool matches() const { return predicted == actual; }
};

// Closed-form expressions for a_{kp} (k = 2..7) in terms of smaller
// a_{rp} and Bernoulli residues, compared against the table value.
ClosedFormResult closed_form_akp(std::uint32_t p, std::uint32_t k,
                                 const AHTable& table);

} // namespace ahlab
