#include "ahlab/artin_hasse.hpp"

namespace ahlab {

AHTable compute_table(std::uint32_t p, std::uint32_t N) {
    if (!is_prime_u64(p)) throw UsageError("compute_table: p must be prime");
    AHTable t;
    t.p = p;
    t.N = N;
    t.u.reserve(N + 1);
    t.a_raw.reserve(N + 1);
    t.u.emplace_back(1);
    t.a_raw.push_back(1 % p);
    for (std::uint32_t n = 1; n <= N; ++n) {
        BigRational sum(0);
        for (std::uint64_t q = 1; q <= n; q *= p) {
            sum += t.u[n - q];
            if (q > n / p) break; // avoid overflow of q *= p
        }
        BigRational un = sum / BigRational(static_cast<unsigned long>(n));
        un.canonicalize();
        // p-integrality is the premise everything downstream rests on.
        t.a_raw.push_back(reduce_mod_p(un, p).v);
        t.u.push_back(std::move(un));
    }
    return t;
}

namespace {

// Sums 1 / prod(k_i! p^{i k_i}) over choices of digits k_i (i >= 1)
// with remaining weight left at digit position i; k_0 absorbs the rest.
BigRational digit_sum(std::uint32_t p, std::uint32_t remaining,
                      std::uint32_t i, const BigRational& partial) {
    BigInt weight = pow_int(BigInt(p), i);
    if (weight > remaining) {
        // k_0 = remaining
        return partial / BigRational(factorial(remaining));
    }
    BigRational total(0);
    BigInt contribution(1); // k_i! * p^{i k_i} accumulated for this digit
    std::uint32_t k = 0;
    while (true) {
        total += digit_sum(p, remaining - static_cast<std::uint32_t>(k * weight.get_ui()),
                           i + 1, partial / BigRational(contribution));
        ++k;
        if (BigInt(k) * weight > remaining) break;
        contribution *= BigInt(k) * pow_int(BigInt(p), i); // *= k * p^i
    }
    return total;
}

} // namespace

BigRational u_digit_oracle(std::uint32_t p, std::uint32_t n) {
    BigRational r = digit_sum(p, n, 1, BigRational(1));
    r.canonicalize();
    return r;
}

FpPoly g_series(const AHTable& table, std::uint32_t M) {
    if (M == 0) return FpPoly(table.p);
    if (std::uint64_t{M - 1} * table.p > table.N)
        throw TableTooShallow("g_series: need N >= (M-1)*p = " +
                              std::to_string(std::uint64_t{M - 1} * table.p));
    std::vector<std::uint32_t> c(M, 0);
    for (std::uint32_t r = 0; r < M; ++r) {
        FpElem arp = table.a(std::size_t{r} * table.p);
        c[r] = (r % 2 == 0) ? arp.v : (-arp).v;
    }
    return FpPoly(table.p, std::move(c));
}

SkTable compute_sk(const AHTable& table, std::uint32_t kmax) {
    if (std::uint64_t{kmax} * table.p > table.N)
        throw TableTooShallow("compute_sk: need N >= kmax*p");
    SkTable sk;
    sk.p = table.p;
    sk.s_raw.reserve(kmax + 1);
    for (std::uint32_t k = 0; k <= kmax; ++k) {
        FpElem sum{0, table.p};
        for (std::uint32_t r = 0; r <= k; ++r) {
            FpElem term = table.a(std::size_t{r} * table.p) *
                          table.a(std::size_t{k - r} * table.p);
            sum = (r % 2 == 0) ? sum + term : sum - term;
        }
        sk.s_raw.push_back(sum.v);
    }
    return sk;
}

CheckResult verify_sk_relation(const SkTable& sk) {
    const std::string name = "sk-relation";
    const std::uint32_t p = sk.p;
    json params{{"kmax", sk.kmax()}};
    for (std::size_t k = 0; k <= sk.kmax(); ++k) {
        FpElem sum{0, p};
        for (std::uint64_t q = 1; q <= k + 1; q *= p) {
            sum = sum + sk.s(static_cast<std::ptrdiff_t>(k + 1 - q));
            if (q > (k + 1) / p) break;
        }
        FpElem expected{k == 0 ? 1 : 0, p};
        if (sum != expected) {
            json witness{{"k", k}, {"lhs", sum.v}, {"rhs", expected.v}};
            return CheckResult::fail(name, p, witness, params);
        }
    }
    return CheckResult::pass(name, p, params);
}

ClosedFormResult closed_form_akp(std::uint32_t p, std::uint32_t k,
                                 const AHTable& table) {
    if (k < 2 || k > 7) throw UsageError("closed_form_akp: k must be in 2..7");
    std::uint32_t min_p = (k <= 3) ? 3 : (k == 4) ? 5 : 7;
    if (p <= min_p)
        throw RangeError("closed_form_akp: a_{" + std::to_string(k) +
                         "p} requires p > " + std::to_string(min_p));
    if (std::uint64_t{k} * p > table.N)
        throw TableTooShallow("closed_form_akp: table too shallow");

    auto B = [&](std::uint32_t n) { return reduce_mod_p(bernoulli_exact(n), p); };
    auto inv = [&](std::int64_t x) { return fp_inverse(FpElem{x, p}); };
    FpElem ap = table.a(p);

    ClosedFormResult r;
    r.k = k;
    r.actual = table.a(std::size_t{k} * p);
    r.conditional = (k == 7);

    FpElem apk = fp_pow(ap, k);
    switch (k) {
    case 2:
        r.predicted = apk * inv(2);
        break;
    case 3:
        r.predicted = apk * inv(6) - B(p - 3) * inv(9);
        break;
    case 4:
        r.predicted = apk * inv(24) - B(p - 3) * inv(9) * ap;
        break;
    case 5:
        r.predicted = apk * inv(120) - B(p - 3) * inv(9) * table.a(2 * std::size_t{p}) -
                      B(p - 5) * inv(25);
        break;
    case 6:
        r.predicted = apk * inv(720) - B(p - 3) * inv(9) * table.a(3 * std::size_t{p}) -
                      B(p - 5) * inv(25) * ap -
                      B(p - 3) * B(p - 3) * inv(2 * 81);
        break;
    case 7:
        r.predicted = apk * inv(5040) - B(p - 3) * inv(9) * table.a(4 * std::size_t{p}) -
                      B(p - 5) * inv(25) * table.a(2 * std::size_t{p}) -
                      B(p - 3) * B(p - 3) * inv(2 * 81) * ap -
                      B(p - 7) * inv(49);
        break;
    }
    return r;
}

} // namespace ahlab
