#include "ahlab/exact_arith.hpp"

#include <mutex>
#include <vector>

namespace ahlab {

BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        throw UsageError("binomial: k > n (" + std::to_string(k) + " > " +
                         std::to_string(n) + ")");
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

// Memoized Bernoulli table, initialize-once per index under a lock.
class BernoulliCache {
  public:
    BigRational get(std::uint64_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (table_.size() <= n) extend_locked();
        return table_[n];
    }

  private:
    void extend_locked() {
        const std::uint64_t m = table_.size();
        if (m == 0) {
            table_.emplace_back(1);
            return;
        }
        if (m >= 3 && m % 2 == 1) {
            table_.emplace_back(0);
            return;
        }
        // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
        BigRational sum(0);
        for (std::uint64_t j = 0; j < m; ++j) {
            if (table_[j] == 0) continue;
            sum += BigRational(binomial(m + 1, j)) * table_[j];
        }
        BigRational b = -sum / BigRational(static_cast<unsigned long>(m + 1));
        b.canonicalize();
        table_.push_back(b);
    }

    std::mutex mu_;
    std::vector<BigRational> table_;
};

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

} // namespace

BigRational bernoulli_exact(std::uint64_t n) { return bernoulli_cache().get(n); }

BigRational divided_bernoulli(std::uint64_t n) {
    if (n == 0) throw UsageError("divided_bernoulli: n must be positive");
    BigRational r = bernoulli_exact(n) / BigRational(static_cast<unsigned long>(n));
    r.canonicalize();
    return r;
}

BigInt wilson_quotient(std::uint32_t p) {
    if (!is_prime_u64(p))
        throw UsageError("wilson_quotient: p must be prime, got " +
                         std::to_string(p));
    return exact_div(factorial(p - 1) + 1, BigInt(p));
}

BigInt x_times_fermat_quotient(std::uint32_t p, const BigInt& x) {
    BigInt xp = x;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), p);
    return exact_div(xp - x, BigInt(p));
}

FpElem reduce_mod_p(const BigRational& r, std::uint32_t p) {
    const BigInt pz(p);
    if (divides(pz, denominator(r)))
        throw NotPIntegral("denominator divisible by p=" + std::to_string(p) +
                           ": " + r.get_str());
    BigInt num_mod = numerator(r) % pz;
    BigInt den_mod = denominator(r) % pz;
    FpElem num{num_mod.get_si(), p};
    FpElem den{den_mod.get_si(), p};
    return num * fp_inverse(den);
}

CheckResult verify_zagier_identity(std::uint64_t kmax) {
    if (kmax < 2) throw UsageError("verify_zagier_identity: kmax must be >= 2");
    const std::string name = "zagier-identity";
    json params{{"kmax", kmax}};
    for (std::uint64_t k = 2; k <= kmax; ++k) {
        BigRational sum(0);
        for (std::uint64_t n = 1; n < k; ++n) {
            BigRational b = bernoulli_exact(n);
            if (b == 0) continue;
            sum += BigRational(binomial(k - 1, n - 1)) * b /
                   BigRational(static_cast<unsigned long>(n));
        }
        sum.canonicalize();
        BigRational expected(-1, static_cast<unsigned long>(k));
        expected.canonicalize();
        if (sum != expected) {
            json witness{{"k", k},
                         {"lhs", sum.get_str()},
                         {"rhs", expected.get_str()}};
            return CheckResult::fail(name, 0, witness, params);
        }
    }
    return CheckResult::pass(name, 0, params);
}

CheckResult verify_wolstenholme(std::uint32_t p) {
    if (p <= 3 || !is_prime_u64(p))
        throw RangeError("verify_wolstenholme: requires prime p > 3");
    const std::string name = "wolstenholme";
    BigInt lhs = binomial(2 * std::uint64_t{p} - 1, p - 1);
    BigInt p3 = pow_int(BigInt(p), 3);
    BigInt residue = (lhs - 1) % p3;
    if (residue != 0) {
        json witness{{"binomial_mod_p3", BigInt(lhs % p3).get_str()}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_lehmer(std::uint32_t p) {
    if (!is_prime_u64(p) || p < 3)
        throw UsageError("verify_lehmer: requires an odd prime");
    const std::string name = "lehmer";
    BigRational lhs = (1 + BigRational(p) * bernoulli_exact(p - 1)) / BigRational(p);
    lhs.canonicalize();
    FpElem l = reduce_mod_p(lhs, p);
    BigInt w = wilson_quotient(p) + 1;
    FpElem r{BigInt(w % p).get_si(), p};
    if (l != r) {
        json witness{{"lhs", l.v}, {"rhs", r.v}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

} // namespace ahlab
