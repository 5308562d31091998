#include "ahlab/exact_arith.hpp"

#include <doctest.h>

#include <thread>

using namespace ahlab;

TEST_CASE("factorial small cases") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(4) == 24);
    CHECK(factorial(6) == 720);
}

TEST_CASE("binomial values and bounds") {
    CHECK(binomial(9, 4) == 126);
    CHECK(binomial(17, 0) == 1);
    CHECK_THROWS_AS(binomial(3, 4), UsageError);
    // C(2p-1, p-1) = 1 mod p^3 instance at p=5: 126 = 1 + 125
    CHECK(binomial(9, 4) % 125 == 1);
}

TEST_CASE("bernoulli numbers under the B_1 = -1/2 convention") {
    CHECK(bernoulli_exact(0) == BigRational(1));
    CHECK(bernoulli_exact(1) == BigRational(-1, 2));
    CHECK(bernoulli_exact(2) == BigRational(1, 6));
    CHECK(bernoulli_exact(3) == 0);
    CHECK(bernoulli_exact(4) == BigRational(-1, 30));
    CHECK(bernoulli_exact(12) == BigRational(-691, 2730));
}

TEST_CASE("odd Bernoulli numbers vanish from index 3 on") {
    for (std::uint64_t m = 1; m <= 50; ++m)
        CHECK(bernoulli_exact(2 * m + 1) == 0);
}

TEST_CASE("von Staudt-Clausen: denominators squarefree, prime q | den implies (q-1) | n") {
    for (std::uint64_t n = 2; n <= 200; n += 2) {
        BigInt den = denominator(bernoulli_exact(n));
        // Every prime factor q of den satisfies (q-1) | n, so q <= n+1;
        // factoring by trial division over that range is enough.
        BigInt rest = den;
        for (std::uint64_t q = 2; q <= n + 1; ++q) {
            if (!is_prime_u64(q) || !divides(BigInt(q), rest)) continue;
            CHECK(n % (q - 1) == 0);
            rest = exact_div(rest, BigInt(q));
            CHECK_FALSE(divides(BigInt(q), rest)); // squarefree
        }
        CHECK(rest == 1); // no prime factor beyond n+1
    }
}

TEST_CASE("bernoulli cache is safe under concurrent first use") {
    std::vector<std::thread> threads;
    std::vector<BigRational> results(8);
    for (int i = 0; i < 8; ++i)
        threads.emplace_back([&, i] { results[i] = bernoulli_exact(120 + i); });
    for (auto& t : threads) t.join();
    for (int i = 0; i < 8; ++i)
        CHECK(results[i] == bernoulli_exact(120 + i));
}

TEST_CASE("wilson quotient") {
    CHECK(wilson_quotient(3) == 1);
    CHECK(wilson_quotient(5) == 5);
    CHECK(wilson_quotient(7) == 103);
    CHECK_THROWS_AS(wilson_quotient(6), UsageError);
}

TEST_CASE("x * q_p(x) is an exact integer") {
    CHECK(x_times_fermat_quotient(5, 2) == 6);
    CHECK(x_times_fermat_quotient(5, 7) == 3360);
    CHECK(x_times_fermat_quotient(7, 1) == 0);
    CHECK(x_times_fermat_quotient(5, 5) == 624); // multiples of p included
    CHECK(x_times_fermat_quotient(5, -2) == -6);
}

TEST_CASE("x q_p(x) shift: (x+p) q_p(x+p) = x q_p(x) - 1 mod p") {
    for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
        for (std::int64_t x = -20; x <= 20; ++x) {
            BigInt lhs = x_times_fermat_quotient(p, BigInt(static_cast<long>(x + p)));
            BigInt rhs = x_times_fermat_quotient(p, BigInt(static_cast<long>(x))) - 1;
            CHECK(divides(BigInt(p), lhs - rhs));
        }
    }
}

TEST_CASE("reduce_mod_p") {
    CHECK(reduce_mod_p(BigRational(5, 24), 5).v == 0);
    CHECK(reduce_mod_p(BigRational(-1, 2), 5).v == 2);
    CHECK_THROWS_AS(reduce_mod_p(BigRational(1, 6), 3), NotPIntegral);
}

TEST_CASE("small-index Bernoulli numbers are p-integral") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 31u})
        for (std::uint32_t n = 1; n + 1 < p; ++n)
            CHECK_NOTHROW(reduce_mod_p(bernoulli_exact(n), p));
}

TEST_CASE("zagier identity holds exactly up to k = 200") {
    CheckResult r = verify_zagier_identity(200);
    CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("zagier identity hand cases") {
    // k=2: B_1 = -1/2; k=3: -1/2 + 2*(1/6)/2 = -1/3
    BigRational k3 = bernoulli_exact(1) + BigRational(binomial(2, 1)) *
                                              bernoulli_exact(2) / 2;
    k3.canonicalize();
    CHECK(k3 == BigRational(-1, 3));
}

TEST_CASE("wolstenholme") {
    for (std::uint32_t p : {5u, 7u, 13u})
        CHECK(verify_wolstenholme(p).status == CheckStatus::pass);
    CHECK_THROWS_AS(verify_wolstenholme(3), RangeError);
}

TEST_CASE("lehmer congruence") {
    for (std::uint32_t p : {3u, 5u, 7u})
        CHECK(verify_lehmer(p).status == CheckStatus::pass);
}
