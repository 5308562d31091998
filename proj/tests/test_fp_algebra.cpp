#include "ahlab/fp_poly.hpp"

#include "ahlab/artin_hasse.hpp"

#include <doctest.h>

#include <random>

using namespace ahlab;

namespace {

FpPoly random_poly(std::uint32_t p, std::size_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
    std::uniform_int_distribution<std::size_t> deg(0, max_deg);
    std::vector<std::uint32_t> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return FpPoly(p, std::move(c));
}

} // namespace

TEST_CASE("fp_inverse") {
    CHECK(fp_inverse(FpElem{2, 5}).v == 3);
    CHECK(fp_inverse(FpElem{6, 7}).v == 6);
    CHECK(fp_inverse(FpElem{1, 13}).v == 1);
    CHECK_THROWS_AS(fp_inverse(FpElem{0, 5}), DivisionByZero);
}

TEST_CASE("field mismatch is rejected") {
    CHECK_THROWS_AS((FpElem{1, 5} + FpElem{1, 7}), FieldMismatch);
    FpPoly f(5, {1, 1});
    FpPoly g(7, {1, 1});
    CHECK_THROWS_AS(poly_mul_trunc(f, g, 4), FieldMismatch);
}

TEST_CASE("poly_mul_trunc") {
    FpPoly one_plus(5, {1, 1});
    FpPoly one_minus(5, {1, 4});
    CHECK(poly_mul_trunc(one_plus, one_minus, 2) == FpPoly(5, {1}));
    CHECK(poly_mul_trunc(one_plus, FpPoly(5), 10).is_zero());
}

TEST_CASE("G(X) G(-X) = 1 - X^{p-1} mod X^p for computed G at p = 7") {
    AHTable t = compute_table(7, 6 * 7);
    FpPoly G = g_series(t, 7);
    FpPoly Gm(7, [&] {
        std::vector<std::uint32_t> c(G.coeffs());
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = c[i] ? 7 - c[i] : 0;
        return c;
    }());
    CHECK(poly_mul_trunc(G, Gm, 7) == FpPoly(7, {1, 0, 0, 0, 0, 0, 6}));
}

TEST_CASE("series_inverse_trunc") {
    SUBCASE("1 + X^{p-1} expands into the alternating geometric series") {
        FpPoly f(5, {1, 0, 0, 0, 1});
        FpPoly inv = series_inverse_trunc(f, 25);
        for (std::size_t i = 0; i < 25; ++i) {
            std::uint32_t expect = 0;
            if (i % 4 == 0) expect = (i / 4) % 2 == 0 ? 1 : 4;
            CHECK(inv.coeff(i).v == expect);
        }
    }
    SUBCASE("constants and 1+X") {
        CHECK(series_inverse_trunc(FpPoly(5, {2}), 1) == FpPoly(5, {3}));
        CHECK(series_inverse_trunc(FpPoly(5, {1, 1}), 3) == FpPoly(5, {1, 4, 1}));
    }
    SUBCASE("zero constant term") {
        CHECK_THROWS_AS(series_inverse_trunc(FpPoly(5, {0, 1}), 3), NotInvertible);
    }
}

TEST_CASE("inverse is a true inverse at several truncation orders") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {5u, 7u}) {
        for (std::size_t order : {std::size_t{8}, std::size_t{p},
                                  std::size_t{p} * p}) {
            FpPoly f = random_poly(p, 10, rng);
            f.set_coeff(0, FpElem{1 + f.coeff(0).v % (p - 1), p}); // nonzero
            FpPoly prod = poly_mul_trunc(f, series_inverse_trunc(f, order), order);
            CHECK(prod == FpPoly(p, {1}));
        }
    }
}

TEST_CASE("poly_derivative") {
    CHECK(poly_derivative(FpPoly::monomial(5, 5)).is_zero());
    CHECK(poly_derivative(FpPoly(5, {0, 0, 0, 3, 2})) == FpPoly(5, {0, 0, 4, 3}));
    CHECK(poly_derivative(FpPoly(5, {4})).is_zero());
}

TEST_CASE("poly_compose_trunc") {
    FpPoly sq = FpPoly::monomial(7, 2);
    FpPoly xp1(7, {1, 1});
    CHECK(poly_compose_trunc(sq, xp1, 3) == FpPoly(7, {1, 2, 1}));
    FpPoly f(7, {3, 1, 4});
    CHECK(poly_compose_trunc(f, FpPoly::monomial(7, 1), 2) == FpPoly(7, {3, 1}));
}

TEST_CASE("poly_shift") {
    CHECK(poly_shift(FpPoly::monomial(5, 2), FpElem{-1, 5}) == FpPoly(5, {1, 3, 1}));
    CHECK(poly_shift(FpPoly(7, {2, 0, 3}), FpElem{0, 7}) == FpPoly(7, {2, 0, 3}));
    // gamma at p=5 shifted by -1 takes value gamma(0) = 0 at X = 1
    FpPoly gamma5(5, {0, 0, 0, 3, 2});
    CHECK(poly_eval(poly_shift(gamma5, FpElem{-1, 5}), FpElem{1, 5}).v == 0);
}

TEST_CASE("shift by c then -c is the identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t p = trial % 2 == 0 ? 13 : 31;
        FpPoly f = random_poly(p, 12, rng);
        std::uniform_int_distribution<std::uint32_t> cd(0, p - 1);
        FpElem c{cd(rng), p};
        CHECK(poly_shift(poly_shift(f, c), -c) == f);
    }
}

TEST_CASE("finite polylogarithms") {
    PrimeField f5(5);
    CHECK(finite_polylog(f5, 1) == FpPoly(5, {0, 1, 3, 2, 4}));
    CHECK(finite_polylog(f5, 0) == FpPoly(5, {0, 1, 1, 1, 1}));
    CHECK(poly_eval(finite_polylog(f5, 1), FpElem{1, 5}).v == 0);
}

TEST_CASE("(X-1)(pound0 + 1) = X^p - 1") {
    for (std::uint32_t p : {5u, 7u, 13u}) {
        PrimeField field(p);
        FpPoly lhs = poly_mul(FpPoly(p, {p - 1, 1}),
                              finite_polylog(field, 0) + FpPoly(p, {1}));
        FpPoly rhs = FpPoly::monomial(p, p) - FpPoly(p, {1});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("X d/dX pound_r = pound_{r-1}") {
    for (std::uint32_t p : {5u, 11u}) {
        PrimeField field(p);
        for (std::int64_t r : {1, 2}) {
            FpPoly lhs = poly_mul(FpPoly::monomial(p, 1),
                                  poly_derivative(finite_polylog(field, r)));
            CHECK(lhs == finite_polylog(field, r - 1));
        }
    }
}

TEST_CASE("pound1 symmetries") {
    for (std::uint32_t p : {5u, 7u, 13u}) {
        PrimeField field(p);
        FpPoly pound1 = finite_polylog(field, 1);
        // pound1(1-X) = pound1(X) as polynomials
        FpPoly flipped = poly_compose_trunc(pound1, FpPoly(p, {1, p - 1}),
                                            std::size_t{p} * p);
        CHECK(flipped == pound1);
        // X^p pound1(1/X) = -pound1(X) on all nonzero evaluations
        for (std::uint32_t x = 1; x < p; ++x) {
            FpElem xe{x, p};
            FpElem lhs = fp_pow(xe, p) * poly_eval(pound1, fp_inverse(xe));
            CHECK(lhs == -poly_eval(pound1, xe));
        }
    }
}

TEST_CASE("poly_eval basics") {
    CHECK(poly_eval(FpPoly(5), FpElem{3, 5}).v == 0);
    FpPoly gamma5(5, {0, 0, 0, 3, 2});
    CHECK(poly_eval(gamma5, FpElem{1, 5}).v == 0);  // w_5 = 0 mod 5
    CHECK(poly_eval(gamma5, FpElem{-1, 5}).v == 4); // -w_5 - 1
}

TEST_CASE("quadratic extension setup picks the smallest non-residue") {
    CHECK(QuadExt(PrimeField(5)).d.v == 2);
    CHECK(QuadExt(PrimeField(7)).d.v == 3);
    CHECK(QuadExt(PrimeField(3)).d.v == 2);
}

TEST_CASE("construct_root: defining polynomials and Frobenius") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 199u}) {
        PrimeField field(p);
        Fp2Elem i = construct_root(field, RootKind::sqrt_minus_one);
        Fp2Elem minus_one = embed(FpElem{-1, p}, i.d);
        CHECK(i * i == minus_one);
        CHECK(in_base_field(i) == (p % 4 == 1));

        Fp2Elem z = construct_root(field, RootKind::primitive_sixth_root);
        Fp2Elem one = embed(FpElem{1, p}, z.d);
        CHECK(z * z - z + one == embed(FpElem{0, p}, z.d));
        CHECK(in_base_field(z) == (p % 3 == 1));

        // Frobenius maps each root to its conjugate root.
        Fp2Elem i_frob = fp2_pow(i, p);
        CHECK(i_frob * i_frob == minus_one);
        if (!in_base_field(i)) CHECK(i_frob == embed(FpElem{0, p}, i.d) - i);
        Fp2Elem z_frob = fp2_pow(z, p);
        CHECK(z_frob * z_frob - z_frob + one == embed(FpElem{0, p}, z.d));
        if (!in_base_field(z)) CHECK(z_frob == one - z); // the other root
    }
}

TEST_CASE("sqrt_mod_p agrees with squaring") {
    for (std::uint32_t p : {5u, 13u, 17u, 97u}) {
        for (std::uint32_t x = 0; x < p; ++x) {
            FpElem xe{x, p};
            auto r = sqrt_mod_p(xe);
            if (r) CHECK((*r) * (*r) == xe);
            else CHECK(legendre(xe) == -1);
        }
    }
}

TEST_CASE("lagrange interpolation recovers low-degree polynomials") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {7u, 13u}) {
        PrimeField field(p);
        FpPoly f = random_poly(p, p - 1, rng);
        std::vector<std::pair<FpElem, FpElem>> pts;
        for (std::uint32_t x = 0; x < p; ++x)
            pts.emplace_back(FpElem{x, p}, poly_eval(f, FpElem{x, p}));
        CHECK(lagrange_interpolate(field, pts) == f);
    }
}
