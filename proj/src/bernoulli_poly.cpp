#include "ahlab/bernoulli_poly.hpp"

#include <random>

namespace ahlab {

namespace {

FpPoly compose_exact(const FpPoly& f, const FpPoly& g) {
    std::size_t order =
        f.is_zero() || g.is_zero()
            ? 1
            : static_cast<std::size_t>(f.degree()) *
                      std::max<std::size_t>(1, static_cast<std::size_t>(g.degree())) +
                  1;
    return poly_compose_trunc(f, g, order);
}

// (1 - X) as a polynomial over F_p.
FpPoly one_minus_x(std::uint32_t p) { return FpPoly(p, {1, p - 1}); }

FpElem wilson_mod_p(std::uint32_t p) {
    BigInt w = wilson_quotient(p) % BigInt(p);
    return FpElem{w.get_si(), p};
}

} // namespace

FpElem fermat_quotient_two(std::uint32_t p) {
    BigInt q2 = exact_div(pow_int(BigInt(2), p - 1) - 1, BigInt(p)) % BigInt(p);
    return FpElem{q2.get_si(), p};
}

GammaPolys build_gamma_polys(std::uint32_t p) {
    if (!is_prime_u64(p) || p < 3)
        throw UsageError("build_gamma_polys: requires an odd prime");
    GammaPolys g;
    g.p = p;
    g.gamma = FpPoly(p);
    g.gamma_star = FpPoly(p);
    g.rho = FpPoly(p);
    for (std::uint32_t n = 1; n + 1 < p; ++n) {
        BigRational bn = bernoulli_exact(n);
        if (bn == 0) continue;
        FpElem b = reduce_mod_p(bn, p);
        FpElem ninv = fp_inverse(FpElem{n, p});
        g.gamma.set_coeff(p - n, b * ninv);
        g.gamma_star.set_coeff(n, b * ninv);
        g.rho.set_coeff(p - n, b * ninv * ninv);
    }
    return g;
}

FpPoly feq_rhs(std::uint32_t p) {
    PrimeField field(p);
    FpPoly rhs = finite_polylog(field, 1) + FpPoly::monomial(p, p - 1);
    FpElem c = -(wilson_mod_p(p) + FpElem{1, p});
    return rhs + FpPoly::constant(c);
}

CheckResult verify_feq_gamma(std::uint32_t p) {
    const std::string name = "feq-gamma";
    FpPoly gamma = build_gamma_polys(p).gamma;
    FpPoly lhs = poly_shift(gamma, FpElem{-1, p}) - gamma;
    FpPoly rhs = feq_rhs(p);
    if (lhs != rhs) {
        json witness{{"lhs", lhs.str()}, {"rhs", rhs.str()}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_feq_gamma_sym(std::uint32_t p) {
    const std::string name = "feq-gamma-sym";
    FpPoly gamma = build_gamma_polys(p).gamma;
    PrimeField field(p);
    FpPoly lhs = gamma + compose_exact(gamma, one_minus_x(p));
    FpPoly xp1 = FpPoly::monomial(p, p - 1);
    FpPoly rhs = -finite_polylog(field, 1) - xp1 -
                 compose_exact(xp1, one_minus_x(p)) +
                 FpPoly::constant(wilson_mod_p(p) + FpElem{1, p});
    if (lhs != rhs) {
        json witness{{"lhs", lhs.str()}, {"rhs", rhs.str()}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_gamma_parity(std::uint32_t p) {
    const std::string name = "gamma-parity";
    FpPoly gamma = build_gamma_polys(p).gamma;
    FpPoly minus_x(p, {0, p - 1});
    FpPoly sum = gamma + compose_exact(gamma, minus_x);
    FpPoly expected = -FpPoly::monomial(p, p - 1);
    if (sum != expected) {
        json witness{{"relation", "gamma(X)+gamma(-X)"},
                     {"lhs", sum.str()},
                     {"rhs", expected.str()}};
        return CheckResult::fail(name, p, witness);
    }
    // gamma(X) + X^{p-1}/2 has only odd-degree terms.
    FpPoly odd = gamma + fp_inverse(FpElem{2, p}) * FpPoly::monomial(p, p - 1);
    for (std::ptrdiff_t i = 0; i <= odd.degree(); i += 2) {
        if (odd.coeff(i).v != 0) {
            json witness{{"relation", "even coefficient of gamma+X^{p-1}/2"},
                         {"degree", i},
                         {"coefficient", odd.coeff(i).v}};
            return CheckResult::fail(name, p, witness);
        }
    }
    return CheckResult::pass(name, p);
}

FpPoly reconstruct_gamma_from_feq(std::uint32_t p) {
    PrimeField field(p);
    FpPoly R = feq_rhs(p);
    std::vector<std::uint32_t> vals(p, 0); // gamma on residues, gamma(0)=0
    FpElem x{0, p};
    for (std::uint32_t step = 0; step + 1 < p; ++step) {
        FpElem next = FpElem{vals[x.v], p} + poly_eval(R, x);
        x = x - FpElem{1, p};
        vals[x.v] = next.v;
    }
    std::vector<std::pair<FpElem, FpElem>> points;
    points.reserve(p);
    for (std::uint32_t i = 0; i < p; ++i)
        points.emplace_back(FpElem{i, p}, FpElem{std::int64_t{vals[i]}, p});
    return lagrange_interpolate(field, points);
}

CheckResult verify_gamma_reconstruction(std::uint32_t p) {
    const std::string name = "gamma-reconstruction";
    FpPoly direct = build_gamma_polys(p).gamma;
    FpPoly oracle = reconstruct_gamma_from_feq(p);
    if (direct != oracle) {
        json witness{{"direct", direct.str()}, {"reconstructed", oracle.str()}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_granville_pol(std::uint32_t p) {
    const std::string name = "granville-pol";
    PrimeField field(p);
    // (1 - X^p - (1-X)^p) / p: interior coefficient of X^j is
    // (-1)^{j+1} C(p, j), each divisible by p.
    FpPoly quotient(p);
    const BigInt pz(p);
    for (std::uint32_t j = 1; j < p; ++j) {
        BigInt c = binomial(p, j);
        if (j % 2 == 0) c = -c;
        if (!divides(pz, c))
            throw std::logic_error(
                "granville-pol: interior binomial coefficient not divisible by p");
        BigInt q = exact_div(c, pz) % pz;
        quotient.set_coeff(j, FpElem{q.get_si(), p});
    }
    FpPoly pound1 = finite_polylog(field, 1);
    if (quotient != pound1) {
        json witness{{"lhs", quotient.str()}, {"rhs", pound1.str()}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_nielsen(std::uint32_t p, std::int64_t xmin, std::int64_t xmax) {
    if (xmin > xmax) throw UsageError("verify_nielsen: xmin > xmax");
    const std::string name = "nielsen";
    json params{{"xmin", xmin}, {"xmax", xmax}};
    FpPoly gamma = build_gamma_polys(p).gamma;
    FpElem w = wilson_mod_p(p);
    for (std::int64_t x = xmin; x <= xmax; ++x) {
        // The left-hand side only depends on x mod p.
        FpElem lhs = poly_eval(gamma, FpElem{x, p});
        BigInt xq = x_times_fermat_quotient(p, BigInt(static_cast<long>(x)));
        FpElem rhs = FpElem{BigInt(xq % p).get_si(), p} + w * FpElem{x, p} +
                     FpElem{BigInt(floor_div(BigInt(static_cast<long>(x)), BigInt(p)) % p)
                                .get_si(),
                            p};
        if (lhs != rhs) {
            json witness{{"x", x}, {"lhs", lhs.v}, {"rhs", rhs.v}};
            return CheckResult::fail(name, p, witness, params);
        }
    }
    return CheckResult::pass(name, p, params);
}

CheckResult verify_faulhaber_check(std::uint32_t p) {
    const std::string name = "faulhaber";
    FpPoly gamma = build_gamma_polys(p).gamma;
    FpElem w = wilson_mod_p(p);
    FpElem power_sum{0, p};
    for (std::uint32_t x = 0; x < p; ++x) {
        if (x > 0) power_sum = power_sum + fp_pow(FpElem{x, p}, p - 1);
        FpElem xe{x, p};
        if (power_sum != xe) {
            json witness{{"x", x}, {"power_sum", power_sum.v}, {"expected", xe.v}};
            return CheckResult::fail(name, p, witness);
        }
        BigInt xq = x_times_fermat_quotient(p, BigInt(x));
        FpElem chain = FpElem{BigInt(xq % p).get_si(), p} +
                       (w + FpElem{1, p}) * xe - poly_eval(gamma, xe);
        if (power_sum != chain) {
            json witness{{"x", x}, {"power_sum", power_sum.v}, {"chain", chain.v}};
            return CheckResult::fail(name, p, witness);
        }
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_polylog_special_values(std::uint32_t p) {
    if (p < 5) throw RangeError("verify_polylog_special_values: requires p >= 5");
    const std::string name = "polylog-special-values";
    PrimeField field(p);
    FpPoly pound1 = finite_polylog(field, 1);
    FpPoly gamma = build_gamma_polys(p).gamma;
    FpElem q2 = fermat_quotient_two(p);

    auto fail = [&](const char* relation, json extra = json::object()) {
        json witness{{"relation", relation}};
        witness.update(extra);
        return CheckResult::fail(name, p, witness);
    };

    if (poly_eval(pound1, FpElem{1, p}).v != 0)
        return fail("pound1(1) = 0");
    FpElem half = fp_inverse(FpElem{2, p});
    if (poly_eval(pound1, half) != q2)
        return fail("pound1(1/2) = q_p(2)",
                    json{{"lhs", poly_eval(pound1, half).v}, {"rhs", q2.v}});

    // -omega is a primitive sixth root of unity; pound1 vanishes there.
    Fp2Elem sixth = construct_root(field, RootKind::primitive_sixth_root);
    Fp2Elem zero2 = embed(FpElem{0, p}, sixth.d);
    if (poly_eval(pound1, sixth) != zero2)
        return fail("pound1(-omega) = 0");

    Fp2Elem i_root = construct_root(field, RootKind::sqrt_minus_one);
    Fp2Elem minus_i = embed(FpElem{0, p}, i_root.d) - i_root;
    Fp2Elem l_sum = poly_eval(pound1, i_root) + poly_eval(pound1, minus_i);
    if (l_sum != embed(-q2, i_root.d))
        return fail("pound1(i)+pound1(-i) = -q_p(2)");

    Fp2Elem g_sum = poly_eval(gamma, i_root) + poly_eval(gamma, minus_i);
    FpElem sign{((p + 1) / 2) % 2 == 0 ? 1 : -1, p};
    if (g_sum != embed(sign, i_root.d))
        return fail("gamma(i)+gamma(-i) = (-1)^{(p+1)/2}");

    return CheckResult::pass(name, p);
}

CheckResult verify_numeric_sums(std::uint32_t p) {
    if (p < 5) throw RangeError("verify_numeric_sums: requires p >= 5");
    const std::string name = "numeric-sums";
    BigRational sum1(0), sum2(0);
    BigRational two_pow(1);
    for (std::uint32_t n = 1; n + 1 < p; ++n) {
        two_pow *= 2;
        BigRational b = bernoulli_exact(n);
        if (b == 0) continue;
        BigRational dn = b / BigRational(static_cast<unsigned long>(n));
        sum1 += dn;
        sum2 += two_pow * dn;
    }
    sum1.canonicalize();
    sum2.canonicalize();
    FpElem w = wilson_mod_p(p);
    FpElem q2 = fermat_quotient_two(p);
    FpElem lhs1 = reduce_mod_p(sum1, p);
    if (lhs1 != w) {
        json witness{{"relation", "sum B_n/n = w_p"}, {"lhs", lhs1.v}, {"rhs", w.v}};
        return CheckResult::fail(name, p, witness);
    }
    FpElem lhs2 = reduce_mod_p(sum2, p);
    FpElem rhs2 = -q2 + w - FpElem{1, p};
    if (lhs2 != rhs2) {
        json witness{{"relation", "sum 2^n B_n/n = -q_p(2)+w_p-1"},
                     {"lhs", lhs2.v},
                     {"rhs", rhs2.v}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_corollary_sixth(std::uint32_t p) {
    if (p <= 3) throw RangeError("verify_corollary_sixth: requires p > 3");
    const std::string name = "corollary-sixth";
    FpElem lhs{0, p};
    for (std::uint32_t m = 0; 6 * m + 5 <= p; ++m) {
        FpElem b = reduce_mod_p(bernoulli_exact(p - 6 * m - 3), p);
        lhs = lhs + b * fp_inverse(FpElem{2 * m + 1, p});
    }
    int legendre_p3 = (p % 3 == 1) ? 1 : -1;
    FpElem quarter = fp_inverse(FpElem{4, p});
    FpElem rhs = quarter - FpElem{3 * legendre_p3, p} * quarter;
    // Restated form: -1/2 if p = 1 mod 3, 1 if p = 2 mod 3.
    FpElem restated = legendre_p3 == 1
                          ? -fp_inverse(FpElem{2, p})
                          : FpElem{1, p};
    if (lhs != rhs || rhs != restated) {
        json witness{{"lhs", lhs.v}, {"rhs", rhs.v}, {"restated", restated.v}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_corollary_eighth(std::uint32_t p) {
    if (p <= 3) throw RangeError("verify_corollary_eighth: requires p > 3");
    const std::string name = "corollary-eighth";
    FpElem sum{0, p};
    for (std::uint32_t n = 3; n + 1 < p; n += 2) { // even n contribute nothing
        FpElem b = reduce_mod_p(bernoulli_exact(p - n), p);
        if (b.v == 0) continue;
        FpElem term = b * fp_inverse(FpElem{n, p}) *
                      fp_pow(FpElem{2, p}, (n + 1) / 2);
        sum = ((std::uint64_t{n} * n - 1) / 8) % 2 == 0 ? sum + term : sum - term;
    }
    FpElem lhs = -sum;
    FpElem w = wilson_mod_p(p);
    int sign_p = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
    FpElem rhs = fermat_quotient_two(p) + FpElem{2, p} * w +
                 FpElem{3 * (1 - sign_p) / 2, p};
    if (lhs != rhs) {
        json witness{{"lhs", lhs.v}, {"rhs", rhs.v}};
        return CheckResult::fail(name, p, witness);
    }
    return CheckResult::pass(name, p);
}

CheckResult verify_lemma_pound0(std::uint32_t p, std::uint32_t trials,
                                std::uint64_t seed) {
    if (trials < 1) throw UsageError("verify_lemma_pound0: trials must be >= 1");
    const std::string name = "lemma-pound0";
    json params{{"trials", trials}, {"seed", seed}};
    PrimeField field(p);
    FpPoly pound0 = finite_polylog(field, 0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);

    const std::size_t order = 2 * std::size_t{p};
    for (std::uint32_t trial = 0; trial < trials; ++trial) {
        bool force_flat = trial % 2 == 1; // g'(0) = 0 on half the trials
        std::vector<std::uint32_t> c(order, 0);
        c[0] = 1;
        for (std::size_t j = 1; j < order; ++j) c[j] = dist(rng);
        if (force_flat) c[1] = 0;
        FpPoly g(p, std::move(c));
        bool flat = g.coeff(1).v == 0;

        std::size_t check_order = flat ? 2 * std::size_t{p} - 2 : p;
        FpPoly composed = poly_compose_trunc(pound0, g, check_order);
        FpPoly expected =
            flat ? FpPoly::constant(FpElem{-1, p})
                 : FpPoly::monomial(p, p - 1) + FpPoly::constant(FpElem{-1, p});
        json trial_info{{"trial", trial}, {"g", g.str()}, {"flat", flat}};
        if (composed != expected) {
            json witness{{"relation", "pound0(g)"},
                         {"lhs", composed.str()},
                         {"rhs", expected.str()}};
            witness.update(trial_info);
            return CheckResult::fail(name, p, witness, params);
        }
        // Second path: (g - 1)^{p-1} = pound0(g) + 1.
        FpPoly gm1 = g - FpPoly::constant(FpElem{1, p});
        FpPoly pw(p, {1});
        for (std::uint32_t e = 0; e + 1 < p; ++e)
            pw = poly_mul_trunc(pw, gm1, check_order);
        if (pw != composed + FpPoly::constant(FpElem{1, p})) {
            json witness{{"relation", "(g-1)^{p-1} = pound0(g)+1"},
                         {"lhs", pw.str()}};
            witness.update(trial_info);
            return CheckResult::fail(name, p, witness, params);
        }
    }
    return CheckResult::pass(name, p, params);
}

} // namespace ahlab
