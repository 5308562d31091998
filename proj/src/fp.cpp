#include "ahlab/fp.hpp"

namespace ahlab {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p(modulus) {
    if (p < 3 || !is_prime_u64(p))
        throw UsageError("PrimeField requires an odd prime, got " +
                         std::to_string(p));
}

FpElem fp_pow(FpElem base, std::uint64_t e) {
    FpElem r{1, base.p};
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FpElem fp_inverse(FpElem x) {
    if (x.v == 0)
        throw DivisionByZero("inverse of 0 in F_" + std::to_string(x.p));
    return fp_pow(x, x.p - 2);
}

int legendre(FpElem x) {
    if (x.v == 0) return 0;
    FpElem e = fp_pow(x, (x.p - 1) / 2);
    return e.v == 1 ? 1 : -1;
}

std::optional<FpElem> sqrt_mod_p(FpElem x) {
    const std::uint32_t p = x.p;
    if (x.v == 0) return FpElem{0, p};
    if (legendre(x) != 1) return std::nullopt;
    if (p % 4 == 3) return fp_pow(x, (p + 1) / 4);

    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    std::uint32_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    FpElem z{2, p};
    while (legendre(z) != -1) z = z + FpElem{1, p};

    FpElem m{0, p};
    std::uint32_t mm = s;
    FpElem c = fp_pow(z, q);
    FpElem t = fp_pow(x, q);
    FpElem r = fp_pow(x, (q + 1) / 2);
    while (t.v != 1) {
        std::uint32_t i = 0;
        FpElem t2 = t;
        while (t2.v != 1) { t2 = t2 * t2; ++i; }
        FpElem b = c;
        for (std::uint32_t j = 0; j + i + 1 < mm; ++j) b = b * b;
        mm = i;
        c = b * b;
        t = t * c;
        r = r * b;
    }
    return r;
}

QuadExt::QuadExt(PrimeField f) : field(f), d(FpElem{2, f.p}) {
    while (legendre(d) != -1) d = d + FpElem{1, field.p};
}

Fp2Elem fp2_pow(Fp2Elem base, std::uint64_t e) {
    Fp2Elem r = embed(FpElem{1, base.a.p}, base.d);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

QuadExt build_quadratic_extension(PrimeField field) { return QuadExt(field); }

Fp2Elem construct_root(PrimeField field, RootKind which) {
    const std::uint32_t p = field.p;
    QuadExt ext(field);
    if (which == RootKind::sqrt_minus_one) {
        FpElem minus_one{-1, p};
        if (auto r = sqrt_mod_p(minus_one))
            return embed(*r, ext.d.v);
        // -1 and d are both non-residues, so -1/d is a square: (c*t)^2 = -1.
        FpElem c = *sqrt_mod_p(minus_one / ext.d);
        return Fp2Elem{FpElem{0, p}, c, ext.d.v};
    }
    // z^2 - z + 1 = 0, i.e. z = (1 + sqrt(-3)) / 2.
    if (p <= 3)
        throw UsageError("primitive sixth root of unity requires p > 3");
    FpElem minus_three{-3, p};
    FpElem half = fp_inverse(FpElem{2, p});
    if (auto r = sqrt_mod_p(minus_three)) {
        FpElem z = (FpElem{1, p} + *r) * half;
        return embed(z, ext.d.v);
    }
    FpElem c = *sqrt_mod_p(minus_three / ext.d);
    return Fp2Elem{half, c * half, ext.d.v};
}

} // namespace ahlab
