#pragma once

#include "ahlab/bigint.hpp"
#include "ahlab/errors.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ahlab {

bool is_prime_u64(std::uint64_t n); // trial division, desk scale

// The ambient field F_p for an odd prime p.
struct PrimeField {
    std::uint32_t p;

    explicit PrimeField(std::uint32_t modulus);
};

struct FpElem {
    std::uint32_t v = 0; // residue in [0, p)
    std::uint32_t p = 0;

    FpElem() = default;
    FpElem(std::int64_t x, std::uint32_t modulus)
        : v(static_cast<std::uint32_t>(((x % modulus) + modulus) % modulus)),
          p(modulus) {}

    friend bool operator==(const FpElem&, const FpElem&) = default;
};

inline void require_same_field(const FpElem& a, const FpElem& b) {
    if (a.p != b.p)
        throw FieldMismatch("operands over different prime fields: p=" +
                            std::to_string(a.p) + " vs p=" + std::to_string(b.p));
}

inline FpElem operator+(FpElem a, FpElem b) {
    require_same_field(a, b);
    std::uint32_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return FpElem{std::int64_t{s}, a.p};
}

inline FpElem operator-(FpElem a, FpElem b) {
    require_same_field(a, b);
    std::uint32_t s = a.v + a.p - b.v;
    if (s >= a.p) s -= a.p;
    return FpElem{std::int64_t{s}, a.p};
}

inline FpElem operator-(FpElem a) {
    return FpElem{a.v == 0 ? 0 : std::int64_t{a.p} - a.v, a.p};
}

inline FpElem operator*(FpElem a, FpElem b) {
    require_same_field(a, b);
    return FpElem{static_cast<std::int64_t>(
                      (std::uint64_t{a.v} * b.v) % a.p),
                  a.p};
}

FpElem fp_pow(FpElem base, std::uint64_t e);
FpElem fp_inverse(FpElem x);

inline FpElem operator/(FpElem a, FpElem b) { return a * fp_inverse(b); }

// Legendre symbol of x mod p via Euler's criterion: 0, 1 or -1.
int legendre(FpElem x);

// Square root in F_p by Tonelli-Shanks; nullopt when x is a non-residue.
std::optional<FpElem> sqrt_mod_p(FpElem x);

// F_{p^2} = F_p[t]/(t^2 - d) with d the smallest quadratic non-residue.
// Elements are a + b*t.
struct QuadExt {
    PrimeField field;
    FpElem d;

    explicit QuadExt(PrimeField f);
};

struct Fp2Elem {
    FpElem a;
    FpElem b;
    std::uint32_t d = 0; // t^2 = d

    friend bool operator==(const Fp2Elem&, const Fp2Elem&) = default;
};

inline Fp2Elem embed(FpElem x, std::uint32_t d) {
    return Fp2Elem{x, FpElem{0, x.p}, d};
}

inline void require_same_field(const Fp2Elem& x, const Fp2Elem& y) {
    if (x.a.p != y.a.p || x.d != y.d)
        throw FieldMismatch("operands over different quadratic extensions");
}

inline Fp2Elem operator+(const Fp2Elem& x, const Fp2Elem& y) {
    require_same_field(x, y);
    return Fp2Elem{x.a + y.a, x.b + y.b, x.d};
}

inline Fp2Elem operator-(const Fp2Elem& x, const Fp2Elem& y) {
    require_same_field(x, y);
    return Fp2Elem{x.a - y.a, x.b - y.b, x.d};
}

inline Fp2Elem operator*(const Fp2Elem& x, const Fp2Elem& y) {
    require_same_field(x, y);
    FpElem dd{std::int64_t{x.d}, x.a.p};
    return Fp2Elem{x.a * y.a + dd * (x.b * y.b), x.a * y.b + x.b * y.a, x.d};
}

inline bool in_base_field(const Fp2Elem& x) { return x.b.v == 0; }

Fp2Elem fp2_pow(Fp2Elem base, std::uint64_t e);

// Builds F_p[t]/(t^2 - d) choosing the smallest non-residue d >= 2, so
// the representation is reproducible across runs.
QuadExt build_quadratic_extension(PrimeField field);

enum class RootKind { sqrt_minus_one, primitive_sixth_root };

// An element z with z^2 = -1, or z^2 - z + 1 = 0 (primitive sixth root
// of unity). Lands in F_p when the defining polynomial splits, i.e.
// p = 1 mod 4 resp. p = 1 mod 3; otherwise in F_{p^2}.
Fp2Elem construct_root(PrimeField field, RootKind which);

} // namespace ahlab
