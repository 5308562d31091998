#include "ahlab/fp_poly.hpp"

#include "ahlab/errors.hpp"

#include <algorithm>

namespace ahlab {

namespace {

void require_same_modulus(const FpPoly& f, const FpPoly& g) {
    if (f.modulus() != g.modulus())
        throw FieldMismatch("polynomials over different prime fields: p=" +
                            std::to_string(f.modulus()) + " vs p=" +
                            std::to_string(g.modulus()));
}

} // namespace

FpPoly FpPoly::monomial(std::uint32_t p, std::size_t degree,
                        std::uint32_t coeff) {
    std::vector<std::uint32_t> c(degree + 1, 0);
    c[degree] = coeff;
    return FpPoly(p, std::move(c));
}

void FpPoly::set_coeff(std::size_t i, FpElem x) {
    if (x.p != p_) throw FieldMismatch("set_coeff: coefficient field mismatch");
    if (i >= c_.size()) {
        if (x.v == 0) return;
        c_.resize(i + 1, 0);
    }
    c_[i] = x.v;
    trim();
}

std::string FpPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

FpPoly operator+(const FpPoly& f, const FpPoly& g) {
    require_same_modulus(f, g);
    const std::uint32_t p = f.modulus();
    std::vector<std::uint32_t> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::uint32_t s = (i < f.coeffs().size() ? f.coeffs()[i] : 0) +
                          (i < g.coeffs().size() ? g.coeffs()[i] : 0);
        c[i] = s >= p ? s - p : s;
    }
    return FpPoly(p, std::move(c));
}

FpPoly operator-(const FpPoly& f) {
    const std::uint32_t p = f.modulus();
    std::vector<std::uint32_t> c(f.coeffs());
    for (auto& x : c) x = x == 0 ? 0 : p - x;
    return FpPoly(p, std::move(c));
}

FpPoly operator-(const FpPoly& f, const FpPoly& g) { return f + (-g); }

FpPoly operator*(FpElem s, const FpPoly& f) {
    if (s.p != f.modulus()) throw FieldMismatch("scalar/polynomial field mismatch");
    std::vector<std::uint32_t> c(f.coeffs());
    for (auto& x : c)
        x = static_cast<std::uint32_t>((std::uint64_t{x} * s.v) % s.p);
    return FpPoly(s.p, std::move(c));
}

FpPoly poly_mul_trunc(const FpPoly& f, const FpPoly& g, std::size_t order) {
    require_same_modulus(f, g);
    const std::uint32_t p = f.modulus();
    if (f.is_zero() || g.is_zero() || order == 0) return FpPoly(p);
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::size_t n = std::min(order, a.size() + b.size() - 1);
    std::vector<std::uint32_t> c(n, 0);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        std::size_t jmax = std::min(b.size(), n - i);
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < jmax; ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + ai * b[j]) % p);
    }
    return FpPoly(p, std::move(c));
}

FpPoly poly_mul(const FpPoly& f, const FpPoly& g) {
    if (f.is_zero() || g.is_zero()) return FpPoly(f.modulus());
    return poly_mul_trunc(f, g, f.coeffs().size() + g.coeffs().size() - 1);
}

FpPoly series_inverse_trunc(const FpPoly& f, std::size_t order) {
    const std::uint32_t p = f.modulus();
    if (f.is_zero() || f.coeffs()[0] == 0)
        throw NotInvertible("series_inverse_trunc: zero constant term");
    FpElem c0_inv = fp_inverse(f.coeff(0));
    std::vector<std::uint32_t> r(order, 0);
    if (order == 0) return FpPoly(p);
    r[0] = c0_inv.v;
    const auto& a = f.coeffs();
    for (std::size_t n = 1; n < order; ++n) {
        // r_n = -c0^-1 * sum_{i=1}^{n} a_i r_{n-i}
        std::uint64_t s = 0;
        std::size_t imax = std::min(n, a.size() - 1);
        for (std::size_t i = 1; i <= imax; ++i)
            s = (s + std::uint64_t{a[i]} * r[n - i]) % p;
        r[n] = static_cast<std::uint32_t>(
            (std::uint64_t{p} - s) % p * c0_inv.v % p);
    }
    return FpPoly(p, std::move(r));
}

FpPoly poly_derivative(const FpPoly& f) {
    const std::uint32_t p = f.modulus();
    if (f.coeffs().size() <= 1) return FpPoly(p);
    std::vector<std::uint32_t> c(f.coeffs().size() - 1, 0);
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        c[i - 1] = static_cast<std::uint32_t>(
            std::uint64_t{f.coeffs()[i]} * (i % p) % p);
    return FpPoly(p, std::move(c));
}

FpPoly poly_compose_trunc(const FpPoly& f, const FpPoly& g, std::size_t order) {
    require_same_modulus(f, g);
    const std::uint32_t p = f.modulus();
    FpPoly r(p);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        r = poly_mul_trunc(r, g, order);
        r = r + FpPoly::constant(f.coeff(i));
    }
    return poly_truncate(r, order);
}

FpPoly poly_shift(const FpPoly& f, FpElem c) {
    if (c.p != f.modulus()) throw FieldMismatch("poly_shift: field mismatch");
    const std::uint32_t p = f.modulus();
    // Horner in (X + c).
    FpPoly r(p);
    FpPoly x_plus_c(p, {c.v, 1});
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        r = poly_mul(r, x_plus_c);
        r = r + FpPoly::constant(f.coeff(i));
    }
    return r;
}

FpPoly poly_truncate(const FpPoly& f, std::size_t order) {
    if (f.coeffs().size() <= order) return f;
    std::vector<std::uint32_t> c(f.coeffs().begin(),
                                 f.coeffs().begin() + order);
    return FpPoly(f.modulus(), std::move(c));
}

FpPoly finite_polylog(PrimeField field, std::int64_t r) {
    const std::uint32_t p = field.p;
    std::vector<std::uint32_t> c(p, 0);
    // Coefficient of X^k is k^{-r}; exponents live mod p-1.
    std::uint64_t e = static_cast<std::uint64_t>(((-r) % (p - 1) + (p - 1)) % (p - 1));
    for (std::uint32_t k = 1; k < p; ++k)
        c[k] = fp_pow(FpElem{k, p}, e).v;
    return FpPoly(p, std::move(c));
}

FpElem poly_eval(const FpPoly& f, FpElem x) {
    if (x.p != f.modulus()) throw FieldMismatch("poly_eval: field mismatch");
    FpElem r{0, x.p};
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        r = r * x + f.coeff(i);
    return r;
}

Fp2Elem poly_eval(const FpPoly& f, const Fp2Elem& x) {
    if (x.a.p != f.modulus()) throw FieldMismatch("poly_eval: field mismatch");
    Fp2Elem r = embed(FpElem{0, x.a.p}, x.d);
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        r = r * x + embed(f.coeff(i), x.d);
    return r;
}

FpPoly lagrange_interpolate(PrimeField field,
                            const std::vector<std::pair<FpElem, FpElem>>& points) {
    const std::uint32_t p = field.p;
    // master(X) = prod (X - x_j)
    FpPoly master(p, {1});
    for (const auto& [x, y] : points)
        master = poly_mul(master, FpPoly(p, {(-x).v, 1}));
    FpPoly result(p);
    for (const auto& [xi, yi] : points) {
        // basis_i = master / (X - x_i), by synthetic division
        std::vector<std::uint32_t> q(points.size(), 0);
        std::uint32_t carry = master.coeffs()[points.size()];
        for (std::size_t j = points.size(); j-- > 0;) {
            q[j] = carry;
            carry = static_cast<std::uint32_t>(
                (master.coeffs()[j] + std::uint64_t{carry} * xi.v) % p);
        }
        FpPoly basis(p, std::move(q));
        FpElem denom = poly_eval(basis, xi);
        result = result + (yi * fp_inverse(denom)) * basis;
    }
    return result;
}

} // namespace ahlab
