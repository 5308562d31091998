#pragma once

#include "ahlab/fp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ahlab {

// Dense polynomial over F_p, also used as a truncated power series.
// Series operations take an explicit truncation order; there is no
// implicit order carried by the value. Canonical form trims trailing
// zero coefficients.
class FpPoly {
  public:
    FpPoly() = default;
    explicit FpPoly(std::uint32_t p) : p_(p) {}
    FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs)
        : p_(p), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= p_;
        trim();
    }

    static FpPoly constant(FpElem x) { return FpPoly(x.p, {x.v}); }
    static FpPoly monomial(std::uint32_t p, std::size_t degree,
                           std::uint32_t coeff = 1);

    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    std::ptrdiff_t degree() const {
        return static_cast<std::ptrdiff_t>(c_.size()) - 1;
    }
    FpElem coeff(std::size_t i) const {
        return FpElem{i < c_.size() ? std::int64_t{c_[i]} : 0, p_};
    }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    void set_coeff(std::size_t i, FpElem x);

    friend bool operator==(const FpPoly&, const FpPoly&) = default;

    std::string str(const std::string& var = "X") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::uint32_t p_ = 0;
    std::vector<std::uint32_t> c_;
};

FpPoly operator+(const FpPoly& f, const FpPoly& g);
FpPoly operator-(const FpPoly& f, const FpPoly& g);
FpPoly operator-(const FpPoly& f);
FpPoly operator*(FpElem s, const FpPoly& f);

// Product with all terms of degree >= order dropped.
FpPoly poly_mul_trunc(const FpPoly& f, const FpPoly& g, std::size_t order);

// Exact polynomial product.
FpPoly poly_mul(const FpPoly& f, const FpPoly& g);

// Series inverse: f * result = 1 mod X^order. Requires f(0) != 0.
FpPoly series_inverse_trunc(const FpPoly& f, std::size_t order);

// Formal derivative; degrees divisible by p annihilate.
FpPoly poly_derivative(const FpPoly& f);

// f(g(X)) mod X^order by Horner with truncated products.
FpPoly poly_compose_trunc(const FpPoly& f, const FpPoly& g, std::size_t order);

// f(X + c), exact.
FpPoly poly_shift(const FpPoly& f, FpElem c);

// Drop terms of degree >= order.
FpPoly poly_truncate(const FpPoly& f, std::size_t order);

// Finite polylogarithm sum_{k=1}^{p-1} X^k / k^r; r may be zero or negative.
FpPoly finite_polylog(PrimeField field, std::int64_t r);

// Horner evaluation, generic over F_p and F_{p^2} points.
FpElem poly_eval(const FpPoly& f, FpElem x);
Fp2Elem poly_eval(const FpPoly& f, const Fp2Elem& x);

// Unique polynomial of degree < points.size() through the given
// (node, value) pairs; nodes must be distinct.
FpPoly lagrange_interpolate(PrimeField field,
                            const std::vector<std::pair<FpElem, FpElem>>& points);

} // namespace ahlab
