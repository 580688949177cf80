#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "holo/expr.hpp"

namespace holo {

/// Dense polynomial a_0 + a_1 z + ... + a_n z^n with a_n != 0 (or the zero polynomial).
class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients in ascending order; trailing zeros are dropped.
    explicit Polynomial(std::vector<cplx> coeffs);

    static Polynomial monomial(unsigned degree, cplx coefficient = 1.0);

    bool is_zero() const { return coeffs_.empty(); }
    /// Index of the last nonzero coefficient; 0 for the zero polynomial.
    unsigned degree() const { return coeffs_.empty() ? 0u : static_cast<unsigned>(coeffs_.size() - 1); }
    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{}; }
    cplx leading() const { return coeffs_.empty() ? cplx{} : coeffs_.back(); }

    cplx operator()(cplx z) const;

    HoloExpr to_expr() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(cplx c, const Polynomial& p);

private:
    std::vector<cplx> coeffs_;
};

/// Expands an expression built from constants, z, +, -, *, integer powers and
/// division by nonzero constants. Returns nullopt for anything else.
std::optional<Polynomial> as_polynomial(const HoloExpr& f);

}  // namespace holo
