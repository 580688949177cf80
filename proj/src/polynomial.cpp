#include "holo/polynomial.hpp"

#include <algorithm>

namespace holo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(unsigned degree, cplx coefficient)
{
    std::vector<cplx> c(degree + 1, 0.0);
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

cplx Polynomial::operator()(cplx z) const
{
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

HoloExpr Polynomial::to_expr() const
{
    HoloExpr out = HoloExpr::constant(0.0);
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] == 0.0) continue;
        HoloExpr term = HoloExpr::constant(coeffs_[k]);
        if (k == 1) term = HoloExpr::mul(term, HoloExpr::z());
        else if (k > 1) term = HoloExpr::mul(term, HoloExpr::pow(HoloExpr::z(), static_cast<unsigned>(k)));
        out = first ? term : HoloExpr::add(out, term);
        first = false;
    }
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(cplx c, const Polynomial& p)
{
    std::vector<cplx> out(p.coeffs_.begin(), p.coeffs_.end());
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
}

std::optional<Polynomial> as_polynomial(const HoloExpr& f)
{
    using Opt = std::optional<Polynomial>;
    return std::visit(
        overloaded{
            [](const node::Const& c) -> Opt { return Polynomial({c.value}); },
            [](const node::Z&) -> Opt { return Polynomial::monomial(1); },
            [](const node::Add& n) -> Opt {
                auto l = as_polynomial(n.lhs);
                auto r = as_polynomial(n.rhs);
                if (!l || !r) return std::nullopt;
                return *l + *r;
            },
            [](const node::Mul& n) -> Opt {
                auto l = as_polynomial(n.lhs);
                auto r = as_polynomial(n.rhs);
                if (!l || !r) return std::nullopt;
                return *l * *r;
            },
            [](const node::Neg& n) -> Opt {
                auto p = as_polynomial(n.operand);
                if (!p) return std::nullopt;
                return cplx(-1.0) * *p;
            },
            [](const node::Div& n) -> Opt {
                auto top = as_polynomial(n.numerator);
                auto bottom = as_polynomial(n.denominator);
                if (!top || !bottom || bottom->is_zero() || bottom->degree() != 0) return std::nullopt;
                return (1.0 / bottom->coeff(0)) * *top;
            },
            [](const node::IntPow& n) -> Opt {
                auto b = as_polynomial(n.base);
                if (!b) return std::nullopt;
                Polynomial acc({1.0});
                for (unsigned k = 0; k < n.exponent; ++k) acc = acc * *b;
                return acc;
            },
            [](const node::Blaschke&) -> Opt { return std::nullopt; },
        },
        f.node().value);
}

}  // namespace holo
