#include "holo/expr.hpp"

#include <cmath>
#include <cstdio>

#include "holo/error.hpp"

namespace holo {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_const_equal(const HoloExpr& e, cplx value)
{
    return e.is_constant() && e.constant_value() == value;
}

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

cplx checked_quotient(cplx numerator, cplx denominator, const char* what)
{
    if (std::abs(denominator) < kPoleThreshold * (1.0 + std::abs(numerator))) {
        throw Error(ErrorKind::PoleProximity,
                    std::string(what) + " denominator vanishes (|d| = " +
                        format_double(std::abs(denominator)) + ")");
    }
    return numerator / denominator;
}

}  // namespace

HoloExpr::HoloExpr() : HoloExpr(std::make_shared<const ExprNode>(ExprNode{node::Const{0.0}})) {}

HoloExpr::HoloExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}

HoloExpr HoloExpr::constant(cplx value)
{
    return HoloExpr(std::make_shared<const ExprNode>(ExprNode{node::Const{value}}));
}

HoloExpr HoloExpr::z()
{
    return HoloExpr(std::make_shared<const ExprNode>(ExprNode{node::Z{}}));
}

HoloExpr HoloExpr::add(HoloExpr lhs, HoloExpr rhs)
{
    return HoloExpr(
        std::make_shared<const ExprNode>(ExprNode{node::Add{std::move(lhs), std::move(rhs)}}));
}

HoloExpr HoloExpr::mul(HoloExpr lhs, HoloExpr rhs)
{
    return HoloExpr(
        std::make_shared<const ExprNode>(ExprNode{node::Mul{std::move(lhs), std::move(rhs)}}));
}

HoloExpr HoloExpr::neg(HoloExpr operand)
{
    return HoloExpr(std::make_shared<const ExprNode>(ExprNode{node::Neg{std::move(operand)}}));
}

HoloExpr HoloExpr::div(HoloExpr numerator, HoloExpr denominator)
{
    return HoloExpr(std::make_shared<const ExprNode>(
        ExprNode{node::Div{std::move(numerator), std::move(denominator)}}));
}

HoloExpr HoloExpr::pow(HoloExpr base, unsigned exponent)
{
    return HoloExpr(
        std::make_shared<const ExprNode>(ExprNode{node::IntPow{std::move(base), exponent}}));
}

HoloExpr HoloExpr::blaschke(cplx a, double r)
{
    if (!(std::abs(a) < 1.0)) {
        throw Error(ErrorKind::Precondition, "blaschke factor needs |a| < 1");
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw Error(ErrorKind::Precondition, "blaschke factor needs r > 0");
    }
    return HoloExpr(std::make_shared<const ExprNode>(ExprNode{node::Blaschke{a, r}}));
}

bool HoloExpr::is_constant() const
{
    return std::holds_alternative<node::Const>(node_->value);
}

cplx HoloExpr::constant_value() const
{
    const auto* c = std::get_if<node::Const>(&node_->value);
    return c ? c->value : cplx{};
}

HoloExpr operator+(const HoloExpr& lhs, const HoloExpr& rhs)
{
    if (lhs.is_constant() && rhs.is_constant()) {
        return HoloExpr::constant(lhs.constant_value() + rhs.constant_value());
    }
    if (is_const_equal(lhs, 0.0)) return rhs;
    if (is_const_equal(rhs, 0.0)) return lhs;
    return HoloExpr::add(lhs, rhs);
}

HoloExpr operator-(const HoloExpr& operand)
{
    if (operand.is_constant()) return HoloExpr::constant(-operand.constant_value());
    if (const auto* n = std::get_if<node::Neg>(&operand.node().value)) return n->operand;
    return HoloExpr::neg(operand);
}

HoloExpr operator-(const HoloExpr& lhs, const HoloExpr& rhs)
{
    if (lhs.is_constant() && rhs.is_constant()) {
        return HoloExpr::constant(lhs.constant_value() - rhs.constant_value());
    }
    if (is_const_equal(rhs, 0.0)) return lhs;
    if (is_const_equal(lhs, 0.0)) return -rhs;
    return HoloExpr::add(lhs, -rhs);
}

HoloExpr operator*(const HoloExpr& lhs, const HoloExpr& rhs)
{
    if (lhs.is_constant() && rhs.is_constant()) {
        return HoloExpr::constant(lhs.constant_value() * rhs.constant_value());
    }
    if (is_const_equal(lhs, 0.0) || is_const_equal(rhs, 0.0)) return HoloExpr::constant(0.0);
    if (is_const_equal(lhs, 1.0)) return rhs;
    if (is_const_equal(rhs, 1.0)) return lhs;
    return HoloExpr::mul(lhs, rhs);
}

HoloExpr operator/(const HoloExpr& lhs, const HoloExpr& rhs)
{
    if (is_const_equal(rhs, 1.0)) return lhs;
    if (is_const_equal(lhs, 0.0) && !is_const_equal(rhs, 0.0)) return HoloExpr::constant(0.0);
    if (lhs.is_constant() && rhs.is_constant() && rhs.constant_value() != 0.0) {
        return HoloExpr::constant(lhs.constant_value() / rhs.constant_value());
    }
    return HoloExpr::div(lhs, rhs);
}

HoloExpr power(const HoloExpr& base, unsigned exponent)
{
    if (exponent == 0) return HoloExpr::constant(1.0);
    if (exponent == 1) return base;
    if (base.is_constant()) {
        cplx acc = 1.0;
        for (unsigned k = 0; k < exponent; ++k) acc *= base.constant_value();
        return HoloExpr::constant(acc);
    }
    return HoloExpr::pow(base, exponent);
}

cplx eval(const HoloExpr& f, cplx z)
{
    return std::visit(
        overloaded{
            [](const node::Const& c) { return c.value; },
            [z](const node::Z&) { return z; },
            [z](const node::Add& n) { return eval(n.lhs, z) + eval(n.rhs, z); },
            [z](const node::Mul& n) { return eval(n.lhs, z) * eval(n.rhs, z); },
            [z](const node::Neg& n) { return -eval(n.operand, z); },
            [z](const node::Div& n) {
                const cplx num = eval(n.numerator, z);
                return checked_quotient(num, eval(n.denominator, z), "quotient");
            },
            [z](const node::IntPow& n) {
                cplx base = eval(n.base, z);
                cplx acc = 1.0;
                for (unsigned k = n.exponent; k != 0; k >>= 1) {
                    if (k & 1u) acc *= base;
                    if (k > 1) base *= base;
                }
                return acc;
            },
            [z](const node::Blaschke& b) {
                return checked_quotient(z - b.r * b.a, b.r - std::conj(b.a) * z, "blaschke");
            },
        },
        f.node().value);
}

HoloExpr differentiate(const HoloExpr& f)
{
    return std::visit(
        overloaded{
            [](const node::Const&) { return HoloExpr::constant(0.0); },
            [](const node::Z&) { return HoloExpr::constant(1.0); },
            [](const node::Add& n) { return differentiate(n.lhs) + differentiate(n.rhs); },
            [](const node::Mul& n) {
                return differentiate(n.lhs) * n.rhs + n.lhs * differentiate(n.rhs);
            },
            [](const node::Neg& n) { return -differentiate(n.operand); },
            [](const node::Div& n) {
                const HoloExpr top = differentiate(n.numerator) * n.denominator -
                                     n.numerator * differentiate(n.denominator);
                return top / power(n.denominator, 2);
            },
            [](const node::IntPow& n) {
                if (n.exponent == 0) return HoloExpr::constant(0.0);
                return HoloExpr::constant(static_cast<double>(n.exponent)) *
                       power(n.base, n.exponent - 1) * differentiate(n.base);
            },
            [](const node::Blaschke& b) {
                // quotient rule: ((r - a*z) + a*(z - r a)) / (r - a*z)^2, a* = conj(a)
                const HoloExpr den = HoloExpr::constant(b.r) - HoloExpr::constant(std::conj(b.a)) * HoloExpr::z();
                return HoloExpr::constant(b.r * (1.0 - std::norm(b.a))) / power(den, 2);
            },
        },
        f.node().value);
}

HoloExpr nth_derivative(const HoloExpr& f, unsigned n)
{
    HoloExpr out = f;
    for (unsigned k = 0; k < n; ++k) out = differentiate(out);
    return out;
}

std::string format_complex(cplx value)
{
    if (value.imag() == 0.0) return format_double(value.real());
    std::string out = format_double(value.real());
    const double im = value.imag();
    out += std::signbit(im) ? "-" : "+";
    out += format_double(std::abs(im));
    out += "i";
    return out;
}

std::string to_string(const HoloExpr& f)
{
    return std::visit(
        overloaded{
            [](const node::Const& c) {
                const std::string lit = format_complex(c.value);
                const bool bare = c.value.imag() == 0.0 && !std::signbit(c.value.real());
                return bare ? lit : "(" + lit + ")";
            },
            [](const node::Z&) { return std::string("z"); },
            [](const node::Add& n) { return "(" + to_string(n.lhs) + " + " + to_string(n.rhs) + ")"; },
            [](const node::Mul& n) { return "(" + to_string(n.lhs) + " * " + to_string(n.rhs) + ")"; },
            [](const node::Neg& n) { return "(-" + to_string(n.operand) + ")"; },
            [](const node::Div& n) {
                return "(" + to_string(n.numerator) + " / " + to_string(n.denominator) + ")";
            },
            [](const node::IntPow& n) {
                return "(" + to_string(n.base) + "^" + std::to_string(n.exponent) + ")";
            },
            [](const node::Blaschke& b) {
                return "blaschke(" + format_complex(b.a) + ", " + format_double(b.r) + ")";
            },
        },
        f.node().value);
}

}  // namespace holo
