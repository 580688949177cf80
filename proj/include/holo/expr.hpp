#pragma once

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace holo {

using cplx = std::complex<double>;

struct ExprNode;

/// Immutable expression tree for a function holomorphic near a closed curve.
///
/// Nodes are shared and never mutated after construction, so copies are cheap
/// and an expression may be evaluated concurrently from several threads.
/// The named factories build nodes verbatim; the arithmetic operators fold
/// constants and drop neutral elements, which keeps symbolic derivatives small.
class HoloExpr {
public:
    /// The zero function.
    HoloExpr();

    static HoloExpr constant(cplx value);
    static HoloExpr z();
    static HoloExpr add(HoloExpr lhs, HoloExpr rhs);
    static HoloExpr mul(HoloExpr lhs, HoloExpr rhs);
    static HoloExpr neg(HoloExpr operand);
    static HoloExpr div(HoloExpr numerator, HoloExpr denominator);
    static HoloExpr pow(HoloExpr base, unsigned exponent);
    /// (z - r*a) / (r - conj(a)*z); requires |a| < 1 and r > 0.
    static HoloExpr blaschke(cplx a, double r);

    const ExprNode& node() const { return *node_; }

    bool is_constant() const;
    /// Value of a Const node; only meaningful when is_constant().
    cplx constant_value() const;

private:
    explicit HoloExpr(std::shared_ptr<const ExprNode> node);

    std::shared_ptr<const ExprNode> node_;
};

namespace node {

struct Const {
    cplx value;
};
struct Z {};
struct Add {
    HoloExpr lhs, rhs;
};
struct Mul {
    HoloExpr lhs, rhs;
};
struct Neg {
    HoloExpr operand;
};
struct Div {
    HoloExpr numerator, denominator;
};
struct IntPow {
    HoloExpr base;
    unsigned exponent;
};
struct Blaschke {
    cplx a;
    double r;
};

}  // namespace node

struct ExprNode {
    std::variant<node::Const, node::Z, node::Add, node::Mul, node::Neg, node::Div, node::IntPow,
                 node::Blaschke>
        value;
};

// Simplifying arithmetic.
HoloExpr operator+(const HoloExpr& lhs, const HoloExpr& rhs);
HoloExpr operator-(const HoloExpr& lhs, const HoloExpr& rhs);
HoloExpr operator*(const HoloExpr& lhs, const HoloExpr& rhs);
HoloExpr operator/(const HoloExpr& lhs, const HoloExpr& rhs);
HoloExpr operator-(const HoloExpr& operand);
HoloExpr power(const HoloExpr& base, unsigned exponent);

/// Relative pole threshold: a denominator d with |d| < kPoleThreshold * (1 + |numerator|)
/// raises PoleProximity.
inline constexpr double kPoleThreshold = 1e-12;

/// Throws Error{PoleProximity} near a pole of any Div or Blaschke node.
cplx eval(const HoloExpr& f, cplx z);

HoloExpr differentiate(const HoloExpr& f);
HoloExpr nth_derivative(const HoloExpr& f, unsigned n);

/// Text form accepted back by parse(); evaluates identically.
std::string to_string(const HoloExpr& f);

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | base ('^' uint)?
///   base   := 'z' | complex-literal | '(' expr ')' | 'blaschke' '(' complex ',' real ')'
/// Complex literals: "1.5", "2i", "i", and inside blaschke(...) also "1+2i", "0-0.3i".
/// Throws ParseError with the offending position.
HoloExpr parse(std::string_view text);

/// Parses a standalone complex literal such as "1+2i", "-0.5", "0-0.3i", "2i".
cplx parse_complex(std::string_view text);

/// Formats a complex number as a literal parse_complex() reads back exactly.
std::string format_complex(cplx value);

}  // namespace holo
