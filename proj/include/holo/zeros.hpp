#pragma once

#include <functional>
#include <optional>

#include "holo/config.hpp"
#include "holo/curve.hpp"
#include "holo/expr.hpp"
#include "holo/ortho.hpp"
#include "holo/polynomial.hpp"

namespace holo {

struct WindingResult {
    int count = 0;
    double min_modulus_on_curve = 0.0;
    /// Accumulated continuous argument, approximately 2 pi count.
    double total_arg_variation = 0.0;
};

/// Winding number of a closed path t -> path(t), t in [0, 1), around 0.
/// Steps whose argument change exceeds pi/2 are bisected (depth <= 40).
/// Throws ZeroOnCurve if |path| drops to 1e-8 of its maximum, NonConvergent
/// if bisection runs too deep.
WindingResult track_winding(const std::function<cplx(double)>& path, int n);

/// Number of zeros of f enclosed by the curve, with multiplicity.
WindingResult count_zeros(const HoloExpr& f, const Curve& curve, int n = kDefaultGrid);

/// Winding number of the curve around a point.
int winding_number(const Curve& curve, cplx point, int n = 1024);

struct JGammaZeroCheck {
    bool holds = false;
    /// f is constant, so the claim holds without a zero.
    bool vacuous = false;
    int count = 0;
};

/// For f with constant modulus on the curve: f is constant or has an enclosed zero.
/// Throws Precondition if f is not in J(curve).
JGammaZeroCheck verify_J_gamma_zero(const HoloExpr& f, const Curve& curve, const RunConfig& cfg = {});

enum class RoucheClaim { NoClaim, Holds, Violated };

std::string_view to_string(RoucheClaim claim);

struct RoucheReport {
    RoucheClaim claim = RoucheClaim::NoClaim;
    OrthoDecision decision;
    /// |f + lambda g| < |f| at every grid point for the witness lambda.
    bool pointwise_hypothesis = false;
    std::optional<int> count_f;
    std::optional<int> count_g;
};

/// For f in J(curve): if f is not orthogonal to g they have equally many enclosed zeros.
RoucheReport rouche_link(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const RunConfig& cfg = {});

/// max(1, sum_{k<n} |a_k| / |a_n|). Throws ZeroPolynomial / Precondition for degree < 1.
double fta_bound(const Polynomial& q);

struct FtaReport {
    unsigned degree = 0;
    double bound = 0.0;
    double radius = 0.0;
    /// ||z^n - Q/a_n|| on the circle of the given radius.
    double witness_norm = 0.0;
    /// ||z^n|| = radius^n.
    double monomial_norm = 0.0;
    int count = 0;

    bool witness_ok() const { return witness_norm < monomial_norm; }
    bool count_ok() const { return count == static_cast<int>(degree); }
};

FtaReport fta_verify(const Polynomial& q, double slack = 1.1, const RunConfig& cfg = {});

/// n!/(2 pi i) * integral of f(z)/(z - z0)^(n+1) over the circle of radius r about z0.
cplx cauchy_derivative(const HoloExpr& f, cplx z0, unsigned n, double r, int quad_n = 4096);

struct DerivativeScenario {
    /// max over the outer curve of |f + lambda0 g|
    double lhs = 0.0;
    /// r^n / n! * max over the inner curve of |f^(n)|
    double rhs = 0.0;
    bool hypothesis_holds = false;
    std::optional<OrthoDecision> decision;
    /// decision is NotOrthogonal; only meaningful when the hypothesis holds.
    bool conclusion_holds = false;
};

/// Throws GeometryViolation unless inner lies inside outer and 0 < r < dist(outer, inner);
/// Precondition if g^(n) vanishes identically.
DerivativeScenario derivative_ortho_scenario(const HoloExpr& f, const HoloExpr& g, unsigned n, const Curve& outer,
                                             const Curve& inner, cplx lambda0, double r,
                                             const RunConfig& cfg = {});

}  // namespace holo
