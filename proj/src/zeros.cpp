#include "holo/zeros.hpp"

#include <cmath>
#include <numbers>

#include "holo/error.hpp"
#include "holo/norm.hpp"

namespace holo {

namespace {

constexpr double kZeroOnCurve = 1e-8;
constexpr int kMaxBisection = 40;

class ArgumentTracker {
public:
    ArgumentTracker(const std::function<cplx(double)>& path, double threshold, WindingResult& out)
        : path_(path), threshold_(threshold), out_(out)
    {
    }

    double step(double ta, cplx va, double tb, cplx vb, int depth)
    {
        const double d = std::arg(vb / va);
        if (std::abs(d) <= std::numbers::pi / 2) return d;
        if (depth >= kMaxBisection) {
            throw Error(ErrorKind::NonConvergent, "argument tracking bisection exceeded depth 40");
        }
        const double tm = 0.5 * (ta + tb);
        const cplx vm = path_(tm);
        const double mod = std::abs(vm);
        out_.min_modulus_on_curve = std::min(out_.min_modulus_on_curve, mod);
        if (mod <= threshold_) throw Error(ErrorKind::ZeroOnCurve, "function vanishes on the curve");
        return step(ta, va, tm, vm, depth + 1) + step(tm, vm, tb, vb, depth + 1);
    }

private:
    const std::function<cplx(double)>& path_;
    double threshold_;
    WindingResult& out_;
};

unsigned long long factorial(unsigned n)
{
    unsigned long long acc = 1;
    for (unsigned k = 2; k <= n; ++k) acc *= k;
    return acc;
}

}  // namespace

std::string_view to_string(RoucheClaim claim)
{
    switch (claim) {
    case RoucheClaim::NoClaim: return "NoClaim";
    case RoucheClaim::Holds: return "Holds";
    case RoucheClaim::Violated: return "Violated";
    }
    return "NoClaim";
}

WindingResult track_winding(const std::function<cplx(double)>& path, int n)
{
    if (n < 4) throw Error(ErrorKind::Precondition, "winding needs N >= 4");
    std::vector<cplx> v(static_cast<std::size_t>(n));
    double vmax = 0.0;
    for (int k = 0; k < n; ++k) {
        v[k] = path(static_cast<double>(k) / n);
        vmax = std::max(vmax, std::abs(v[k]));
    }
    if (vmax < kZeroNorm) throw Error(ErrorKind::ZeroOnCurve, "function vanishes identically on the curve");

    WindingResult out;
    out.min_modulus_on_curve = vmax;
    const double threshold = kZeroOnCurve * vmax;
    for (const cplx& x : v) out.min_modulus_on_curve = std::min(out.min_modulus_on_curve, std::abs(x));
    if (out.min_modulus_on_curve <= threshold) {
        throw Error(ErrorKind::ZeroOnCurve, "function vanishes on the curve");
    }

    ArgumentTracker tracker(path, threshold, out);
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
        const int next = (k + 1) % n;
        total += tracker.step(static_cast<double>(k) / n, v[k], static_cast<double>(k + 1) / n, v[next], 0);
    }
    out.total_arg_variation = total;
    out.count = static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
    return out;
}

WindingResult count_zeros(const HoloExpr& f, const Curve& curve, int n)
{
    return track_winding([&](double t) { return eval(f, curve.point(t)); }, n);
}

int winding_number(const Curve& curve, cplx point, int n)
{
    return track_winding([&](double t) { return curve.point(t) - point; }, n).count;
}

JGammaZeroCheck verify_J_gamma_zero(const HoloExpr& f, const Curve& curve, const RunConfig& cfg)
{
    const JGammaReport jr = jgamma_report(f, curve, cfg.jgamma_tol, cfg);
    if (!jr.member) throw Error(ErrorKind::Precondition, "function does not have constant modulus on the curve");

    JGammaZeroCheck out;
    const HoloExpr df = differentiate(f);
    const bool constant = (df.is_constant() && df.constant_value() == 0.0) ||
                          sup_norm(df, curve, cfg).norm_value <= 1e-12 * (1.0 + jr.max_modulus);
    if (constant) {
        out.holds = true;
        out.vacuous = true;
        return out;
    }
    out.count = count_zeros(f, curve, cfg.grid_n).count;
    out.holds = out.count >= 1;
    return out;
}

RoucheReport rouche_link(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const RunConfig& cfg)
{
    if (!in_J_gamma(f, curve, cfg.jgamma_tol, cfg)) {
        throw Error(ErrorKind::Precondition, "rouche_link needs f with constant modulus on the curve");
    }
    RoucheReport report;
    report.decision = bj_minimize(f, g, curve, cfg);
    if (report.decision.verdict != Verdict::NotOrthogonal) return report;

    const cplx lambda = *report.decision.witness;
    const std::vector<cplx> fv = values_on_grid(f, curve, cfg.grid_n);
    const std::vector<cplx> gv = values_on_grid(g, curve, cfg.grid_n);
    report.pointwise_hypothesis = true;
    for (std::size_t k = 0; k < fv.size(); ++k) {
        if (!(std::abs(fv[k] + lambda * gv[k]) < std::abs(fv[k]))) {
            report.pointwise_hypothesis = false;
            break;
        }
    }
    report.count_f = count_zeros(f, curve, cfg.grid_n).count;
    report.count_g = count_zeros(g, curve, cfg.grid_n).count;
    report.claim = report.pointwise_hypothesis && *report.count_f == *report.count_g ? RoucheClaim::Holds
                                                                                      : RoucheClaim::Violated;
    return report;
}

double fta_bound(const Polynomial& q)
{
    if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no degree");
    if (q.degree() < 1) throw Error(ErrorKind::Precondition, "polynomial must have degree >= 1");
    double lower = 0.0;
    for (unsigned k = 0; k < q.degree(); ++k) lower += std::abs(q.coeff(k));
    return std::max(1.0, lower / std::abs(q.leading()));
}

FtaReport fta_verify(const Polynomial& q, double slack, const RunConfig& cfg)
{
    if (!(slack > 1.0)) throw Error(ErrorKind::Precondition, "fta slack must exceed 1");
    FtaReport report;
    report.bound = fta_bound(q);
    report.degree = q.degree();
    report.radius = slack * report.bound;
    const Curve circle = Curve::circle(0.0, report.radius);

    const HoloExpr monomial = HoloExpr::pow(HoloExpr::z(), report.degree);
    const HoloExpr poly = q.to_expr();
    report.witness_norm = combination_norm(monomial, poly, -1.0 / q.leading(), circle, cfg);
    report.monomial_norm = std::pow(report.radius, static_cast<double>(report.degree));
    report.count = count_zeros(poly, circle, cfg.grid_n).count;
    return report;
}

cplx cauchy_derivative(const HoloExpr& f, cplx z0, unsigned n, double r, int quad_n)
{
    const Curve circle = Curve::circle(z0, r);
    const cplx integral = contour_integral(
        [&](cplx z) {
            cplx d = 1.0;
            for (unsigned k = 0; k <= n; ++k) d *= (z - z0);
            return eval(f, z) / d;
        },
        circle, quad_n);
    return static_cast<double>(factorial(n)) / cplx(0.0, 2.0 * std::numbers::pi) * integral;
}

DerivativeScenario derivative_ortho_scenario(const HoloExpr& f, const HoloExpr& g, unsigned n, const Curve& outer,
                                             const Curve& inner, cplx lambda0, double r, const RunConfig& cfg)
{
    if (!(r > 0.0)) throw Error(ErrorKind::GeometryViolation, "radius r must be positive");
    try {
        for (const CurveSample& s : sample(inner, 256)) {
            if (winding_number(outer, s.point) != 1) {
                throw Error(ErrorKind::GeometryViolation, "inner curve is not inside the outer curve");
            }
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::GeometryViolation) throw;
        throw Error(ErrorKind::GeometryViolation, "inner curve touches the outer curve");
    }
    const double dist = curve_distance(outer, inner);
    if (!(r < dist)) throw Error(ErrorKind::GeometryViolation, "r must be below the distance between the curves");

    const HoloExpr fn = nth_derivative(f, n);
    const HoloExpr gn = nth_derivative(g, n);
    if ((gn.is_constant() && gn.constant_value() == 0.0) || sup_norm(gn, inner, cfg).norm_value < kZeroNorm) {
        throw Error(ErrorKind::Precondition, "n-th derivative of g vanishes identically");
    }

    DerivativeScenario out;
    out.lhs = combination_norm(f, g, lambda0, outer, cfg);
    out.rhs = std::pow(r, static_cast<double>(n)) / static_cast<double>(factorial(n)) *
              sup_norm(fn, inner, cfg).norm_value;
    out.hypothesis_holds = out.lhs < out.rhs;
    if (out.hypothesis_holds) {
        out.decision = bj_minimize(fn, gn, inner, cfg);
        out.conclusion_holds = out.decision->verdict == Verdict::NotOrthogonal;
    }
    return out;
}

}  // namespace holo
