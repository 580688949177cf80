#include "holo/curve.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "golden.hpp"
#include "holo/error.hpp"

namespace holo {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Curve Curve::circle(cplx center, double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw Error(ErrorKind::GeometryViolation, "circle radius must be positive");
    }
    return Curve(Circle{center, radius});
}

Curve Curve::ellipse(cplx center, double semi_a, double semi_b)
{
    if (!(semi_a > 0.0) || !(semi_b > 0.0) || !std::isfinite(semi_a) || !std::isfinite(semi_b)) {
        throw Error(ErrorKind::GeometryViolation, "ellipse semi-axes must be positive");
    }
    return Curve(Ellipse{center, semi_a, semi_b});
}

cplx Curve::point(double t) const
{
    const double angle = kTwoPi * t;
    if (const auto* c = std::get_if<Circle>(&shape_)) {
        return c->center + c->radius * cplx(std::cos(angle), std::sin(angle));
    }
    const auto& e = std::get<Ellipse>(shape_);
    return e.center + cplx(e.semi_a * std::cos(angle), e.semi_b * std::sin(angle));
}

cplx Curve::tangent(double t) const
{
    const double angle = kTwoPi * t;
    if (const auto* c = std::get_if<Circle>(&shape_)) {
        return cplx(0.0, kTwoPi * c->radius) * cplx(std::cos(angle), std::sin(angle));
    }
    const auto& e = std::get<Ellipse>(shape_);
    return kTwoPi * cplx(-e.semi_a * std::sin(angle), e.semi_b * std::cos(angle));
}

cplx Curve::center() const
{
    return std::visit([](const auto& s) { return s.center; }, shape_);
}

Curve parse_curve(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    const std::string_view body = trim(text);
    const auto open = body.find('(');
    if (open == std::string_view::npos || body.back() != ')') {
        throw ParseError("curve literal must look like circle(c,r) or ellipse(c,a,b)", 0);
    }
    const std::string_view kind = trim(body.substr(0, open));
    std::vector<std::string_view> args;
    std::string_view inner = body.substr(open + 1, body.size() - open - 2);
    for (std::size_t pos = 0;;) {
        const auto comma = inner.find(',', pos);
        args.push_back(trim(inner.substr(pos, comma == std::string_view::npos ? inner.npos : comma - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    auto real_arg = [&](std::string_view s) {
        const cplx v = parse_complex(s);
        if (v.imag() != 0.0) throw ParseError("expected a real curve parameter", open + 1);
        return v.real();
    };
    if (kind == "circle" && args.size() == 2) {
        return Curve::circle(parse_complex(args[0]), real_arg(args[1]));
    }
    if (kind == "ellipse" && args.size() == 3) {
        return Curve::ellipse(parse_complex(args[0]), real_arg(args[1]), real_arg(args[2]));
    }
    throw ParseError("unknown curve '" + std::string(kind) + "' or wrong argument count", 0);
}

std::string to_string(const Curve& curve)
{
    if (const auto* c = std::get_if<Circle>(&curve.shape())) {
        return "circle(" + format_complex(c->center) + "," + format_complex(c->radius) + ")";
    }
    const auto& e = std::get<Ellipse>(curve.shape());
    return "ellipse(" + format_complex(e.center) + "," + format_complex(e.semi_a) + "," +
           format_complex(e.semi_b) + ")";
}

std::vector<CurveSample> sample(const Curve& curve, int n)
{
    if (n < 4) throw Error(ErrorKind::Precondition, "curve sampling needs N >= 4");
    std::vector<CurveSample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / n;
        out.push_back({t, curve.point(t), curve.tangent(t)});
    }
    return out;
}

cplx contour_integral(const std::function<cplx(cplx)>& integrand, const Curve& curve, int n)
{
    if (n < 1) throw Error(ErrorKind::Precondition, "quadrature needs N >= 1");
    cplx sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / n;
        sum += integrand(curve.point(t)) * curve.tangent(t);
    }
    return sum / static_cast<double>(n);
}

cplx contour_integral(const HoloExpr& integrand, const Curve& curve, int n)
{
    return contour_integral([&](cplx z) { return eval(integrand, z); }, curve, n);
}

double curve_distance(const Curve& first, const Curve& second, int n)
{
    n = std::max(n, 8);
    std::vector<cplx> p(static_cast<std::size_t>(n)), q(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        p[k] = first.point(static_cast<double>(k) / n);
        q[k] = second.point(static_cast<double>(k) / n);
    }

    struct Seed {
        double d2;
        int i, j;
    };
    constexpr std::size_t kSeeds = 8;
    std::vector<Seed> best;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double d2 = std::norm(p[i] - q[j]);
            if (best.size() < kSeeds || d2 < best.back().d2) {
                Seed s{d2, i, j};
                best.insert(std::upper_bound(best.begin(), best.end(), s,
                                             [](const Seed& a, const Seed& b) { return a.d2 < b.d2; }),
                            s);
                if (best.size() > kSeeds) best.pop_back();
            }
        }
    }

    const double h = 1.0 / n;
    double result = best.front().d2;
    for (const Seed& seed : best) {
        const double s0 = seed.i * h, t0 = seed.j * h;
        auto inner = [&](double s) {
            const cplx ps = first.point(s);
            double targ = 0.0;
            return detail::golden_min([&](double t) { return std::norm(ps - second.point(t)); }, t0 - 2 * h,
                              t0 + 2 * h, 80, &targ);
        };
        double sarg = 0.0;
        result = std::min(result, detail::golden_min(inner, s0 - 2 * h, s0 + 2 * h, 80, &sarg));
    }
    return std::sqrt(result);
}

}  // namespace holo
