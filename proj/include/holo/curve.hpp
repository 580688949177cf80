#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "holo/expr.hpp"

namespace holo {

struct Circle {
    cplx center;
    double radius;
};

struct Ellipse {
    cplx center;
    double semi_a;  // along the real axis
    double semi_b;  // along the imaginary axis
};

/// Simple closed curve with a regular 1-periodic parametrization on [0, 1).
class Curve {
public:
    static Curve circle(cplx center, double radius);
    static Curve ellipse(cplx center, double semi_a, double semi_b);

    cplx point(double t) const;
    /// d gamma / dt.
    cplx tangent(double t) const;

    const std::variant<Circle, Ellipse>& shape() const { return shape_; }
    /// Interior point used as a reference for containment tests.
    cplx center() const;
    /// Both supported kinds are real-analytic curves.
    bool is_analytic() const { return true; }

private:
    explicit Curve(std::variant<Circle, Ellipse> shape) : shape_(shape) {}

    std::variant<Circle, Ellipse> shape_;
};

/// Accepts "circle(c,r)" and "ellipse(c,a,b)" with complex literal centers.
Curve parse_curve(std::string_view text);
std::string to_string(const Curve& curve);

inline constexpr int kDefaultGrid = 4096;

struct CurveSample {
    double t;
    cplx point;
    cplx tangent;
};

/// Uniform grid t_k = k/N, N >= 4.
std::vector<CurveSample> sample(const Curve& curve, int n);

/// Periodic trapezoid rule (1/N) sum F(gamma(t_k)) gamma'(t_k).
cplx contour_integral(const std::function<cplx(cplx)>& integrand, const Curve& curve, int n);
cplx contour_integral(const HoloExpr& integrand, const Curve& curve, int n);

/// Dense n x n sampling followed by local descent on |gamma1(s) - gamma2(t)|.
double curve_distance(const Curve& first, const Curve& second, int n = 512);

}  // namespace holo
