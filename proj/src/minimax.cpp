#include "holo/minimax.hpp"

#include <algorithm>

namespace holo {

namespace {

double cross(cplx o, cplx a, cplx b)
{
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

cplx closest_on_segment(cplx a, cplx b)
{
    const cplx d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return a;
    double s = -(a.real() * d.real() + a.imag() * d.imag()) / len2;
    s = std::clamp(s, 0.0, 1.0);
    return a + s * d;
}

}  // namespace

cplx min_norm_in_hull(std::span<const cplx> points)
{
    if (points.empty()) return 0.0;
    std::vector<cplx> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) return pts[0];

    // Andrew's monotone chain, counter-clockwise, collinear points dropped.
    std::vector<cplx> hull(2 * pts.size());
    std::size_t k = 0;
    for (const cplx& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);

    if (hull.size() == 2) return closest_on_segment(hull[0], hull[1]);

    bool inside = true;
    for (std::size_t i = 0; i < hull.size() && inside; ++i) {
        inside = cross(hull[i], hull[(i + 1) % hull.size()], 0.0) >= 0.0;
    }
    if (inside) return 0.0;

    cplx best = hull[0];
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const cplx c = closest_on_segment(hull[i], hull[(i + 1) % hull.size()]);
        if (std::norm(c) < std::norm(best)) best = c;
    }
    return best;
}

}  // namespace holo
