#include <doctest.h>

#include "holo/corpus.hpp"
#include "holo/curve.hpp"
#include "holo/error.hpp"
#include "oracles.hpp"

using namespace holo;

namespace {

const cplx two_pi_i(0.0, 2.0 * oracle::pi);

}  // namespace

TEST_SUITE("curve")
{
    TEST_CASE("four-point samples")
    {
        const auto c = sample(Curve::circle(0.0, 1.0), 4);
        const cplx expect[] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
        for (int k = 0; k < 4; ++k) CHECK(std::abs(c[k].point - expect[k]) < 1e-15);
        const auto e = sample(Curve::ellipse(0.0, 2.0, 1.0), 4);
        const cplx expect_e[] = {2.0, cplx(0, 1), -2.0, cplx(0, -1)};
        for (int k = 0; k < 4; ++k) CHECK(std::abs(e[k].point - expect_e[k]) < 1e-15);
        CHECK_THROWS_AS(sample(Curve::circle(0.0, 1.0), 3), Error);
    }

    TEST_CASE("tangent matches finite differences")
    {
        for (const Curve& c : {Curve::circle(cplx(1, 1), 2.5), Curve::ellipse(cplx(-1, 0), 2.0, 0.5)}) {
            for (double t : {0.0, 0.13, 0.5, 0.77}) {
                const double h = 1e-6;
                const cplx fd = (c.point(t + h) - c.point(t - h)) / (2 * h);
                CHECK(std::abs(c.tangent(t) - fd) < 1e-6 * std::abs(fd));
                CHECK(std::abs(c.tangent(t)) > 0.0);
            }
        }
    }

    TEST_CASE("consecutive samples are distinct")
    {
        for (const Curve& c : {Curve::circle(0.0, 1.0), Curve::ellipse(cplx(0.5, 0.5), 3.0, 0.1)}) {
            const auto s = sample(c, 1 << 20);
            bool distinct = true;
            for (std::size_t k = 0; k < s.size(); ++k) distinct &= s[k].point != s[(k + 1) % s.size()].point;
            CHECK(distinct);
        }
    }

    TEST_CASE("curve literals")
    {
        const Curve c = parse_curve("circle(1+1i,2.5)");
        CHECK(std::get<Circle>(c.shape()).radius == 2.5);
        CHECK(std::get<Circle>(c.shape()).center == cplx(1, 1));
        const Curve e = parse_curve("ellipse(0,2,1)");
        CHECK(std::get<Ellipse>(e.shape()).semi_a == 2.0);
        CHECK(to_string(parse_curve(to_string(c))) == to_string(c));
        CHECK_THROWS_AS(parse_curve("circle(0)"), ParseError);
        CHECK_THROWS_AS(parse_curve("square(0,1)"), ParseError);
        CHECK_THROWS_AS(parse_curve("circle(0,-1)"), Error);
        try {
            parse_curve("ellipse(0,0,1)");
        } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::GeometryViolation);
        }
    }

    TEST_CASE("contour integral examples")
    {
        const Curve unit = Curve::circle(0.0, 1.0);
        const cplx z0(0.3, -0.2);
        CHECK(std::abs(contour_integral([&](cplx z) { return 1.0 / (z - z0); }, unit, 256) - two_pi_i) < 1e-10);
        CHECK(std::abs(contour_integral([](cplx z) { return z * z; }, Curve::ellipse(1.0, 2.0, 1.0), 256)) < 1e-10);
        CHECK(std::abs(contour_integral([](cplx z) { return 1.0 / (z - 3.0); }, unit, 256)) < 1e-10);
        CHECK(std::abs(contour_integral(parse("1/(z-0.5)"), unit, 256) - two_pi_i) < 1e-10);
        CHECK_THROWS_AS(contour_integral(parse("1/(z-1)"), unit, 256), Error);
    }

    TEST_CASE("doubling N changes an analytic integral very little")
    {
        const Curve e = Curve::ellipse(0.0, 2.0, 1.0);
        auto f = [](cplx z) { return 1.0 / (z - cplx(0.5, 0.3)) + 1.0 / (z * z + 9.0); };
        for (int n = 128; n <= 4096; n *= 2) {
            const cplx a = contour_integral(f, e, n), b = contour_integral(f, e, 2 * n);
            CHECK(std::abs(a - b) < 1e-10 * std::abs(b));
        }
    }

    TEST_CASE("cauchy integral of 1/(z-z0) detects inside and outside")
    {
        auto rng = corpus::stream(3, "curve-index");
        const Curve curves[] = {Curve::circle(cplx(1, -1), 1.5), Curve::ellipse(0.0, 2.0, 1.0)};
        for (const Curve& c : curves) {
            for (int i = 0; i < 200; ++i) {
                cplx z0 = c.center() + cplx(corpus::uniform(rng, -3, 3), corpus::uniform(rng, -3, 3));
                // keep away from the curve itself
                const auto s = sample(c, 2048);
                double d = HUGE_VAL;
                for (const auto& p : s) d = std::min(d, std::abs(p.point - z0));
                if (d < 0.05) continue;
                bool inside = false;
                if (const auto* circ = std::get_if<Circle>(&c.shape())) {
                    inside = std::abs(z0 - circ->center) < circ->radius;
                } else {
                    const auto& el = std::get<Ellipse>(c.shape());
                    const cplx w = z0 - el.center;
                    inside = std::pow(w.real() / el.semi_a, 2) + std::pow(w.imag() / el.semi_b, 2) < 1.0;
                }
                const cplx idx = contour_integral([&](cplx z) { return 1.0 / (z - z0); }, c, 4096) / two_pi_i;
                CHECK(std::lround(idx.real()) == (inside ? 1 : 0));
                CHECK(std::abs(idx.imag()) < 1e-6);
            }
        }
    }

    TEST_CASE("curve distance")
    {
        CHECK(std::abs(curve_distance(Curve::circle(0.0, 2.0), Curve::circle(0.0, 0.5)) - 1.5) < 1e-6);
        CHECK(std::abs(curve_distance(Curve::circle(0.0, 1.0), Curve::circle(3.0, 1.0)) - 1.0) < 1e-6);

        // dense oracle: concentric circle inside the ellipse, distance = min |gamma(t)| - 0.5
        const int n = 100000;
        double dense = HUGE_VAL;
        for (int k = 0; k < n; ++k) {
            dense = std::min(dense, std::abs(oracle::ellipse_point(0.0, 2.0, 1.0, static_cast<double>(k) / n)) - 0.5);
        }
        const double d = curve_distance(Curve::ellipse(0.0, 2.0, 1.0), Curve::circle(0.0, 0.5));
        CHECK(std::abs(d - 0.5) < 1e-4);
        CHECK(std::abs(d - dense) < 1e-4);
    }

    TEST_CASE("curve distance is symmetric")
    {
        auto rng = corpus::stream(3, "curve-distance");
        for (int i = 0; i < 10; ++i) {
            const Curve a = Curve::ellipse(corpus::unit_box(rng), corpus::uniform(rng, 1.5, 3), corpus::uniform(rng, 1.5, 3));
            const Curve b = Curve::circle(corpus::unit_box(rng) * 0.2, corpus::uniform(rng, 0.2, 0.8));
            CHECK(std::abs(curve_distance(a, b) - curve_distance(b, a)) < 1e-9);
        }
    }
}
