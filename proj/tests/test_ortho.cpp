#include <doctest.h>

#include "holo/corpus.hpp"
#include "holo/error.hpp"
#include "holo/minimax.hpp"
#include "holo/norm.hpp"
#include "holo/ortho.hpp"
#include "oracles.hpp"

using namespace holo;

namespace {

const Curve unit = Curve::circle(0.0, 1.0);

std::vector<cplx> samples(const HoloExpr& f, double r, int m = 2048)
{
    return oracle::circle_samples([&](cplx z) { return eval(f, z); }, 0.0, r, m);
}

struct DistancePieces {
    std::vector<cplx> points;
    std::size_t size() const { return points.size(); }
    void values(cplx x, std::vector<double>& out) const
    {
        out.resize(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) out[i] = std::abs(x - points[i]);
    }
    cplx gradient(std::size_t i, cplx x, double value) const { return value == 0.0 ? cplx{} : (x - points[i]) / value; }
};

std::pair<cplx, cplx> pair_for_direction(double angle, double radius)
{
    // v = 1, u = -c gives the disk centered at c through the origin
    return {-std::polar(radius, angle), 1.0};
}

}  // namespace

TEST_SUITE("ortho")
{
    TEST_CASE("minimum-norm point of a hull")
    {
        const cplx seg[] = {cplx(1, 1), cplx(1, -1)};
        CHECK(std::abs(min_norm_in_hull(seg) - 1.0) < 1e-15);
        const cplx around[] = {1.0, -1.0, cplx(0, 1)};
        CHECK(min_norm_in_hull(around) == 0.0);
        const cplx single[] = {cplx(3, 4)};
        CHECK(min_norm_in_hull(single) == cplx(3, 4));

        auto rng = corpus::stream(11, "hull");
        for (int i = 0; i < 200; ++i) {
            std::vector<cplx> pts;
            const cplx shift = corpus::unit_box(rng) * 3.0;
            for (int k = 0, n = corpus::uniform_int(rng, 1, 6); k < n; ++k) pts.push_back(shift + corpus::unit_box(rng));
            const cplx p = min_norm_in_hull(pts);
            // brute force over convex combinations of pairs and triples
            double brute = HUGE_VAL;
            for (std::size_t a = 0; a < pts.size(); ++a) {
                for (std::size_t b = 0; b < pts.size(); ++b) {
                    for (int s = 0; s <= 400; ++s) brute = std::min(brute, std::abs(pts[a] + (pts[b] - pts[a]) * (s / 400.0)));
                }
            }
            CHECK(std::abs(p) <= brute + 1e-12);
            CHECK((std::abs(p) >= brute - 2e-2 || std::abs(p) < 1e-12));
        }
    }

    TEST_CASE("minimax finds the smallest enclosing circle centre")
    {
        DistancePieces pieces;
        for (int k = 0; k < 3; ++k) pieces.points.push_back(std::polar(1.0, 2.0 * oracle::pi * k / 3.0) + cplx(2, -1));
        MinimaxOptions opt;
        opt.delta_start = 1e-1;
        opt.delta_min = 1e-14;
        opt.stop_decrease = 1e-14;
        const MinimaxResult r = minimize_max(pieces, 0.0, opt);
        CHECK(std::abs(r.value - 1.0) < 1e-9);
        CHECK(std::abs(r.x - cplx(2, -1)) < 1e-6);
    }

    TEST_CASE("exclusion regions")
    {
        CHECK(exclusion_region(0.0, 5.0).all_plane);
        CHECK(exclusion_region(2.0, 0.0).all_plane);
        const GoodRegion g = exclusion_region(1.0, 1.0);
        REQUIRE_FALSE(g.all_plane);
        CHECK(std::abs(g.disk.center + 1.0) < 1e-15);
        CHECK(std::abs(g.disk.radius - 1.0) < 1e-15);

        // brute check on a lambda grid: |1 + lambda| < 1 iff inside the disk
        for (int i = 0; i <= 40; ++i) {
            for (int j = 0; j <= 40; ++j) {
                const cplx lambda(-2.5 + i * 0.1 + 0.013, -2.0 + j * 0.1 + 0.007);
                CHECK((std::abs(1.0 + lambda) < 1.0) == (std::abs(lambda - g.disk.center) < g.disk.radius));
            }
        }
    }

    TEST_CASE("disk boundary identity")
    {
        auto rng = corpus::stream(11, "disk-boundary");
        for (int i = 0; i < 1000; ++i) {
            const cplx u = corpus::unit_box(rng) * 4.0, v = corpus::unit_box(rng) * 4.0;
            const GoodRegion g = exclusion_region(u, v);
            REQUIRE_FALSE(g.all_plane);
            const cplx e = corpus::unimodular(rng);
            const cplx on = g.disk.center + g.disk.radius * e;
            CHECK(std::abs(std::abs(u + on * v) - std::abs(u)) <= 1e-9 * std::abs(u));
            CHECK(std::abs(u + (g.disk.center + 0.9 * g.disk.radius * e) * v) < std::abs(u));
            CHECK(std::abs(u + (g.disk.center + 1.1 * g.disk.radius * e) * v) > std::abs(u));
        }
    }

    TEST_CASE("covering examples")
    {
        const std::pair<cplx, cplx> one[] = {{1.0, 1.0}};
        const CoveringResult a = covering_decide(one);
        CHECK_FALSE(a.covering);
        REQUIRE(a.witness);
        CHECK(std::abs(1.0 + *a.witness) < 1.0);

        const std::pair<cplx, cplx> two[] = {{1.0, 1.0}, {1.0, -1.0}};
        CHECK(covering_decide(two).covering);

        const std::pair<cplx, cplx> three[] = {{3.0, 1.0}};
        CHECK_FALSE(covering_decide(three).covering);

        const std::pair<cplx, cplx> zero[] = {{0.0, 5.0}, {1.0, 1.0}};
        CHECK(covering_decide(zero).covering);
        CHECK(covering_decide(zero).all_plane);

        CHECK_THROWS_AS(covering_decide(std::span<const std::pair<cplx, cplx>>{}), Error);
    }

    TEST_CASE("three disks meeting pairwise but not jointly")
    {
        std::vector<std::pair<cplx, cplx>> pairs;
        for (int k = 0; k < 3; ++k) pairs.push_back(pair_for_direction(2.0 * oracle::pi * k / 3.0, 1.0 + 0.3 * k));
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                const std::pair<cplx, cplx> two[] = {pairs[a], pairs[b]};
                CHECK_FALSE(covering_decide(two).covering);
            }
        }
        CHECK(covering_decide(pairs).covering);

        // all directions within a half plane: common intersection exists
        std::vector<std::pair<cplx, cplx>> narrow;
        for (int k = 0; k < 3; ++k) narrow.push_back(pair_for_direction(oracle::pi / 3.0 * k, 1.0));
        const CoveringResult r = covering_decide(narrow);
        CHECK_FALSE(r.covering);
        REQUIRE(r.witness);
        for (const auto& [u, v] : narrow) CHECK(std::abs(u + *r.witness * v) < std::abs(u));
    }

    TEST_CASE("nearly tangent pairs")
    {
        // opposite directions cover; any rotation leaves a thin lens near 0
        for (double off : {0.0, 1e-7, -1e-6, 1e-4}) {
            const std::pair<cplx, cplx> two[] = {pair_for_direction(0.0, 1.0), pair_for_direction(oracle::pi + off, 2.0)};
            const CoveringResult r = covering_decide(two);
            CHECK(r.covering == (off == 0.0));
            if (r.witness) {
                for (const auto& [u, v] : two) CHECK(std::norm(u + *r.witness * v) < std::norm(u));
            }
        }
    }

    TEST_CASE("pair criterion examples")
    {
        CHECK(pair_criterion(1, 1, 1, -1));
        CHECK_FALSE(pair_criterion(1, 1, 1, 1));
        CHECK(pair_criterion(0, 7, 3, 2));
    }

    TEST_CASE("minimization examples against a lambda-grid oracle")
    {
        const OrthoDecision d = bj_minimize(parse("z+2"), parse("1"), unit);
        CHECK(d.verdict == Verdict::NotOrthogonal);
        REQUIRE(d.witness);
        const auto fs = samples(parse("z+2"), 1.0), gs = samples(parse("1"), 1.0);
        const oracle::GridMin brute = oracle::lambda_grid_min(fs, gs, -1, 1, -1, 1, 201);
        CHECK(brute.value <= 2.0 + 1e-12);
        CHECK(oracle::sampled_norm(fs, gs, -0.5) < 3.0);
        CHECK(d.achieved <= brute.value + 1e-9);
        CHECK(std::abs(oracle::sampled_norm(fs, gs, *d.witness) - d.achieved) < 1e-6);
        CHECK(d.achieved <= d.base_norm * (1.0 - 1e-4));

        const OrthoDecision e = bj_minimize(parse("z"), parse("z*(z-1)"), unit);
        CHECK(e.verdict == Verdict::Orthogonal);
        CHECK(e.min_value >= e.base_norm * (1.0 - 1e-7));
    }

    TEST_CASE("orthogonality is not symmetric")
    {
        const HoloExpr f = parse("z"), g = parse("z*(z-1)");
        CHECK(bj_minimize(f, g, unit).verdict == Verdict::Orthogonal);
        const OrthoDecision back = bj_minimize(g, f, unit);
        CHECK(back.verdict == Verdict::NotOrthogonal);
        const oracle::GridMin brute = oracle::lambda_grid_min(samples(g, 1.0), samples(f, 1.0), -2, 2, -2, 2, 161);
        CHECK(brute.value < 2.0 * (1.0 - 1e-3));
        CHECK(back.achieved <= brute.value + 1e-9);
    }

    TEST_CASE("minimizer is at least as good as brute force")
    {
        auto rng = corpus::stream(11, "bj-brute");
        for (int i = 0; i < 20; ++i) {
            const double r = corpus::uniform(rng, 0.5, 2.0);
            const HoloExpr f = corpus::random_polynomial(rng, corpus::uniform_int(rng, 1, 4)).to_expr();
            const HoloExpr g = corpus::random_polynomial(rng, corpus::uniform_int(rng, 0, 4)).to_expr();
            const OrthoDecision d = bj_minimize(f, g, Curve::circle(0.0, r));
            const auto fs = samples(f, r, 1024), gs = samples(g, r, 1024);
            const double scale = 2.0 * oracle::sampled_norm(fs, gs, 0.0) / oracle::sampled_norm(gs, fs, 0.0);
            const oracle::GridMin brute = oracle::lambda_grid_min(fs, gs, -scale, scale, -scale, scale, 101);
            CHECK(d.min_value <= brute.value * (1.0 + 1e-9));
        }
    }

    TEST_CASE("covering path examples")
    {
        for (unsigned n = 1; n <= 3; ++n) {
            for (unsigned m = 1; m <= 3; ++m) {
                if (m == n) continue;
                const OrthoDecision d = ortho_via_covering(power(HoloExpr::z(), n), power(HoloExpr::z(), m), unit);
                CHECK(d.verdict == Verdict::Orthogonal);
                CHECK(d.discrete_mf);
            }
        }
        const OrthoDecision a = ortho_via_covering(parse("z+2"), parse("1"), unit);
        CHECK(a.verdict == Verdict::NotOrthogonal);
        REQUIRE(a.witness);
        CHECK(combination_norm(parse("z+2"), parse("1"), *a.witness, unit) < 3.0 * (1.0 - 1e-4));
        CHECK(ortho_via_covering(parse("z"), parse("z*(z-1)"), unit).verdict == Verdict::Orthogonal);
        CHECK(ortho_via_covering(parse("z+2"), parse("z-1"), unit).verdict == Verdict::Orthogonal);
    }

    TEST_CASE("sufficient conditions")
    {
        CHECK(sufficient_zero(parse("z"), parse("z*(z-1)"), unit));
        CHECK_FALSE(sufficient_zero(parse("z+2"), parse("1"), unit));
        CHECK(sufficient_zero(parse("z^2"), parse("z-i"), unit));

        CHECK(sufficient_argument(parse("z^2"), parse("z^5"), unit));
        CHECK_FALSE(sufficient_argument(parse("z+2"), parse("1"), unit));
        CHECK_FALSE(sufficient_argument(parse("z"), parse("2*z"), unit));
    }

    TEST_CASE("zero left argument and scale invariance")
    {
        CHECK(bj_minimize(parse("0"), parse("z"), unit).verdict == Verdict::Orthogonal);
        CHECK(ortho_via_covering(parse("0"), parse("z^2+1"), unit).verdict == Verdict::Orthogonal);

        auto rng = corpus::stream(11, "scale");
        for (int i = 0; i < 20; ++i) {
            HoloExpr f, g;
            if (i % 3 == 0) {
                f = power(HoloExpr::z(), 2);
                g = power(HoloExpr::z(), 1 + i % 2 * 2);
            } else {
                f = corpus::random_polynomial(rng, corpus::uniform_int(rng, 1, 4)).to_expr();
                g = corpus::random_polynomial(rng, corpus::uniform_int(rng, 0, 4)).to_expr();
            }
            const cplx c = corpus::in_annulus(rng, 0.2, 5.0), d = corpus::in_annulus(rng, 0.2, 5.0);
            const OrthoDecision a = bj_minimize(f, g, unit);
            const OrthoDecision b = bj_minimize(HoloExpr::constant(c) * f, HoloExpr::constant(d) * g, unit);
            CHECK(a.verdict == b.verdict);
            CHECK(std::abs(b.min_value - std::abs(c) * a.min_value) <= 1e-6 * std::abs(c) * a.base_norm);
        }
    }

    TEST_CASE("combination norm is convex in lambda")
    {
        RunConfig cfg;
        cfg.grid_n = 1024;
        auto rng = corpus::stream(11, "convexity");
        for (int i = 0; i < 4; ++i) {
            const HoloExpr f = corpus::random_polynomial(rng, 3).to_expr();
            const HoloExpr g = i % 2 ? corpus::random_blaschke(rng, 2, 1.0, 0.8).expr()
                                     : corpus::random_polynomial(rng, 2).to_expr();
            for (int k = 0; k < 100; ++k) {
                const cplx a = corpus::unit_box(rng) * 2.0, b = corpus::unit_box(rng) * 2.0;
                const double mid = combination_norm(f, g, 0.5 * (a + b), unit, cfg);
                const double ends = 0.5 * combination_norm(f, g, a, unit, cfg) + 0.5 * combination_norm(f, g, b, unit, cfg);
                CHECK(mid <= ends + 1e-10);
            }
        }
    }

    TEST_CASE("poles are reported")
    {
        CHECK_THROWS_AS(bj_minimize(parse("1/(z-1)"), parse("1"), unit), Error);
    }
}
