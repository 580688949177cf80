#include "holo/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "holo/corpus.hpp"
#include "holo/curve.hpp"
#include "holo/error.hpp"
#include "holo/norm.hpp"
#include "holo/ortho.hpp"
#include "holo/polynomial.hpp"
#include "holo/zeros.hpp"

namespace holo {

namespace {

using corpus::Rng;

constexpr std::size_t kMaxNotes = 8;

class Recorder {
public:
    explicit Recorder(BlockResult& r) : r_(r) {}

    // One instance; an escaping exception counts as a failure.
    void check(const std::string& what, const std::function<bool()>& body)
    {
        ++r_.instances;
        std::string why;
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (ok) return;
        ++r_.failures;
        if (r_.notes.size() < kMaxNotes) r_.notes.push_back(why.empty() ? what : what + ": " + why);
    }

private:
    BlockResult& r_;
};

HoloExpr monomial(unsigned n)
{
    return HoloExpr::pow(HoloExpr::z(), n);
}

std::string describe(const HoloExpr& f, const HoloExpr& g, const Curve& c)
{
    return to_string(f) + " | " + to_string(g) + " on " + to_string(c);
}

double pick_radius(Rng& rng)
{
    static constexpr double radii[] = {0.5, 1.0, 2.0};
    return radii[corpus::uniform_int(rng, 0, 2)];
}

// q rescaled so that sum |q_k| r^k = target, which bounds it on |z| = r.
Polynomial scaled_to(const Polynomial& q, double r, double target)
{
    double s = 0.0;
    for (unsigned k = 0; k <= q.degree(); ++k) s += std::abs(q.coeff(k)) * std::pow(r, k);
    return (target / s) * q;
}

Polynomial from_roots(cplx leading, const std::vector<cplx>& roots)
{
    Polynomial p({leading});
    for (cplx b : roots) p = p * Polynomial({-b, 1.0});
    return p;
}

void monomial_ortho(const RunConfig& cfg, Rng&, Recorder& rec)
{
    for (double r : {0.5, 1.0, 2.0}) {
        for (unsigned n = 1; n <= 5; ++n) {
            for (unsigned m = 1; m <= 5; ++m) {
                if (m == n) continue;
                const Curve c = Curve::circle(0.0, r);
                rec.check(describe(monomial(n), monomial(m), c), [&] {
                    const OrthoDecision bj = bj_minimize(monomial(n), monomial(m), c, cfg);
                    const OrthoDecision cov = ortho_via_covering(monomial(n), monomial(m), c, cfg);
                    const double rn = std::pow(r, n);
                    return bj.verdict == Verdict::Orthogonal && cov.verdict == Verdict::Orthogonal &&
                           std::abs(bj.min_value - rn) <= 1e-6 * rn;
                });
            }
        }
    }
}

void poly_inequality(const RunConfig& cfg, Rng& rng, Recorder& rec)
{
    for (int i = 0; i < 50; ++i) {
        const unsigned n = corpus::uniform_int(rng, 1, 5);
        const unsigned m = corpus::uniform_int(rng, 0, static_cast<int>(n) - 1);
        const Polynomial q = corpus::random_polynomial(rng, m);
        const double r = i % 2 == 0 ? 1.0 : 2.0;
        const Curve c = Curve::circle(0.0, r);
        rec.check(describe(monomial(n), q.to_expr(), c), [&] {
            return bj_minimize(monomial(n), q.to_expr(), c, cfg).min_value >= std::pow(r, n) * (1.0 - 1e-6);
        });
    }
}

void large_radius(const RunConfig& cfg, Rng& rng, Recorder& rec)
{
    for (int i = 0; i < 50; ++i) {
        const unsigned n = 1 + i % 6;
        const Polynomial q = corpus::random_polynomial(rng, n);
        const double r = 1.1 * fta_bound(q);
        const Curve c = Curve::circle(0.0, r);
        rec.check(describe(monomial(n), q.to_expr(), c), [&] {
            const OrthoDecision d = bj_minimize(monomial(n), q.to_expr(), c, cfg);
            const double witness = combination_norm(monomial(n), q.to_expr(), -1.0 / q.leading(), c, cfg);
            return d.verdict == Verdict::NotOrthogonal && witness < std::pow(r, n);
        });
    }
}

void fta(const RunConfig& cfg, Rng& rng, Recorder& rec)
{
    for (int i = 0; i < 100; ++i) {
        const Polynomial q = corpus::random_polynomial(rng, 1 + i % 6);
        rec.check(to_string(q.to_expr()), [&] {
            const FtaReport r = fta_verify(q, 1.1, cfg);
            return r.witness_ok() && r.count_ok();
        });
    }
}

void covering(const RunConfig&, Rng& rng, Recorder& rec)
{
    for (int i = 0; i < 500; ++i) {
        cplx u = corpus::unit_box(rng), v = corpus::unit_box(rng);
        switch (i % 8) {
        case 0: u = 0.0; break;
        case 1: v = 0.0; break;
        case 2: u = v = 0.0; break;
        default: break;
        }
        const std::pair<cplx, cplx> pair{u, v};
        rec.check("singleton (" + format_complex(u) + ", " + format_complex(v) + ")", [&] {
            return covering_decide(std::span(&pair, 1)).covering == (u == 0.0 || v == 0.0);
        });
    }

    for (int i = 0; i < 1000; ++i) {
        cplx z1 = corpus::in_annulus(rng, 0.2, 1.0), z2 = corpus::in_annulus(rng, 0.2, 1.0);
        cplx w1 = corpus::in_annulus(rng, 0.2, 1.0), w2 = corpus::in_annulus(rng, 0.2, 1.0);
        const int kind = i % 5;
        if (kind == 0) {
            cplx* entries[] = {&z1, &z2, &w1, &w2};
            *entries[corpus::uniform_int(rng, 0, 3)] = 0.0;
        } else if (kind <= 3) {
            // conj(z1) z2 w1 conj(w2) on the negative real axis: tangent disks
            const double target = std::arg(-1.0 / (std::conj(z1) * z2 * w1));
            w2 = std::polar(std::abs(w2), -target);
            if (kind == 3) {
                // near miss: rotate off the axis
                const double angle = corpus::uniform(rng, 1e-2, 0.5);
                w2 *= std::polar(1.0, corpus::uniform_int(rng, 0, 1) == 0 ? angle : -angle);
            }
        }
        const std::pair<cplx, cplx> pairs[] = {{z1, z2}, {w1, w2}};
        rec.check("pair (" + format_complex(z1) + ", " + format_complex(z2) + "), (" + format_complex(w1) + ", " +
                      format_complex(w2) + ")",
                  [&] { return covering_decide(pairs).covering == pair_criterion(z1, z2, w1, w2); });
    }
}

struct PeakedPolynomial {
    Polynomial p;
    cplx peak;
};

// Maximum modulus attained at a single point, other local maxima at least 1% lower.
PeakedPolynomial robust_peak_polynomial(Rng& rng, const Curve& c, const RunConfig& cfg)
{
    for (int attempt = 0; attempt < 100; ++attempt) {
        Polynomial p = corpus::random_polynomial(rng, corpus::uniform_int(rng, 1, 4));
        const NormingSet s = norming_set(p.to_expr(), c, 1e-2, cfg);
        if (s.clusters.size() == 1 && s.clusters[0].kind == ClusterKind::Isolated) {
            return {std::move(p), c.point(s.clusters[0].t)};
        }
    }
    throw Error(ErrorKind::Precondition, "no polynomial with a robust isolated peak found");
}

void characterization(const RunConfig& cfg, Rng& rng, Recorder& rec)
{
    for (int i = 0; i < 200; ++i) {
        const double r = pick_radius(rng);
        const Curve c = Curve::circle(0.0, r);
        HoloExpr f, g;
        Verdict expected = Verdict::Orthogonal;
        switch (i % 5) {
        case 0: {
            const PeakedPolynomial pp = robust_peak_polynomial(rng, c, cfg);
            f = pp.p.to_expr();
            Polynomial q;
            do {
                q = corpus::random_polynomial(rng, corpus::uniform_int(rng, 0, 4));
            } while (std::abs(q(pp.peak)) < 0.2 * sup_norm(q.to_expr(), c, cfg).norm_value);
            g = q.to_expr();
            expected = Verdict::NotOrthogonal;
            break;
        }
        case 1: {
            // g vanishes at the unique norming point of f
            const PeakedPolynomial pp = robust_peak_polynomial(rng, c, cfg);
            f = pp.p.to_expr();
            const Polynomial h = corpus::random_polynomial(rng, corpus::uniform_int(rng, 0, 2));
            g = (Polynomial({-pp.peak, 1.0}) * h).to_expr();
            break;
        }
        case 2: {
            // zero counts differ, so orthogonality is forced
            const unsigned k = corpus::uniform_int(rng, 1, 3);
            f = corpus::random_blaschke(rng, k, r, 0.8).expr();
            int degree = 0, inside = 0;
            do {
                degree = corpus::uniform_int(rng, 0, 4);
                inside = corpus::uniform_int(rng, 0, degree);
            } while (inside == static_cast<int>(k));
            std::vector<cplx> roots;
            for (int j = 0; j < degree; ++j) {
                roots.push_back(j < inside ? corpus::in_disk(rng, 0.8 * r) : corpus::in_annulus(rng, 1.25 * r, 2.5 * r));
            }
            g = from_roots(corpus::unimodular(rng), roots).to_expr();
            break;
        }
        case 3: {
            // g/f stays in the disk |w - 1| <= 1/2
            const corpus::BlaschkeProduct b = corpus::random_blaschke(rng, corpus::uniform_int(rng, 1, 3), r, 0.8);
            f = b.expr();
            const Polynomial q = scaled_to(corpus::random_polynomial(rng, corpus::uniform_int(rng, 0, 3)), r, 0.5);
            g = HoloExpr::mul(f, (Polynomial({1.0}) + q).to_expr());
            expected = Verdict::NotOrthogonal;
            break;
        }
        default: {
            const int which = (i / 5) % 3;
            if (which == 0) {
                const unsigned n = corpus::uniform_int(rng, 1, 4);
                unsigned m = corpus::uniform_int(rng, 1, 3);
                if (m >= n) ++m;
                f = monomial(n);
                g = monomial(m);
            } else if (which == 1) {
                f = HoloExpr::z();
                g = HoloExpr::mul(HoloExpr::z(), HoloExpr::z() - HoloExpr::constant(r));
            } else {
                f = HoloExpr::z() + HoloExpr::constant(2.0 * r);
                g = HoloExpr::constant(1.0);
                expected = Verdict::NotOrthogonal;
            }
            break;
        }
        }
        rec.check(describe(f, g, c), [&] {
            const OrthoDecision bj = bj_minimize(f, g, c, cfg);
            const OrthoDecision cov = ortho_via_covering(f, g, c, cfg);
            return bj.verdict != Verdict::Inconclusive && bj.verdict == cov.verdict && bj.verdict == expected;
        });
    }
}

void classification(const RunConfig& cfg, Rng& rng, Recorder& rec)
{
    const Curve unit = Curve::circle(0.0, 1.0);
    const HoloExpr z = HoloExpr::z();
    rec.check("z+2 smooth", [&] {
        const PointClass pc = classify_point(z + HoloExpr::constant(2.0), unit, cfg);
        return pc.smoothness == Smoothness::Smooth && !pc.extreme;
    });
    rec.check("z^2+1 not smooth", [&] {
        const PointClass pc = classify_point(power(z, 2) + HoloExpr::constant(1.0), unit, cfg);
        return pc.smoothness == Smoothness::NotSmooth && !pc.extreme;
    });
    for (int i = 0; i < 19; ++i) {
        const double r = pick_radius(rng);
        const HoloExpr b = corpus::random_blaschke(rng, corpus::uniform_int(rng, 1, 4), r, 0.9).expr();
        const Curve c = Curve::circle(0.0, r);
        rec.check(to_string(b) + " extreme", [&] {
            const PointClass pc = classify_point(b, c, cfg);
            return pc.extreme && pc.smoothness == Smoothness::NotSmooth;
        });
    }
    for (int i = 0; i < 19; ++i) {
        const double r = pick_radius(rng);
        const HoloExpr p = corpus::random_polynomial(rng, corpus::uniform_int(rng, 1, 4)).to_expr();
        const Curve c = Curve::circle(0.0, r);
        rec.check(to_string(p) + " not extreme", [&] { return !classify_point(p, c, cfg).extreme; });
    }
}

void jgamma_zeros(const RunConfig& cfg, Rng& rng, Recorder& rec)
{
    for (int i = 0; i < 50; ++i) {
        const unsigned k = 1 + i % 4;
        const double r = pick_radius(rng);
        const HoloExpr b = corpus::random_blaschke(rng, k, r, 0.9).expr();
        const Curve c = Curve::circle(0.0, r);
        rec.check(to_string(b), [&] {
            const JGammaZeroCheck chk = verify_J_gamma_zero(b, c, cfg);
            return chk.holds && !chk.vacuous && chk.count == static_cast<int>(k);
        });
    }
}

bool cauchy_matches(const HoloExpr& f, cplx z0, unsigned n, double r, int quad_n)
{
    const cplx exact = eval(nth_derivative(f, n), z0);
    const cplx got = cauchy_derivative(f, z0, n, r, quad_n);
    return std::abs(got - exact) <= 1e-8 * std::abs(exact);
}

void cauchy(const RunConfig& cfg, Rng& rng, Recorder& rec)
{
    for (int i = 0; i < 60; ++i) {
        const unsigned degree = 1 + i % 6;
        const Polynomial p = corpus::random_polynomial(rng, degree);
        const unsigned n = corpus::uniform_int(rng, 0, std::min(4, static_cast<int>(degree)));
        const cplx z0 = corpus::in_disk(rng, 0.5);
        rec.check(to_string(p.to_expr()) + " n=" + std::to_string(n),
                  [&] { return cauchy_matches(p.to_expr(), z0, n, 1.0, cfg.quad_n); });
    }
    // rational integrands: the rule is no longer exact, accuracy depends on N
    for (int i = 0; i < 20; ++i) {
        const HoloExpr b = corpus::random_blaschke(rng, corpus::uniform_int(rng, 1, 2), 1.0, 0.6).expr();
        const unsigned n = corpus::uniform_int(rng, 0, 3);
        const cplx z0 = corpus::in_disk(rng, 0.3);
        rec.check(to_string(b) + " n=" + std::to_string(n), [&] { return cauchy_matches(b, z0, n, 0.5, cfg.quad_n); });
    }
}

void deriv_scenario(const RunConfig& cfg, Rng&, Recorder& rec)
{
    const HoloExpr z = HoloExpr::z();
    const HoloExpr f = power(z, 2);
    const HoloExpr g = power(z, 2) + HoloExpr::constant(0.01) * power(z, 3);
    const Curve outer = Curve::circle(0.0, 2.0);
    const Curve inner = Curve::circle(0.0, 0.5);
    rec.check("z^2, z^2+0.01z^3, n=2", [&] {
        const DerivativeScenario s = derivative_ortho_scenario(f, g, 2, outer, inner, -1.0, 1.0, cfg);
        return s.hypothesis_holds && std::abs(s.lhs - 0.08) <= 1e-9 && std::abs(s.rhs - 1.0) <= 1e-9 && s.decision &&
               s.decision->verdict == Verdict::NotOrthogonal && s.decision->achieved <= 1.81 && s.conclusion_holds;
    });
    rec.check("z^2, z^3, lambda0=0", [&] {
        const DerivativeScenario s = derivative_ortho_scenario(f, power(z, 3), 2, outer, inner, 0.0, 1.0, cfg);
        return !s.hypothesis_holds && std::abs(s.lhs - 4.0) <= 1e-9 && !s.decision;
    });
    rec.check("r beyond the curve distance", [&] {
        try {
            derivative_ortho_scenario(f, g, 2, outer, inner, -1.0, 1.5, cfg);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::GeometryViolation;
        }
        return false;
    });
}

void converse_example(const RunConfig& cfg, Rng&, Recorder& rec)
{
    const HoloExpr f = HoloExpr::z();
    const HoloExpr g = HoloExpr::z() * (HoloExpr::z() - HoloExpr::constant(1.0));
    const Curve unit = Curve::circle(0.0, 1.0);
    const Curve shrunk = Curve::circle(0.0, 0.9);
    rec.check("minimize: orthogonal", [&] { return bj_minimize(f, g, unit, cfg).verdict == Verdict::Orthogonal; });
    rec.check("covering: orthogonal",
              [&] { return ortho_via_covering(f, g, unit, cfg).verdict == Verdict::Orthogonal; });
    rec.check("zeros of f inside |z| = 0.9", [&] { return count_zeros(f, shrunk, cfg.grid_n).count == 1; });
    rec.check("zeros of g inside |z| = 0.9", [&] { return count_zeros(g, shrunk, cfg.grid_n).count == 1; });
    rec.check("zero of g on |z| = 1", [&] {
        try {
            count_zeros(g, unit, cfg.grid_n);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::ZeroOnCurve;
        }
        return false;
    });
}

void rouche(const RunConfig& cfg, Rng& rng, Recorder& rec)
{
    const HoloExpr z = HoloExpr::z();
    const Curve unit = Curve::circle(0.0, 1.0);
    rec.check("z^2, z^2+0.1z+0.05", [&] {
        const HoloExpr g = power(z, 2) + HoloExpr::constant(0.1) * z + HoloExpr::constant(0.05);
        const RoucheReport r = rouche_link(power(z, 2), g, unit, cfg);
        return r.claim == RoucheClaim::Holds && r.count_f == 2 && r.count_g == 2;
    });
    rec.check("z, z(z-1): no claim", [&] {
        return rouche_link(z, z * (z - HoloExpr::constant(1.0)), unit, cfg).claim == RoucheClaim::NoClaim;
    });
    rec.check("z, 1: no claim",
              [&] { return rouche_link(z, HoloExpr::constant(1.0), unit, cfg).claim == RoucheClaim::NoClaim; });
    for (int i = 0; i < 30; ++i) {
        const double r = pick_radius(rng);
        const HoloExpr b = corpus::random_blaschke(rng, corpus::uniform_int(rng, 1, 3), r, 0.8).expr();
        const Polynomial q = scaled_to(corpus::random_polynomial(rng, corpus::uniform_int(rng, 0, 3)), r, 0.5);
        const HoloExpr g = HoloExpr::add(b, q.to_expr());
        const Curve c = Curve::circle(0.0, r);
        rec.check(describe(b, g, c), [&] { return rouche_link(b, g, c, cfg).claim == RoucheClaim::Holds; });
    }
}

struct BlockSpec {
    const char* name;
    const char* label;
    void (*run)(const RunConfig&, Rng&, Recorder&);
};

constexpr BlockSpec kBlocks[] = {
    {"monomial-ortho", "z^n orthogonal to z^m for n != m", monomial_ortho},
    {"poly-inequality", "|z^n + lambda Q| >= r^n for deg Q < n", poly_inequality},
    {"large-radius", "z^n not orthogonal to Q of degree n on a large circle", large_radius},
    {"fta", "degree-n polynomial has n zeros inside the bound circle", fta},
    {"covering", "singleton and two-pair covering criteria", covering},
    {"characterization", "orthogonality iff the norming pairs cover", characterization},
    {"classification", "smooth and extreme points of the unit ball", classification},
    {"jgamma-zeros", "constant modulus on the curve forces an enclosed zero", jgamma_zeros},
    {"cauchy", "derivatives from the Cauchy integral", cauchy},
    {"deriv-scenario", "derivative non-orthogonality from a norm inequality", deriv_scenario},
    {"converse-example", "equal zero counts do not force non-orthogonality", converse_example},
    {"rouche", "non-orthogonality implies equal zero counts", rouche},
};

BlockResult run_block(const BlockSpec& spec, const RunConfig& cfg)
{
    BlockResult result;
    result.name = spec.name;
    result.label = spec.label;
    const auto start = std::chrono::steady_clock::now();
    Rng rng = corpus::stream(cfg.seed, spec.name);
    Recorder rec(result);
    try {
        spec.run(cfg, rng, rec);
    } catch (const std::exception& e) {
        // corpus construction failed
        ++result.instances;
        ++result.failures;
        result.notes.push_back(e.what());
    }
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

bool SuiteResult::passed() const
{
    return !blocks.empty() && std::all_of(blocks.begin(), blocks.end(), [](const BlockResult& b) { return b.passed(); });
}

const std::vector<std::string>& suite_block_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const BlockSpec& b : kBlocks) out.emplace_back(b.name);
        return out;
    }();
    return names;
}

SuiteResult verify_paper(const RunConfig& cfg, const std::vector<std::string>& only, unsigned workers)
{
    cfg.validate();
    for (const std::string& name : only) {
        const auto& names = suite_block_names();
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            throw Error(ErrorKind::Precondition, "unknown suite block '" + name + "'");
        }
    }
    std::vector<const BlockSpec*> selected;
    for (const BlockSpec& b : kBlocks) {
        if (only.empty() || std::find(only.begin(), only.end(), b.name) != only.end()) selected.push_back(&b);
    }

    SuiteResult result;
    result.blocks.resize(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) result.blocks[i] = run_block(*selected[i], cfg);
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(selected.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return result;
}

std::string format_table(const SuiteResult& result)
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-18s %9s %8s  %-6s %s\n", "block", "instances", "failures", "result", "label");
    out << line;
    for (const BlockResult& b : result.blocks) {
        std::snprintf(line, sizeof line, "%-18s %9d %8d  %-6s %s\n", b.name.c_str(), b.instances, b.failures,
                      b.passed() ? "PASS" : "FAIL", b.label.c_str());
        out << line;
        for (const std::string& note : b.notes) out << "    failed: " << note << '\n';
    }
    out << "overall: " << (result.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

nlohmann::ordered_json to_json(const SuiteResult& result)
{
    nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
    for (const BlockResult& b : result.blocks) {
        blocks.push_back({{"name", b.name},
                          {"label", b.label},
                          {"instances", b.instances},
                          {"failures", b.failures},
                          {"passed", b.passed()},
                          {"notes", b.notes},
                          {"elapsed_ms", b.elapsed_ms}});
    }
    return {{"passed", result.passed()}, {"blocks", blocks}};
}

}  // namespace holo
