#include "holo/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "holo/config.hpp"
#include "holo/curve.hpp"
#include "holo/error.hpp"
#include "holo/norm.hpp"
#include "holo/ortho.hpp"
#include "holo/polynomial.hpp"
#include "holo/report.hpp"
#include "holo/suite.hpp"
#include "holo/zeros.hpp"

namespace holo {

namespace {

constexpr int kSuiteFailure = 5;

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

double parse_real(const std::string& text, const char* what)
{
    const cplx v = parse_complex(text);
    if (v.imag() != 0.0) throw ParseError(std::string(what) + " must be real", 0);
    return v.real();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file) throw Error(ErrorKind::Precondition, "cannot write " + out_path);
    file << text;
}

class Timer {
public:
    double elapsed_ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Args {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;

    std::string f, g, curve = "circle(0,1)";
    std::string method = "both";
    std::optional<double> eps, tol;
    std::vector<std::string> pairs;
    double slack = 1.1;
    unsigned n = 1;
    std::string outer, inner, lambda0 = "0", radius;
    std::string box = "-1,1,-1,1";
    int res = 11;
    std::vector<std::string> only;
    unsigned jobs = 0;
};

ordered_json ortho_outputs(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const std::string& method,
                           const RunConfig& cfg)
{
    ordered_json o;
    std::optional<OrthoDecision> minimize, cover;
    if (method == "minimize" || method == "both") minimize = bj_minimize(f, g, curve, cfg);
    if (method == "covering" || method == "both") cover = ortho_via_covering(f, g, curve, cfg);
    const OrthoDecision& main = minimize ? *minimize : *cover;
    o["verdict"] = to_string(main.verdict);
    if (minimize) o["minimize"] = to_json(*minimize);
    if (cover) o["covering"] = to_json(*cover);
    if (minimize && cover) o["disagreement"] = minimize->verdict != cover->verdict;
    if (main.base_norm >= kZeroNorm) {
        o["sufficient_zero"] = sufficient_zero(f, g, curve, cfg);
        o["sufficient_argument"] = sufficient_argument(f, g, curve, 2.0 * std::numbers::pi / 64.0, cfg);
    }
    return o;
}

std::string landscape_csv(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const std::string& box, int res,
                          const RunConfig& cfg)
{
    const std::vector<std::string> parts = split(box, ',');
    if (parts.size() != 4) throw ParseError("box must be \"xmin,xmax,ymin,ymax\"", 0);
    double b[4];
    for (int i = 0; i < 4; ++i) b[i] = parse_real(parts[i], "box bound");
    if (!(b[0] <= b[1] && b[2] <= b[3])) throw Error(ErrorKind::Precondition, "box bounds must be ordered");
    if (res < 1) throw Error(ErrorKind::Precondition, "resolution must be at least 1");

    auto coord = [res](double lo, double hi, int i) {
        return res == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (res - 1);
    };
    std::string csv = "re_lambda,im_lambda,value\n";
    char line[128];
    for (int i = 0; i < res; ++i) {
        for (int j = 0; j < res; ++j) {
            const cplx lambda(coord(b[0], b[1], i), coord(b[2], b[3], j));
            const double value = combination_norm(f, g, lambda, curve, cfg);
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", lambda.real(), lambda.imag(), value);
            csv += line;
        }
    }
    return csv;
}

int dispatch(CLI::App& app, const Args& a, std::ostream& out)
{
    RunConfig cfg = a.config_path.empty() ? RunConfig{} : load_config(a.config_path);
    if (a.seed) cfg.seed = *a.seed;
    cfg.validate();

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();

    if (command == "verify-paper") {
        const Timer timer;
        const SuiteResult result = verify_paper(cfg, a.only, a.jobs);
        out << format_table(result);
        if (!a.out_path.empty()) {
            Report r;
            r.command = command;
            r.inputs = {{"only", a.only}};
            r.outputs = to_json(result);
            r.elapsed_ms = timer.elapsed_ms();
            r.config = cfg;
            emit(r.dump() + "\n", a.out_path, out);
        }
        return result.passed() ? 0 : kSuiteFailure;
    }

    if (command == "landscape") {
        const Curve curve = parse_curve(a.curve);
        emit(landscape_csv(parse(a.f), parse(a.g), curve, a.box, a.res, cfg), a.out_path, out);
        return 0;
    }

    Report r;
    r.command = command;
    r.config = cfg;
    const Timer timer;
    if (command == "covering") {
        std::vector<std::pair<cplx, cplx>> pairs;
        ordered_json listed = ordered_json::array();
        for (const std::string& text : a.pairs) {
            const std::vector<std::string> uv = split(text, ',');
            if (uv.size() != 2) throw ParseError("pair must be \"u,v\": " + text, 0);
            pairs.emplace_back(parse_complex(uv[0]), parse_complex(uv[1]));
            listed.push_back(text);
        }
        r.inputs["pairs"] = listed;
        r.outputs = to_json(covering_decide(pairs));
        if (pairs.size() == 2) {
            r.outputs["pair_criterion"] =
                pair_criterion(pairs[0].first, pairs[0].second, pairs[1].first, pairs[1].second);
        }
    } else if (command == "fta") {
        r.inputs["q"] = a.f;
        const std::optional<Polynomial> q = as_polynomial(parse(a.f));
        if (!q) throw Error(ErrorKind::Precondition, "fta needs a polynomial");
        r.inputs["slack"] = a.slack;
        r.outputs = to_json(fta_verify(*q, a.slack, cfg));
    } else if (command == "deriv-scenario") {
        const Curve outer = parse_curve(a.outer), inner = parse_curve(a.inner);
        const cplx lambda0 = parse_complex(a.lambda0);
        const double radius = parse_real(a.radius, "radius");
        r.inputs = {{"f", a.f},          {"g", a.g},         {"n", a.n},
                    {"outer", to_string(outer)}, {"inner", to_string(inner)}, {"lambda0", complex_json(lambda0)},
                    {"radius", radius}};
        r.outputs = to_json(derivative_ortho_scenario(parse(a.f), parse(a.g), a.n, outer, inner, lambda0, radius, cfg));
    } else {
        const Curve curve = parse_curve(a.curve);
        const HoloExpr f = parse(a.f);
        r.inputs["f"] = a.f;
        if (command == "ortho") r.inputs["g"] = a.g;
        r.inputs["curve"] = to_string(curve);
        if (command == "norm") {
            r.outputs = to_json(sup_norm(f, curve, cfg));
        } else if (command == "norming-set") {
            const double eps = a.eps.value_or(cfg.norming_eps);
            r.inputs["eps"] = eps;
            const NormingSet s = norming_set(f, curve, eps, cfg);
            r.outputs = to_json(s);
            r.outputs["params"] = norming_params(s).size();
        } else if (command == "jgamma") {
            const double tol = a.tol.value_or(cfg.jgamma_tol);
            r.inputs["tol"] = tol;
            r.outputs = to_json(jgamma_report(f, curve, tol, cfg));
        } else if (command == "classify") {
            r.outputs = to_json(classify_point(f, curve, cfg));
            r.outputs["analytic_curve"] = curve.is_analytic();
        } else if (command == "ortho") {
            r.inputs["method"] = a.method;
            r.outputs = ortho_outputs(f, parse(a.g), curve, a.method, cfg);
        } else if (command == "zeros") {
            r.outputs = to_json(count_zeros(f, curve, cfg.grid_n));
        }
    }
    r.elapsed_ms = timer.elapsed_ms();
    emit(r.dump() + "\n", a.out_path, out);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Birkhoff-James orthogonality of holomorphic functions on closed curves", "holortho"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--config", a.config_path, "JSON run configuration");
    app.add_option("--seed", a.seed, "override the configured seed");
    app.add_option("--out", a.out_path, "write the report to a file instead of stdout");

    auto with_curve = [&](CLI::App* c) { c->add_option("--curve", a.curve, "circle(c,r) or ellipse(c,a,b)"); };

    CLI::App* norm = app.add_subcommand("norm", "sup norm on the curve");
    norm->add_option("f", a.f)->required();
    with_curve(norm);

    CLI::App* ns = app.add_subcommand("norming-set", "points where |f| attains its norm");
    ns->add_option("f", a.f)->required();
    ns->add_option("--eps", a.eps, "relative threshold");
    with_curve(ns);

    CLI::App* jg = app.add_subcommand("jgamma", "constant modulus on the curve");
    jg->add_option("f", a.f)->required();
    jg->add_option("--tol", a.tol, "relative tolerance");
    with_curve(jg);

    CLI::App* cl = app.add_subcommand("classify", "smooth / extreme point classification");
    cl->add_option("f", a.f)->required();
    with_curve(cl);

    CLI::App* ortho = app.add_subcommand("ortho", "decide f orthogonal to g");
    ortho->add_option("f", a.f)->required();
    ortho->add_option("g", a.g)->required();
    ortho->add_option("--method", a.method)->check(CLI::IsMember({"minimize", "covering", "both"}));
    with_curve(ortho);

    CLI::App* cov = app.add_subcommand("covering", "covering test for pairs \"u,v\"");
    cov->add_option("pairs", a.pairs)->required();

    CLI::App* zeros = app.add_subcommand("zeros", "count enclosed zeros");
    zeros->add_option("f", a.f)->required();
    with_curve(zeros);

    CLI::App* fta = app.add_subcommand("fta", "zero count of a polynomial inside its bound circle");
    fta->add_option("q", a.f)->required();
    fta->add_option("--slack", a.slack, "radius factor above the bound");

    CLI::App* ds = app.add_subcommand("deriv-scenario", "derivative non-orthogonality check");
    ds->add_option("f", a.f)->required();
    ds->add_option("g", a.g)->required();
    ds->add_option("--n", a.n)->required();
    ds->add_option("--outer", a.outer)->required();
    ds->add_option("--inner", a.inner)->required();
    ds->add_option("--lambda0", a.lambda0);
    ds->add_option("--radius", a.radius)->required();

    CLI::App* land = app.add_subcommand("landscape", "CSV of ||f + lambda g|| over a box");
    land->add_option("f", a.f)->required();
    land->add_option("g", a.g)->required();
    land->add_option("--box", a.box, "xmin,xmax,ymin,ymax");
    land->add_option("--res", a.res, "points per axis");
    with_curve(land);

    CLI::App* vp = app.add_subcommand("verify-paper", "run the regression suite");
    vp->add_option("--only", a.only, "comma-separated block names")->delimiter(',');
    vp->add_option("--jobs", a.jobs, "worker threads (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return exit_code(ErrorKind::Parse);
    }

    try {
        return dispatch(app, a, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(ErrorKind::Precondition);
    }
}

}  // namespace holo
