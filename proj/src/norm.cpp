#include "holo/norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "golden.hpp"
#include "holo/error.hpp"

namespace holo {

namespace {

constexpr std::size_t kMaxRefined = 64;

double wrap01(double t)
{
    t -= std::floor(t);
    return t >= 1.0 ? 0.0 : t;
}

struct Peak {
    int index;
    double t;
    double value;
};

struct PeakScan {
    std::vector<Peak> peaks;  // refined, descending by value
    double grid_max = 0.0;
    double grid_min = 0.0;
    double norm = 0.0;
};

// Moves a grid-local maximum to the nearby true maximum: by bisection on the
// slope when it is known and changes sign across the neighbouring grid points,
// by golden-section search otherwise.
void refine_peak(const ModulusProfile& profile, int n, int refine_iters, Peak& p)
{
    if (refine_iters <= 0) return;
    const double h = 1.0 / n;
    double lo = p.t - h, hi = p.t + h;
    double t = p.t;
    double v = p.value;
    if (profile.slope && profile.slope(lo) > 0.0 && profile.slope(hi) < 0.0) {
        for (int i = 0; i < std::max(refine_iters, 64); ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (profile.slope(mid) > 0.0 ? lo : hi) = mid;
        }
        t = 0.5 * (lo + hi);
        v = profile.at(t);
    } else {
        v = detail::golden_max(profile.at, lo, hi, refine_iters, &t);
    }
    if (v > p.value) {
        p.value = v;
        p.t = wrap01(t);
    }
}

// Refines every grid-local maximum that could still beat the grid maximum. A
// smooth modulus exceeds its value at a neighbouring grid point by at most half
// the local second difference, so peaks lower than grid_max - max|second
// difference| can be skipped.
PeakScan scan_peaks(const ModulusProfile& profile, int refine_iters)
{
    const auto& m = profile.grid;
    const int n = static_cast<int>(m.size());
    PeakScan scan;
    if (n == 0) return scan;
    scan.grid_max = *std::max_element(m.begin(), m.end());
    scan.grid_min = *std::min_element(m.begin(), m.end());

    double slack = 0.0;
    for (int k = 0; k < n; ++k) {
        const double prev = m[(k + n - 1) % n], next = m[(k + 1) % n];
        slack = std::max(slack, std::abs(next - 2.0 * m[k] + prev));
    }
    slack += 4.0 * std::numeric_limits<double>::epsilon() * scan.grid_max;

    std::vector<Peak> cands;
    for (int k = 0; k < n; ++k) {
        const double prev = m[(k + n - 1) % n], next = m[(k + 1) % n];
        if (m[k] >= prev && m[k] >= next && m[k] >= scan.grid_max - slack) {
            cands.push_back({k, static_cast<double>(k) / n, m[k]});
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Peak& a, const Peak& b) { return a.value > b.value; });
    if (cands.size() > kMaxRefined) cands.resize(kMaxRefined);

    for (Peak& p : cands) refine_peak(profile, n, refine_iters, p);
    std::stable_sort(cands.begin(), cands.end(), [](const Peak& a, const Peak& b) { return a.value > b.value; });
    scan.peaks = std::move(cands);
    scan.norm = scan.peaks.empty() ? scan.grid_max : std::max(scan.grid_max, scan.peaks.front().value);
    return scan;
}


std::vector<double> moduli(const std::vector<cplx>& values)
{
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(), [](cplx v) { return std::abs(v); });
    return out;
}

}  // namespace

ModulusProfile modulus_profile(const HoloExpr& f, const HoloExpr& df, const Curve& curve,
                               std::span<const double> grid)
{
    ModulusProfile profile;
    profile.grid = grid;
    profile.at = [f, curve](double t) { return std::abs(eval(f, curve.point(t))); };
    profile.slope = [f, df, curve](double t) {
        const cplx z = curve.point(t);
        const cplx w = eval(f, z);
        const double mod = std::abs(w);
        return mod == 0.0 ? 0.0 : (std::conj(w) * eval(df, z) * curve.tangent(t)).real() / mod;
    };
    return profile;
}

std::vector<cplx> values_on_grid(const HoloExpr& f, const Curve& curve, int n)
{
    std::vector<cplx> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) out[k] = eval(f, curve.point(static_cast<double>(k) / n));
    return out;
}

NormReport sup_norm(const ModulusProfile& profile, int refine_iters)
{
    const PeakScan scan = scan_peaks(profile, refine_iters);
    NormReport report;
    report.grid_size = static_cast<int>(profile.grid.size());
    report.norm_value = scan.norm;
    const double tol = 1e-12 * std::max(1.0, scan.norm);

    std::vector<char> refined(profile.grid.size(), 0);
    for (const Peak& p : scan.peaks) {
        refined[p.index] = 1;
        if (p.value >= scan.norm - tol) report.argmax_params.push_back(p.t);
    }
    for (std::size_t k = 0; k < profile.grid.size(); ++k) {
        if (!refined[k] && profile.grid[k] >= scan.norm - tol) {
            report.argmax_params.push_back(static_cast<double>(k) / report.grid_size);
        }
    }
    std::sort(report.argmax_params.begin(), report.argmax_params.end());
    return report;
}

NormReport sup_norm(const HoloExpr& f, const Curve& curve, const RunConfig& cfg)
{
    const std::vector<double> grid = moduli(values_on_grid(f, curve, cfg.grid_n));
    return sup_norm(modulus_profile(f, differentiate(f), curve, grid), cfg.refine_iters);
}

NormingSet norming_set(const ModulusProfile& profile, double eps, int refine_iters)
{
    if (!(eps > 0.0 && eps <= 1e-2)) throw Error(ErrorKind::Precondition, "norming eps must lie in (0, 1e-2]");
    const auto& m = profile.grid;
    const int n = static_cast<int>(m.size());
    const PeakScan scan = scan_peaks(profile, refine_iters);
    if (scan.norm < kZeroNorm) throw Error(ErrorKind::ZeroFunction, "norming set of the zero function");

    NormingSet set;
    set.eps = eps;
    set.norm_value = scan.norm;
    set.grid_size = n;

    const double threshold = (1.0 - eps) * scan.norm;
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) in[k] = m[k] >= threshold;
    for (const Peak& p : scan.peaks) {
        if (p.value >= threshold) in[p.index] = 1;
    }

    if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; })) {
        NormingCluster whole;
        whole.kind = ClusterKind::WholeCurve;
        whole.t = scan.peaks.empty() ? 0.0 : scan.peaks.front().t;
        whole.t_lo = 0.0;
        whole.t_hi = 1.0;
        whole.first_index = 0;
        whole.count = n;
        set.clusters.push_back(whole);
        return set;
    }

    // An arc is a run on which |f| is flat to within a tiny fraction of its
    // overall variation; a nondegenerate peak has at most a couple of such points.
    const double flat = std::max(1e-10 * (scan.norm - scan.grid_min), 1e-13 * scan.norm);
    const double h = 1.0 / n;

    int start = 0;
    while (in[start]) ++start;  // some index is outside, so runs cannot wrap past it
    for (int step = 1; step <= n; ++step) {
        const int k = (start + step) % n;
        if (!in[k] || in[(k + n - 1) % n]) continue;
        int count = 0;
        int best = k;
        int flat_points = 0;
        while (in[(k + count) % n]) {
            const int idx = (k + count) % n;
            if (m[idx] > m[best]) best = idx;
            if (m[idx] >= scan.norm - flat) ++flat_points;
            ++count;
        }
        NormingCluster c;
        c.first_index = k;
        c.count = count;
        c.t_lo = static_cast<double>(k) / n;
        c.t_hi = c.t_lo + (count - 1) * h;
        c.t = static_cast<double>(best) / n;
        double value = m[best];
        for (const Peak& p : scan.peaks) {
            const int offset = (p.index - k + n) % n;
            if (offset < count && p.value > value) {
                value = p.value;
                c.t = p.t;
            }
        }
        if (flat_points >= 3) {
            c.kind = ClusterKind::Arc;
        } else {
            c.kind = ClusterKind::Isolated;
            if (value == m[best]) {
                Peak p{best, c.t, value};
                refine_peak(profile, n, refine_iters, p);
                c.t = p.t;
            }
        }
        set.clusters.push_back(c);
    }
    std::sort(set.clusters.begin(), set.clusters.end(),
              [](const NormingCluster& a, const NormingCluster& b) { return a.t_lo < b.t_lo; });
    return set;
}

NormingSet norming_set(const HoloExpr& f, const Curve& curve, double eps, const RunConfig& cfg)
{
    const std::vector<double> grid = moduli(values_on_grid(f, curve, cfg.grid_n));
    return norming_set(modulus_profile(f, differentiate(f), curve, grid), eps, cfg.refine_iters);
}

NormingSet norming_set(const HoloExpr& f, const Curve& curve, const RunConfig& cfg)
{
    return norming_set(f, curve, cfg.norming_eps, cfg);
}

std::vector<double> norming_params(const NormingSet& set)
{
    std::vector<double> out;
    for (const NormingCluster& c : set.clusters) {
        if (c.kind == ClusterKind::Isolated) {
            out.push_back(c.t);
            continue;
        }
        for (int j = 0; j < c.count; ++j) {
            out.push_back(static_cast<double>((c.first_index + j) % set.grid_size) / set.grid_size);
        }
    }
    return out;
}

JGammaReport jgamma_report(const HoloExpr& f, const Curve& curve, double tol, const RunConfig& cfg)
{
    const std::vector<double> grid = moduli(values_on_grid(f, curve, cfg.grid_n));
    const ModulusProfile profile = modulus_profile(f, differentiate(f), curve, grid);
    const PeakScan scan = scan_peaks(profile, cfg.refine_iters);

    JGammaReport report;
    report.max_modulus = scan.norm;
    if (scan.norm < kZeroNorm) {
        report.member = true;
        report.zero_function = true;
        return report;
    }

    // refine the lowest grid-local minimum
    const int n = static_cast<int>(grid.size());
    const auto lowest = std::min_element(grid.begin(), grid.end());
    const int k = static_cast<int>(lowest - grid.begin());
    double min_mod = *lowest;
    if (cfg.refine_iters > 0) {
        double t = static_cast<double>(k) / n;
        min_mod = std::min(min_mod, detail::golden_min(profile.at, t - 1.0 / n, t + 1.0 / n, cfg.refine_iters, &t));
    }
    report.min_modulus = min_mod;
    report.member = (scan.norm - min_mod) <= tol * scan.norm;
    return report;
}

bool in_J_gamma(const HoloExpr& f, const Curve& curve, double tol, const RunConfig& cfg)
{
    return jgamma_report(f, curve, tol, cfg).member;
}

PointClass classify_point(const HoloExpr& f, const Curve& curve, const RunConfig& cfg)
{
    PointClass out;
    out.norming = norming_set(f, curve, cfg);
    out.norm_value = out.norming.norm_value;
    const bool single = out.norming.clusters.size() == 1 && out.norming.clusters[0].kind == ClusterKind::Isolated;
    out.smoothness = single ? Smoothness::Smooth : Smoothness::NotSmooth;
    out.extreme = std::abs(out.norm_value - 1.0) <= 1e-8 && in_J_gamma(f, curve, cfg.jgamma_tol, cfg);
    return out;
}

}  // namespace holo
