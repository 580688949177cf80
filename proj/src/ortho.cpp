#include "holo/ortho.hpp"

#include <algorithm>
#include <cmath>

#include "golden.hpp"
#include "holo/error.hpp"
#include "holo/minimax.hpp"
#include "holo/norm.hpp"

namespace holo {

namespace {

// g values this small relative to ||g|| count as zeros of g.
constexpr double kZeroOfG = 1e-8;

// f and g sampled once on the parameter grid; off-grid values are evaluated on demand.
class SampledPair {
public:
    SampledPair(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const RunConfig& cfg)
        : f_(f), g_(g), df_(differentiate(f)), dg_(differentiate(g)), curve_(curve), cfg_(cfg),
          fv_(values_on_grid(f, curve, cfg.grid_n)), gv_(values_on_grid(g, curve, cfg.grid_n))
    {
    }

    const std::vector<cplx>& f_values() const { return fv_; }
    const std::vector<cplx>& g_values() const { return gv_; }
    cplx f_at(double t) const { return eval(f_, curve_.point(t)); }
    cplx g_at(double t) const { return eval(g_, curve_.point(t)); }

    double grid_norm(cplx lambda) const
    {
        double m = 0.0;
        for (std::size_t k = 0; k < fv_.size(); ++k) m = std::max(m, std::abs(fv_[k] + lambda * gv_[k]));
        return m;
    }

    double refined_norm(cplx lambda) const
    {
        std::vector<double> grid(fv_.size());
        for (std::size_t k = 0; k < fv_.size(); ++k) grid[k] = std::abs(fv_[k] + lambda * gv_[k]);
        ModulusProfile profile;
        profile.grid = grid;
        profile.at = [&](double t) {
            const cplx z = curve_.point(t);
            return std::abs(eval(f_, z) + lambda * eval(g_, z));
        };
        profile.slope = [&](double t) {
            const cplx z = curve_.point(t);
            const cplx w = eval(f_, z) + lambda * eval(g_, z);
            const double mod = std::abs(w);
            if (mod == 0.0) return 0.0;
            return (std::conj(w) * (eval(df_, z) + lambda * eval(dg_, z)) * curve_.tangent(t)).real() / mod;
        };
        return sup_norm(profile, cfg_.refine_iters).norm_value;
    }

    NormingSet f_norming_set() const
    {
        std::vector<double> grid(fv_.size());
        for (std::size_t k = 0; k < fv_.size(); ++k) grid[k] = std::abs(fv_[k]);
        return norming_set(modulus_profile(f_, df_, curve_, grid), cfg_.norming_eps, cfg_.refine_iters);
    }

    double g_norm() const
    {
        std::vector<double> grid(gv_.size());
        for (std::size_t k = 0; k < gv_.size(); ++k) grid[k] = std::abs(gv_[k]);
        return sup_norm(modulus_profile(g_, dg_, curve_, grid), cfg_.refine_iters).norm_value;
    }

    // Norming parameters of f plus refined local minima of |g| inside every
    // arc or whole-curve cluster, so zeros of g between grid points are not lost.
    std::vector<double> norming_samples(const NormingSet& set) const
    {
        std::vector<double> params = norming_params(set);
        const int n = static_cast<int>(gv_.size());
        const double h = 1.0 / n;
        for (const NormingCluster& c : set.clusters) {
            if (c.kind == ClusterKind::Isolated) continue;
            for (int j = 0; j < c.count; ++j) {
                const int k = (c.first_index + j) % n;
                const double here = std::abs(gv_[k]);
                if (here > std::abs(gv_[(k + 1) % n]) || here > std::abs(gv_[(k + n - 1) % n])) continue;
                double t = static_cast<double>(k) / n;
                if (cfg_.refine_iters > 0) {
                    detail::golden_min([&](double s) { return std::abs(g_at(s)); }, t - h, t + h, cfg_.refine_iters,
                                       &t);
                }
                // stay inside the cluster
                const double offset = t - c.t_lo - std::floor(t - c.t_lo);
                if (c.kind == ClusterKind::WholeCurve || offset <= c.t_hi - c.t_lo) {
                    params.push_back(t - std::floor(t));
                }
            }
        }
        return params;
    }

private:
    const HoloExpr& f_;
    const HoloExpr& g_;
    HoloExpr df_, dg_;
    const Curve& curve_;
    const RunConfig& cfg_;
    std::vector<cplx> fv_, gv_;
};

struct CombinationPieces {
    const std::vector<cplx>& fv;
    const std::vector<cplx>& gv;

    std::size_t size() const { return fv.size(); }
    void values(cplx lambda, std::vector<double>& out) const
    {
        out.resize(fv.size());
        for (std::size_t k = 0; k < fv.size(); ++k) out[k] = std::abs(fv[k] + lambda * gv[k]);
    }
    // d|f + lambda g| = Re(conj(sgn(w) conj(g)) d lambda)
    cplx gradient(std::size_t k, cplx lambda, double value) const
    {
        if (value == 0.0) return 0.0;
        const cplx w = fv[k] + lambda * gv[k];
        return (w / value) * std::conj(gv[k]);
    }
};

struct DiskPieces {
    const std::vector<ExclusionDisk>& disks;

    std::size_t size() const { return disks.size(); }
    void values(cplx x, std::vector<double>& out) const
    {
        out.resize(disks.size());
        for (std::size_t i = 0; i < disks.size(); ++i) out[i] = std::abs(x - disks[i].center) - disks[i].radius;
    }
    cplx gradient(std::size_t i, cplx x, double) const
    {
        const cplx d = x - disks[i].center;
        const double len = std::abs(d);
        return len == 0.0 ? cplx{} : d / len;
    }
    double value(cplx x) const
    {
        std::vector<double> v;
        values(x, v);
        return *std::max_element(v.begin(), v.end());
    }
};

OrthoDecision classify(double base, double min_value, cplx minimizer, const RunConfig& cfg)
{
    OrthoDecision d;
    d.base_norm = base;
    d.min_value = min_value;
    d.achieved = min_value;
    d.minimizer = minimizer;
    if (min_value <= base * (1.0 - cfg.not_orthogonal_margin)) {
        d.verdict = Verdict::NotOrthogonal;
        d.witness = minimizer;
    } else if (min_value >= base * (1.0 - cfg.orthogonal_margin)) {
        d.verdict = Verdict::Orthogonal;
    } else {
        d.verdict = Verdict::Inconclusive;
    }
    return d;
}

OrthoDecision zero_left_argument()
{
    OrthoDecision d;
    d.verdict = Verdict::Orthogonal;
    return d;
}

}  // namespace

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Orthogonal: return "Orthogonal";
    case Verdict::NotOrthogonal: return "NotOrthogonal";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

GoodRegion exclusion_region(cplx u, cplx v)
{
    GoodRegion region;
    if (u == 0.0 || v == 0.0) return region;
    region.all_plane = false;
    region.disk.center = -u * std::conj(v) / std::norm(v);
    region.disk.radius = std::abs(u) / std::abs(v);
    return region;
}

CoveringResult covering_decide(std::span<const std::pair<cplx, cplx>> pairs)
{
    if (pairs.empty()) throw Error(ErrorKind::Precondition, "covering_decide needs at least one pair");
    CoveringResult result;
    std::vector<ExclusionDisk> disks;
    disks.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        const GoodRegion region = exclusion_region(u, v);
        if (region.all_plane) {
            result.covering = true;
            result.all_plane = true;
            return result;
        }
        disks.push_back(region.disk);
    }

    // Every disk passes through 0, so under lambda -> 1/lambda they become the
    // half-planes Re(c mu) > 1/2. Those meet iff 0 is outside the hull of the
    // centres, and then the hull point nearest 0 lies in every disk.
    double rmin = HUGE_VAL;
    std::vector<cplx> centers;
    for (const auto& d : disks) {
        rmin = std::min(rmin, d.radius);
        centers.push_back(d.center);
    }
    const cplx nearest = min_norm_in_hull(centers);
    const auto contains_all = [&](cplx lambda) {
        return std::all_of(disks.begin(), disks.end(), [&](const ExclusionDisk& d) {
            return 2.0 * (std::conj(d.center) * lambda).real() > std::norm(lambda);
        });
    };
    if (std::abs(nearest) <= 1e-9 * rmin || !contains_all(nearest)) {
        result.covering = true;
        return result;
    }

    // deepen the witness by minimizing max_i (|lambda - c_i| - r_i)
    const DiskPieces pieces{disks};
    MinimaxOptions opt;
    opt.max_iterations = 500;
    opt.delta_start = std::abs(nearest);
    opt.delta_min = 1e-13 * opt.delta_start;
    opt.stop_decrease = 1e-10 * opt.delta_start;
    const MinimaxResult res = minimize_max(pieces, nearest, opt);
    result.iterations = res.iterations;
    result.witness = nearest;
    result.min_phi = pieces.value(nearest);
    if (res.value < result.min_phi && contains_all(res.x)) {
        result.witness = res.x;
        result.min_phi = res.value;
    }
    return result;
}

bool pair_criterion(cplx z1, cplx z2, cplx w1, cplx w2)
{
    const cplx p = std::conj(z1) * z2 * w1 * std::conj(w2);
    const double magnitude = std::abs(z1) * std::abs(z2) * std::abs(w1) * std::abs(w2);
    const double tol = 1e-9 * magnitude;
    return std::abs(p.imag()) <= tol && p.real() <= tol;
}

double combination_norm(const HoloExpr& f, const HoloExpr& g, cplx lambda, const Curve& curve, const RunConfig& cfg)
{
    return SampledPair(f, g, curve, cfg).refined_norm(lambda);
}

OrthoDecision bj_minimize(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const RunConfig& cfg)
{
    cfg.validate();
    const SampledPair s(f, g, curve, cfg);
    const double base = s.refined_norm(0.0);
    if (base < kZeroNorm) return zero_left_argument();

    MinimaxOptions opt;
    opt.max_iterations = cfg.max_descent_iters;
    opt.delta_start = 1e-2 * base;
    opt.delta_min = 1e-13 * base;
    opt.stop_decrease = 1e-12 * base;
    const MinimaxResult res = minimize_max(CombinationPieces{s.f_values(), s.g_values()}, 0.0, opt);

    cplx lambda = res.x;
    double value = s.refined_norm(lambda);
    if (!(value < base)) {
        lambda = 0.0;
        value = base;
    }
    OrthoDecision d = classify(base, value, lambda, cfg);
    d.iterations = res.iterations;
    return d;
}

OrthoDecision ortho_via_covering(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const RunConfig& cfg)
{
    cfg.validate();
    const SampledPair s(f, g, curve, cfg);
    const double base = s.refined_norm(0.0);
    if (base < kZeroNorm) {
        OrthoDecision d = zero_left_argument();
        d.discrete_mf = true;
        return d;
    }

    const NormingSet set = s.f_norming_set();
    const std::vector<double> params = s.norming_samples(set);
    if (params.empty()) throw Error(ErrorKind::EmptyNormingSet, "no norming points for a nonzero function");

    const double gnorm = s.g_norm();
    std::vector<std::pair<cplx, cplx>> pairs;
    pairs.reserve(params.size());
    for (double t : params) {
        const cplx u = s.f_at(t);
        cplx v = s.g_at(t);
        if (std::abs(v) <= kZeroOfG * gnorm) v = 0.0;
        pairs.emplace_back(u, v);
    }

    const CoveringResult cov = covering_decide(pairs);
    OrthoDecision d;
    if (cov.covering) {
        d = classify(base, base, 0.0, cfg);
    } else {
        // The witness lies in every exclusion disk; scan the segment towards it.
        const cplx w = *cov.witness;
        double mu = 1.0;
        detail::golden_min([&](double m) { return s.grid_norm(m * w); }, 0.0, 1.0, 60, &mu);
        const cplx lambda = mu * w;
        const double value = std::min(s.refined_norm(lambda), base);
        d = classify(base, value, lambda, cfg);
        if (d.verdict == Verdict::Orthogonal) {
            d.verdict = Verdict::Inconclusive;
        }
    }
    d.iterations = cov.iterations;
    d.discrete_mf = true;
    return d;
}

bool sufficient_zero(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const RunConfig& cfg)
{
    const SampledPair s(f, g, curve, cfg);
    const double gnorm = s.g_norm();
    if (gnorm < kZeroNorm) return true;
    const NormingSet set = s.f_norming_set();
    for (double t : s.norming_samples(set)) {
        if (std::abs(s.g_at(t)) <= kZeroOfG * gnorm) return true;
    }
    return false;
}

bool sufficient_argument(const HoloExpr& f, const HoloExpr& g, const Curve& curve, double gap_tol,
                         const RunConfig& cfg)
{
    const SampledPair s(f, g, curve, cfg);
    const double gnorm = s.g_norm();
    if (gnorm < kZeroNorm) return false;
    const NormingSet set = s.f_norming_set();

    std::vector<double> args;
    for (double t : norming_params(set)) {
        const cplx fz = s.f_at(t);
        const cplx gz = s.g_at(t);
        if (std::abs(gz) <= kZeroOfG * gnorm) continue;
        if (std::abs(fz) < kPoleThreshold * (1.0 + std::abs(gz))) {
            throw Error(ErrorKind::PoleProximity, "g/f has a pole on the norming set");
        }
        args.push_back(std::arg(gz / fz));
    }
    if (args.empty()) return false;
    std::sort(args.begin(), args.end());
    double gap = args.front() + 2.0 * std::numbers::pi - args.back();
    for (std::size_t i = 1; i < args.size(); ++i) gap = std::max(gap, args[i] - args[i - 1]);
    return gap <= gap_tol;
}

}  // namespace holo
