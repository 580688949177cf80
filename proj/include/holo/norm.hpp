#pragma once

#include <functional>
#include <span>
#include <vector>

#include "holo/config.hpp"
#include "holo/curve.hpp"
#include "holo/expr.hpp"

namespace holo {

/// Below this sup norm a function is treated as identically zero.
inline constexpr double kZeroNorm = 1e-30;

struct NormReport {
    double norm_value = 0.0;
    /// Parameters in [0,1) where |f| >= norm_value - 1e-12 * max(1, norm_value).
    std::vector<double> argmax_params;
    int grid_size = 0;
};

enum class ClusterKind { Isolated, Arc, WholeCurve };

struct NormingCluster {
    ClusterKind kind = ClusterKind::Isolated;
    /// Refined maximizer (Isolated) or the best grid parameter of the cluster.
    double t = 0.0;
    /// Parameter range covered; t_hi may exceed 1 for an arc through t = 0.
    double t_lo = 0.0;
    double t_hi = 0.0;
    /// Grid indices first_index, first_index + 1, ... (mod N), count of them.
    int first_index = 0;
    int count = 0;
};

/// Numerical stand-in for M_f = {z on the curve : |f(z)| = ||f||}.
struct NormingSet {
    std::vector<NormingCluster> clusters;
    double eps = 0.0;
    double norm_value = 0.0;
    int grid_size = 0;

    bool whole_curve() const { return clusters.size() == 1 && clusters[0].kind == ClusterKind::WholeCurve; }
};

/// Values f(gamma(k/N)) for k = 0..N-1. Throws PoleProximity.
std::vector<cplx> values_on_grid(const HoloExpr& f, const Curve& curve, int n);

/// Modulus sampled on a uniform parameter grid together with a pointwise
/// evaluator for refinement between grid points.
struct ModulusProfile {
    std::span<const double> grid;
    std::function<double(double)> at;
    /// Optional d|.|/dt; when present, maxima are refined by bisecting its sign change.
    std::function<double(double)> slope = {};
};

/// Profile of |f(gamma(t))| with its exact slope from the symbolic derivative.
/// grid must outlive the profile.
ModulusProfile modulus_profile(const HoloExpr& f, const HoloExpr& df, const Curve& curve,
                               std::span<const double> grid);

NormReport sup_norm(const ModulusProfile& profile, int refine_iters);
NormReport sup_norm(const HoloExpr& f, const Curve& curve, const RunConfig& cfg = {});

/// Throws ZeroFunction when the norm vanishes.
NormingSet norming_set(const ModulusProfile& profile, double eps, int refine_iters);
NormingSet norming_set(const HoloExpr& f, const Curve& curve, double eps, const RunConfig& cfg = {});
NormingSet norming_set(const HoloExpr& f, const Curve& curve, const RunConfig& cfg = {});

/// Parameters that stand in for M_f: the refined point of each isolated
/// cluster and every grid point of arcs and of a whole-curve set.
std::vector<double> norming_params(const NormingSet& set);

struct JGammaReport {
    bool member = false;
    /// Set when ||f|| < kZeroNorm; the zero function counts as a member.
    bool zero_function = false;
    double max_modulus = 0.0;
    double min_modulus = 0.0;
};

/// |f| constant on the curve: (max - min) <= tol * max over the refined grid.
JGammaReport jgamma_report(const HoloExpr& f, const Curve& curve, double tol, const RunConfig& cfg = {});
bool in_J_gamma(const HoloExpr& f, const Curve& curve, double tol = 1e-8, const RunConfig& cfg = {});

enum class Smoothness { Smooth, NotSmooth };

struct PointClass {
    Smoothness smoothness = Smoothness::NotSmooth;
    /// Unit norm and |f| constant on the curve. On analytic curves this is
    /// equivalent to M_f being infinite.
    bool extreme = false;
    NormingSet norming;
    double norm_value = 0.0;
};

/// Throws ZeroFunction for f = 0.
PointClass classify_point(const HoloExpr& f, const Curve& curve, const RunConfig& cfg = {});

}  // namespace holo
