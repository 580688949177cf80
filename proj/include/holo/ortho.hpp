#pragma once

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "holo/config.hpp"
#include "holo/curve.hpp"
#include "holo/expr.hpp"

namespace holo {

/// Open disk of lambda with |u + lambda v| < |u|, for u, v != 0.
struct ExclusionDisk {
    cplx center;
    double radius = 0.0;
};

/// Region of lambda with |u + lambda v| >= |u|: either the whole plane (u = 0
/// or v = 0) or the complement of an exclusion disk.
struct GoodRegion {
    bool all_plane = true;
    ExclusionDisk disk;
};

GoodRegion exclusion_region(cplx u, cplx v);

struct CoveringResult {
    bool covering = false;
    /// Set iff not covering: lies in every exclusion disk.
    std::optional<cplx> witness;
    /// max_i (|lambda - c_i| - r_i) at the witness; 0 when covering, the minimum attained at lambda = 0.
    double min_phi = 0.0;
    bool all_plane = false;
    int iterations = 0;
};

/// Decides whether the good regions of the pairs cover C, i.e. whether the
/// open exclusion disks have empty common intersection.
CoveringResult covering_decide(std::span<const std::pair<cplx, cplx>> pairs);

/// Closed form for two pairs: covering iff conj(z1) z2 w1 conj(w2) lies in (-inf, 0].
bool pair_criterion(cplx z1, cplx z2, cplx w1, cplx w2);

enum class Verdict { Orthogonal, NotOrthogonal, Inconclusive };

std::string_view to_string(Verdict v);

struct OrthoDecision {
    Verdict verdict = Verdict::Inconclusive;
    /// lambda with ||f + lambda g|| = achieved; set for NotOrthogonal.
    std::optional<cplx> witness;
    double achieved = 0.0;
    double min_value = 0.0;
    cplx minimizer;
    double base_norm = 0.0;
    int iterations = 0;
    /// The verdict was reached from a sampled norming set.
    bool discrete_mf = false;
};

/// Minimizes lambda -> sup |f + lambda g| on the curve and classifies the result.
OrthoDecision bj_minimize(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const RunConfig& cfg = {});

/// Tests whether {(f(z), g(z)) : z in M_f} is an orthogonality covering set,
/// with M_f replaced by its sampled representatives.
OrthoDecision ortho_via_covering(const HoloExpr& f, const HoloExpr& g, const Curve& curve,
                                 const RunConfig& cfg = {});

/// Some norming point of f is (numerically) a zero of g: |g(z)| <= 1e-8 ||g||.
bool sufficient_zero(const HoloExpr& f, const HoloExpr& g, const Curve& curve, const RunConfig& cfg = {});

/// arg(g/f) over the norming set covers the circle with every gap <= gap_tol.
/// false means "not detected".
bool sufficient_argument(const HoloExpr& f, const HoloExpr& g, const Curve& curve,
                         double gap_tol = 2.0 * std::numbers::pi / 64.0, const RunConfig& cfg = {});

/// sup_{curve} |f + lambda g| with the usual grid-plus-refinement rule.
double combination_norm(const HoloExpr& f, const HoloExpr& g, cplx lambda, const Curve& curve,
                        const RunConfig& cfg = {});

}  // namespace holo
