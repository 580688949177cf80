#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "holo/expr.hpp"

namespace holo {

/// Point of minimum modulus in the convex hull of a planar point set
/// (complex numbers read as R^2). Returns 0 when the origin lies in the hull.
cplx min_norm_in_hull(std::span<const cplx> points);

struct MinimaxOptions {
    int max_iterations = 1000;
    /// Initial and smallest width of the epsilon-active set, in objective units.
    double delta_start = 1e-2;
    double delta_min = 1e-13;
    /// Stop after a few consecutive accepted steps that decrease the objective by less than this.
    double stop_decrease = 1e-12;
    double armijo = 1e-4;
};

struct MinimaxResult {
    cplx x;
    double value = 0.0;
    int iterations = 0;
    /// The minimum-norm epsilon-subgradient vanished at the smallest epsilon.
    bool stationary = false;
};

/// Minimizes F(x) = max_i h_i(x) over x in C = R^2 for convex pieces h_i.
///
/// Steepest descent with epsilon-subgradients: the search direction is minus
/// the minimum-norm element of the convex hull of the gradients of all pieces
/// within delta of the current maximum; delta shrinks whenever that element
/// vanishes or a backtracking line search fails.
///
/// Pieces must provide
///   std::size_t size() const;
///   void values(cplx x, std::vector<double>& out) const;
///   cplx gradient(std::size_t i, cplx x, double value) const;  // dh_i/d(Re x) + i dh_i/d(Im x)
template <class Pieces>
MinimaxResult minimize_max(const Pieces& pieces, cplx x0, const MinimaxOptions& opt)
{
    std::vector<double> vals, trial;
    std::vector<cplx> active;
    auto max_of = [](const std::vector<double>& v) {
        double m = -HUGE_VAL;
        for (double x : v) m = x > m ? x : m;
        return m;
    };

    MinimaxResult res;
    res.x = x0;
    pieces.values(res.x, vals);
    res.value = max_of(vals);

    double delta = opt.delta_start;
    double step = 0.0;
    int small_steps = 0;
    for (res.iterations = 0; res.iterations < opt.max_iterations; ++res.iterations) {
        active.clear();
        double gmax = 0.0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] >= res.value - delta) {
                const cplx g = pieces.gradient(i, res.x, vals[i]);
                active.push_back(g);
                gmax = std::max(gmax, std::abs(g));
            }
        }
        const cplx p = min_norm_in_hull(active);
        const double pn2 = std::norm(p);
        if (gmax == 0.0 || std::sqrt(pn2) <= 1e-12 * gmax) {
            if (delta <= opt.delta_min) {
                res.stationary = true;
                break;
            }
            delta = std::max(delta * 0.1, opt.delta_min);
            continue;
        }

        if (step <= 0.0) step = delta / pn2;
        auto armijo_ok = [&](double t, double value) { return value <= res.value - opt.armijo * t * pn2; };

        double t = step;
        cplx y = res.x - t * p;
        pieces.values(y, trial);
        double fy = max_of(trial);
        bool accepted = armijo_ok(t, fy);
        if (accepted) {
            std::vector<double> wider;
            for (int k = 0; k < 40; ++k) {
                const cplx y2 = res.x - 2.0 * t * p;
                pieces.values(y2, wider);
                const double f2 = max_of(wider);
                if (!(f2 < fy && armijo_ok(2.0 * t, f2))) break;
                t *= 2.0;
                y = y2;
                fy = f2;
                trial.swap(wider);
            }
        } else {
            for (int k = 0; k < 60 && !accepted; ++k) {
                t *= 0.5;
                y = res.x - t * p;
                pieces.values(y, trial);
                fy = max_of(trial);
                accepted = armijo_ok(t, fy);
            }
        }
        if (!accepted) {
            if (delta <= opt.delta_min) break;
            delta = std::max(delta * 0.1, opt.delta_min);
            step = 0.0;
            continue;
        }

        const double decrease = res.value - fy;
        res.x = y;
        res.value = fy;
        vals.swap(trial);
        step = t;
        delta = std::min(delta * 4.0, opt.delta_start);
        if (decrease < opt.stop_decrease) {
            if (++small_steps >= 5) break;
        } else {
            small_steps = 0;
        }
    }
    return res;
}

}  // namespace holo
