#pragma once

namespace holo::detail {

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
template <class F>
double golden_min(F&& f, double lo, double hi, int iters, double* arg_out)
{
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    if (fc < fd) {
        *arg_out = c;
        return fc;
    }
    *arg_out = d;
    return fd;
}

template <class F>
double golden_max(F&& f, double lo, double hi, int iters, double* arg_out)
{
    return -golden_min([&](double t) { return -f(t); }, lo, hi, iters, arg_out);
}

}  // namespace holo::detail
