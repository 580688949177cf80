#include "holo/corpus.hpp"

#include <cmath>
#include <numbers>

namespace holo::corpus {

Rng stream(std::uint64_t seed, std::string_view name)
{
    // FNV-1a of the name, mixed into the seed
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

cplx unit_box(Rng& rng)
{
    const double re = uniform(rng, -1.0, 1.0);
    return {re, uniform(rng, -1.0, 1.0)};
}

cplx in_disk(Rng& rng, double radius)
{
    return in_annulus(rng, 0.0, radius);
}

cplx in_annulus(Rng& rng, double rmin, double rmax)
{
    const double u = uniform(rng, rmin * rmin, rmax * rmax);
    return std::polar(std::sqrt(u), uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

cplx unimodular(Rng& rng)
{
    return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

Polynomial random_polynomial(Rng& rng, unsigned degree, double min_leading)
{
    std::vector<cplx> c(degree + 1);
    for (cplx& x : c) x = unit_box(rng);
    while (std::abs(c.back()) < min_leading) c.back() = unit_box(rng);
    return Polynomial(std::move(c));
}

HoloExpr BlaschkeProduct::expr() const
{
    HoloExpr out = HoloExpr::constant(c);
    for (cplx ak : a) out = HoloExpr::mul(out, HoloExpr::blaschke(ak, r));
    return out;
}

BlaschkeProduct random_blaschke(Rng& rng, unsigned k, double r, double amax)
{
    BlaschkeProduct b;
    b.c = unimodular(rng);
    b.r = r;
    for (unsigned i = 0; i < k; ++i) b.a.push_back(in_disk(rng, amax));
    return b;
}

}  // namespace holo::corpus
