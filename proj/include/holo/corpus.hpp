#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "holo/expr.hpp"
#include "holo/polynomial.hpp"

namespace holo::corpus {

using Rng = std::mt19937_64;

/// Generator for one named stream, derived from the run seed.
Rng stream(std::uint64_t seed, std::string_view name);

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive
/// Real and imaginary parts uniform in [-1, 1].
cplx unit_box(Rng& rng);
/// Uniform in the closed disk of the given radius.
cplx in_disk(Rng& rng, double radius);
/// Uniform on the annulus rmin <= |z| <= rmax.
cplx in_annulus(Rng& rng, double rmin, double rmax);
cplx unimodular(Rng& rng);

/// Coefficients in the unit box; the leading one has modulus >= min_leading.
Polynomial random_polynomial(Rng& rng, unsigned degree, double min_leading = 0.1);

/// c * prod (z - r a_k) / (r - conj(a_k) z), unimodular on |z| = r.
struct BlaschkeProduct {
    cplx c = 1.0;
    std::vector<cplx> a;
    double r = 1.0;

    HoloExpr expr() const;
};

/// k factors with |a_k| <= amax and |c| = 1.
BlaschkeProduct random_blaschke(Rng& rng, unsigned k, double r, double amax);

}  // namespace holo::corpus
