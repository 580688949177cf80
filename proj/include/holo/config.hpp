#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace holo {

/// Numerical knobs shared by every command and by the verification suite.
struct RunConfig {
    int grid_n = 4096;
    int refine_iters = 60;
    double norming_eps = 1e-6;
    double jgamma_tol = 1e-8;
    /// min ||f + lambda g|| >= (1 - orthogonal_margin) ||f||  =>  Orthogonal
    double orthogonal_margin = 1e-7;
    /// achieved <= (1 - not_orthogonal_margin) ||f||  =>  NotOrthogonal
    double not_orthogonal_margin = 1e-4;
    int quad_n = 4096;
    int max_descent_iters = 1000;
    std::uint64_t seed = 42;

    /// Throws Error{Precondition} on non-positive tolerances or unordered margins.
    void validate() const;
};

void to_json(nlohmann::ordered_json& j, const RunConfig& cfg);
void from_json(const nlohmann::ordered_json& j, RunConfig& cfg);

/// Reads a JSON object; missing keys keep their defaults.
RunConfig load_config(const std::string& path);

}  // namespace holo
