#include "holo/config.hpp"

#include <fstream>

#include "holo/error.hpp"

namespace holo {

void RunConfig::validate() const
{
    auto require = [](bool ok, const char* what) {
        if (!ok) throw Error(ErrorKind::Precondition, std::string("invalid config: ") + what);
    };
    require(grid_n >= 8, "grid_n must be at least 8");
    require(refine_iters >= 0, "refine_iters must be nonnegative");
    require(norming_eps > 0.0 && norming_eps <= 1e-2, "norming_eps must lie in (0, 1e-2]");
    require(jgamma_tol > 0.0, "jgamma_tol must be positive");
    require(orthogonal_margin > 0.0, "orthogonal_margin must be positive");
    require(not_orthogonal_margin > orthogonal_margin && not_orthogonal_margin < 1.0,
            "margins must satisfy orthogonal < not_orthogonal < 1");
    require(quad_n >= 1, "quad_n must be positive");
    require(max_descent_iters >= 1, "max_descent_iters must be positive");
}

void to_json(nlohmann::ordered_json& j, const RunConfig& cfg)
{
    j = nlohmann::ordered_json{
        {"grid_n", cfg.grid_n},
        {"refine_iters", cfg.refine_iters},
        {"norming_eps", cfg.norming_eps},
        {"jgamma_tol", cfg.jgamma_tol},
        {"orthogonal_margin", cfg.orthogonal_margin},
        {"not_orthogonal_margin", cfg.not_orthogonal_margin},
        {"quad_n", cfg.quad_n},
        {"max_descent_iters", cfg.max_descent_iters},
        {"seed", cfg.seed},
    };
}

void from_json(const nlohmann::ordered_json& j, RunConfig& cfg)
{
    cfg.grid_n = j.value("grid_n", cfg.grid_n);
    cfg.refine_iters = j.value("refine_iters", cfg.refine_iters);
    cfg.norming_eps = j.value("norming_eps", cfg.norming_eps);
    cfg.jgamma_tol = j.value("jgamma_tol", cfg.jgamma_tol);
    cfg.orthogonal_margin = j.value("orthogonal_margin", cfg.orthogonal_margin);
    cfg.not_orthogonal_margin = j.value("not_orthogonal_margin", cfg.not_orthogonal_margin);
    cfg.quad_n = j.value("quad_n", cfg.quad_n);
    cfg.max_descent_iters = j.value("max_descent_iters", cfg.max_descent_iters);
    cfg.seed = j.value("seed", cfg.seed);
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Precondition, "cannot open config file " + path);
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config is not valid JSON: ") + e.what(), e.byte);
    }
    RunConfig cfg;
    try {
        from_json(j, cfg);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config field has the wrong type: ") + e.what(), 0);
    }
    cfg.validate();
    return cfg;
}

}  // namespace holo
