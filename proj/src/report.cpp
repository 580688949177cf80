#include "holo/report.hpp"

#include "holo/error.hpp"

namespace holo {

namespace {

constexpr std::size_t kMaxListedArgmax = 32;

ordered_json optional_complex(const std::optional<cplx>& z)
{
    return z ? complex_json(*z) : ordered_json(nullptr);
}

}  // namespace

std::string Report::dump() const
{
    return ordered_json(*this).dump(2);
}

Report Report::parse(const std::string& text)
{
    try {
        return ordered_json::parse(text).get<Report>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: ") + e.what(), 0);
    }
}

void to_json(ordered_json& j, const Report& r)
{
    j = ordered_json::object();
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["outputs"] = r.outputs;
    j["timing"] = {{"elapsed_ms", r.elapsed_ms}};
    j["config"] = r.config;
}

void from_json(const ordered_json& j, Report& r)
{
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    r.elapsed_ms = j.at("timing").at("elapsed_ms").get<double>();
    r.config = j.at("config").get<RunConfig>();
}

ordered_json complex_json(cplx z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

cplx complex_from_json(const ordered_json& j)
{
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

std::string_view to_string(ClusterKind kind)
{
    switch (kind) {
    case ClusterKind::Isolated: return "Isolated";
    case ClusterKind::Arc: return "Arc";
    case ClusterKind::WholeCurve: return "WholeCurve";
    }
    return "Isolated";
}

std::string_view to_string(Smoothness s)
{
    return s == Smoothness::Smooth ? "Smooth" : "NotSmooth";
}

ordered_json to_json(const NormReport& r)
{
    ordered_json j;
    j["norm_value"] = r.norm_value;
    const std::size_t listed = std::min(r.argmax_params.size(), kMaxListedArgmax);
    j["argmax_params"] = std::vector<double>(r.argmax_params.begin(), r.argmax_params.begin() + listed);
    j["argmax_count"] = r.argmax_params.size();
    j["grid_size"] = r.grid_size;
    return j;
}

ordered_json to_json(const NormingSet& s)
{
    ordered_json j;
    j["norm_value"] = s.norm_value;
    j["eps"] = s.eps;
    j["grid_size"] = s.grid_size;
    j["whole_curve"] = s.whole_curve();
    ordered_json clusters = ordered_json::array();
    for (const NormingCluster& c : s.clusters) {
        clusters.push_back({{"kind", to_string(c.kind)},
                            {"t", c.t},
                            {"t_lo", c.t_lo},
                            {"t_hi", c.t_hi},
                            {"first_index", c.first_index},
                            {"count", c.count}});
    }
    j["clusters"] = clusters;
    return j;
}

ordered_json to_json(const JGammaReport& r)
{
    return {{"member", r.member},
            {"zero_function", r.zero_function},
            {"max_modulus", r.max_modulus},
            {"min_modulus", r.min_modulus}};
}

ordered_json to_json(const PointClass& c)
{
    return {{"smoothness", to_string(c.smoothness)},
            {"extreme", c.extreme},
            {"norm_value", c.norm_value},
            {"norming_set", to_json(c.norming)}};
}

ordered_json to_json(const OrthoDecision& d)
{
    return {{"verdict", to_string(d.verdict)},
            {"witness", optional_complex(d.witness)},
            {"achieved", d.achieved},
            {"min_value", d.min_value},
            {"minimizer", complex_json(d.minimizer)},
            {"base_norm", d.base_norm},
            {"iterations", d.iterations},
            {"discrete_mf", d.discrete_mf}};
}

ordered_json to_json(const CoveringResult& c)
{
    return {{"covering", c.covering},
            {"witness", optional_complex(c.witness)},
            {"min_phi", c.min_phi},
            {"all_plane", c.all_plane},
            {"iterations", c.iterations}};
}

ordered_json to_json(const WindingResult& w)
{
    return {{"count", w.count},
            {"min_modulus_on_curve", w.min_modulus_on_curve},
            {"total_arg_variation", w.total_arg_variation}};
}

ordered_json to_json(const FtaReport& r)
{
    return {{"degree", r.degree},
            {"bound", r.bound},
            {"radius", r.radius},
            {"witness_norm", r.witness_norm},
            {"monomial_norm", r.monomial_norm},
            {"witness_ok", r.witness_ok()},
            {"count", r.count},
            {"count_ok", r.count_ok()}};
}

ordered_json to_json(const DerivativeScenario& s)
{
    return {{"lhs", s.lhs},
            {"rhs", s.rhs},
            {"hypothesis_holds", s.hypothesis_holds},
            {"decision", s.decision ? to_json(*s.decision) : ordered_json(nullptr)},
            {"conclusion_holds", s.conclusion_holds}};
}

ordered_json to_json(const RoucheReport& r)
{
    return {{"claim", to_string(r.claim)},
            {"decision", to_json(r.decision)},
            {"pointwise_hypothesis", r.pointwise_hypothesis},
            {"count_f", r.count_f ? ordered_json(*r.count_f) : ordered_json(nullptr)},
            {"count_g", r.count_g ? ordered_json(*r.count_g) : ordered_json(nullptr)}};
}

}  // namespace holo
