#pragma once

#include <string>

#include <json.hpp>

#include "holo/config.hpp"
#include "holo/norm.hpp"
#include "holo/ortho.hpp"
#include "holo/zeros.hpp"

namespace holo {

using ordered_json = nlohmann::ordered_json;

/// Structured result of one CLI command.
struct Report {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json outputs = ordered_json::object();
    double elapsed_ms = 0.0;
    RunConfig config;

    std::string dump() const;
    static Report parse(const std::string& text);
};

void to_json(ordered_json& j, const Report& r);
void from_json(const ordered_json& j, Report& r);

/// {"re": x, "im": y}
ordered_json complex_json(cplx z);
cplx complex_from_json(const ordered_json& j);

std::string_view to_string(ClusterKind kind);
std::string_view to_string(Smoothness s);

ordered_json to_json(const NormReport& r);
ordered_json to_json(const NormingSet& s);
ordered_json to_json(const JGammaReport& r);
ordered_json to_json(const PointClass& c);
ordered_json to_json(const OrthoDecision& d);
ordered_json to_json(const CoveringResult& c);
ordered_json to_json(const WindingResult& w);
ordered_json to_json(const FtaReport& r);
ordered_json to_json(const DerivativeScenario& s);
ordered_json to_json(const RoucheReport& r);

}  // namespace holo
