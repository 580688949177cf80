#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "holo/config.hpp"

namespace holo {

struct BlockResult {
    std::string name;
    std::string label;
    int instances = 0;
    int failures = 0;
    /// First few failing instances, for the report.
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;

    bool passed() const { return instances > 0 && failures == 0; }
};

struct SuiteResult {
    std::vector<BlockResult> blocks;

    bool passed() const;
};

/// Block names in run order.
const std::vector<std::string>& suite_block_names();

/// Runs the selected blocks (all when only is empty) on a pool of worker
/// threads; workers = 0 picks the hardware concurrency. Results keep the
/// block order. Throws Precondition for an unknown block name.
SuiteResult verify_paper(const RunConfig& cfg, const std::vector<std::string>& only = {}, unsigned workers = 0);

/// Fixed-width summary: block, label, instances, failures, PASS/FAIL.
std::string format_table(const SuiteResult& result);

nlohmann::ordered_json to_json(const SuiteResult& result);

}  // namespace holo
