#pragma once

// Seeded instance families run through the checker battery.  Instances are
// generated from (seed, index) alone, so a sweep is reproducible regardless
// of how many worker threads share it.

#include "hvar/bounds.hpp"
#include "hvar/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace hvar {

extern const char* const kToolVersion;

/// Integer ranges per parameter name, e.g. {"a": [5, 6, 7, 8]}.
using SweepParams = std::map<std::string, std::vector<int>>;

/// "a=5..8,alpha=1..2,l=2|3" -> SweepParams.  Throws InputError.
SweepParams parse_params(const std::string& text);

struct SweepOptions {
    std::string family;
    SweepParams params;
    int count = -1;  // -1 runs the family's default count
    std::uint64_t seed = 0;
    int jobs = 1;
    CheckOptions check;
};

const std::vector<std::string>& sweep_families();

/// {tool_version, family, seed, params, instances, aggregate}.  Throws
/// InputError on an unknown family or parameter.
Json run_sweep(const SweepOptions& opt);

bool any_violated(const Json& sweep_report);

}  // namespace hvar
