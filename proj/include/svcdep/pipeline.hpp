#pragma once

#include "svcdep/config.hpp"
#include "svcdep/frontend.hpp"
#include "svcdep/match.hpp"
#include "svcdep/matrix.hpp"
#include "svcdep/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svcdep {

struct Extraction {
    SystemIR ir;
    std::vector<Warning> warnings;
};

// fetch -> discover -> scan. A temporary checkout is removed afterwards, or
// kept (and named in the error) when extraction fails.
Extraction extract_system(const std::string& source, const std::optional<std::string>& revision,
                          const RunConfig& config, Execution execution = Execution::Parallel);

struct AnalyzeOptions {
    bool strict = false; // leave ambiguous matches out of the EDM
    int minCalls = 3;
    Execution execution = Execution::Parallel;
};

struct Analysis {
    SystemIR ir;
    std::vector<Warning> warnings;
    CallResolution resolution;
    // Matches that count toward the EDM, hotspots and dependency lists.
    std::vector<EndpointMatch> counted;
    EntityMatching entities;
    EDM edm;
    DDM ddm;
    SDM sdm;
    std::vector<HotspotRow> hotspots;
    AnalyzeOptions options;
};

Analysis analyze(SystemIR ir, std::vector<Warning> warnings, const RunConfig& config, const AnalyzeOptions& options);

} // namespace svcdep
