#pragma once

#include "svcdep/frontend.hpp"
#include "svcdep/ingest.hpp"
#include "svcdep/match.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace svcdep {

// Heatmap colors as #rrggbb.
struct RenderColors {
    std::string heatLow{"#ffffff"};
    std::string heatHigh{"#08306b"};
    std::string endpointsOnly{"#2b6cb0"};
    std::string dataOnly{"#dd8452"};
    std::string both{"#d62728"};
    std::string marker{"#ff0000"};

    friend bool operator==(const RenderColors&, const RenderColors&) = default;
};

struct RunConfig {
    DiscoveryConfig discovery;
    FrontendConfig frontend;
    SimilarityConfig similarity;
    std::vector<TypePattern> typePatterns; // overrides on top of the defaults
    RenderColors colors;

    // Throws Config when a pattern does not compile.
    TypePatterns patterns() const;
    // Empty dictionary when no path is configured.
    SynonymDictionary synonyms() const;
};

// YAML document with optional sections `discovery`, `frontend`, `match`,
// `render`. Unknown keys and ill-typed values raise Error(Config). Relative
// paths are resolved against `baseDir`.
RunConfig parse_config(const std::string& text, const std::filesystem::path& baseDir = {},
                       RunConfig base = {});
RunConfig load_config(const std::filesystem::path& file, RunConfig base = {});

} // namespace svcdep
