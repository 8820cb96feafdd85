#include "svcdep/pipeline.hpp"

#include "svcdep/error.hpp"
#include "svcdep/ingest.hpp"

namespace svcdep {

Extraction extract_system(const std::string& source, const std::optional<std::string>& revision,
                          const RunConfig& config, Execution execution) {
    SourceTree tree = fetch_repository(source, revision);
    try {
        const Discovery found = discover_services(tree.root(), config.discovery);
        BuildOptions options;
        options.sourceLabel = source;
        options.revision = tree.revision();
        options.skippedServices = found.skipped;
        options.parallel = execution == Execution::Parallel;
        FrontendResult r = build_ir(found.services, tree.root(), config.frontend, options);
        return Extraction{std::move(r.ir), std::move(r.warnings)};
    } catch (const Error& e) {
        if (tree.temporary()) {
            tree.keep();
            throw Error(e.kind(), std::string(e.what()) + " (checkout kept at " + tree.root().string() + ")");
        }
        throw;
    }
}

Analysis analyze(SystemIR ir, std::vector<Warning> warnings, const RunConfig& config, const AnalyzeOptions& options) {
    Analysis a;
    a.ir = std::move(ir);
    a.warnings = std::move(warnings);
    a.options = options;

    const TypePatterns patterns = config.patterns();
    a.resolution = resolve_calls(a.ir, patterns, options.execution);
    for (const auto& m : a.resolution.matches) {
        if (!(options.strict && m.ambiguous)) {
            a.counted.push_back(m);
        }
    }
    a.entities = match_entities(a.ir, config.similarity, config.synonyms(), options.execution);

    a.edm = build_edm(a.ir, a.counted);
    a.ddm = build_ddm(a.ir, a.entities.equivalence);
    a.sdm = build_sdm(a.edm, a.ddm);
    a.hotspots = hotspots(a.ir, a.counted, options.minCalls);
    return a;
}

} // namespace svcdep
