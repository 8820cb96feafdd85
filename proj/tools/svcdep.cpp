// svcdep: microservice dependency analysis from annotated sources.

#include "svcdep/error.hpp"
#include "svcdep/ir_io.hpp"
#include "svcdep/parallel.hpp"
#include "svcdep/pipeline.hpp"
#include "svcdep/render.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using namespace svcdep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitChanged = 3;

struct Common {
    std::string configPath;
    int jobs = 0;
    bool strict = false;
    int minCalls = 3;
};

RunConfig load_run_config(const Common& c) {
    return c.configPath.empty() ? RunConfig{} : load_config(c.configPath);
}

AnalyzeOptions analyze_options(const Common& c) {
    AnalyzeOptions o;
    o.strict = c.strict;
    o.minCalls = c.minCalls;
    return o;
}

void print_summary(const Analysis& a, std::ostream& out) {
    std::size_t ambiguous = 0;
    for (const auto& m : a.resolution.matches) {
        ambiguous += m.ambiguous ? 1 : 0;
    }
    out << "services:       " << a.ir.services.size() << " analyzed, " << a.ir.meta.skippedServices.size()
        << " skipped\n"
        << "endpoints:      " << a.ir.endpoints.size() << "\n"
        << "calls:          " << a.ir.calls.size() << "\n"
        << "matched:        " << a.resolution.matches.size() << "\n"
        << "unmatched:      " << a.resolution.unmatched.size() << "\n"
        << "ambiguous:      " << ambiguous << "\n"
        << "unresolvable:   " << a.resolution.unresolvable.size() << "\n"
        << "entities:       " << a.ir.entities.size() << "\n"
        << "entity classes: " << a.entities.equivalence.classes.size() << "\n";
}

bool is_json_file(const std::string& s) {
    std::error_code ec;
    return fs::is_regular_file(s, ec) && fs::path(s).extension() == ".json";
}

// An input for diff/hotspots: a source tree, a git URL, an IR file or an
// analysis.json. Analysis documents are returned as-is.
struct Input {
    std::optional<Analysis> analysis;
    std::optional<nlohmann::json> analysisDoc;
};

Input load_input(const std::string& source, const std::optional<std::string>& rev, const RunConfig& cfg,
                 const AnalyzeOptions& opts) {
    Input in;
    if (is_json_file(source)) {
        const auto doc = nlohmann::json::parse(read_text_file(source), nullptr, false);
        if (doc.is_discarded()) {
            throw Error(ErrorKind::Load, source + ": not valid JSON");
        }
        if (doc.is_object() && doc.contains("matrices")) {
            in.analysisDoc = doc;
            return in;
        }
        SystemIR ir = ir_from_json(doc);
        in.analysis = analyze(std::move(ir), {}, cfg, opts);
        return in;
    }
    Extraction ex = extract_system(source, rev, cfg);
    in.analysis = analyze(std::move(ex.ir), std::move(ex.warnings), cfg, opts);
    return in;
}

MatrixTable table_of(const Input& in, MatrixKind kind) {
    if (in.analysisDoc) {
        return table_from_analysis_json(*in.analysisDoc, kind);
    }
    switch (kind) {
    case MatrixKind::Edm: return to_table(in.analysis->edm);
    case MatrixKind::Ddm: return to_table(in.analysis->ddm);
    case MatrixKind::Sdm: return to_table(in.analysis->sdm);
    }
    return {};
}

MatrixKind kind_arg(const std::string& s) {
    auto k = parse_matrix_kind(s);
    if (!k) {
        throw Error(ErrorKind::Config, "unknown matrix kind '" + s + "' (expected edm, ddm or sdm)");
    }
    return *k;
}

std::string one_line(std::string s) {
    for (char& c : s) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Microservice dependency analysis: endpoint, data and service dependency matrices"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--config", common.configPath, "YAML configuration file")->check(CLI::ExistingFile);
    app.add_option("--jobs", common.jobs, "Worker threads for scanning and matching (default: logical CPUs)")
        ->check(CLI::NonNegativeNumber);

    // analyze
    auto* analyzeCmd = app.add_subcommand("analyze", "Run the full analysis and write reports");
    std::string source;
    std::optional<std::string> rev;
    std::string outDir = "out";
    std::string irIn;
    std::string irOut;
    std::string formats = "json,csv,svg";
    analyzeCmd->add_option("source", source, "Source directory or git URL");
    analyzeCmd->add_option("--rev", rev, "Tag or commit to check out");
    analyzeCmd->add_option("--out", outDir, "Output directory");
    analyzeCmd->add_flag("--strict", common.strict, "Leave ambiguous matches out of the EDM");
    analyzeCmd->add_option("--ir-in", irIn, "Analyze an IR file instead of scanning sources");
    analyzeCmd->add_option("--ir-out", irOut, "Also write the extracted IR");
    analyzeCmd->add_option("--format", formats, "Comma list of json,csv,svg");
    analyzeCmd->add_option("--min-calls", common.minCalls, "Hotspot threshold (calls > N)")
        ->check(CLI::NonNegativeNumber);

    // diff
    auto* diffCmd = app.add_subcommand("diff", "Compare one matrix across two versions");
    std::string oldSource;
    std::string newSource;
    std::string kind = "edm";
    std::string newKind;
    std::optional<std::string> oldRev;
    std::optional<std::string> newRev;
    std::string diffOut = "out";
    diffCmd->add_option("old", oldSource, "Old source, IR file or analysis.json")->required();
    diffCmd->add_option("new", newSource, "New source, IR file or analysis.json")->required();
    diffCmd->add_option("--kind", kind, "edm, ddm or sdm");
    diffCmd->add_option("--new-kind", newKind, "Matrix kind of the new side (defaults to --kind)");
    diffCmd->add_option("--old-rev", oldRev, "Revision of the old side");
    diffCmd->add_option("--new-rev", newRev, "Revision of the new side");
    diffCmd->add_option("--out", diffOut, "Output directory for diff.json and diff.txt");
    diffCmd->add_flag("--strict", common.strict, "Leave ambiguous matches out of the EDM");

    // hotspots
    auto* hotCmd = app.add_subcommand("hotspots", "List endpoints receiving many calls");
    std::string hotSource;
    std::optional<std::string> hotRev;
    hotCmd->add_option("source", hotSource, "Source directory, git URL or IR file")->required();
    hotCmd->add_option("--rev", hotRev, "Tag or commit to check out");
    hotCmd->add_option("--min-calls", common.minCalls, "List endpoints with more than N calls")
        ->check(CLI::NonNegativeNumber);
    hotCmd->add_flag("--strict", common.strict, "Leave ambiguous matches out");

    // ir
    auto* irCmd = app.add_subcommand("ir", "IR utilities");
    irCmd->require_subcommand(1);
    auto* exportCmd = irCmd->add_subcommand("export", "Scan sources and write the IR");
    std::string exportSource;
    std::string exportFile;
    std::optional<std::string> exportRev;
    exportCmd->add_option("source", exportSource, "Source directory or git URL")->required();
    exportCmd->add_option("file", exportFile, "IR file to write")->required();
    exportCmd->add_option("--rev", exportRev, "Tag or commit to check out");
    auto* validateCmd = irCmd->add_subcommand("validate", "Check an IR file");
    std::string validateFile;
    validateCmd->add_option("file", validateFile, "IR file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << one_line(e.what()) << "\n";
        return kExitError;
    }

    try {
        ThreadCountGuard threads(common.jobs);
        const RunConfig cfg = load_run_config(common);
        const AnalyzeOptions opts = analyze_options(common);

        if (*analyzeCmd) {
            const OutputFormats fmt = OutputFormats::parse(formats);
            Extraction ex;
            if (!irIn.empty()) {
                ex.ir = load_ir(irIn);
            } else if (source.empty()) {
                throw Error(ErrorKind::Config, "analyze needs a source or --ir-in");
            } else {
                ex = extract_system(source, rev, cfg);
            }
            if (!irOut.empty()) {
                write_ir(ex.ir, irOut);
            }
            const Analysis a = analyze(std::move(ex.ir), std::move(ex.warnings), cfg, opts);
            write_outputs(a, outDir, fmt, cfg.colors);
            print_summary(a, std::cout);
            return kExitOk;
        }

        if (*diffCmd) {
            const MatrixKind oldKind = kind_arg(kind);
            const MatrixKind nextKind = newKind.empty() ? oldKind : kind_arg(newKind);
            if (oldKind != nextKind) {
                throw Error(ErrorKind::InvalidDiff, "cannot diff " + kind + " against " + newKind);
            }
            const Input before = load_input(oldSource, oldRev, cfg, opts);
            const Input after = load_input(newSource, newRev, cfg, opts);
            const MatrixDiff d = diff(table_of(before, oldKind), table_of(after, nextKind));
            fs::create_directories(diffOut);
            write_text_file(fs::path(diffOut) / "diff.json", diff_to_json(d).dump(2) + "\n");
            const std::string table = diff_table_text(d);
            write_text_file(fs::path(diffOut) / "diff.txt", table);
            std::cout << table;
            return d.empty() ? kExitOk : kExitChanged;
        }

        if (*hotCmd) {
            const Input in = load_input(hotSource, hotRev, cfg, opts);
            if (!in.analysis) {
                throw Error(ErrorKind::Load, "hotspots needs a source tree or an IR file");
            }
            const Analysis& a = *in.analysis;
            std::cout << "service\tpath\tmethod\tcalls\tcallers\n";
            for (const auto& h : a.hotspots) {
                const auto& ep = a.ir.endpoints[h.endpoint];
                std::cout << ep.service << '\t' << ep.path.render() << '\t' << ep.method.str() << '\t' << h.callCount
                          << '\t' << h.distinctCallers << '\n';
            }
            return kExitOk;
        }

        if (*exportCmd) {
            Extraction ex = extract_system(exportSource, exportRev, cfg);
            write_ir(ex.ir, exportFile);
            for (const auto& w : ex.warnings) {
                std::cerr << "warning: " << w.code << ": " << w.loc.file << ":" << w.loc.line << ": "
                          << one_line(w.message) << "\n";
            }
            return kExitOk;
        }

        if (*validateCmd) {
            const SystemIR ir = load_ir(validateFile);
            std::cout << "ok: " << ir.services.size() << " services, " << ir.endpoints.size() << " endpoints, "
                      << ir.calls.size() << " calls, " << ir.entities.size() << " entities\n";
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << error_kind_name(e.kind()) << ": " << one_line(e.what()) << "\n";
        return e.kind() == ErrorKind::EmptySystem && *analyzeCmd ? kExitEmpty : kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << one_line(e.what()) << "\n";
        return kExitError;
    }
    return kExitError;
}
