#include "svcdep/config.hpp"

#include "svcdep/error.hpp"
#include "svcdep/ir_io.hpp"

#include <regex>
#include <set>

#include <yaml-cpp/yaml.h>

namespace svcdep {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw Error(ErrorKind::Config, key + ": " + what);
}

void check_keys(const YAML::Node& node, const std::string& where, const std::set<std::string>& allowed) {
    if (!node.IsMap()) {
        fail(where, "expected a mapping");
    }
    for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (allowed.count(key) == 0) {
            fail(where.empty() ? key : where + "." + key, "unknown key");
        }
    }
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& key) {
    if (!node.IsScalar()) {
        fail(key, "expected a scalar");
    }
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        fail(key, "ill-typed value '" + node.Scalar() + "'");
    }
}

std::vector<std::string> string_list(const YAML::Node& node, const std::string& key) {
    if (!node.IsSequence()) {
        fail(key, "expected a list of strings");
    }
    std::vector<std::string> out;
    for (const auto& item : node) {
        out.push_back(scalar<std::string>(item, key));
    }
    return out;
}

std::string color(const YAML::Node& node, const std::string& key) {
    auto value = scalar<std::string>(node, key);
    static const std::regex hex("#[0-9a-fA-F]{6}");
    if (!std::regex_match(value, hex)) {
        fail(key, "expected #rrggbb, got '" + value + "'");
    }
    return value;
}

} // namespace

TypePatterns RunConfig::patterns() const {
    TypePatterns p;
    for (const auto& tp : typePatterns) {
        p.set(tp);
    }
    return p;
}

SynonymDictionary RunConfig::synonyms() const {
    if (!similarity.synonymDictPath) {
        return {};
    }
    return SynonymDictionary::load(*similarity.synonymDictPath);
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& baseDir, RunConfig cfg) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw Error(ErrorKind::Config, std::string("malformed config: ") + e.what());
    }
    if (root.IsNull()) {
        return cfg;
    }
    check_keys(root, "", {"discovery", "frontend", "match", "render"});

    if (const auto d = root["discovery"]) {
        check_keys(d, "discovery", {"manifests", "excludeGlobs", "maxDepth"});
        if (d["manifests"]) cfg.discovery.manifests = string_list(d["manifests"], "discovery.manifests");
        if (d["excludeGlobs"]) cfg.discovery.excludeGlobs = string_list(d["excludeGlobs"], "discovery.excludeGlobs");
        if (d["maxDepth"]) {
            cfg.discovery.maxDepth = scalar<int>(d["maxDepth"], "discovery.maxDepth");
            if (cfg.discovery.maxDepth < 1) fail("discovery.maxDepth", "must be >= 1");
        }
    }

    if (const auto f = root["frontend"]) {
        const std::pair<const char*, std::vector<std::string> FrontendConfig::*> lists[] = {
            {"controllerMarkers", &FrontendConfig::controllerMarkers},
            {"endpointAnnotations", &FrontendConfig::endpointAnnotations},
            {"clientMethods", &FrontendConfig::clientMethods},
            {"persistenceAnnotations", &FrontendConfig::persistenceAnnotations},
            {"dataAnnotations", &FrontendConfig::dataAnnotations},
            {"dtoSuffixes", &FrontendConfig::dtoSuffixes},
            {"sourceExtensions", &FrontendConfig::sourceExtensions},
        };
        std::set<std::string> allowed;
        for (const auto& [k, m] : lists) allowed.insert(k);
        check_keys(f, "frontend", allowed);
        for (const auto& [k, member] : lists) {
            if (f[k]) cfg.frontend.*member = string_list(f[k], std::string("frontend.") + k);
        }
    }

    if (const auto m = root["match"]) {
        check_keys(m, "match", {"typePatterns", "threshold", "synonymDictPath", "minFieldMatches"});
        if (const auto tp = m["typePatterns"]) {
            if (!tp.IsMap()) fail("match.typePatterns", "expected a mapping of type name to regex");
            for (const auto& kv : tp) {
                const auto type = kv.first.as<std::string>();
                TypePattern p{type, scalar<std::string>(kv.second, "match.typePatterns." + type)};
                TypePatterns probe;
                probe.set(p); // reject bad regexes early
                cfg.typePatterns.push_back(std::move(p));
            }
        }
        if (m["threshold"]) {
            cfg.similarity.threshold = scalar<double>(m["threshold"], "match.threshold");
            if (!(cfg.similarity.threshold >= 0.0 && cfg.similarity.threshold <= 1.0)) {
                fail("match.threshold", "must be within [0, 1]");
            }
        }
        if (m["minFieldMatches"]) {
            cfg.similarity.minFieldMatches = scalar<int>(m["minFieldMatches"], "match.minFieldMatches");
            if (cfg.similarity.minFieldMatches < 0) fail("match.minFieldMatches", "must be >= 0");
        }
        if (m["synonymDictPath"]) {
            std::filesystem::path p = scalar<std::string>(m["synonymDictPath"], "match.synonymDictPath");
            cfg.similarity.synonymDictPath = p.is_relative() && !baseDir.empty() ? baseDir / p : p;
        }
    }

    if (const auto r = root["render"]) {
        check_keys(r, "render", {"colors"});
        if (const auto c = r["colors"]) {
            const std::pair<const char*, std::string RenderColors::*> keys[] = {
                {"heatLow", &RenderColors::heatLow},         {"heatHigh", &RenderColors::heatHigh},
                {"endpointsOnly", &RenderColors::endpointsOnly}, {"dataOnly", &RenderColors::dataOnly},
                {"both", &RenderColors::both},               {"marker", &RenderColors::marker},
            };
            std::set<std::string> allowed;
            for (const auto& [k, m] : keys) allowed.insert(k);
            check_keys(c, "render.colors", allowed);
            for (const auto& [k, member] : keys) {
                if (c[k]) cfg.colors.*member = color(c[k], std::string("render.colors.") + k);
            }
        }
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& file, RunConfig base) {
    std::string text;
    try {
        text = read_text_file(file);
    } catch (const Error& e) {
        throw Error(ErrorKind::Config, e.what());
    }
    return parse_config(text, file.parent_path(), std::move(base));
}

} // namespace svcdep
