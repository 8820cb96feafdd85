#pragma once

#include "svcdep/model.hpp"
#include "svcdep/path.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace svcdep {

// Serial is the reference path; Parallel distributes the outer loop with
// OpenMP and must produce identical results.
enum class Execution { Serial, Parallel };

// ---------------------------------------------------------------------------
// Signature matching

struct TypePattern {
    std::string typeName;
    std::string valueRegex;
};

class TypePatterns {
public:
    // Integer types -> [0-9]+, UUID -> 8-4-4-4-12 hex, boolean -> true|false,
    // anything else -> [^/]+.
    TypePatterns();
    // Throws Error(Config) when a regex does not compile.
    void set(const TypePattern& pattern);
    // Whole-segment match of a literal value against a declared type.
    bool accepts(std::string_view typeName, const std::string& value) const;
    std::vector<TypePattern> list() const;

private:
    struct Entry {
        std::string source;
        std::regex regex;
    };
    std::map<std::string, Entry, std::less<>> byType_;
    Entry fallback_;
};

struct SignatureMatch {
    int specificity = 0;
};

// Core rule on an already-normalized call path.
std::optional<SignatureMatch> match_signature(const PathTemplate& callPath, const HttpMethod& callMethod,
                                              const EndpointDef& endpoint, const TypePatterns& patterns);

// Normalizes the call URL first; unresolvable calls never match.
std::optional<SignatureMatch> match_signature(const RestCall& call, const EndpointDef& endpoint,
                                              const TypePatterns& patterns);

struct CallTarget {
    NormalizedPath url;
    // Service the call is addressed to, empty when unknown.
    std::string service;
    bool viaPathPrefix = false;
};

// Resolves the target service by hostname, falling back to a first path
// segment naming a service (that segment is then dropped).
CallTarget resolve_target(const RestCall& call, const ServiceUniverse& services);

struct AmbiguityNote {
    std::size_t call = 0;
    std::size_t chosen = 0;
    std::vector<std::size_t> tiedWith;
    int specificity = 0;
};

struct CallResolution {
    std::vector<EndpointMatch> matches;          // in call order
    std::vector<std::size_t> unmatched;          // resolvable calls without a match
    std::vector<std::size_t> unresolvable;       // calls excluded from matching
    std::vector<AmbiguityNote> ambiguities;
    std::vector<std::size_t> resolvedByPathPrefix;
    std::vector<std::size_t> invalidPaths;       // subset of unmatched
};

CallResolution resolve_calls(const SystemIR& ir, const TypePatterns& patterns,
                             Execution execution = Execution::Parallel);

// ---------------------------------------------------------------------------
// Name similarity

// One line per synonym set, comma-separated lowercase tokens.
class SynonymDictionary {
public:
    SynonymDictionary() = default;
    static SynonymDictionary parse(std::string_view text);
    static SynonymDictionary load(const std::filesystem::path& file);

    void add_set(const std::vector<std::string>& words);
    bool synonyms(std::string_view a, std::string_view b) const;
    bool empty() const noexcept { return sets_.empty(); }

private:
    std::unordered_map<std::string, std::vector<int>> sets_;
    int next_ = 0;
};

struct SimilarityConfig {
    double threshold = 0.80;
    std::optional<std::filesystem::path> synonymDictPath;
    int minFieldMatches = 1;
};

// Lowercased camelCase / snake_case tokens.
std::vector<std::string> tokenize_name(std::string_view name);

std::size_t levenshtein(std::string_view a, std::string_view b);

// Throws Error(InvalidName) on empty input.
double name_similarity(std::string_view a, std::string_view b, const SynonymDictionary& dict = {});

struct EquivalenceClass {
    std::size_t representative = 0;     // entity index, minimal (service, name)
    std::vector<std::size_t> members;   // sorted by (service, name)
};

struct EntityEquivalence {
    std::vector<EquivalenceClass> classes; // sorted by representative key
    // Entity index -> class index, for matched entities only.
    std::map<std::size_t, std::size_t> classOf;
};

struct EntityMatching {
    std::vector<EntityMatch> matches; // canonical pairs, sorted
    EntityEquivalence equivalence;
};

// Field pairs match on erased type equality plus name similarity; counted
// greedily one-to-one in declaration order of the canonical first entity.
int matched_field_count(const EntityDef& a, const EntityDef& b, double threshold,
                        const SynonymDictionary& dict = {});

EntityMatching match_entities(const SystemIR& ir, const SimilarityConfig& cfg,
                              const SynonymDictionary& dict = {},
                              Execution execution = Execution::Parallel);

EntityEquivalence build_equivalence(const SystemIR& ir, const std::vector<EntityMatch>& matches);

} // namespace svcdep
