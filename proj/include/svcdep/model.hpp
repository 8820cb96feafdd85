#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace svcdep {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kUnknownType = "unknown";
inline constexpr std::string_view kUnversioned = "unversioned";

struct ServiceId {
    std::string name;
    int ordinal = 0;

    friend bool operator==(const ServiceId&, const ServiceId&) = default;
};

// Sorted, ordinal-stamped service list. Ordinals follow lexicographic name
// order starting at 1.
class ServiceUniverse {
public:
    ServiceUniverse() = default;
    explicit ServiceUniverse(std::vector<std::string> names);

    const std::vector<ServiceId>& ids() const noexcept { return ids_; }
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(std::string_view name) const;
    // 0 when absent.
    int ordinal_of(std::string_view name) const;
    std::vector<std::string> names() const;

    friend bool operator==(const ServiceUniverse&, const ServiceUniverse&) = default;

private:
    std::vector<ServiceId> ids_;
};

std::pair<std::string, std::string> canonical_pair(std::string_view a, std::string_view b);

struct SourceLoc {
    std::string file;
    int line = 0;

    friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
    friend auto operator<=>(const SourceLoc&, const SourceLoc&) = default;
};

// ---------------------------------------------------------------------------
// HTTP methods

enum class HttpVerb { Get, Post, Put, Delete, Patch, Head, Options, Other };

// Unknown verbs keep their spelling and never compare equal for matching.
class HttpMethod {
public:
    HttpMethod() = default;
    explicit HttpMethod(HttpVerb verb) : verb_(verb) {}
    static HttpMethod parse(std::string_view text);

    HttpVerb verb() const noexcept { return verb_; }
    bool known() const noexcept { return verb_ != HttpVerb::Other; }
    std::string str() const;
    bool matches(const HttpMethod& other) const noexcept {
        return known() && verb_ == other.verb_;
    }

    friend bool operator==(const HttpMethod&, const HttpMethod&) = default;

private:
    HttpVerb verb_ = HttpVerb::Get;
    std::string raw_;
};

// ---------------------------------------------------------------------------
// Paths

struct PathSegment {
    enum class Kind { Literal, Variable };

    Kind kind = Kind::Literal;
    // Literal text, or the type tag of a variable.
    std::string text;

    static PathSegment literal(std::string text) { return {Kind::Literal, std::move(text)}; }
    static PathSegment variable(std::string tag) { return {Kind::Variable, std::move(tag)}; }
    bool is_literal() const noexcept { return kind == Kind::Literal; }
    bool is_variable() const noexcept { return kind == Kind::Variable; }

    friend bool operator==(const PathSegment&, const PathSegment&) = default;
};

struct PathTemplate {
    std::vector<PathSegment> segments;
    bool hasTrailingWildcard = false;

    std::size_t variable_count() const;
    // "/a/b/{Type}"; "/**" suffix when the trailing wildcard is set.
    std::string render() const;

    friend bool operator==(const PathTemplate&, const PathTemplate&) = default;
};

// ---------------------------------------------------------------------------
// Extracted facts

enum class ParamKind { Path, Query, Body };

std::string_view param_kind_name(ParamKind kind);
std::optional<ParamKind> parse_param_kind(std::string_view text);

struct EndpointParam {
    std::string name;
    std::string declaredType;
    ParamKind kind = ParamKind::Path;

    friend bool operator==(const EndpointParam&, const EndpointParam&) = default;
};

struct EndpointDef {
    std::string service;
    PathTemplate path;
    HttpMethod method;
    std::vector<EndpointParam> params;
    std::string returnType{kUnknownType};
    SourceLoc sourceLoc;

    std::size_t path_param_count() const;

    friend bool operator==(const EndpointDef&, const EndpointDef&) = default;
};

struct UrlPart {
    enum class Kind { Literal, Hole };

    Kind kind = Kind::Literal;
    // Literal text, or the inferred type of the hole ("unknown" if not visible).
    std::string text;

    static UrlPart literal(std::string text) { return {Kind::Literal, std::move(text)}; }
    static UrlPart hole(std::string type) { return {Kind::Hole, std::move(type)}; }
    bool is_literal() const noexcept { return kind == Kind::Literal; }
    bool is_hole() const noexcept { return kind == Kind::Hole; }

    friend bool operator==(const UrlPart&, const UrlPart&) = default;
};

struct RestCall {
    std::string caller;
    std::vector<UrlPart> url;
    HttpMethod method;
    int argCount = 0;
    std::string expectedReturnType{kUnknownType};
    SourceLoc sourceLoc;
    // Set when the URL has no literal part or the verb could not be read.
    bool unresolvable = false;

    bool has_literal() const;

    friend bool operator==(const RestCall&, const RestCall&) = default;
};

struct EntityField {
    std::string name;
    std::string typeName;

    friend bool operator==(const EntityField&, const EntityField&) = default;
};

enum class EntityKind { Persistent, Dto };

std::string_view entity_kind_name(EntityKind kind);

struct EntityDef {
    std::string service;
    std::string name;
    std::vector<EntityField> fields;
    EntityKind kind = EntityKind::Dto;
    std::vector<std::string> annotations;
    SourceLoc sourceLoc;

    friend bool operator==(const EntityDef&, const EntityDef&) = default;
};

struct IrMeta {
    std::string sourceRoot;
    std::string revision{kUnversioned};
    std::string toolVersion{kToolVersion};
    // Directories that looked like services but were not analyzable.
    std::vector<std::string> skippedServices;

    friend bool operator==(const IrMeta&, const IrMeta&) = default;
};

struct SystemIR {
    ServiceUniverse services;
    std::vector<EndpointDef> endpoints;
    std::vector<RestCall> calls;
    std::vector<EntityDef> entities;
    IrMeta meta;

    friend bool operator==(const SystemIR&, const SystemIR&) = default;
};

// Throws Error(EmptySystem) or Error(Validation) naming the first violation.
void validate(const SystemIR& ir);

// ---------------------------------------------------------------------------
// Match results. References are indexes into the owning SystemIR.

struct EndpointMatch {
    std::size_t call = 0;
    std::size_t endpoint = 0;
    int specificity = 0;
    bool ambiguous = false;

    friend bool operator==(const EndpointMatch&, const EndpointMatch&) = default;
};

struct EntityMatch {
    std::size_t a = 0;
    std::size_t b = 0;
    double nameScore = 0.0;
    int matchedFieldCount = 0;

    friend bool operator==(const EntityMatch&, const EntityMatch&) = default;
};

// ---------------------------------------------------------------------------
// Matrices

using ServicePair = std::pair<std::string, std::string>;

enum class MatrixKind { Edm, Ddm, Sdm };

std::string_view matrix_kind_name(MatrixKind kind);
std::optional<MatrixKind> parse_matrix_kind(std::string_view text);

// Directed call counts, caller -> callee.
struct EDM {
    ServiceUniverse services;
    std::map<ServicePair, int> cells;

    int at(std::string_view from, std::string_view to) const;
    int total() const;
};

// Shared entity counts, stored under the canonical (lexicographic) pair.
struct DDM {
    ServiceUniverse services;
    std::map<ServicePair, int> cells;

    int at(std::string_view a, std::string_view b) const;
};

enum class DependencyClass { EndpointsOnly, DataOnly, Both };

std::string_view dependency_class_name(DependencyClass cls);

struct SdmCell {
    int endpointDegree = 0;
    int dataDegree = 0;

    DependencyClass classification() const;

    friend bool operator==(const SdmCell&, const SdmCell&) = default;
};

struct SDM {
    ServiceUniverse services;
    std::map<ServicePair, SdmCell> cells;

    SdmCell at(std::string_view from, std::string_view to) const;
};

// "E.D", "E" when D is zero, "0.D" when E is zero.
std::string sdm_display(const SdmCell& cell);
SdmCell parse_sdm_display(std::string_view text);

} // namespace svcdep
