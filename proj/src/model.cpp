#include "svcdep/model.hpp"

#include "svcdep/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>

namespace svcdep {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::NoDependency: return "no-dependency";
    case ErrorKind::Ingest: return "ingest";
    case ErrorKind::Revision: return "revision";
    case ErrorKind::EmptySystem: return "empty-system";
    case ErrorKind::Load: return "load";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::InvalidPath: return "invalid-path";
    case ErrorKind::InvalidName: return "invalid-name";
    case ErrorKind::InvalidMerge: return "invalid-merge";
    case ErrorKind::InvalidDiff: return "invalid-diff";
    case ErrorKind::Config: return "config";
    case ErrorKind::Io: return "io";
    case ErrorKind::Generator: return "generator";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

ServiceUniverse::ServiceUniverse(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    ids_.reserve(names.size());
    int ordinal = 1;
    for (auto& name : names) {
        ids_.push_back(ServiceId{std::move(name), ordinal++});
    }
}

bool ServiceUniverse::contains(std::string_view name) const {
    return ordinal_of(name) != 0;
}

int ServiceUniverse::ordinal_of(std::string_view name) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), name,
                               [](const ServiceId& id, std::string_view n) { return id.name < n; });
    if (it != ids_.end() && it->name == name) {
        return it->ordinal;
    }
    return 0;
}

std::vector<std::string> ServiceUniverse::names() const {
    std::vector<std::string> out;
    out.reserve(ids_.size());
    for (const auto& id : ids_) {
        out.push_back(id.name);
    }
    return out;
}

std::pair<std::string, std::string> canonical_pair(std::string_view a, std::string_view b) {
    if (a == b) {
        throw Error(ErrorKind::InvalidPair,
                    "diagonal pair (" + std::string(a) + ", " + std::string(b) + ")");
    }
    if (b < a) {
        std::swap(a, b);
    }
    return {std::string(a), std::string(b)};
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::array<std::pair<std::string_view, HttpVerb>, 7> kVerbs{{
    {"GET", HttpVerb::Get},
    {"POST", HttpVerb::Post},
    {"PUT", HttpVerb::Put},
    {"DELETE", HttpVerb::Delete},
    {"PATCH", HttpVerb::Patch},
    {"HEAD", HttpVerb::Head},
    {"OPTIONS", HttpVerb::Options},
}};

} // namespace

HttpMethod HttpMethod::parse(std::string_view text) {
    for (const auto& [name, verb] : kVerbs) {
        if (name == text) {
            return HttpMethod(verb);
        }
    }
    HttpMethod m(HttpVerb::Other);
    m.raw_ = std::string(text);
    return m;
}

std::string HttpMethod::str() const {
    for (const auto& [name, verb] : kVerbs) {
        if (verb == verb_) {
            return std::string(name);
        }
    }
    return raw_;
}

// ---------------------------------------------------------------------------

std::size_t PathTemplate::variable_count() const {
    return static_cast<std::size_t>(
        std::count_if(segments.begin(), segments.end(), [](const auto& s) { return s.is_variable(); }));
}

std::string PathTemplate::render() const {
    std::string out;
    for (const auto& seg : segments) {
        out += '/';
        if (seg.is_variable()) {
            out += '{';
            out += seg.text;
            out += '}';
        } else {
            out += seg.text;
        }
    }
    if (hasTrailingWildcard) {
        out += "/**";
    }
    if (out.empty()) {
        out = "/";
    }
    return out;
}

std::string_view param_kind_name(ParamKind kind) {
    switch (kind) {
    case ParamKind::Path: return "path";
    case ParamKind::Query: return "query";
    case ParamKind::Body: return "body";
    }
    return "path";
}

std::optional<ParamKind> parse_param_kind(std::string_view text) {
    if (text == "path") return ParamKind::Path;
    if (text == "query") return ParamKind::Query;
    if (text == "body") return ParamKind::Body;
    return std::nullopt;
}

std::size_t EndpointDef::path_param_count() const {
    return static_cast<std::size_t>(
        std::count_if(params.begin(), params.end(), [](const auto& p) { return p.kind == ParamKind::Path; }));
}

bool RestCall::has_literal() const {
    return std::any_of(url.begin(), url.end(), [](const UrlPart& p) { return p.is_literal(); });
}

std::string_view entity_kind_name(EntityKind kind) {
    return kind == EntityKind::Persistent ? "persistent" : "dto";
}

// ---------------------------------------------------------------------------

void validate(const SystemIR& ir) {
    if (ir.services.empty()) {
        throw Error(ErrorKind::EmptySystem, "system has no services");
    }
    auto require_service = [&](const std::string& name, const std::string& where) {
        if (name.empty() || !ir.services.contains(name)) {
            throw Error(ErrorKind::Validation, where + ": unknown service '" + name + "'");
        }
    };
    for (const auto& id : ir.services.ids()) {
        if (id.name.empty()) {
            throw Error(ErrorKind::Validation, "services: empty service name");
        }
    }
    for (std::size_t i = 0; i < ir.endpoints.size(); ++i) {
        const auto& ep = ir.endpoints[i];
        const std::string where = "endpoints[" + std::to_string(i) + "]";
        require_service(ep.service, where + ".service");
        for (std::size_t s = 0; s < ep.path.segments.size(); ++s) {
            const auto& seg = ep.path.segments[s];
            if (seg.is_literal() && (seg.text.empty() || seg.text.find('/') != std::string::npos)) {
                throw Error(ErrorKind::Validation,
                            where + ".path: malformed literal segment " + std::to_string(s));
            }
        }
        if (ep.path.variable_count() != ep.path_param_count()) {
            throw Error(ErrorKind::Validation,
                        where + ".params: " + std::to_string(ep.path.variable_count()) +
                            " path variables but " + std::to_string(ep.path_param_count()) +
                            " path parameters");
        }
    }
    for (std::size_t i = 0; i < ir.calls.size(); ++i) {
        const auto& call = ir.calls[i];
        const std::string where = "calls[" + std::to_string(i) + "]";
        require_service(call.caller, where + ".caller");
        if (call.url.empty()) {
            throw Error(ErrorKind::Validation, where + ".url: empty");
        }
        if (!call.has_literal() && !call.unresolvable) {
            throw Error(ErrorKind::Validation,
                        where + ".url: no literal part but not flagged unresolvable");
        }
        if (call.argCount < 0) {
            throw Error(ErrorKind::Validation, where + ".argCount: negative");
        }
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < ir.entities.size(); ++i) {
        const auto& ent = ir.entities[i];
        const std::string where = "entities[" + std::to_string(i) + "]";
        require_service(ent.service, where + ".service");
        if (ent.name.empty()) {
            throw Error(ErrorKind::Validation, where + ".name: empty");
        }
        if (!seen.emplace(ent.service, ent.name).second) {
            throw Error(ErrorKind::Validation,
                        where + ": duplicate entity " + ent.service + "/" + ent.name);
        }
        for (std::size_t f = 0; f < ent.fields.size(); ++f) {
            if (ent.fields[f].name.empty()) {
                throw Error(ErrorKind::Validation,
                            where + ".fields[" + std::to_string(f) + "].name: empty");
            }
        }
    }
}

// ---------------------------------------------------------------------------

std::string_view matrix_kind_name(MatrixKind kind) {
    switch (kind) {
    case MatrixKind::Edm: return "edm";
    case MatrixKind::Ddm: return "ddm";
    case MatrixKind::Sdm: return "sdm";
    }
    return "edm";
}

std::optional<MatrixKind> parse_matrix_kind(std::string_view text) {
    if (text == "edm") return MatrixKind::Edm;
    if (text == "ddm") return MatrixKind::Ddm;
    if (text == "sdm") return MatrixKind::Sdm;
    return std::nullopt;
}

int EDM::at(std::string_view from, std::string_view to) const {
    auto it = cells.find(ServicePair{std::string(from), std::string(to)});
    return it == cells.end() ? 0 : it->second;
}

int EDM::total() const {
    int sum = 0;
    for (const auto& [pair, count] : cells) {
        sum += count;
    }
    return sum;
}

int DDM::at(std::string_view a, std::string_view b) const {
    if (a == b) {
        return 0;
    }
    auto it = cells.find(canonical_pair(a, b));
    return it == cells.end() ? 0 : it->second;
}

std::string_view dependency_class_name(DependencyClass cls) {
    switch (cls) {
    case DependencyClass::EndpointsOnly: return "endpoints-only";
    case DependencyClass::DataOnly: return "data-only";
    case DependencyClass::Both: return "both";
    }
    return "both";
}

DependencyClass SdmCell::classification() const {
    if (endpointDegree > 0 && dataDegree > 0) {
        return DependencyClass::Both;
    }
    return endpointDegree > 0 ? DependencyClass::EndpointsOnly : DependencyClass::DataOnly;
}

SdmCell SDM::at(std::string_view from, std::string_view to) const {
    auto it = cells.find(ServicePair{std::string(from), std::string(to)});
    return it == cells.end() ? SdmCell{} : it->second;
}

std::string sdm_display(const SdmCell& cell) {
    if (cell.endpointDegree < 0 || cell.dataDegree < 0) {
        throw Error(ErrorKind::NoDependency, "negative dependency degree");
    }
    if (cell.endpointDegree == 0 && cell.dataDegree == 0) {
        throw Error(ErrorKind::NoDependency, "cell (0,0) has no dependency");
    }
    std::string out = std::to_string(cell.endpointDegree);
    if (cell.dataDegree > 0) {
        out += '.';
        out += std::to_string(cell.dataDegree);
    }
    return out;
}

SdmCell parse_sdm_display(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        int value = 0;
        if (part.empty() || (part.size() > 1 && part.front() == '0')) {
            throw Error(ErrorKind::NoDependency, "malformed SDM display '" + std::string(text) + "'");
        }
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || value < 0) {
            throw Error(ErrorKind::NoDependency, "malformed SDM display '" + std::string(text) + "'");
        }
        return value;
    };
    SdmCell cell;
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        cell.endpointDegree = parse_int(text);
    } else {
        cell.endpointDegree = parse_int(text.substr(0, dot));
        cell.dataDegree = parse_int(text.substr(dot + 1));
        if (cell.dataDegree == 0) {
            throw Error(ErrorKind::NoDependency, "malformed SDM display '" + std::string(text) + "'");
        }
    }
    if (cell.endpointDegree == 0 && cell.dataDegree == 0) {
        throw Error(ErrorKind::NoDependency, "cell (0,0) has no dependency");
    }
    return cell;
}

} // namespace svcdep
