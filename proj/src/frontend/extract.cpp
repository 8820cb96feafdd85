#include "expression.hpp"

#include "svcdep/error.hpp"
#include "svcdep/parallel.hpp"
#include "svcdep/path.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace svcdep {

using java::TokKind;
using java::Token;
using detail::ExpressionScope;
using detail::split_top_level;

namespace {

constexpr std::array<std::string_view, 8> kNonEntityMarkers{
    "Service",  "Repository", "Component", "Configuration", "SpringBootApplication",
    "FeignClient", "ControllerAdvice", "RestControllerAdvice"};

constexpr std::array<std::string_view, 5> kClientTypes{"RestTemplate", "TestRestTemplate", "RestOperations",
                                                       "AsyncRestTemplate", "OAuth2RestTemplate"};

bool contains(const std::vector<std::string>& list, std::string_view s) {
    return std::find(list.begin(), list.end(), s) != list.end();
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

const AnnotationSite* find_annotation(const std::vector<AnnotationSite>& list, std::string_view name) {
    for (const auto& a : list) {
        if (a.name == name) {
            return &a;
        }
    }
    return nullptr;
}

const std::vector<Token>* annotation_value(const AnnotationSite& a, std::initializer_list<const char*> keys) {
    for (const char* k : keys) {
        if (auto it = a.argTokens.find(k); it != a.argTokens.end()) {
            return &it->second;
        }
    }
    return nullptr;
}

// String values of an annotation argument: a literal, a constant expression,
// or an array `{...}` of those. Non-constant elements are dropped.
std::vector<std::string> string_values(const std::vector<Token>& toks, const ExpressionScope& scope) {
    std::vector<std::string> out;
    std::size_t b = 0;
    std::size_t e = toks.size();
    if (e >= 2 && toks.front().is_punct("{") && toks.back().is_punct("}")) {
        ++b;
        --e;
    }
    for (const auto& [eb, ee] : split_top_level(toks, b, e, ",")) {
        if (eb >= ee) {
            continue;
        }
        std::vector<Token> part(toks.begin() + static_cast<std::ptrdiff_t>(eb),
                                toks.begin() + static_cast<std::ptrdiff_t>(ee));
        const auto parts = scope.evaluate(part);
        if (parts.size() == 1 && parts.front().is_literal()) {
            out.push_back(parts.front().text);
        }
    }
    return out;
}

// Verb names from `RequestMethod.X`, `X` or `{A, B}`.
std::vector<std::string> verb_values(const std::vector<Token>& toks) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (!toks[i].is(TokKind::Identifier)) {
            continue;
        }
        const bool qualifier = i + 1 < toks.size() && toks[i + 1].is_punct(".");
        if (!qualifier && HttpMethod::parse(toks[i].text).known()) {
            out.push_back(toks[i].text);
        }
    }
    return out;
}

std::string param_name(const ParamDecl& p, const AnnotationSite& a, const ExpressionScope& scope) {
    if (const auto* v = annotation_value(a, {"", "value", "name"})) {
        auto names = string_values(*v, scope);
        if (!names.empty() && !names.front().empty()) {
            return names.front();
        }
    }
    return p.name;
}

struct ParamInfo {
    EndpointParam param;
    bool bound = false;
};

std::vector<ParamInfo> endpoint_params(const MethodDecl& m, const ExpressionScope& scope) {
    std::vector<ParamInfo> out;
    for (const auto& p : m.params) {
        static const std::array<std::pair<std::string_view, ParamKind>, 5> kinds{{
            {"PathVariable", ParamKind::Path},
            {"PathParam", ParamKind::Path},
            {"RequestParam", ParamKind::Query},
            {"QueryParam", ParamKind::Query},
            {"RequestBody", ParamKind::Body},
        }};
        for (const auto& [name, kind] : kinds) {
            if (const auto* a = find_annotation(p.annotations, name)) {
                out.push_back(ParamInfo{EndpointParam{param_name(p, *a, scope), simple_type_name(p.typeName), kind}});
                break;
            }
        }
    }
    return out;
}

std::string return_type_of(const MethodDecl& m) {
    return m.returnType.empty() ? std::string(kUnknownType) : m.returnType;
}

} // namespace

// ---------------------------------------------------------------------------

std::vector<EndpointDef> extract_endpoints(const std::vector<ClassDecl>& classes, const FrontendConfig& config,
                                           std::vector<Warning>& warnings) {
    std::vector<EndpointDef> out;
    for (const auto& cls : classes) {
        const auto fieldAssignments = detail::count_field_assignments(cls);
        const ExpressionScope classScope(cls, nullptr, fieldAssignments);

        std::vector<std::string> classPaths;
        for (const char* n : {"RequestMapping", "Path"}) {
            if (const auto* a = cls.annotation(n)) {
                if (const auto* v = annotation_value(*a, {"", "value", "path"})) {
                    classPaths = string_values(*v, classScope);
                }
            }
        }
        if (classPaths.empty()) {
            classPaths.emplace_back();
        }
        const bool controller = std::any_of(config.controllerMarkers.begin(), config.controllerMarkers.end(),
                                            [&](const std::string& mk) { return cls.has_annotation(mk); });
        bool warnedOrphan = false;

        for (const auto& m : cls.methods) {
            const AnnotationSite* site = nullptr;
            for (const auto& a : m.annotations) {
                if (contains(config.endpointAnnotations, a.name)) {
                    site = &a;
                    break;
                }
            }
            if (site == nullptr) {
                continue;
            }
            const SourceLoc loc{cls.sourceLoc.file, m.line};
            std::vector<std::string> verbs;
            std::vector<std::string> methodPaths;
            if (site->name == "RequestMapping" || !ends_with(site->name, "Mapping")) {
                if (site->name == "RequestMapping") {
                    if (const auto* v = annotation_value(*site, {"method"})) {
                        verbs = verb_values(*v);
                    }
                    if (const auto* v = annotation_value(*site, {"", "value", "path"})) {
                        methodPaths = string_values(*v, classScope);
                    }
                } else {
                    verbs.push_back(site->name);
                    if (const auto* p = find_annotation(m.annotations, "Path")) {
                        if (const auto* v = annotation_value(*p, {"", "value"})) {
                            methodPaths = string_values(*v, classScope);
                        }
                    }
                }
            } else {
                verbs.push_back(upper(site->name.substr(0, site->name.size() - 7)));
                if (const auto* v = annotation_value(*site, {"", "value", "path"})) {
                    methodPaths = string_values(*v, classScope);
                }
            }
            if (verbs.empty()) {
                warnings.push_back(Warning{"mapping-without-method",
                                           cls.name + "." + m.name + ": @" + site->name + " has no method attribute",
                                           cls.service, loc});
                continue;
            }
            if (methodPaths.empty()) {
                methodPaths.emplace_back();
            }
            if (!controller && !warnedOrphan) {
                warnings.push_back(Warning{"orphanController",
                                           cls.name + " declares endpoints without a controller marker", cls.service,
                                           cls.sourceLoc});
                warnedOrphan = true;
            }

            const ExpressionScope methodScope(cls, &m, fieldAssignments);
            for (const auto& cp : classPaths) {
                for (const auto& mp : methodPaths) {
                    const std::string raw = join_paths(cp, mp);
                    NormalizedPath np;
                    try {
                        np = normalize_path(raw);
                    } catch (const Error&) {
                        warnings.push_back(Warning{"invalid-path", cls.name + "." + m.name + ": '" + raw + "'",
                                                   cls.service, loc});
                        continue;
                    }
                    auto params = endpoint_params(m, methodScope);
                    std::vector<EndpointParam> pathParams;
                    std::size_t varIndex = 0;
                    for (std::size_t s = 0; s < np.path.segments.size(); ++s) {
                        auto& seg = np.path.segments[s];
                        if (!seg.is_variable()) {
                            continue;
                        }
                        const std::string& varName = np.variableNames[varIndex];
                        ParamInfo* bound = nullptr;
                        for (auto& pi : params) {
                            if (!pi.bound && pi.param.kind == ParamKind::Path && pi.param.name == varName) {
                                bound = &pi;
                                break;
                            }
                        }
                        if (bound == nullptr) {
                            for (auto& pi : params) {
                                if (!pi.bound && pi.param.kind == ParamKind::Path) {
                                    bound = &pi;
                                    break;
                                }
                            }
                        }
                        if (bound != nullptr) {
                            bound->bound = true;
                            seg.text = bound->param.declaredType;
                            pathParams.push_back(bound->param);
                        } else {
                            const std::string name = varName.empty() ? "arg" + std::to_string(varIndex) : varName;
                            warnings.push_back(Warning{"unbound-path-variable",
                                                       cls.name + "." + m.name + ": {" + name + "} has no parameter",
                                                       cls.service, loc});
                            seg.text = std::string(kUnknownType);
                            pathParams.push_back(EndpointParam{name, std::string(kUnknownType), ParamKind::Path});
                        }
                        ++varIndex;
                    }
                    EndpointDef ep;
                    ep.service = cls.service;
                    ep.path = np.path;
                    ep.params = std::move(pathParams);
                    for (const auto& pi : params) {
                        if (pi.param.kind != ParamKind::Path) {
                            ep.params.push_back(pi.param);
                        } else if (!pi.bound) {
                            warnings.push_back(Warning{"unused-path-param",
                                                       cls.name + "." + m.name + ": parameter '" + pi.param.name +
                                                           "' is not in the path",
                                                       cls.service, loc});
                        }
                    }
                    ep.returnType = return_type_of(m);
                    ep.sourceLoc = loc;
                    for (const auto& verb : verbs) {
                        ep.method = HttpMethod::parse(verb);
                        out.push_back(ep);
                    }
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t close_paren(const std::vector<Token>& t, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < t.size(); ++i) {
        if (t[i].is_punct("(") || t[i].is_punct("[") || t[i].is_punct("{")) {
            ++depth;
        } else if (t[i].is_punct(")") || t[i].is_punct("]") || t[i].is_punct("}")) {
            if (--depth == 0) {
                return i;
            }
        }
    }
    return t.size();
}

std::size_t open_paren(const std::vector<Token>& t, std::size_t close) {
    int depth = 0;
    for (std::size_t i = close + 1; i-- > 0;) {
        if (t[i].is_punct(")") || t[i].is_punct("]") || t[i].is_punct("}")) {
            ++depth;
        } else if (t[i].is_punct("(") || t[i].is_punct("[") || t[i].is_punct("{")) {
            if (--depth == 0) {
                return i;
            }
        }
    }
    return t.size();
}

bool clientish_name(std::string_view name) {
    const std::string l = lower(name);
    return l.find("rest") != std::string::npos || l.find("template") != std::string::npos ||
           l.find("client") != std::string::npos;
}

// Names like getForObject identify a REST client on their own; short ones
// (put, delete, exchange) need evidence from the receiver.
bool self_identifying(std::string_view method) {
    return method.find("For") != std::string_view::npos;
}

bool receiver_is_client(const std::vector<Token>& b, std::size_t dot, const ExpressionScope& scope) {
    if (dot == 0) {
        return false;
    }
    const Token& r = b[dot - 1];
    if (r.is(TokKind::Identifier)) {
        if (auto type = scope.type_of(r.text)) {
            const std::string simple = simple_type_name(*type);
            return std::find(kClientTypes.begin(), kClientTypes.end(), simple) != kClientTypes.end();
        }
        return clientish_name(r.text);
    }
    if (r.is_punct(")")) {
        const std::size_t open = open_paren(b, dot - 1);
        return open < b.size() && open > 0 && b[open - 1].is(TokKind::Identifier) && clientish_name(b[open - 1].text);
    }
    return false;
}

std::optional<std::string> verb_from_name(std::string_view method) {
    static const std::array<std::string_view, 7> prefixes{"get", "post", "put", "delete", "patch", "head", "options"};
    for (auto p : prefixes) {
        if (method.substr(0, p.size()) == p) {
            return upper(p);
        }
    }
    return std::nullopt;
}

// `HttpMethod.X`, `X`, or a constant holding one.
std::optional<std::string> verb_from_arg(const std::vector<Token>& toks, const ExpressionScope& scope, int depth = 0) {
    if (toks.size() == 3 && toks[1].is_punct(".") && toks[2].is(TokKind::Identifier)) {
        if (HttpMethod::parse(toks[2].text).known()) {
            return toks[2].text;
        }
        return std::nullopt;
    }
    if (toks.size() == 1 && toks[0].is(TokKind::Identifier)) {
        if (HttpMethod::parse(toks[0].text).known()) {
            return toks[0].text;
        }
        if (depth < 4) {
            if (const auto* init = scope.constant_initializer(toks[0].text)) {
                return verb_from_arg(*init, scope, depth + 1);
            }
        }
    }
    return std::nullopt;
}

std::string join_type(const std::vector<Token>& t, std::size_t b, std::size_t e) {
    std::string out;
    for (std::size_t i = b; i < e; ++i) {
        out += t[i].text;
        if (t[i].is_punct(",")) {
            out += ' ';
        }
    }
    return out;
}

std::optional<std::string> return_type_arg(const std::vector<Token>& t, std::size_t b, std::size_t e) {
    const std::size_t n = e - b;
    if (n >= 3 && t[e - 1].is_ident("class") && t[e - 2].is_punct(".")) {
        return join_type(t, b, e - 2);
    }
    if (n >= 4 && t[b].is_ident("new") && t[b + 1].is_ident("ParameterizedTypeReference") && t[b + 2].is_punct("<")) {
        int depth = 0;
        for (std::size_t i = b + 2; i < e; ++i) {
            if (t[i].is_punct("<")) {
                ++depth;
            } else if (t[i].is_punct(">") && --depth == 0) {
                return join_type(t, b + 3, i);
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<RestCall> extract_calls(const std::vector<ClassDecl>& classes, const FrontendConfig& config,
                                    std::vector<Warning>& warnings) {
    std::vector<RestCall> out;
    for (const auto& cls : classes) {
        const auto fieldAssignments = detail::count_field_assignments(cls);
        for (const auto& m : cls.methods) {
            if (!m.hasBody || m.body.empty()) {
                continue;
            }
            const ExpressionScope scope(cls, &m, fieldAssignments);
            const auto& b = m.body;
            for (std::size_t k = 1; k + 1 < b.size(); ++k) {
                if (!b[k].is(TokKind::Identifier) || !b[k - 1].is_punct(".") || !b[k + 1].is_punct("(") ||
                    !contains(config.clientMethods, b[k].text)) {
                    continue;
                }
                if (!self_identifying(b[k].text) && !receiver_is_client(b, k - 1, scope)) {
                    continue;
                }
                const std::size_t close = close_paren(b, k + 1);
                if (close >= b.size()) {
                    continue;
                }
                const auto args = split_top_level(b, k + 2, close, ",");
                RestCall call;
                call.caller = cls.service;
                call.sourceLoc = SourceLoc{cls.sourceLoc.file, b[k].line};
                call.argCount = static_cast<int>(args.size());
                if (args.empty()) {
                    continue;
                }
                std::vector<Token> urlTokens(b.begin() + static_cast<std::ptrdiff_t>(args[0].first),
                                             b.begin() + static_cast<std::ptrdiff_t>(args[0].second));
                call.url = scope.evaluate(urlTokens);

                std::optional<std::string> verb = verb_from_name(b[k].text);
                if (!verb && args.size() >= 2) {
                    std::vector<Token> vt(b.begin() + static_cast<std::ptrdiff_t>(args[1].first),
                                          b.begin() + static_cast<std::ptrdiff_t>(args[1].second));
                    verb = verb_from_arg(vt, scope);
                }
                call.method = HttpMethod::parse(verb ? *verb : "UNKNOWN");

                for (std::size_t a = args.size(); a-- > 1;) {
                    if (auto rt = return_type_arg(b, args[a].first, args[a].second)) {
                        call.expectedReturnType = *rt;
                        break;
                    }
                }
                if (!call.has_literal()) {
                    call.unresolvable = true;
                    warnings.push_back(Warning{"unresolvable-call",
                                               cls.name + "." + m.name + ": " + b[k].text + " URL has no literal part",
                                               cls.service, call.sourceLoc});
                } else if (!verb) {
                    call.unresolvable = true;
                    warnings.push_back(Warning{"unresolvable-call",
                                               cls.name + "." + m.name + ": " + b[k].text +
                                                   " HTTP method could not be read",
                                               cls.service, call.sourceLoc});
                }
                out.push_back(std::move(call));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<EntityDef> filter_entities(const std::vector<ClassDecl>& classes, const FrontendConfig& config) {
    std::vector<EntityDef> out;
    for (const auto& cls : classes) {
        if (cls.kind != TypeKind::Class && cls.kind != TypeKind::Record) {
            continue;
        }
        const bool excluded =
            std::any_of(config.controllerMarkers.begin(), config.controllerMarkers.end(),
                        [&](const std::string& mk) { return cls.has_annotation(mk); }) ||
            std::any_of(kNonEntityMarkers.begin(), kNonEntityMarkers.end(),
                        [&](std::string_view mk) { return cls.has_annotation(mk); }) ||
            std::any_of(cls.methods.begin(), cls.methods.end(), [&](const MethodDecl& m) {
                return std::any_of(m.annotations.begin(), m.annotations.end(), [&](const AnnotationSite& a) {
                    return contains(config.endpointAnnotations, a.name);
                });
            });
        if (excluded) {
            continue;
        }
        const bool persistent = std::any_of(config.persistenceAnnotations.begin(), config.persistenceAnnotations.end(),
                                            [&](const std::string& a) { return cls.has_annotation(a); });
        const bool data = std::any_of(config.dataAnnotations.begin(), config.dataAnnotations.end(),
                                      [&](const std::string& a) { return cls.has_annotation(a); }) ||
                          std::any_of(config.dtoSuffixes.begin(), config.dtoSuffixes.end(),
                                      [&](const std::string& s) { return !s.empty() && ends_with(cls.name, s); });
        if (!persistent && !data) {
            continue;
        }
        EntityDef e;
        e.service = cls.service;
        e.name = cls.name;
        e.fields = cls.fields;
        e.kind = persistent ? EntityKind::Persistent : EntityKind::Dto;
        for (const auto& a : cls.annotations) {
            if (!contains(e.annotations, a.name)) {
                e.annotations.push_back(a.name);
            }
        }
        e.sourceLoc = cls.sourceLoc;
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------------------

FrontendResult build_ir(const std::vector<ServiceRoot>& serviceRoots, const std::filesystem::path& sourceRoot,
                        const FrontendConfig& config, const BuildOptions& options) {
    if (serviceRoots.empty()) {
        throw Error(ErrorKind::EmptySystem, "no services to analyze");
    }
    struct PerService {
        std::vector<EndpointDef> endpoints;
        std::vector<RestCall> calls;
        std::vector<EntityDef> entities;
        std::vector<Warning> warnings;
    };
    std::vector<PerService> parts(serviceRoots.size());
    for_each_index(serviceRoots.size(), options.parallel, [&](std::size_t i) {
        auto& p = parts[i];
        const auto classes = scan_classes(serviceRoots[i], config, sourceRoot, p.warnings);
        p.endpoints = extract_endpoints(classes, config, p.warnings);
        p.calls = extract_calls(classes, config, p.warnings);
        p.entities = filter_entities(classes, config);
    });

    FrontendResult result;
    std::vector<std::string> names;
    for (const auto& r : serviceRoots) {
        names.push_back(r.id.name);
    }
    result.ir.services = ServiceUniverse(names);
    for (auto& p : parts) {
        std::move(p.endpoints.begin(), p.endpoints.end(), std::back_inserter(result.ir.endpoints));
        std::move(p.calls.begin(), p.calls.end(), std::back_inserter(result.ir.calls));
        std::move(p.warnings.begin(), p.warnings.end(), std::back_inserter(result.warnings));
        std::set<std::string> seen;
        for (auto& e : p.entities) {
            if (!seen.insert(e.name).second) {
                result.warnings.push_back(Warning{"duplicate-entity",
                                                  "entity " + e.name + " declared more than once; first kept",
                                                  e.service, e.sourceLoc});
                continue;
            }
            result.ir.entities.push_back(std::move(e));
        }
    }
    auto byLoc = [](const auto& x, const auto& y) { return x.sourceLoc < y.sourceLoc; };
    std::stable_sort(result.ir.endpoints.begin(), result.ir.endpoints.end(), byLoc);
    std::stable_sort(result.ir.calls.begin(), result.ir.calls.end(), byLoc);
    std::stable_sort(result.ir.entities.begin(), result.ir.entities.end(), byLoc);

    result.ir.meta.sourceRoot = options.sourceLabel;
    result.ir.meta.revision = options.revision;
    result.ir.meta.skippedServices = options.skippedServices;
    validate(result.ir);
    return result;
}

} // namespace svcdep
