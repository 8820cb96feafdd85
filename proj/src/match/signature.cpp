#include "svcdep/error.hpp"
#include "svcdep/match.hpp"
#include "svcdep/parallel.hpp"

#include <algorithm>
#include <array>

namespace svcdep {

namespace {

constexpr std::array<std::string_view, 9> kIntegerTypes{"int", "Integer", "long", "Long", "short",
                                                         "Short", "byte", "Byte", "BigInteger"};

std::regex compile(const std::string& source) {
    try {
        return std::regex(source, std::regex::ECMAScript | std::regex::optimize);
    } catch (const std::regex_error& e) {
        throw Error(ErrorKind::Config, "invalid type pattern regex '" + source + "': " + e.what());
    }
}

} // namespace

TypePatterns::TypePatterns() : fallback_{"[^/]+", compile("[^/]+")} {
    for (auto t : kIntegerTypes) {
        set(TypePattern{std::string(t), "[0-9]+"});
    }
    set(TypePattern{"UUID", "[0-9a-fA-F]{8}-[0-9a-fA-F]{4}-[0-9a-fA-F]{4}-[0-9a-fA-F]{4}-[0-9a-fA-F]{12}"});
    set(TypePattern{"boolean", "true|false"});
    set(TypePattern{"Boolean", "true|false"});
}

void TypePatterns::set(const TypePattern& pattern) {
    byType_.insert_or_assign(pattern.typeName, Entry{pattern.valueRegex, compile(pattern.valueRegex)});
}

bool TypePatterns::accepts(std::string_view typeName, const std::string& value) const {
    const std::string simple = simple_type_name(typeName);
    auto it = byType_.find(simple);
    const std::regex& re = it == byType_.end() ? fallback_.regex : it->second.regex;
    return std::regex_match(value, re);
}

std::vector<TypePattern> TypePatterns::list() const {
    std::vector<TypePattern> out;
    for (const auto& [type, entry] : byType_) {
        out.push_back(TypePattern{type, entry.source});
    }
    return out;
}

// ---------------------------------------------------------------------------

std::optional<SignatureMatch> match_signature(const PathTemplate& callPath, const HttpMethod& callMethod,
                                              const EndpointDef& endpoint, const TypePatterns& patterns) {
    if (!callMethod.matches(endpoint.method)) {
        return std::nullopt;
    }
    const auto& callSegs = callPath.segments;
    const auto& epSegs = endpoint.path.segments;
    if (callSegs.size() != epSegs.size()) {
        return std::nullopt;
    }
    int specificity = 0;
    std::size_t consumedByVariables = 0;
    for (std::size_t i = 0; i < callSegs.size(); ++i) {
        const auto& c = callSegs[i];
        const auto& e = epSegs[i];
        if (e.is_literal()) {
            // A hole never stands in for a fixed endpoint segment.
            if (c.is_variable() || c.text != e.text) {
                return std::nullopt;
            }
            ++specificity;
        } else {
            if (c.is_literal() && !patterns.accepts(e.text, c.text)) {
                return std::nullopt;
            }
            ++consumedByVariables;
        }
    }
    if (consumedByVariables != endpoint.path_param_count()) {
        return std::nullopt;
    }
    return SignatureMatch{specificity};
}

std::optional<SignatureMatch> match_signature(const RestCall& call, const EndpointDef& endpoint,
                                              const TypePatterns& patterns) {
    if (call.unresolvable) {
        return std::nullopt;
    }
    try {
        return match_signature(normalize_path(call.url).path, call.method, endpoint, patterns);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidPath) {
            return std::nullopt;
        }
        throw;
    }
}

// ---------------------------------------------------------------------------

CallTarget resolve_target(const RestCall& call, const ServiceUniverse& services) {
    CallTarget target;
    target.url = normalize_path(call.url);
    if (!target.url.host.empty() && services.contains(target.url.host)) {
        target.service = target.url.host;
        return target;
    }
    auto& segs = target.url.path.segments;
    if (segs.size() > 1 && segs.front().is_literal() && services.contains(segs.front().text)) {
        target.service = segs.front().text;
        target.viaPathPrefix = true;
        segs.erase(segs.begin());
    }
    return target;
}

namespace {

struct PerCall {
    enum class Outcome { Unresolvable, InvalidPath, Unmatched, Matched } outcome = Outcome::Unmatched;
    EndpointMatch match;
    std::vector<std::size_t> tiedWith;
    bool viaPathPrefix = false;
};

// Lower key wins a specificity tie.
bool tie_less(const EndpointDef& a, std::size_t ai, const EndpointDef& b, std::size_t bi) {
    if (a.service != b.service) {
        return a.service < b.service;
    }
    const auto ra = a.path.render();
    const auto rb = b.path.render();
    if (ra != rb) {
        return ra < rb;
    }
    return ai < bi;
}

PerCall resolve_one(const SystemIR& ir, std::size_t callIndex, const TypePatterns& patterns,
                    const std::map<std::string, std::vector<std::size_t>, std::less<>>& byService) {
    PerCall out;
    const auto& call = ir.calls[callIndex];
    if (call.unresolvable || !call.has_literal()) {
        out.outcome = PerCall::Outcome::Unresolvable;
        return out;
    }
    CallTarget target;
    try {
        target = resolve_target(call, ir.services);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InvalidPath) {
            throw;
        }
        out.outcome = PerCall::Outcome::InvalidPath;
        return out;
    }
    out.viaPathPrefix = target.viaPathPrefix;

    auto consider = [&](std::size_t epIndex, int& best, std::vector<std::size_t>& winners) {
        const auto& ep = ir.endpoints[epIndex];
        if (ep.service == call.caller) {
            return;
        }
        auto m = match_signature(target.url.path, call.method, ep, patterns);
        if (!m) {
            return;
        }
        if (m->specificity > best) {
            best = m->specificity;
            winners.assign(1, epIndex);
        } else if (m->specificity == best) {
            winners.push_back(epIndex);
        }
    };

    int best = -1;
    std::vector<std::size_t> winners;
    if (!target.service.empty()) {
        if (auto it = byService.find(target.service); it != byService.end()) {
            for (auto epIndex : it->second) {
                consider(epIndex, best, winners);
            }
        }
    } else {
        for (std::size_t epIndex = 0; epIndex < ir.endpoints.size(); ++epIndex) {
            consider(epIndex, best, winners);
        }
    }
    if (winners.empty()) {
        out.outcome = PerCall::Outcome::Unmatched;
        return out;
    }
    std::sort(winners.begin(), winners.end(), [&](std::size_t a, std::size_t b) {
        return tie_less(ir.endpoints[a], a, ir.endpoints[b], b);
    });
    out.outcome = PerCall::Outcome::Matched;
    out.match = EndpointMatch{callIndex, winners.front(), best, winners.size() > 1};
    out.tiedWith.assign(winners.begin() + 1, winners.end());
    return out;
}

} // namespace

CallResolution resolve_calls(const SystemIR& ir, const TypePatterns& patterns, Execution execution) {
    std::map<std::string, std::vector<std::size_t>, std::less<>> byService;
    for (std::size_t i = 0; i < ir.endpoints.size(); ++i) {
        byService[ir.endpoints[i].service].push_back(i);
    }

    std::vector<PerCall> results(ir.calls.size());
    for_each_index(ir.calls.size(), execution == Execution::Parallel, [&](std::size_t i) {
        results[i] = resolve_one(ir, i, patterns, byService);
    });

    CallResolution out;
    for (std::size_t i = 0; i < results.size(); ++i) {
        auto& r = results[i];
        if (r.viaPathPrefix) {
            out.resolvedByPathPrefix.push_back(i);
        }
        switch (r.outcome) {
        case PerCall::Outcome::Unresolvable:
            out.unresolvable.push_back(i);
            break;
        case PerCall::Outcome::InvalidPath:
            out.invalidPaths.push_back(i);
            out.unmatched.push_back(i);
            break;
        case PerCall::Outcome::Unmatched:
            out.unmatched.push_back(i);
            break;
        case PerCall::Outcome::Matched:
            if (r.match.ambiguous) {
                out.ambiguities.push_back(
                    AmbiguityNote{i, r.match.endpoint, std::move(r.tiedWith), r.match.specificity});
            }
            out.matches.push_back(r.match);
            break;
        }
    }
    return out;
}

} // namespace svcdep
