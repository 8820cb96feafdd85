#include "oracle.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

namespace svcdep::testing {

namespace {

struct Seg {
    bool hole = false;
    std::string text;
};

struct Parsed {
    std::string host;
    std::vector<Seg> segs;
    bool ok = true;
};

constexpr char kHoleMark = '\x01';

std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

Parsed parse_url(const RestCall& call) {
    std::string s;
    for (const auto& p : call.url) {
        if (p.is_hole()) {
            s += kHoleMark;
        } else {
            s += p.text;
        }
    }
    Parsed out;
    std::size_t pos = 0;
    if (auto scheme = s.find("://"); scheme != std::string::npos && s.find('/') > scheme) {
        pos = scheme + 3;
        auto end = s.find('/', pos);
        std::string hostPort = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        out.host = lower(hostPort.substr(0, hostPort.find(':')));
        pos = end == std::string::npos ? s.size() : end;
    } else if (!s.empty() && s[0] == kHoleMark) {
        // Leading expression stands in for the origin.
        pos = 1;
    }
    std::string path = s.substr(pos);
    path = path.substr(0, path.find_first_of("?#"));
    std::size_t i = 0;
    while (i <= path.size()) {
        auto j = path.find('/', i);
        if (j == std::string::npos) j = path.size();
        std::string seg = path.substr(i, j - i);
        if (!seg.empty()) {
            const bool dynamic = seg.find(kHoleMark) != std::string::npos || seg.find('{') != std::string::npos;
            out.segs.push_back(Seg{dynamic, seg});
        }
        i = j + 1;
    }
    out.ok = !out.segs.empty();
    return out;
}

bool in_universe(const SystemIR& ir, const std::string& name) {
    for (const auto& id : ir.services.ids()) {
        if (id.name == name) return true;
    }
    return false;
}

std::string render(const EndpointDef& ep) {
    std::string s;
    for (const auto& seg : ep.path.segments) {
        s += '/';
        s += seg.is_variable() ? "{" + seg.text + "}" : seg.text;
    }
    return s;
}

} // namespace

std::vector<OracleOutcome> oracle_resolve(const SystemIR& ir, const std::map<std::string, std::string>& extraPatterns) {
    std::map<std::string, std::string> table = {
        {"int", "[0-9]+"},     {"Integer", "[0-9]+"}, {"long", "[0-9]+"},       {"Long", "[0-9]+"},
        {"short", "[0-9]+"},   {"Short", "[0-9]+"},   {"byte", "[0-9]+"},       {"Byte", "[0-9]+"},
        {"BigInteger", "[0-9]+"},
        {"UUID", "[0-9a-fA-F]{8}-[0-9a-fA-F]{4}-[0-9a-fA-F]{4}-[0-9a-fA-F]{4}-[0-9a-fA-F]{12}"},
        {"boolean", "true|false"}, {"Boolean", "true|false"},
    };
    for (const auto& [k, v] : extraPatterns) table[k] = v;
    auto accepts = [&](const std::string& type, const std::string& value) {
        std::string simple = type.substr(type.rfind('.') == std::string::npos ? 0 : type.rfind('.') + 1);
        auto it = table.find(simple);
        const std::string re = it == table.end() ? "[^/]+" : it->second;
        return std::regex_match(value, std::regex("(?:" + re + ")"));
    };

    std::vector<OracleOutcome> out(ir.calls.size());
    for (std::size_t c = 0; c < ir.calls.size(); ++c) {
        const auto& call = ir.calls[c];
        bool anyLiteral = false;
        for (const auto& p : call.url) anyLiteral = anyLiteral || (p.is_literal() && !p.text.empty());
        if (call.unresolvable || !anyLiteral) {
            out[c].kind = OracleOutcome::Kind::Unresolvable;
            continue;
        }
        Parsed url = parse_url(call);
        if (!url.ok) continue;
        std::string target;
        if (!url.host.empty() && in_universe(ir, url.host)) {
            target = url.host;
        } else if (url.segs.size() > 1 && !url.segs[0].hole && in_universe(ir, url.segs[0].text)) {
            target = url.segs[0].text;
            url.segs.erase(url.segs.begin());
        }
        std::vector<std::pair<std::size_t, int>> hits;
        for (std::size_t e = 0; e < ir.endpoints.size(); ++e) {
            const auto& ep = ir.endpoints[e];
            if (ep.service == call.caller) continue;
            if (!target.empty() && ep.service != target) continue;
            if (!call.method.known() || call.method.str() != ep.method.str()) continue;
            if (ep.path.segments.size() != url.segs.size()) continue;
            int spec = 0;
            bool ok = true;
            for (std::size_t i = 0; i < url.segs.size() && ok; ++i) {
                const auto& es = ep.path.segments[i];
                const auto& cs = url.segs[i];
                if (es.is_literal()) {
                    ok = !cs.hole && cs.text == es.text;
                    spec += ok ? 1 : 0;
                } else if (!cs.hole) {
                    ok = accepts(es.text, cs.text);
                }
            }
            if (ok) hits.emplace_back(e, spec);
        }
        if (hits.empty()) continue;
        int best = -1;
        for (auto& h : hits) best = std::max(best, h.second);
        std::vector<std::size_t> top;
        for (auto& h : hits) {
            if (h.second == best) top.push_back(h.first);
        }
        auto key = [&](std::size_t e) { return std::make_tuple(ir.endpoints[e].service, render(ir.endpoints[e]), e); };
        const std::size_t chosen = *std::min_element(top.begin(), top.end(),
                                                      [&](auto a, auto b) { return key(a) < key(b); });
        out[c] = OracleOutcome{OracleOutcome::Kind::Matched, chosen, best, top.size() > 1};
    }
    return out;
}

std::map<ServicePair, int> oracle_edm(const SystemIR& ir, const std::vector<OracleOutcome>& outcomes,
                                      bool includeAmbiguous) {
    std::map<ServicePair, int> m;
    for (std::size_t c = 0; c < outcomes.size(); ++c) {
        const auto& o = outcomes[c];
        if (o.kind != OracleOutcome::Kind::Matched || (o.ambiguous && !includeAmbiguous)) continue;
        ++m[{ir.calls[c].caller, ir.endpoints[o.endpoint].service}];
    }
    return m;
}

std::size_t oracle_levenshtein(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

} // namespace svcdep::testing
