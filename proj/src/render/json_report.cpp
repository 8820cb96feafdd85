#include "svcdep/error.hpp"
#include "svcdep/render.hpp"

#include <map>
#include <set>
#include <tuple>

namespace svcdep {

using ojson = nlohmann::ordered_json;

namespace {

ojson endpoint_ref(const EndpointDef& ep) {
    return ojson{{"service", ep.service}, {"path", ep.path.render()}, {"method", ep.method.str()}};
}

ojson call_json(const RestCall& c) {
    ojson j;
    j["caller"] = c.caller;
    j["url"] = render_call_url(c);
    j["method"] = c.method.str();
    j["file"] = c.sourceLoc.file;
    j["line"] = c.sourceLoc.line;
    return j;
}

// target service -> (path, method) -> count
using CallCounts = std::map<std::string, std::map<std::pair<std::string, std::string>, int>>;

ojson dependency_list(const CallCounts& counts, const char* peerKey) {
    ojson list = ojson::array();
    for (const auto& [peer, calls] : counts) {
        ojson item;
        item[peerKey] = peer;
        ojson endpointCalls = ojson::array();
        for (const auto& [key, n] : calls) {
            endpointCalls.push_back(ojson{{"path", key.first}, {"method", key.second}, {"count", n}});
        }
        item["endpointCalls"] = std::move(endpointCalls);
        list.push_back(std::move(item));
    }
    return list;
}

} // namespace

std::string render_call_url(const RestCall& call) {
    std::string out;
    for (const auto& p : call.url) {
        out += p.is_literal() ? p.text : "{" + p.text + "}";
    }
    return out;
}

ojson analysis_to_json(const Analysis& a) {
    const SystemIR& ir = a.ir;
    ojson doc;
    doc["tool"] = ojson{{"name", "svcdep"}, {"version", std::string(kToolVersion)}};
    doc["meta"] = ojson{{"sourceRoot", ir.meta.sourceRoot},
                        {"revision", ir.meta.revision},
                        {"toolVersion", ir.meta.toolVersion},
                        {"skippedServices", ir.meta.skippedServices},
                        {"strict", a.options.strict},
                        {"minCalls", a.options.minCalls}};

    std::size_t ambiguous = 0;
    for (const auto& m : a.resolution.matches) {
        ambiguous += m.ambiguous ? 1 : 0;
    }
    doc["summary"] = ojson{{"services", ir.services.size()},
                           {"skippedServices", ir.meta.skippedServices.size()},
                           {"endpoints", ir.endpoints.size()},
                           {"calls", ir.calls.size()},
                           {"matched", a.resolution.matches.size()},
                           {"unmatched", a.resolution.unmatched.size()},
                           {"ambiguous", ambiguous},
                           {"unresolvable", a.resolution.unresolvable.size()},
                           {"entities", ir.entities.size()},
                           {"entityClasses", a.entities.equivalence.classes.size()}};

    ojson ids = ojson::array();
    for (const auto& id : ir.services.ids()) {
        ids.push_back(ojson{{"id", id.ordinal}, {"name", id.name}});
    }
    doc["serviceIds"] = std::move(ids);

    std::map<std::string, CallCounts> deps;
    std::map<std::string, CallCounts> dependants;
    for (const auto& m : a.counted) {
        const auto& call = ir.calls[m.call];
        const auto& ep = ir.endpoints[m.endpoint];
        const std::pair<std::string, std::string> key{ep.path.render(), ep.method.str()};
        ++deps[call.caller][ep.service][key];
        ++dependants[ep.service][call.caller][key];
    }
    std::map<std::string, std::vector<std::size_t>> entitiesBy;
    for (std::size_t i = 0; i < ir.entities.size(); ++i) {
        entitiesBy[ir.entities[i].service].push_back(i);
    }
    ojson services = ojson::object();
    for (const auto& id : ir.services.ids()) {
        ojson s;
        s["id"] = id.ordinal;
        s["dependencies"] = dependency_list(deps[id.name], "target");
        s["dependants"] = dependency_list(dependants[id.name], "source");
        ojson ents = ojson::array();
        for (auto i : entitiesBy[id.name]) {
            const auto& e = ir.entities[i];
            ojson fields = ojson::array();
            for (const auto& f : e.fields) {
                fields.push_back(ojson{{"name", f.name}, {"type", f.typeName}});
            }
            ojson ej{{"name", e.name}, {"kind", std::string(entity_kind_name(e.kind))}, {"fields", std::move(fields)}};
            if (auto it = a.entities.equivalence.classOf.find(i); it != a.entities.equivalence.classOf.end()) {
                ej["contextClass"] = it->second;
            } else {
                ej["contextClass"] = nullptr;
            }
            ents.push_back(std::move(ej));
        }
        s["entities"] = std::move(ents);
        services[id.name] = std::move(s);
    }
    doc["services"] = std::move(services);

    ojson contextMap = ojson::array();
    for (std::size_t c = 0; c < a.entities.equivalence.classes.size(); ++c) {
        const auto& cls = a.entities.equivalence.classes[c];
        const auto& rep = ir.entities[cls.representative];
        ojson members = ojson::array();
        for (auto m : cls.members) {
            members.push_back(ojson{{"service", ir.entities[m].service}, {"name", ir.entities[m].name}});
        }
        contextMap.push_back(ojson{{"class", c},
                                   {"representative", ojson{{"service", rep.service}, {"name", rep.name}}},
                                   {"members", std::move(members)}});
    }
    doc["contextMap"] = std::move(contextMap);

    ojson entityMatches = ojson::array();
    for (const auto& m : a.entities.matches) {
        const auto& ea = ir.entities[m.a];
        const auto& eb = ir.entities[m.b];
        entityMatches.push_back(ojson{{"a", ojson{{"service", ea.service}, {"name", ea.name}}},
                                      {"b", ojson{{"service", eb.service}, {"name", eb.name}}},
                                      {"nameScore", m.nameScore},
                                      {"matchedFieldCount", m.matchedFieldCount}});
    }
    doc["entityMatches"] = std::move(entityMatches);

    ojson matches = ojson::array();
    for (const auto& m : a.resolution.matches) {
        const auto& call = ir.calls[m.call];
        matches.push_back(ojson{{"caller", call.caller},
                                {"file", call.sourceLoc.file},
                                {"line", call.sourceLoc.line},
                                {"endpoint", endpoint_ref(ir.endpoints[m.endpoint])},
                                {"specificity", m.specificity},
                                {"ambiguous", m.ambiguous}});
    }
    doc["endpointMatches"] = std::move(matches);

    ojson edm = ojson::array();
    for (const auto& [pair, n] : a.edm.cells) {
        edm.push_back(ojson{{"from", pair.first}, {"to", pair.second}, {"count", n}});
    }
    ojson ddm = ojson::array();
    for (const auto& [pair, n] : a.ddm.cells) {
        ddm.push_back(ojson{{"a", pair.first}, {"b", pair.second}, {"count", n}});
    }
    ojson sdm = ojson::array();
    for (const auto& [pair, cell] : a.sdm.cells) {
        sdm.push_back(ojson{{"from", pair.first},
                            {"to", pair.second},
                            {"endpoint", cell.endpointDegree},
                            {"data", cell.dataDegree},
                            {"display", sdm_display(cell)},
                            {"classification", std::string(dependency_class_name(cell.classification()))}});
    }
    doc["matrices"] = ojson{{"edm", std::move(edm)}, {"ddm", std::move(ddm)}, {"sdm", std::move(sdm)}};

    ojson hot = ojson::array();
    for (const auto& h : a.hotspots) {
        ojson row = endpoint_ref(ir.endpoints[h.endpoint]);
        row["callCount"] = h.callCount;
        row["distinctCallers"] = h.distinctCallers;
        hot.push_back(std::move(row));
    }
    doc["hotspots"] = std::move(hot);

    ojson diag;
    ojson unmatched = ojson::array();
    for (auto c : a.resolution.unmatched) {
        ojson j = call_json(ir.calls[c]);
        bool invalid = false;
        for (auto v : a.resolution.invalidPaths) invalid = invalid || v == c;
        j["invalidPath"] = invalid;
        unmatched.push_back(std::move(j));
    }
    diag["unmatchedCalls"] = std::move(unmatched);
    ojson unresolvable = ojson::array();
    for (auto c : a.resolution.unresolvable) {
        unresolvable.push_back(call_json(ir.calls[c]));
    }
    diag["unresolvableCalls"] = std::move(unresolvable);
    ojson amb = ojson::array();
    for (const auto& n : a.resolution.ambiguities) {
        ojson tied = ojson::array();
        for (auto t : n.tiedWith) {
            tied.push_back(endpoint_ref(ir.endpoints[t]));
        }
        ojson j = call_json(ir.calls[n.call]);
        j["chosen"] = endpoint_ref(ir.endpoints[n.chosen]);
        j["tiedWith"] = std::move(tied);
        j["specificity"] = n.specificity;
        amb.push_back(std::move(j));
    }
    diag["ambiguities"] = std::move(amb);
    ojson prefix = ojson::array();
    for (auto c : a.resolution.resolvedByPathPrefix) {
        prefix.push_back(call_json(ir.calls[c]));
    }
    diag["resolvedByPathPrefix"] = std::move(prefix);
    ojson warnings = ojson::array();
    for (const auto& w : a.warnings) {
        warnings.push_back(ojson{{"code", w.code},
                                 {"service", w.service},
                                 {"file", w.loc.file},
                                 {"line", w.loc.line},
                                 {"message", w.message}});
    }
    diag["warnings"] = std::move(warnings);
    doc["diagnostics"] = std::move(diag);
    return doc;
}

std::string emit_json(const Analysis& analysis) {
    return analysis_to_json(analysis).dump(2) + "\n";
}

MatrixTable table_from_analysis_json(const nlohmann::json& doc, MatrixKind kind) {
    MatrixTable t;
    t.kind = kind;
    try {
        std::vector<std::string> names;
        for (const auto& s : doc.at("serviceIds")) {
            names.push_back(s.at("name").get<std::string>());
        }
        t.services = ServiceUniverse(names);
        const auto& cells = doc.at("matrices").at(std::string(matrix_kind_name(kind)));
        for (const auto& c : cells) {
            switch (kind) {
            case MatrixKind::Edm:
                t.cells[{c.at("from").get<std::string>(), c.at("to").get<std::string>()}] =
                    CellValue{c.at("count").get<int>(), 0};
                break;
            case MatrixKind::Ddm:
                t.cells[canonical_pair(c.at("a").get<std::string>(), c.at("b").get<std::string>())] =
                    CellValue{c.at("count").get<int>(), 0};
                break;
            case MatrixKind::Sdm:
                t.cells[{c.at("from").get<std::string>(), c.at("to").get<std::string>()}] =
                    CellValue{c.at("endpoint").get<int>(), c.at("data").get<int>()};
                break;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Load, std::string("analysis document: ") + e.what());
    }
    return t;
}

// ---------------------------------------------------------------------------

namespace {

ojson cell_value_json(MatrixKind kind, const CellValue& v) {
    if (kind == MatrixKind::Sdm) {
        return ojson{{"endpoint", v.primary}, {"data", v.secondary}, {"display", sdm_display({v.primary, v.secondary})}};
    }
    return v.primary;
}

std::string cell_text(MatrixKind kind, const CellValue& v) {
    return kind == MatrixKind::Sdm ? sdm_display({v.primary, v.secondary}) : std::to_string(v.primary);
}

} // namespace

ojson diff_to_json(const MatrixDiff& d) {
    ojson j;
    j["kind"] = std::string(matrix_kind_name(d.kind));
    j["servicesAdded"] = d.servicesAdded;
    j["servicesRemoved"] = d.servicesRemoved;
    auto entries = [&](const std::vector<CellEntry>& list) {
        ojson arr = ojson::array();
        for (const auto& e : list) {
            arr.push_back(ojson{{"from", e.pair.first}, {"to", e.pair.second}, {"value", cell_value_json(d.kind, e.value)}});
        }
        return arr;
    };
    j["added"] = entries(d.added);
    j["removed"] = entries(d.removed);
    ojson changed = ojson::array();
    for (const auto& c : d.changed) {
        changed.push_back(ojson{{"from", c.pair.first},
                                {"to", c.pair.second},
                                {"old", cell_value_json(d.kind, c.before)},
                                {"new", cell_value_json(d.kind, c.after)}});
    }
    j["changed"] = std::move(changed);
    return j;
}

std::string diff_table_text(const MatrixDiff& d) {
    const std::string arrow = d.kind == MatrixKind::Ddm ? " <-> " : " -> ";
    std::string out = std::string(matrix_kind_name(d.kind)) + " diff\n";
    if (d.empty()) {
        return out + "no changes\n";
    }
    for (const auto& s : d.servicesAdded) out += "+ service " + s + "\n";
    for (const auto& s : d.servicesRemoved) out += "- service " + s + "\n";
    for (const auto& e : d.added) {
        out += "+ " + e.pair.first + arrow + e.pair.second + "  " + cell_text(d.kind, e.value) + "\n";
    }
    for (const auto& e : d.removed) {
        out += "- " + e.pair.first + arrow + e.pair.second + "  " + cell_text(d.kind, e.value) + "\n";
    }
    for (const auto& c : d.changed) {
        out += "~ " + c.pair.first + arrow + c.pair.second + "  " + cell_text(d.kind, c.before) + " => " +
               cell_text(d.kind, c.after) + "\n";
    }
    return out;
}

} // namespace svcdep
