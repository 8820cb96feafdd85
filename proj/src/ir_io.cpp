#include "svcdep/ir_io.hpp"

#include "svcdep/error.hpp"

#include <fstream>
#include <sstream>

namespace svcdep {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_text_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot read " + file.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& file, const std::string& content) {
    if (file.has_parent_path()) {
        std::filesystem::create_directories(file.parent_path());
    }
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot write " + file.string());
    }
    out << content;
    if (!out) {
        throw Error(ErrorKind::Io, "short write to " + file.string());
    }
}

namespace {

ordered_json loc_to_json(const SourceLoc& loc) {
    ordered_json j;
    j["file"] = loc.file;
    j["line"] = loc.line;
    return j;
}

// ---------------------------------------------------------------------------
// Reading. `at` carries the location used in error messages.

[[noreturn]] void schema_error(const std::string& at, const std::string& what) {
    throw Error(ErrorKind::Load, at + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& at) {
    if (!obj.is_object()) {
        schema_error(at, "expected object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(at + "/" + key, "missing");
    }
    return *it;
}

std::string get_string(const json& obj, const char* key, const std::string& at) {
    const auto& v = member(obj, key, at);
    if (!v.is_string()) {
        schema_error(at + "/" + key, "expected string");
    }
    return v.get<std::string>();
}

int get_int(const json& obj, const char* key, const std::string& at) {
    const auto& v = member(obj, key, at);
    if (!v.is_number_integer()) {
        schema_error(at + "/" + key, "expected integer");
    }
    return v.get<int>();
}

const json& get_array(const json& obj, const char* key, const std::string& at) {
    const auto& v = member(obj, key, at);
    if (!v.is_array()) {
        schema_error(at + "/" + key, "expected array");
    }
    return v;
}

std::vector<std::string> get_string_list(const json& obj, const char* key, const std::string& at) {
    std::vector<std::string> out;
    const auto& arr = get_array(obj, key, at);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string()) {
            schema_error(at + "/" + key + "/" + std::to_string(i), "expected string");
        }
        out.push_back(arr[i].get<std::string>());
    }
    return out;
}

SourceLoc get_loc(const json& obj, const std::string& at) {
    const auto& v = member(obj, "sourceLoc", at);
    const std::string here = at + "/sourceLoc";
    return SourceLoc{get_string(v, "file", here), get_int(v, "line", here)};
}

PathTemplate parse_path_string(const std::string& text, const std::string& at) {
    PathTemplate tpl;
    if (text.empty() || text.front() != '/') {
        schema_error(at, "path must start with '/'");
    }
    std::size_t pos = 1;
    while (pos <= text.size()) {
        auto next = text.find('/', pos);
        std::string seg = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        const bool last = next == std::string::npos;
        if (seg.empty()) {
            if (!(last && text.size() == 1)) {
                schema_error(at, "empty path segment in '" + text + "'");
            }
        } else if (seg == "**" && last) {
            tpl.hasTrailingWildcard = true;
        } else if (seg.size() >= 2 && seg.front() == '{' && seg.back() == '}') {
            tpl.segments.push_back(PathSegment::variable(seg.substr(1, seg.size() - 2)));
        } else {
            tpl.segments.push_back(PathSegment::literal(seg));
        }
        if (last) {
            break;
        }
        pos = next + 1;
    }
    return tpl;
}

HttpMethod get_method(const json& obj, const std::string& at) {
    return HttpMethod::parse(get_string(obj, "method", at));
}

EndpointDef endpoint_from_json(const json& j, const std::string& at) {
    EndpointDef ep;
    ep.service = get_string(j, "service", at);
    ep.path = parse_path_string(get_string(j, "path", at), at + "/path");
    ep.method = get_method(j, at);
    const auto& params = get_array(j, "params", at);
    for (std::size_t i = 0; i < params.size(); ++i) {
        const std::string here = at + "/params/" + std::to_string(i);
        EndpointParam p;
        p.name = get_string(params[i], "name", here);
        p.declaredType = get_string(params[i], "declaredType", here);
        auto kind = parse_param_kind(get_string(params[i], "kind", here));
        if (!kind) {
            schema_error(here + "/kind", "expected path|query|body");
        }
        p.kind = *kind;
        ep.params.push_back(std::move(p));
    }
    ep.returnType = get_string(j, "returnType", at);
    ep.sourceLoc = get_loc(j, at);
    return ep;
}

RestCall call_from_json(const json& j, const std::string& at) {
    RestCall call;
    call.caller = get_string(j, "caller", at);
    const auto& url = get_array(j, "url", at);
    for (std::size_t i = 0; i < url.size(); ++i) {
        const std::string here = at + "/url/" + std::to_string(i);
        const auto& part = url[i];
        if (!part.is_object() || part.size() != 1) {
            schema_error(here, "expected {\"lit\": ...} or {\"hole\": ...}");
        }
        if (part.contains("lit")) {
            call.url.push_back(UrlPart::literal(get_string(part, "lit", here)));
        } else if (part.contains("hole")) {
            call.url.push_back(UrlPart::hole(get_string(part, "hole", here)));
        } else {
            schema_error(here, "expected {\"lit\": ...} or {\"hole\": ...}");
        }
    }
    call.method = get_method(j, at);
    call.argCount = get_int(j, "argCount", at);
    call.expectedReturnType = get_string(j, "expectedReturnType", at);
    call.sourceLoc = get_loc(j, at);
    if (auto it = j.find("unresolvable"); it != j.end()) {
        if (!it->is_boolean()) {
            schema_error(at + "/unresolvable", "expected boolean");
        }
        call.unresolvable = it->get<bool>();
    }
    return call;
}

EntityDef entity_from_json(const json& j, const std::string& at) {
    EntityDef ent;
    ent.service = get_string(j, "service", at);
    ent.name = get_string(j, "name", at);
    const auto& fields = get_array(j, "fields", at);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string here = at + "/fields/" + std::to_string(i);
        ent.fields.push_back(
            EntityField{get_string(fields[i], "name", here), get_string(fields[i], "typeName", here)});
    }
    const auto kind = get_string(j, "kind", at);
    if (kind == "persistent") {
        ent.kind = EntityKind::Persistent;
    } else if (kind == "dto") {
        ent.kind = EntityKind::Dto;
    } else {
        schema_error(at + "/kind", "expected persistent|dto");
    }
    ent.annotations = get_string_list(j, "annotations", at);
    ent.sourceLoc = get_loc(j, at);
    return ent;
}

} // namespace

ordered_json ir_to_json(const SystemIR& ir) {
    ordered_json doc;
    doc["services"] = ir.services.names();

    ordered_json endpoints = ordered_json::array();
    for (const auto& ep : ir.endpoints) {
        ordered_json j;
        j["service"] = ep.service;
        j["path"] = ep.path.render();
        j["method"] = ep.method.str();
        ordered_json params = ordered_json::array();
        for (const auto& p : ep.params) {
            ordered_json pj;
            pj["name"] = p.name;
            pj["declaredType"] = p.declaredType;
            pj["kind"] = param_kind_name(p.kind);
            params.push_back(std::move(pj));
        }
        j["params"] = std::move(params);
        j["returnType"] = ep.returnType;
        j["sourceLoc"] = loc_to_json(ep.sourceLoc);
        endpoints.push_back(std::move(j));
    }
    doc["endpoints"] = std::move(endpoints);

    ordered_json calls = ordered_json::array();
    for (const auto& call : ir.calls) {
        ordered_json j;
        j["caller"] = call.caller;
        ordered_json url = ordered_json::array();
        for (const auto& part : call.url) {
            ordered_json pj;
            pj[part.is_literal() ? "lit" : "hole"] = part.text;
            url.push_back(std::move(pj));
        }
        j["url"] = std::move(url);
        j["method"] = call.method.str();
        j["argCount"] = call.argCount;
        j["expectedReturnType"] = call.expectedReturnType;
        j["sourceLoc"] = loc_to_json(call.sourceLoc);
        j["unresolvable"] = call.unresolvable;
        calls.push_back(std::move(j));
    }
    doc["calls"] = std::move(calls);

    ordered_json entities = ordered_json::array();
    for (const auto& ent : ir.entities) {
        ordered_json j;
        j["service"] = ent.service;
        j["name"] = ent.name;
        ordered_json fields = ordered_json::array();
        for (const auto& f : ent.fields) {
            ordered_json fj;
            fj["name"] = f.name;
            fj["typeName"] = f.typeName;
            fields.push_back(std::move(fj));
        }
        j["fields"] = std::move(fields);
        j["kind"] = entity_kind_name(ent.kind);
        j["annotations"] = ent.annotations;
        j["sourceLoc"] = loc_to_json(ent.sourceLoc);
        entities.push_back(std::move(j));
    }
    doc["entities"] = std::move(entities);

    ordered_json meta;
    meta["sourceRoot"] = ir.meta.sourceRoot;
    meta["revision"] = ir.meta.revision;
    meta["toolVersion"] = ir.meta.toolVersion;
    meta["skippedServices"] = ir.meta.skippedServices;
    doc["meta"] = std::move(meta);
    return doc;
}

std::string serialize_ir(const SystemIR& ir) {
    return ir_to_json(ir).dump(2) + "\n";
}

void write_ir(const SystemIR& ir, const std::filesystem::path& file) {
    write_text_file(file, serialize_ir(ir));
}

SystemIR ir_from_json(const json& doc) {
    if (!doc.is_object()) {
        schema_error("", "IR document must be a JSON object");
    }
    SystemIR ir;
    auto names = get_string_list(doc, "services", "");
    for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            if (names[k] == names[i]) {
                throw Error(ErrorKind::Validation,
                            "/services/" + std::to_string(i) + ": duplicate service '" + names[i] + "'");
            }
        }
    }
    ir.services = ServiceUniverse(std::move(names));

    const auto& endpoints = get_array(doc, "endpoints", "");
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        ir.endpoints.push_back(endpoint_from_json(endpoints[i], "/endpoints/" + std::to_string(i)));
    }
    const auto& calls = get_array(doc, "calls", "");
    for (std::size_t i = 0; i < calls.size(); ++i) {
        ir.calls.push_back(call_from_json(calls[i], "/calls/" + std::to_string(i)));
    }
    const auto& entities = get_array(doc, "entities", "");
    for (std::size_t i = 0; i < entities.size(); ++i) {
        ir.entities.push_back(entity_from_json(entities[i], "/entities/" + std::to_string(i)));
    }
    const auto& meta = member(doc, "meta", "");
    ir.meta.sourceRoot = get_string(meta, "sourceRoot", "/meta");
    ir.meta.revision = get_string(meta, "revision", "/meta");
    ir.meta.toolVersion = get_string(meta, "toolVersion", "/meta");
    if (meta.contains("skippedServices")) {
        ir.meta.skippedServices = get_string_list(meta, "skippedServices", "/meta");
    }
    validate(ir);
    return ir;
}

SystemIR parse_ir(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Load, std::string("malformed JSON: ") + e.what());
    }
    return ir_from_json(doc);
}

SystemIR load_ir(const std::filesystem::path& file) {
    std::string text;
    try {
        text = read_text_file(file);
    } catch (const Error& e) {
        throw Error(ErrorKind::Load, e.what());
    }
    return parse_ir(text);
}

} // namespace svcdep
