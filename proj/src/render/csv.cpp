#include "svcdep/error.hpp"
#include "svcdep/ir_io.hpp"
#include "svcdep/render.hpp"

#include <sstream>

namespace svcdep {

namespace fs = std::filesystem;

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) {
        return value;
    }
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string emit_csv(const DisplayView& view) {
    std::string out;
    for (const auto& c : view.cols) {
        out += ',';
        out += csv_field(c.name);
    }
    out += "\r\n";
    for (const auto& r : view.rows) {
        out += csv_field(r.name);
        for (const auto& c : view.cols) {
            out += ',';
            out += csv_field(view.display({r.name, c.name}));
        }
        out += "\r\n";
    }
    return out;
}

std::string emit_hotspots_csv(const SystemIR& ir, const std::vector<HotspotRow>& rows) {
    std::string out = "service,path,method,callCount,distinctCallers\r\n";
    for (const auto& h : rows) {
        const auto& ep = ir.endpoints.at(h.endpoint);
        out += csv_field(ep.service) + ',' + csv_field(ep.path.render()) + ',' + ep.method.str() + ',' +
               std::to_string(h.callCount) + ',' + std::to_string(h.distinctCallers) + "\r\n";
    }
    return out;
}

OutputFormats OutputFormats::parse(const std::string& list) {
    OutputFormats f{false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "json") {
            f.json = true;
        } else if (item == "csv") {
            f.csv = true;
        } else if (item == "svg") {
            f.svg = true;
        } else if (!item.empty()) {
            throw Error(ErrorKind::Config, "unknown output format '" + item + "'");
        }
    }
    return f;
}

std::vector<fs::path> write_outputs(const Analysis& analysis, const fs::path& outDir, const OutputFormats& formats,
                                    const RenderColors& colors) {
    std::error_code ec;
    fs::create_directories(outDir, ec);
    if (ec) {
        throw Error(ErrorKind::Io, "cannot create " + outDir.string() + ": " + ec.message());
    }
    std::vector<fs::path> written;
    auto put = [&](const char* name, const std::string& content) {
        write_text_file(outDir / name, content);
        written.push_back(outDir / name);
    };
    if (formats.json) {
        put("analysis.json", emit_json(analysis));
    }
    const std::pair<MatrixKind, MatrixTable> tables[] = {
        {MatrixKind::Edm, to_table(analysis.edm)},
        {MatrixKind::Ddm, to_table(analysis.ddm, true)},
        {MatrixKind::Sdm, to_table(analysis.sdm)},
    };
    for (const auto& [kind, table] : tables) {
        const DisplayView view = prune(table);
        const std::string base(matrix_kind_name(kind));
        if (formats.svg) {
            put((base + ".svg").c_str(), emit_heatmap(view, default_heatmap_spec(kind, colors)));
        }
        if (formats.csv) {
            put((base + ".csv").c_str(), emit_csv(view));
        }
    }
    if (formats.csv) {
        put("hotspots.csv", emit_hotspots_csv(analysis.ir, analysis.hotspots));
    }
    return written;
}

} // namespace svcdep
