#include "svcdep/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace svcdep {

namespace {

constexpr int kCell = 28;
constexpr int kHeader = 36;
constexpr int kTitle = 28;
constexpr int kLegendGap = 24;
constexpr int kLegendLine = 16;

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

int hex_channel(const std::string& color, int i) {
    return std::stoi(color.substr(1 + 2 * static_cast<std::size_t>(i), 2), nullptr, 16);
}

// Relative luminance is enough to pick black or white text.
bool dark(const std::string& color) {
    const double l = 0.299 * hex_channel(color, 0) + 0.587 * hex_channel(color, 1) + 0.114 * hex_channel(color, 2);
    return l < 140.0;
}

} // namespace

std::string lerp_color(const std::string& low, const std::string& high, double t) {
    t = std::clamp(t, 0.0, 1.0);
    char buf[8];
    int ch[3];
    for (int i = 0; i < 3; ++i) {
        const double a = hex_channel(low, i);
        const double b = hex_channel(high, i);
        ch[i] = static_cast<int>(std::lround(a + (b - a) * t));
    }
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", ch[0], ch[1], ch[2]);
    return buf;
}

HeatmapSpec default_heatmap_spec(MatrixKind kind, const RenderColors& colors) {
    HeatmapSpec spec;
    spec.colors = colors;
    switch (kind) {
    case MatrixKind::Edm:
        spec.title = "Endpoint Dependency Matrix (EDM)";
        spec.scale = ColorScale::EdmHeat;
        break;
    case MatrixKind::Ddm:
        spec.title = "Data Dependency Matrix (DDM)";
        spec.scale = ColorScale::DdmHeat;
        break;
    case MatrixKind::Sdm:
        spec.title = "Service Dependency Matrix (SDM)";
        spec.scale = ColorScale::SdmThreeClass;
        break;
    }
    return spec;
}

std::string emit_heatmap(const DisplayView& view, const HeatmapSpec& spec) {
    const int nRows = static_cast<int>(view.rows.size());
    const int nCols = static_cast<int>(view.cols.size());
    const int gridX = kHeader;
    const int gridY = kTitle + kHeader;
    const int gridW = nCols * kCell;
    const int gridH = nRows * kCell;

    // Legend: every service on either axis, by ordinal.
    std::map<int, std::string> legend;
    for (const auto& id : view.rows) legend[id.ordinal] = id.name;
    for (const auto& id : view.cols) legend[id.ordinal] = id.name;
    std::size_t longest = spec.title.size();
    for (const auto& [ord, name] : legend) {
        longest = std::max(longest, name.size() + 6);
    }
    const int legendX = gridX + gridW + kLegendGap;
    const int width = legendX + static_cast<int>(longest) * 7 + 16;
    const int legendH = (static_cast<int>(legend.size()) + 1) * kLegendLine + (spec.scale == ColorScale::SdmThreeClass ? 4 * kLegendLine : 0);
    const int height = std::max(gridY + gridH, kTitle + legendH) + 16;

    int lo = 0;
    int hi = 0;
    bool first = true;
    for (const auto& [pair, v] : view.cells) {
        lo = first ? v.primary : std::min(lo, v.primary);
        hi = first ? v.primary : std::max(hi, v.primary);
        first = false;
    }

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    svg << "  <title>" << xml_escape(spec.title) << "</title>\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
    svg << "  <text x=\"4\" y=\"18\" font-size=\"14\" font-weight=\"bold\">" << xml_escape(spec.title) << "</text>\n";

    svg << "  <g class=\"col-headers\">\n";
    for (int c = 0; c < nCols; ++c) {
        svg << "    <text x=\"" << gridX + c * kCell + kCell / 2 << "\" y=\"" << gridY - 8
            << "\" text-anchor=\"middle\">" << view.cols[static_cast<std::size_t>(c)].ordinal << "</text>\n";
    }
    svg << "  </g>\n  <g class=\"row-headers\">\n";
    for (int r = 0; r < nRows; ++r) {
        svg << "    <text x=\"" << gridX - 6 << "\" y=\"" << gridY + r * kCell + kCell / 2 + 4
            << "\" text-anchor=\"end\">" << view.rows[static_cast<std::size_t>(r)].ordinal << "</text>\n";
    }
    svg << "  </g>\n  <g class=\"grid\">\n";
    for (int r = 0; r < nRows; ++r) {
        for (int c = 0; c < nCols; ++c) {
            svg << "    <rect x=\"" << gridX + c * kCell << "\" y=\"" << gridY + r * kCell << "\" width=\"" << kCell
                << "\" height=\"" << kCell << "\" fill=\"#ffffff\" stroke=\"#dddddd\"/>\n";
        }
    }
    svg << "  </g>\n  <g class=\"cells\">\n";

    std::vector<int> rowCounts(view.rows.size(), 0);
    std::vector<int> colCounts(view.cols.size(), 0);
    for (int r = 0; r < nRows; ++r) {
        for (int c = 0; c < nCols; ++c) {
            const ServicePair key{view.rows[static_cast<std::size_t>(r)].name, view.cols[static_cast<std::size_t>(c)].name};
            auto it = view.cells.find(key);
            if (it == view.cells.end()) {
                continue;
            }
            ++rowCounts[static_cast<std::size_t>(r)];
            ++colCounts[static_cast<std::size_t>(c)];
            std::string fill;
            if (spec.scale == ColorScale::SdmThreeClass) {
                switch (SdmCell{it->second.primary, it->second.secondary}.classification()) {
                case DependencyClass::EndpointsOnly: fill = spec.colors.endpointsOnly; break;
                case DependencyClass::DataOnly: fill = spec.colors.dataOnly; break;
                case DependencyClass::Both: fill = spec.colors.both; break;
                }
            } else {
                // Lowest value still gets a visible tint.
                const double t = hi == lo ? 1.0 : 0.25 + 0.75 * (it->second.primary - lo) / double(hi - lo);
                fill = lerp_color(spec.colors.heatLow, spec.colors.heatHigh, t);
            }
            const int x = gridX + c * kCell;
            const int y = gridY + r * kCell;
            svg << "    <rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCell << "\" height=\""
                << kCell << "\" fill=\"" << fill << "\" stroke=\"#999999\"><title>" << xml_escape(key.first)
                << " -&gt; " << xml_escape(key.second) << ": " << view.display(key) << "</title></rect>\n";
            svg << "    <text x=\"" << x + kCell / 2 << "\" y=\"" << y + kCell / 2 + 4
                << "\" text-anchor=\"middle\" fill=\"" << (dark(fill) ? "#ffffff" : "#000000") << "\">"
                << view.display(key) << "</text>\n";
        }
    }
    svg << "  </g>\n";

    if (spec.markExtremes && !view.cells.empty()) {
        const int maxRow = *std::max_element(rowCounts.begin(), rowCounts.end());
        const int maxCol = *std::max_element(colCounts.begin(), colCounts.end());
        svg << "  <g class=\"extremes\" fill=\"none\" stroke=\"" << spec.colors.marker << "\" stroke-width=\"2\">\n";
        for (int r = 0; r < nRows; ++r) {
            if (rowCounts[static_cast<std::size_t>(r)] == maxRow) {
                svg << "    <rect class=\"extreme-row\" x=\"" << gridX << "\" y=\"" << gridY + r * kCell
                    << "\" width=\"" << gridW << "\" height=\"" << kCell << "\"/>\n";
            }
        }
        for (int c = 0; c < nCols; ++c) {
            if (colCounts[static_cast<std::size_t>(c)] == maxCol) {
                svg << "    <rect class=\"extreme-col\" x=\"" << gridX + c * kCell << "\" y=\"" << gridY
                    << "\" width=\"" << kCell << "\" height=\"" << gridH << "\"/>\n";
            }
        }
        svg << "  </g>\n";
    }

    svg << "  <g class=\"legend\">\n";
    int ly = kTitle + kLegendLine;
    svg << "    <text x=\"" << legendX << "\" y=\"" << ly << "\" font-weight=\"bold\">ID  service</text>\n";
    for (const auto& [ord, name] : legend) {
        ly += kLegendLine;
        svg << "    <text x=\"" << legendX << "\" y=\"" << ly << "\">" << ord << "  " << xml_escape(name)
            << "</text>\n";
    }
    if (spec.scale == ColorScale::SdmThreeClass) {
        const std::pair<const char*, const std::string*> keys[] = {
            {"endpoints-only", &spec.colors.endpointsOnly},
            {"data-only", &spec.colors.dataOnly},
            {"both", &spec.colors.both},
        };
        ly += kLegendLine / 2;
        for (const auto& [label, color] : keys) {
            ly += kLegendLine;
            svg << "    <rect x=\"" << legendX << "\" y=\"" << ly - 10 << "\" width=\"12\" height=\"12\" fill=\""
                << *color << "\"/>\n";
            svg << "    <text x=\"" << legendX + 18 << "\" y=\"" << ly << "\">" << label << "</text>\n";
        }
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

} // namespace svcdep
