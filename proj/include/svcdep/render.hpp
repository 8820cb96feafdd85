#pragma once

#include "svcdep/config.hpp"
#include "svcdep/matrix.hpp"
#include "svcdep/pipeline.hpp"

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace svcdep {

// ---------------------------------------------------------------------------
// analysis.json

nlohmann::ordered_json analysis_to_json(const Analysis& analysis);
// Two-space indented, trailing newline; byte-deterministic.
std::string emit_json(const Analysis& analysis);

// Rebuilds one matrix from an analysis.json document. DDM tables come back
// with canonical pairs only. Throws Load on schema errors.
MatrixTable table_from_analysis_json(const nlohmann::json& doc, MatrixKind kind);

// "/api/x/{Long}" style rendering of a call URL.
std::string render_call_url(const RestCall& call);

// ---------------------------------------------------------------------------
// SVG heatmaps

enum class ColorScale { EdmHeat, DdmHeat, SdmThreeClass };

struct HeatmapSpec {
    std::string title;
    ColorScale scale = ColorScale::EdmHeat;
    bool markExtremes = true;
    RenderColors colors;
};

HeatmapSpec default_heatmap_spec(MatrixKind kind, const RenderColors& colors = {});

// "#rrggbb" at t in [0,1] between two colors.
std::string lerp_color(const std::string& low, const std::string& high, double t);

// Filled cells carry class="cell"; extreme row/column outlines carry
// class="extreme-row" / class="extreme-col".
std::string emit_heatmap(const DisplayView& view, const HeatmapSpec& spec);

// ---------------------------------------------------------------------------
// CSV (RFC 4180, CRLF line endings)

std::string csv_field(const std::string& value);
std::string emit_csv(const DisplayView& view);
std::string emit_hotspots_csv(const SystemIR& ir, const std::vector<HotspotRow>& rows);

// ---------------------------------------------------------------------------

struct OutputFormats {
    bool json = true;
    bool csv = true;
    bool svg = true;

    // Comma list of json, csv, svg. Throws Config on unknown names.
    static OutputFormats parse(const std::string& list);
};

// Writes analysis.json, {edm,ddm,sdm}.{svg,csv} and hotspots.csv as
// selected; returns the written paths in a fixed order.
std::vector<std::filesystem::path> write_outputs(const Analysis& analysis, const std::filesystem::path& outDir,
                                                 const OutputFormats& formats, const RenderColors& colors);

// ---------------------------------------------------------------------------
// Diff reports

nlohmann::ordered_json diff_to_json(const MatrixDiff& d);
std::string diff_table_text(const MatrixDiff& d);

} // namespace svcdep
