#include "generator.hpp"

#include "svcdep/error.hpp"
#include "svcdep/render.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <gtest/gtest.h>

#include <sstream>

using namespace svcdep;
namespace pt = boost::property_tree;

namespace {

Analysis analysis_for(std::uint64_t seed) {
    auto g = svcdep::testing::generate_ir_system(seed, {6, 30, 60, 12});
    AnalyzeOptions opts;
    opts.minCalls = 0;
    return analyze(std::move(g.ir), {}, RunConfig{}, opts);
}

void count_rects(const pt::ptree& node, std::map<std::string, int>& byClass) {
    for (const auto& [name, child] : node) {
        if (name == "rect") {
            byClass[child.get<std::string>("<xmlattr>.class", "")] += 1;
        }
        count_rects(child, byClass);
    }
}

std::map<std::string, int> parse_svg(const std::string& svg) {
    std::istringstream in(svg);
    pt::ptree tree;
    pt::read_xml(in, tree); // throws on malformed XML
    EXPECT_EQ(tree.get<std::string>("svg.<xmlattr>.xmlns"), "http://www.w3.org/2000/svg");
    std::map<std::string, int> byClass;
    count_rects(tree, byClass);
    return byClass;
}

int tied_max(const std::map<std::string, int>& counts) {
    int best = 0;
    for (const auto& [k, v] : counts) best = std::max(best, v);
    int ties = 0;
    for (const auto& [k, v] : counts) ties += v == best ? 1 : 0;
    return ties;
}

} // namespace

TEST(Heatmap, WellFormedWithOneRectPerCellAndMarkedExtremes) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto a = analysis_for(seed);
        for (const auto& table : {to_table(a.edm), to_table(a.ddm, true), to_table(a.sdm)}) {
            const auto view = prune(table);
            const auto svg = emit_heatmap(view, default_heatmap_spec(table.kind));
            const auto rects = parse_svg(svg);
            EXPECT_EQ(rects.count("cell") ? rects.at("cell") : 0, static_cast<int>(view.cells.size()));
            std::map<std::string, int> perRow;
            std::map<std::string, int> perCol;
            for (const auto& [pair, v] : view.cells) {
                ++perRow[pair.first];
                ++perCol[pair.second];
            }
            if (view.cells.empty()) {
                EXPECT_EQ(rects.count("extreme-row"), 0u);
                continue;
            }
            EXPECT_EQ(rects.at("extreme-row"), tied_max(perRow));
            EXPECT_EQ(rects.at("extreme-col"), tied_max(perCol));
        }
    }
}

TEST(Heatmap, EscapesServiceNames) {
    MatrixTable t;
    t.services = ServiceUniverse({"a&b", "c<d>"});
    t.cells[{"a&b", "c<d>"}] = {2, 0};
    const auto svg = emit_heatmap(prune(t), default_heatmap_spec(MatrixKind::Edm));
    EXPECT_NO_THROW(parse_svg(svg));
    EXPECT_NE(svg.find("a&amp;b"), std::string::npos);
}

TEST(Heatmap, SdmUsesThreeClassColors) {
    MatrixTable t;
    t.kind = MatrixKind::Sdm;
    t.services = ServiceUniverse({"a", "b", "c"});
    t.cells[{"a", "b"}] = {2, 0};
    t.cells[{"b", "a"}] = {0, 1};
    t.cells[{"a", "c"}] = {4, 1};
    RenderColors colors;
    const auto svg = emit_heatmap(prune(t), default_heatmap_spec(MatrixKind::Sdm, colors));
    EXPECT_NE(svg.find(colors.endpointsOnly), std::string::npos);
    EXPECT_NE(svg.find(colors.dataOnly), std::string::npos);
    EXPECT_NE(svg.find(colors.both), std::string::npos);
    EXPECT_NE(svg.find(">4.1<"), std::string::npos);
}

TEST(Heatmap, LerpColor) {
    EXPECT_EQ(lerp_color("#000000", "#ffffff", 0.0), "#000000");
    EXPECT_EQ(lerp_color("#000000", "#ffffff", 1.0), "#ffffff");
    EXPECT_EQ(lerp_color("#000000", "#ffffff", 0.5), "#808080");
    EXPECT_EQ(lerp_color("#ffffff", "#08306b", 2.0), "#08306b");
}

TEST(Csv, QuotingAndCrlf) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
    MatrixTable t;
    t.services = ServiceUniverse({"x,1", "y"});
    t.cells[{"x,1", "y"}] = {3, 0};
    EXPECT_EQ(emit_csv(prune(t)), ",y\r\n\"x,1\",3\r\n");
}

TEST(Csv, SdmDisplayValues) {
    MatrixTable t;
    t.kind = MatrixKind::Sdm;
    t.services = ServiceUniverse({"a", "b"});
    t.cells[{"a", "b"}] = {4, 1};
    t.cells[{"b", "a"}] = {0, 1};
    EXPECT_EQ(emit_csv(prune(t)), ",a,b\r\na,,4.1\r\nb,0.1,\r\n");
}

TEST(AnalysisJson, TablesRoundTrip) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto a = analysis_for(seed);
        const auto doc = nlohmann::json::parse(emit_json(a));
        EXPECT_EQ(doc["tool"]["name"], "svcdep");
        const auto edm = table_from_analysis_json(doc, MatrixKind::Edm);
        EXPECT_EQ(edm.cells, to_table(a.edm).cells);
        EXPECT_EQ(edm.services, a.edm.services);
        EXPECT_EQ(table_from_analysis_json(doc, MatrixKind::Ddm).cells, to_table(a.ddm).cells);
        EXPECT_EQ(table_from_analysis_json(doc, MatrixKind::Sdm).cells, to_table(a.sdm).cells);
        EXPECT_EQ(doc["hotspots"].size(), a.hotspots.size());
        EXPECT_EQ(doc["summary"]["matched"], a.resolution.matches.size());
    }
}

TEST(AnalysisJson, DeterministicBytes) {
    EXPECT_EQ(emit_json(analysis_for(7)), emit_json(analysis_for(7)));
}

TEST(AnalysisJson, SchemaErrorsAreLoadErrors) {
    try {
        table_from_analysis_json(nlohmann::json::parse(R"({"matrices": {}})"), MatrixKind::Edm);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Load);
    }
}

TEST(DiffReport, TextAndJson) {
    MatrixTable a;
    a.kind = MatrixKind::Sdm;
    a.services = ServiceUniverse({"x", "y"});
    a.cells[{"x", "y"}] = {1, 1};
    MatrixTable b = a;
    b.cells[{"x", "y"}] = {1, 0};
    b.cells[{"y", "x"}] = {2, 0};
    const auto d = diff(a, b);
    const auto text = diff_table_text(d);
    EXPECT_NE(text.find("+ y -> x  2"), std::string::npos) << text;
    EXPECT_NE(text.find("~ x -> y  1.1 => 1"), std::string::npos) << text;
    const auto j = diff_to_json(d);
    EXPECT_EQ(j["kind"], "sdm");
    EXPECT_EQ(j["added"][0]["value"]["display"], "2");
    EXPECT_EQ(diff_table_text(diff(a, a)), "sdm diff\nno changes\n");
}

TEST(OutputFormats, Parse) {
    const auto f = OutputFormats::parse("json,svg");
    EXPECT_TRUE(f.json);
    EXPECT_FALSE(f.csv);
    EXPECT_TRUE(f.svg);
    EXPECT_THROW(OutputFormats::parse("json,pdf"), Error);
}
