#include "svcdep/config.hpp"
#include "svcdep/error.hpp"
#include "svcdep/ir_io.hpp"

#include <gtest/gtest.h>

using namespace svcdep;

namespace {

ErrorKind kind_of(const std::string& yaml) {
    try {
        parse_config(yaml);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Generator; // sentinel: no error
}

} // namespace

TEST(Config, EmptyDocumentKeepsDefaults) {
    const auto cfg = parse_config("");
    EXPECT_EQ(cfg.discovery.maxDepth, 2);
    EXPECT_DOUBLE_EQ(cfg.similarity.threshold, 0.80);
    EXPECT_EQ(cfg.colors, RenderColors{});
}

TEST(Config, AllSections) {
    const auto cfg = parse_config(R"(
discovery:
  manifests: [pom.xml]
  excludeGlobs: ["test*"]
  maxDepth: 3
frontend:
  clientMethods: [getForObject, exchange, retrieve]
  dtoSuffixes: [Dto, Info]
match:
  threshold: 0.9
  minFieldMatches: 2
  typePatterns:
    String: "[a-z]+"
render:
  colors:
    heatHigh: "#112233"
)");
    EXPECT_EQ(cfg.discovery.manifests, std::vector<std::string>{"pom.xml"});
    EXPECT_EQ(cfg.discovery.maxDepth, 3);
    EXPECT_EQ(cfg.frontend.clientMethods.size(), 3u);
    EXPECT_EQ(cfg.frontend.dtoSuffixes, (std::vector<std::string>{"Dto", "Info"}));
    EXPECT_DOUBLE_EQ(cfg.similarity.threshold, 0.9);
    EXPECT_EQ(cfg.similarity.minFieldMatches, 2);
    EXPECT_FALSE(cfg.patterns().accepts("String", "ABC"));
    EXPECT_TRUE(cfg.patterns().accepts("Long", "12"));
    EXPECT_EQ(cfg.colors.heatHigh, "#112233");
    EXPECT_EQ(cfg.colors.heatLow, "#ffffff");
}

TEST(Config, Rejections) {
    EXPECT_EQ(kind_of("bogus: 1"), ErrorKind::Config);
    EXPECT_EQ(kind_of("discovery:\n  maxDepht: 2"), ErrorKind::Config);
    EXPECT_EQ(kind_of("discovery:\n  maxDepth: 0"), ErrorKind::Config);
    EXPECT_EQ(kind_of("discovery:\n  maxDepth: two"), ErrorKind::Config);
    EXPECT_EQ(kind_of("match:\n  threshold: 1.5"), ErrorKind::Config);
    EXPECT_EQ(kind_of("match:\n  minFieldMatches: -1"), ErrorKind::Config);
    EXPECT_EQ(kind_of("match:\n  typePatterns:\n    Long: \"([0-9]\""), ErrorKind::Config);
    EXPECT_EQ(kind_of("render:\n  colors:\n    both: red"), ErrorKind::Config);
    EXPECT_EQ(kind_of("frontend:\n  clientMethods: getForObject"), ErrorKind::Config);
    EXPECT_EQ(kind_of("[1, 2"), ErrorKind::Config);
}

TEST(Config, SynonymPathRelativeToConfigFile) {
    const auto dir = std::filesystem::temp_directory_path() / "svcdep-config-test";
    std::filesystem::create_directories(dir);
    write_text_file(dir / "syn.txt", "trip,journey\n");
    write_text_file(dir / "cfg.yaml", "match:\n  synonymDictPath: syn.txt\n");
    const auto cfg = load_config(dir / "cfg.yaml");
    EXPECT_TRUE(cfg.synonyms().synonyms("trip", "journey"));
    std::filesystem::remove_all(dir);
}

TEST(Config, MissingSynonymFileIsConfigError) {
    const auto cfg = parse_config("match:\n  synonymDictPath: /nonexistent/syn.txt\n");
    try {
        cfg.synonyms();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Config);
    }
}
