#include "generator.hpp"

#include "svcdep/error.hpp"
#include "svcdep/ir_io.hpp"

#include <gtest/gtest.h>

using namespace svcdep;

TEST(IrIo, RoundTripGenerated) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto g = svcdep::testing::generate_ir_system(seed, {4, 12, 20, 8});
        const std::string text = serialize_ir(g.ir);
        const SystemIR back = parse_ir(text);
        EXPECT_EQ(back, g.ir) << "seed " << seed;
        EXPECT_EQ(serialize_ir(back), text);
    }
}

TEST(IrIo, MalformedJson) {
    try {
        parse_ir("{not json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Load);
    }
}

TEST(IrIo, MissingMemberNamesPath) {
    auto g = svcdep::testing::generate_ir_system(3, {2, 3, 2, 2});
    auto doc = ir_to_json(g.ir);
    doc["endpoints"][0].erase("method");
    try {
        ir_from_json(nlohmann::json::parse(doc.dump()));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Load);
        EXPECT_NE(std::string(e.what()).find("/endpoints/0"), std::string::npos) << e.what();
    }
}

TEST(IrIo, UnknownServiceIsValidationError) {
    auto g = svcdep::testing::generate_ir_system(3, {2, 3, 2, 2});
    auto doc = ir_to_json(g.ir);
    doc["calls"][0]["caller"] = "ghost";
    try {
        ir_from_json(nlohmann::json::parse(doc.dump()));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Validation);
    }
}

TEST(IrIo, MissingFileIsLoadError) {
    try {
        load_ir("/nonexistent/ir.json");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Load);
    }
}
