#include "generator.hpp"
#include "oracle.hpp"

#include "svcdep/error.hpp"
#include "svcdep/match.hpp"
#include "svcdep/matrix.hpp"

#include <gtest/gtest.h>

using namespace svcdep;
using namespace svcdep::testing;

namespace {

void expect_resolution_matches_truth(const GeneratedSystem& g, std::uint64_t seed) {
    const auto res = resolve_calls(g.ir, TypePatterns{}, Execution::Serial);
    std::map<std::size_t, EndpointMatch> byCall;
    for (const auto& m : res.matches) byCall[m.call] = m;
    std::set<std::size_t> unmatched(res.unmatched.begin(), res.unmatched.end());
    std::set<std::size_t> unresolvable(res.unresolvable.begin(), res.unresolvable.end());
    for (std::size_t c = 0; c < g.truth.calls.size(); ++c) {
        const auto& p = g.truth.calls[c];
        SCOPED_TRACE("seed " + std::to_string(seed) + " call " + std::to_string(c));
        switch (p.kind) {
        case PlantedCall::Kind::Matched:
            ASSERT_TRUE(byCall.count(c));
            EXPECT_EQ(byCall[c].endpoint, p.endpoint);
            EXPECT_EQ(byCall[c].ambiguous, p.ambiguous);
            EXPECT_EQ(byCall[c].specificity, p.specificity);
            break;
        case PlantedCall::Kind::Unmatched: EXPECT_TRUE(unmatched.count(c)); break;
        case PlantedCall::Kind::Unresolvable: EXPECT_TRUE(unresolvable.count(c)); break;
        }
    }
}

} // namespace

TEST(Generator, SeedOneDefaultSizesMatchesTruth) {
    const auto g = generate_ir_system(1, GenSizes{3, 6, 10, 5});
    EXPECT_EQ(g.ir.services.size(), 3u);
    EXPECT_EQ(g.ir.endpoints.size(), 6u);
    EXPECT_EQ(g.ir.calls.size(), 10u);
    expect_resolution_matches_truth(g, 1);
}

TEST(Generator, Deterministic) {
    const auto a = generate_ir_system(42, GenSizes{5, 20, 40, 10});
    const auto b = generate_ir_system(42, GenSizes{5, 20, 40, 10});
    EXPECT_EQ(a.ir, b.ir);
    EXPECT_EQ(a.truth.edm, b.truth.edm);
    EXPECT_EQ(a.truth.ddm, b.truth.ddm);
}

TEST(Generator, RejectsZeroServices) {
    EXPECT_THROW(generate_ir_system(1, GenSizes{0, 6, 10, 5}), Error);
    EXPECT_THROW(generate_ir_system(1, GenSizes{3, 0, 10, 5}), Error);
}

TEST(Generator, ManySeedsAgreeWithTruthAndOracle) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const GenSizes sizes{1 + static_cast<int>(seed % 10), 5 + static_cast<int>(seed % 46),
                             static_cast<int>(seed % 101), static_cast<int>(seed % 12)};
        const auto g = generate_ir_system(seed, sizes);
        expect_resolution_matches_truth(g, seed);
        const auto res = resolve_calls(g.ir, TypePatterns{}, Execution::Parallel);
        const auto oracle = oracle_resolve(g.ir);
        for (const auto& m : res.matches) {
            ASSERT_EQ(oracle[m.call].kind, OracleOutcome::Kind::Matched) << "seed " << seed;
            EXPECT_EQ(oracle[m.call].endpoint, m.endpoint);
            EXPECT_EQ(oracle[m.call].ambiguous, m.ambiguous);
        }
        EXPECT_EQ(build_edm(g.ir, res.matches).cells, g.truth.edm) << "seed " << seed;
    }
}

TEST(Generator, PlantsAmbiguityAndDecoys) {
    int ambiguous = 0;
    int unmatched = 0;
    int unresolvable = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto g = generate_ir_system(seed, GenSizes{6, 30, 60, 8});
        ambiguous += g.truth.ambiguous;
        unmatched += g.truth.unmatched;
        unresolvable += g.truth.unresolvable;
    }
    EXPECT_GT(ambiguous, 0);
    EXPECT_GT(unmatched, 0);
    EXPECT_GT(unresolvable, 0);
}

TEST(Generator, EntityTruthMatchesLibrary) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto g = generate_ir_system(seed, GenSizes{5, 6, 0, 14});
        const auto em = match_entities(g.ir, SimilarityConfig{}, {}, Execution::Serial);
        EXPECT_EQ(build_ddm(g.ir, em.equivalence).cells, g.truth.ddm) << "seed " << seed;
    }
}
