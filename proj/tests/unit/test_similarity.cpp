#include "oracle.hpp"
#include "similarity_table.hpp"

#include "svcdep/error.hpp"
#include "svcdep/match.hpp"

#include <gtest/gtest.h>

using namespace svcdep;

constexpr const auto& kTable = svcdep::testing::kSimilarityTable;

TEST(Similarity, HandComputedTable) {
    for (const auto& r : kTable) {
        const double expected = 1.0 - static_cast<double>(r.distance) / static_cast<double>(r.longest);
        EXPECT_NEAR(name_similarity(r.a, r.b), expected, 1e-9) << r.a << " / " << r.b;
        EXPECT_NEAR(name_similarity(r.b, r.a), expected, 1e-9) << r.b << " / " << r.a;
    }
}

TEST(Similarity, TripJourney) {
    EXPECT_NEAR(name_similarity("trip", "journey"), 1.0 - 6.0 / 7.0, 1e-9);
}

TEST(Levenshtein, AgreesWithTableAndOracle) {
    for (const auto& r : kTable) {
        std::string a;
        std::string b;
        for (const auto& t : tokenize_name(r.a)) a += t;
        for (const auto& t : tokenize_name(r.b)) b += t;
        EXPECT_EQ(levenshtein(a, b), r.distance) << a << " / " << b;
        EXPECT_EQ(svcdep::testing::oracle_levenshtein(a, b), r.distance) << a << " / " << b;
    }
}

TEST(Tokenize, CamelSnakeAndAcronyms) {
    EXPECT_EQ(tokenize_name("OrderAlterInfo"), (std::vector<std::string>{"order", "alter", "info"}));
    EXPECT_EQ(tokenize_name("order_alter_info"), (std::vector<std::string>{"order", "alter", "info"}));
    EXPECT_EQ(tokenize_name("DTOList"), (std::vector<std::string>{"dto", "list"}));
    EXPECT_EQ(tokenize_name("travel2Service"), (std::vector<std::string>{"travel", "2", "service"}));
}

TEST(Similarity, SynonymsScoreOne) {
    const auto dict = SynonymDictionary::parse("# travel words\ntrip, journey\n\nuser,account\n");
    EXPECT_DOUBLE_EQ(name_similarity("Trip", "Journey", dict), 1.0);
    EXPECT_DOUBLE_EQ(name_similarity("user", "Account", dict), 1.0);
    EXPECT_LT(name_similarity("trip", "account", dict), 0.8);
}

TEST(Similarity, EmptyNameRejected) {
    try {
        name_similarity("", "x");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidName);
    }
}

TEST(Similarity, SymmetricAndBounded) {
    const char* names[] = {"Order", "orders", "OrderInfo", "Trip", "journey", "User", "UserDto", "x"};
    for (auto a : names) {
        for (auto b : names) {
            const double s = name_similarity(a, b);
            EXPECT_GE(s, 0.0);
            EXPECT_LE(s, 1.0);
            EXPECT_DOUBLE_EQ(s, name_similarity(b, a));
        }
    }
}
