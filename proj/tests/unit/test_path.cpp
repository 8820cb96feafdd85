#include "svcdep/error.hpp"
#include "svcdep/path.hpp"

#include <gtest/gtest.h>

using namespace svcdep;

TEST(NormalizePath, StripsHostQueryAndEmptySegments) {
    const auto n = normalize_path("http://Ms-Catalog:8080//api/v1/items/?q=1#frag");
    EXPECT_EQ(n.host, "ms-catalog");
    EXPECT_EQ(n.path.render(), "/api/v1/items");
}

TEST(NormalizePath, Placeholders) {
    const auto n = normalize_path("/a/{id}/b/{n:Long}/c{x}");
    ASSERT_EQ(n.path.segments.size(), 5u);
    EXPECT_EQ(n.path.segments[1], PathSegment::variable("id"));
    EXPECT_EQ(n.path.segments[3], PathSegment::variable("Long"));
    EXPECT_EQ(n.path.segments[4], PathSegment::variable("unknown"));
}

TEST(NormalizePath, EmptyIsInvalid) {
    try {
        normalize_path("http://host/");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidPath);
    }
}

TEST(NormalizePath, CallUrlHolesBecomeTypedVariables) {
    const std::vector<UrlPart> url{UrlPart::literal("http://ms-users/api/users/"), UrlPart::hole("Integer"),
                                   UrlPart::literal("/profile")};
    const auto n = normalize_path(url);
    EXPECT_EQ(n.host, "ms-users");
    EXPECT_EQ(n.path.render(), "/api/users/{Integer}/profile");
}

TEST(NormalizePath, LeadingHoleIsOrigin) {
    const std::vector<UrlPart> url{UrlPart::hole("String"), UrlPart::literal("/api/x")};
    const auto n = normalize_path(url);
    EXPECT_TRUE(n.dynamicHost);
    EXPECT_EQ(n.path.render(), "/api/x");
}

TEST(JoinPaths, Slashes) {
    EXPECT_EQ(join_paths("/a/", "b"), "/a/b");
    EXPECT_EQ(join_paths("/a", "/b"), "/a/b");
    EXPECT_EQ(join_paths("", "/b"), "/b");
    EXPECT_EQ(join_paths("/a", ""), "/a");
}

TEST(TypeNames, EraseAndSimplify) {
    EXPECT_EQ(erase_generics("List<String>"), "List");
    EXPECT_EQ(erase_generics("Map<String, List<Long>>"), "Map");
    EXPECT_EQ(simple_type_name("java.util.List<X>"), "List");
    EXPECT_EQ(simple_type_name("java.util.UUID"), "UUID");
}
