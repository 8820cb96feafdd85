#include "oracle.hpp"

#include "svcdep/error.hpp"
#include "svcdep/match.hpp"
#include "svcdep/path.hpp"

#include <gtest/gtest.h>

using namespace svcdep;

namespace {

EndpointDef endpoint(const std::string& svc, const std::string& path, const char* method) {
    EndpointDef ep;
    ep.service = svc;
    ep.path = normalize_path(path).path;
    ep.method = HttpMethod::parse(method);
    for (const auto& s : ep.path.segments) {
        if (s.is_variable()) ep.params.push_back({"p", s.text, ParamKind::Path});
    }
    return ep;
}

RestCall call(const std::string& caller, std::vector<UrlPart> url, const char* method) {
    RestCall c;
    c.caller = caller;
    c.url = std::move(url);
    c.method = HttpMethod::parse(method);
    c.argCount = 1;
    return c;
}

std::optional<SignatureMatch> sig(const std::string& callPath, const char* m, const EndpointDef& ep) {
    return match_signature(normalize_path(callPath).path, HttpMethod::parse(m), ep, TypePatterns{});
}

} // namespace

TEST(TypePatterns, Defaults) {
    TypePatterns p;
    EXPECT_TRUE(p.accepts("Long", "123"));
    EXPECT_FALSE(p.accepts("Long", "12a"));
    EXPECT_TRUE(p.accepts("int", "0"));
    EXPECT_TRUE(p.accepts("java.lang.Integer", "7"));
    EXPECT_TRUE(p.accepts("UUID", "123e4567-e89b-12d3-a456-426614174000"));
    EXPECT_FALSE(p.accepts("UUID", "123e4567"));
    EXPECT_TRUE(p.accepts("boolean", "true"));
    EXPECT_FALSE(p.accepts("Boolean", "yes"));
    EXPECT_TRUE(p.accepts("String", "anything-here"));
    EXPECT_FALSE(p.accepts("String", "a/b"));
}

TEST(TypePatterns, OverrideAndBadRegex) {
    TypePatterns p;
    p.set({"String", "[a-z]+"});
    EXPECT_FALSE(p.accepts("String", "A1"));
    try {
        p.set({"Long", "([0-9]"});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Config);
    }
}

TEST(Signature, MethodAndSegmentCount) {
    const auto ep = endpoint("b", "/api/items/{Long}", "GET");
    EXPECT_TRUE(sig("/api/items/5", "GET", ep));
    EXPECT_FALSE(sig("/api/items/5", "POST", ep));
    EXPECT_FALSE(sig("/api/items", "GET", ep));
    EXPECT_FALSE(sig("/api/items/5/x", "GET", ep));
}

TEST(Signature, LiteralAndRegexRules) {
    const auto ep = endpoint("b", "/api/items/{Long}", "GET");
    EXPECT_FALSE(sig("/api/itemz/5", "GET", ep));
    EXPECT_FALSE(sig("/api/items/abc", "GET", ep));
    EXPECT_EQ(sig("/api/items/{id}", "GET", ep)->specificity, 2);
}

TEST(Signature, HoleNeverFillsLiteral) {
    const auto ep = endpoint("b", "/api/items/all", "GET");
    EXPECT_FALSE(sig("/api/items/{x}", "GET", ep));
}

TEST(Signature, UnresolvableNeverMatches) {
    const auto ep = endpoint("b", "/api/items", "GET");
    auto c = call("a", {UrlPart::literal("http://b/api/items")}, "GET");
    EXPECT_TRUE(match_signature(c, ep, TypePatterns{}));
    c.unresolvable = true;
    EXPECT_FALSE(match_signature(c, ep, TypePatterns{}));
}

TEST(ResolveTarget, HostThenPathPrefix) {
    const ServiceUniverse u({"a", "b"});
    auto c = call("a", {UrlPart::literal("http://b:80/x/y")}, "GET");
    auto t = resolve_target(c, u);
    EXPECT_EQ(t.service, "b");
    EXPECT_FALSE(t.viaPathPrefix);

    c.url = {UrlPart::literal("http://gateway/b/x/"), UrlPart::hole("Long")};
    t = resolve_target(c, u);
    EXPECT_EQ(t.service, "b");
    EXPECT_TRUE(t.viaPathPrefix);
    EXPECT_EQ(t.url.path.render(), "/x/{Long}");

    c.url = {UrlPart::literal("/x/y")};
    EXPECT_EQ(resolve_target(c, u).service, "");
}

TEST(ResolveCalls, SpecificityTieBreakAndSelfCalls) {
    SystemIR ir;
    ir.services = ServiceUniverse({"a", "b", "c"});
    ir.endpoints = {endpoint("b", "/api/items/{String}", "GET"), endpoint("b", "/api/items/fixed", "GET"),
                    endpoint("b", "/api/users/{String}", "GET"), endpoint("b", "/api/users/{Long}", "GET"),
                    endpoint("a", "/api/self", "GET")};
    ir.calls = {call("a", {UrlPart::literal("http://b/api/items/fixed")}, "GET"),
                call("a", {UrlPart::literal("http://b/api/items/other")}, "GET"),
                call("c", {UrlPart::literal("http://b/api/users/"), UrlPart::hole("unknown")}, "GET"),
                call("a", {UrlPart::literal("/api/self")}, "GET"),
                call("a", {UrlPart::hole("String")}, "GET")};
    const auto r = resolve_calls(ir, TypePatterns{}, Execution::Serial);
    ASSERT_EQ(r.matches.size(), 3u);
    EXPECT_EQ(r.matches[0].endpoint, 1u);
    EXPECT_EQ(r.matches[0].specificity, 3);
    EXPECT_FALSE(r.matches[0].ambiguous);
    EXPECT_EQ(r.matches[1].endpoint, 0u);
    EXPECT_EQ(r.matches[2].endpoint, 3u); // "{Long}" sorts before "{String}"
    EXPECT_TRUE(r.matches[2].ambiguous);
    ASSERT_EQ(r.ambiguities.size(), 1u);
    EXPECT_EQ(r.ambiguities[0].tiedWith, std::vector<std::size_t>{2});
    EXPECT_EQ(r.unmatched, std::vector<std::size_t>{3});
    EXPECT_EQ(r.unresolvable, std::vector<std::size_t>{4});
}

TEST(ResolveCalls, SerialEqualsParallel) {
    SystemIR ir;
    ir.services = ServiceUniverse({"a", "b"});
    for (int i = 0; i < 40; ++i) {
        ir.endpoints.push_back(endpoint("b", "/r" + std::to_string(i) + "/{Long}", "GET"));
    }
    for (int i = 0; i < 200; ++i) {
        ir.calls.push_back(call("a", {UrlPart::literal("http://b/r" + std::to_string(i % 50) + "/" +
                                                       std::to_string(i))},
                                "GET"));
    }
    const auto s = resolve_calls(ir, TypePatterns{}, Execution::Serial);
    const auto p = resolve_calls(ir, TypePatterns{}, Execution::Parallel);
    EXPECT_EQ(s.matches, p.matches);
    EXPECT_EQ(s.unmatched, p.unmatched);
    const auto oracle = svcdep::testing::oracle_resolve(ir);
    for (const auto& m : s.matches) {
        EXPECT_EQ(oracle[m.call].endpoint, m.endpoint);
    }
}
