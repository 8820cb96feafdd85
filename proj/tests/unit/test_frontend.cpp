#include "svcdep/frontend.hpp"
#include "svcdep/java_lexer.hpp"

#include <gtest/gtest.h>

using namespace svcdep;

namespace {

struct Extracted {
    std::vector<ClassDecl> classes;
    std::vector<EndpointDef> endpoints;
    std::vector<RestCall> calls;
    std::vector<EntityDef> entities;
    std::vector<Warning> warnings;

    bool warned(const std::string& code) const {
        return std::any_of(warnings.begin(), warnings.end(), [&](const Warning& w) { return w.code == code; });
    }
};

Extracted run(const std::string& src, const std::string& service = "svc") {
    Extracted x;
    const FrontendConfig cfg;
    x.classes = scan_source(src, service, "F.java", x.warnings);
    x.endpoints = extract_endpoints(x.classes, cfg, x.warnings);
    x.calls = extract_calls(x.classes, cfg, x.warnings);
    x.entities = filter_entities(x.classes, cfg);
    return x;
}

std::string url_text(const RestCall& c) {
    std::string s;
    for (const auto& p : c.url) s += p.is_literal() ? p.text : "<" + p.text + ">";
    return s;
}

} // namespace

TEST(Lexer, DropsCommentsAndDecodesStrings) {
    const auto toks = java::tokenize("a /* x */ \"q\\\"s\" // tail\n 'c' 12L ->");
    ASSERT_GE(toks.size(), 6u);
    EXPECT_TRUE(toks[0].is_ident("a"));
    EXPECT_TRUE(toks[1].is(java::TokKind::String));
    EXPECT_EQ(toks[1].text, "q\"s");
    EXPECT_TRUE(toks[2].is(java::TokKind::Char));
    EXPECT_EQ(toks[2].line, 2);
    EXPECT_TRUE(toks[3].is(java::TokKind::Number));
    EXPECT_TRUE(toks.back().is(java::TokKind::End));
}

TEST(Lexer, NeverFailsOnGarbage) {
    const auto toks = java::tokenize("\"unterminated\n@@@ ` \\ 'x");
    EXPECT_TRUE(toks.back().is(java::TokKind::End));
}

TEST(Scanner, ClassesFieldsAndAnnotations) {
    const auto x = run(R"(
package p;
import java.util.*;
@Entity
@Table(name = "orders")
public class Order extends Base implements Serializable {
    private static final long serialVersionUID = 1L;
    @Id private Long id;
    private List<OrderLine> lines = new ArrayList<>();
    public Long getId() { return id; }
    static class Inner { int x; }
}
interface Repo {}
record Point(int x, int y) {}
)");
    ASSERT_GE(x.classes.size(), 3u);
    const auto& order = x.classes[0];
    EXPECT_EQ(order.name, "Order");
    EXPECT_TRUE(order.has_annotation("Entity"));
    EXPECT_EQ(order.annotation("Table")->args.at("name"), "\"orders\"");
    ASSERT_EQ(order.fields.size(), 2u);
    EXPECT_EQ(order.fields[0], (EntityField{"id", "Long"}));
    EXPECT_EQ(order.fields[1], (EntityField{"lines", "List<OrderLine>"}));
    bool sawRecord = false;
    for (const auto& c : x.classes) {
        if (c.name == "Point") {
            sawRecord = true;
            EXPECT_EQ(c.kind, TypeKind::Record);
            EXPECT_EQ(c.fields.size(), 2u);
        }
    }
    EXPECT_TRUE(sawRecord);
}

TEST(Endpoints, SpringMappings) {
    const auto x = run(R"(
@RestController
@RequestMapping("/api/v1/items")
public class ItemController {
    @GetMapping("/{id}")
    public Item get(@PathVariable("id") Long id) { return null; }
    @PostMapping
    public Item create(@RequestBody ItemDto body) { return null; }
    @RequestMapping(value = "/search", method = RequestMethod.GET)
    public List<Item> search(@RequestParam String q) { return null; }
    @RequestMapping(path = {"/a", "/b"}, method = {RequestMethod.PUT, RequestMethod.PATCH})
    public void multi() {}
    @RequestMapping("/nomethod")
    public void none() {}
}
)");
    ASSERT_EQ(x.endpoints.size(), 7u);
    EXPECT_EQ(x.endpoints[0].path.render(), "/api/v1/items/{Long}");
    EXPECT_EQ(x.endpoints[0].method.str(), "GET");
    ASSERT_EQ(x.endpoints[0].params.size(), 1u);
    EXPECT_EQ(x.endpoints[0].params[0].kind, ParamKind::Path);
    EXPECT_EQ(x.endpoints[1].path.render(), "/api/v1/items");
    EXPECT_EQ(x.endpoints[1].method.str(), "POST");
    EXPECT_EQ(x.endpoints[1].params[0].kind, ParamKind::Body);
    EXPECT_EQ(x.endpoints[2].params[0].kind, ParamKind::Query);
    std::set<std::string> multi;
    for (std::size_t i = 3; i < 7; ++i) multi.insert(x.endpoints[i].method.str() + " " + x.endpoints[i].path.render());
    EXPECT_EQ(multi, (std::set<std::string>{"PUT /api/v1/items/a", "PATCH /api/v1/items/a", "PUT /api/v1/items/b",
                                            "PATCH /api/v1/items/b"}));
    EXPECT_TRUE(x.warned("mapping-without-method"));
}

TEST(Endpoints, JaxRs) {
    const auto x = run(R"(
@Path("/api/orders")
public class OrderResource {
    @GET
    @Path("{id}")
    public Order get(@PathParam("id") UUID id) { return null; }
    @POST
    public void create(Order o) {}
}
)");
    ASSERT_EQ(x.endpoints.size(), 2u);
    EXPECT_EQ(x.endpoints[0].path.render(), "/api/orders/{UUID}");
    EXPECT_EQ(x.endpoints[1].method.str(), "POST");
}

TEST(Endpoints, UnboundVariableAndPositionalBinding) {
    const auto x = run(R"(
@RestController
class C {
    @GetMapping("/a/{x}/{y}")
    public void a(@PathVariable Integer x) {}
    @GetMapping("/b/{first}")
    public void b(@PathVariable("other") Long v) {}
}
)");
    ASSERT_EQ(x.endpoints.size(), 2u);
    EXPECT_EQ(x.endpoints[0].path.render(), "/a/{Integer}/{unknown}");
    EXPECT_TRUE(x.warned("unbound-path-variable"));
    EXPECT_EQ(x.endpoints[1].path.render(), "/b/{Long}");
}

TEST(Endpoints, OrphanControllerWarning) {
    const auto x = run(R"(
class NotMarked {
    @GetMapping("/x")
    public void x() {}
}
)");
    EXPECT_EQ(x.endpoints.size(), 1u);
    EXPECT_TRUE(x.warned("orphanController"));
}

TEST(Calls, ConcatenationConstantsAndHoles) {
    const auto x = run(R"(
@Service
public class Client {
    private static final String BASE = "http://ms-users";
    private final String prefix = BASE + "/api/users/";
    @Autowired private RestTemplate restTemplate;
    public void go(Integer id, String name) {
        User u = restTemplate.getForObject(prefix + id, User.class);
        String url = BASE + "/api/users/" + name + "/detail";
        restTemplate.put(url, u);
        restTemplate.exchange(BASE + "/api/x", HttpMethod.DELETE, null, Void.class);
        restTemplate.postForEntity(someUrl(), u, User.class);
    }
}
)");
    ASSERT_EQ(x.calls.size(), 4u);
    EXPECT_EQ(url_text(x.calls[0]), "http://ms-users/api/users/<Integer>");
    EXPECT_EQ(x.calls[0].method.str(), "GET");
    EXPECT_EQ(x.calls[0].expectedReturnType, "User");
    EXPECT_EQ(url_text(x.calls[1]), "http://ms-users/api/users/<String>/detail");
    EXPECT_EQ(x.calls[1].method.str(), "PUT");
    EXPECT_EQ(x.calls[2].method.str(), "DELETE");
    EXPECT_TRUE(x.calls[3].unresolvable);
    EXPECT_TRUE(x.warned("unresolvable-call"));
}

TEST(Calls, ReassignedLocalIsNotConstant) {
    const auto x = run(R"(
class Client {
    RestTemplate rest;
    void go(boolean f) {
        String url = "http://a/x";
        if (f) url = "http://a/y";
        rest.getForObject(url, String.class);
    }
}
)");
    ASSERT_EQ(x.calls.size(), 1u);
    EXPECT_TRUE(x.calls[0].unresolvable);
}

TEST(Calls, ExchangeWithUnreadableMethod) {
    const auto x = run(R"(
class Client {
    RestTemplate rest;
    void go(HttpMethod m) { rest.exchange("http://a/x", m, null, String.class); }
}
)");
    ASSERT_EQ(x.calls.size(), 1u);
    EXPECT_TRUE(x.calls[0].unresolvable);
}

TEST(Calls, IgnoresNonClientReceivers) {
    const auto x = run(R"(
class Client {
    Map<String, String> cache;
    void go() { cache.put("http://a/x", "v"); list.delete("/x"); }
}
)");
    EXPECT_TRUE(x.calls.empty());
}

TEST(Entities, KindsAndExclusions) {
    const auto x = run(R"(
@Entity class Order { Long id; }
@Data class UserDto { String name; }
class PaymentResponse { int code; }
@RestController class OrderController { }
@Service class OrderService { }
class Plain { int x; }
interface Repo { }
enum Status { A, B }
)");
    std::map<std::string, EntityKind> got;
    for (const auto& e : x.entities) got[e.name] = e.kind;
    EXPECT_EQ(got, (std::map<std::string, EntityKind>{{"Order", EntityKind::Persistent},
                                                       {"UserDto", EntityKind::Dto},
                                                       {"PaymentResponse", EntityKind::Dto}}));
}
