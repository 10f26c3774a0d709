#include <doctest.h>

#include "fraccover/hypergraph.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace fraccover;

namespace {

const char* kH4File = R"(
% the n=4 member of the long-edge family
e0(v1,v2,v3,v4).
e1(v0,v1).
e2(v0,v2).
e3(v0,v3).
e4(v0,v4).
)";

}  // namespace

TEST_CASE("parse: smallest valid file") {
    Hypergraph h = parse_hypergraph("e0(v1,v2).");
    CHECK(h.vertex_count() == 2);
    CHECK(h.edge_count() == 1);
    CHECK(h.vertex_name(0) == "v1");
    CHECK(h.edge(0).name == "e0");
}

TEST_CASE("parse: H_4 file") {
    Hypergraph h = parse_hypergraph(kH4File);
    CHECK(h.vertex_count() == 5);
    CHECK(h.edge_count() == 5);
    // Vertices in first-occurrence order, edges in file order.
    CHECK(h.vertex_name(0) == "v1");
    CHECK(h.vertex_name(4) == "v0");
    CHECK(h.edge(0).vertices == IdSet{0, 1, 2, 3});
}

TEST_CASE("parse: errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_hypergraph("e0()."), "line 1: empty edge 'e0'", ParseError);
    CHECK_THROWS_AS(parse_hypergraph("e0(a).\ne0(b)."), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("e0(a,b)"), ParseError);   // missing '.'
    CHECK_THROWS_AS(parse_hypergraph("e0(a,,b)."), ParseError); // empty token
    CHECK_THROWS_AS(parse_hypergraph("(a,b)."), ParseError);    // missing name
    try {
        parse_hypergraph("e0(a).\n\nbroken");
    } catch (const ParseError& err) {
        CHECK(err.line() == 3);
    }
}

TEST_CASE("parse: comments, blank lines, duplicate members") {
    Hypergraph h = parse_hypergraph("# header\n\ne0( a , b ). % trailing\ne1(b,b,c).\n");
    CHECK(h.edge_count() == 2);
    CHECK(h.edge(1).vertices.size() == 2);  // duplicate member collapsed
}

TEST_CASE("format round-trips through parse") {
    Hypergraph h = parse_hypergraph(kH4File);
    CHECK(parse_hypergraph(format_hypergraph(h)) == h);
}

TEST_CASE("reduce: same-type vertices merge into the first") {
    Hypergraph h = parse_hypergraph("e0(v1,v2).");
    auto [r, cls] = reduce(h);
    CHECK(r.vertex_count() == 1);
    CHECK(r.vertex_name(0) == "v1");
    CHECK(cls.at("v2") == "v1");
    CHECK(cls.at("v1") == "v1");
}

TEST_CASE("reduce: H_4 is already reduced") {
    Hypergraph h = parse_hypergraph(kH4File);
    // Oracle: all incident-edge sets of H_4 are pairwise distinct.
    std::set<IdSet> types;
    for (int v = 0; v < h.vertex_count(); ++v) types.insert(h.edges_containing(v));
    REQUIRE(types.size() == static_cast<std::size_t>(h.vertex_count()));
    auto [r, cls] = reduce(h);
    CHECK(r == h);
    for (const auto& [from, to] : cls) CHECK(from == to);
}

TEST_CASE("reduce is idempotent on random hypergraphs") {
    testgen::Rng rng(101);
    for (int i = 0; i < 50; ++i) {
        Hypergraph h = testgen::random_hypergraph(rng, 8, 8, 5);
        auto [r1, cls1] = reduce(h);
        auto [r2, cls2] = reduce(r1);
        CHECK(r1 == r2);
        for (const auto& [from, to] : cls2) CHECK(from == to);
    }
}

TEST_CASE("dualize: two-edge example") {
    Hypergraph h = parse_hypergraph("e1(a,b).\ne2(b,c).");
    DualMapping m = dualize(h);
    CHECK(m.dual.vertex_count() == 2);
    CHECK(m.dual.edge_count() == 3);
    CHECK(m.dual.edge(m.dual.edge_id("d_a")).vertices == IdSet{m.dual.vertex_id("e1")});
    CHECK(m.dual.edge(m.dual.edge_id("d_b")).vertices ==
          IdSet{m.dual.vertex_id("e1"), m.dual.vertex_id("e2")});
    CHECK(m.dual.edge(m.dual.edge_id("d_c")).vertices == IdSet{m.dual.vertex_id("e2")});
    CHECK(m.edge_of_vertex.at("b") == "d_b");
    CHECK(m.vertex_of_edge.at("e1") == "e1");
}

TEST_CASE("dualize: H_4") {
    Hypergraph h = parse_hypergraph(kH4File);
    DualMapping m = dualize(h);
    CHECK(m.dual.vertex_count() == 5);
    CHECK(m.dual.edge_count() == 5);
    IdSet d_v0 = m.dual.edge(m.dual.edge_id("d_v0")).vertices;
    CHECK(m.dual.vertex_names_of(d_v0) ==
          std::vector<std::string>{"e1", "e2", "e3", "e4"});
}

TEST_CASE("dualize rejects unreduced input") {
    Hypergraph h = parse_hypergraph("e0(v1,v2).");
    CHECK_THROWS_AS(dualize(h), NotReducedError);
}

namespace {

// Relabels the double dual through the two mappings and compares with h.
void check_double_dual(const Hypergraph& h) {
    DualMapping m1 = dualize(h);
    DualMapping m2 = dualize(m1.dual);
    std::map<std::string, std::string> vertex_back, edge_back;
    for (const auto& [v, fv] : m1.edge_of_vertex) vertex_back[fv] = v;
    for (const auto& [e, fe] : m2.edge_of_vertex) edge_back[fe] = e;

    const Hypergraph& dd = m2.dual;
    REQUIRE(dd.vertex_count() == h.vertex_count());
    REQUIRE(dd.edge_count() == h.edge_count());
    std::vector<std::string> vertex_order;
    for (const auto& name : dd.vertex_names()) vertex_order.push_back(vertex_back.at(name));
    std::vector<std::pair<std::string, std::vector<std::string>>> edges;
    for (const auto& e : dd.edges()) {
        std::vector<std::string> members;
        for (int v : e.vertices) members.push_back(vertex_back.at(dd.vertex_name(v)));
        edges.emplace_back(edge_back.at(e.name), members);
    }
    CHECK(Hypergraph::with_vertices(vertex_order, edges) == h);
}

}  // namespace

TEST_CASE("double dual is the identity up to the composed relabeling") {
    check_double_dual(parse_hypergraph(kH4File));
    check_double_dual(testgen::make_triangle());
    testgen::Rng rng(202);
    for (int i = 0; i < 40; ++i) {
        Hypergraph h = testgen::random_hypergraph(rng, 7, 7, 4, /*distinct_edge_sets=*/true);
        auto [r, cls] = reduce(h);
        check_double_dual(r);
    }
}

TEST_CASE("multi_intersection: H_4 pairs share at most one vertex") {
    Hypergraph h = parse_hypergraph(kH4File);
    IntersectionProfile p = multi_intersection(h, 2);
    CHECK(p.d == 1);
    CHECK(p.witness == std::vector<std::string>{"e0", "e1"});
    // Witness recomputation yields exactly d vertices.
    IdSet inter = set_intersection(h.edge(h.edge_id(p.witness[0])).vertices,
                                   h.edge(h.edge_id(p.witness[1])).vertices);
    CHECK(static_cast<int>(inter.size()) == p.d);
}

TEST_CASE("multi_intersection: c=1 gives the rank") {
    testgen::Rng rng(303);
    for (int i = 0; i < 30; ++i) {
        Hypergraph h = testgen::random_hypergraph(rng, 8, 6, 5);
        CHECK(multi_intersection(h, 1).d == h.rank());
    }
}

TEST_CASE("multi_intersection: duplicate edge sets under distinct names") {
    Hypergraph h = parse_hypergraph("e0(a,b,c).\ne1(a,b,c).");
    IntersectionProfile p = multi_intersection(h, 2);
    CHECK(p.d == 3);
    CHECK(p.witness == std::vector<std::string>{"e0", "e1"});
}

TEST_CASE("multi_intersection: all-empty intersections give d = 0") {
    Hypergraph h = parse_hypergraph("e0(a).\ne1(b).\ne2(c).");
    IntersectionProfile p = multi_intersection(h, 2);
    CHECK(p.d == 0);
    IdSet inter = set_intersection(h.edge(h.edge_id(p.witness[0])).vertices,
                                   h.edge(h.edge_id(p.witness[1])).vertices);
    CHECK(inter.empty());
}

TEST_CASE("multi_intersection: c out of range") {
    Hypergraph h = parse_hypergraph("e0(a).");
    CHECK_THROWS_AS(multi_intersection(h, 0), std::invalid_argument);
    CHECK_THROWS_AS(multi_intersection(h, 2), std::invalid_argument);
}

TEST_CASE("multi_intersection agrees with the unpruned recomputation") {
    testgen::Rng rng(404);
    for (int i = 0; i < 60; ++i) {
        Hypergraph h = testgen::random_hypergraph(rng, 9, 12, 5);
        for (int c = 1; c <= std::min(4, h.edge_count()); ++c)
            CHECK(multi_intersection(h, c).d == oracles::naive_multi_intersection(h, c));
    }
}

TEST_CASE("multi_intersection: d is non-increasing in c") {
    testgen::Rng rng(505);
    for (int i = 0; i < 30; ++i) {
        Hypergraph h = testgen::random_hypergraph(rng, 8, 8, 5);
        int prev = multi_intersection(h, 1).d;
        for (int c = 2; c <= h.edge_count(); ++c) {
            int cur = multi_intersection(h, c).d;
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("the dual of a (c,d)-hypergraph is a (d+1,c)-hypergraph") {
    testgen::Rng rng(606);
    for (int i = 0; i < 30; ++i) {
        Hypergraph raw = testgen::random_hypergraph(rng, 7, 7, 4, true);
        auto [h, cls] = reduce(raw);
        DualMapping m = dualize(h);
        for (int c = 2; c <= std::min(3, h.edge_count()); ++c) {
            int d = multi_intersection(h, c).d;
            if (d + 1 <= m.dual.edge_count()) CHECK(is_cd(m.dual, d + 1, c).holds);
        }
    }
}

TEST_CASE("is_cd: H_4 checks") {
    Hypergraph h = parse_hypergraph(kH4File);
    CHECK(is_cd(h, 2, 1).holds);
    auto bad = is_cd(h, 2, 0);
    CHECK(!bad.holds);
    CHECK(bad.witness == std::vector<std::string>{"e0", "e1"});
    CHECK(is_cd(h, 1, h.rank()).holds);
}
