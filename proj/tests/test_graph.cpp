#include <doctest.h>

#include <set>

#include "opvr/graph.hpp"
#include "opvr/regions.hpp"
#include "support/fixtures.hpp"

using namespace opvr;

TEST_CASE("plane triangle bakes with two faces") {
    auto g = OnePlaneGraph::bake(fixtures::plane_triangle());
    CHECK(g.real_vertex_count() == 3);
    CHECK(g.dummy_count() == 0);
    CHECK(g.face_count() == 2);
    for (FaceId f = 0; f < g.face_count(); ++f) CHECK(g.face(f).darts.size() == 3);
    CHECK(g.outer_face() != kNone);
}

TEST_CASE("fig 2a fixture has one dummy of degree 4") {
    auto g = OnePlaneGraph::bake(fixtures::fig2a());
    CHECK(g.dummy_count() == 1);
    NodeId p = g.node_id("p");
    REQUIRE(p != kNone);
    CHECK(g.is_dummy(p));
    CHECK(g.degree(p) == 4);
    // V - E + F = 2 on the planarization
    CHECK(g.node_count() - g.pedge_count() + g.face_count() == 2);
}

TEST_CASE("edge crossed twice is rejected") {
    auto m = fixtures::fig2a();
    m.vertices.push_back("t");
    m.edges.push_back({"zt", "z", "t"});
    m.crossings.push_back({"p2", "uv", "zt"});
    CHECK_THROWS_WITH_AS(OnePlaneGraph::bake(m), doctest::Contains("crossed twice"),
                         ValidationError);
}

TEST_CASE("dummy degree and alternation are validated") {
    auto m = fixtures::fig2a();
    // break alternation at p
    m.rotation["p"] = {DartRef{"uv", "u"}, DartRef{"uv", "v"}, DartRef{"wz", "w"},
                       DartRef{"wz", "z"}};
    CHECK_THROWS_WITH_AS(OnePlaneGraph::bake(m), doctest::Contains("alternate"), ValidationError);
}

TEST_CASE("non-planar rotation fails the Euler check") {
    auto m = fixtures::k4_plane();
    // swap two darts at d: rotation no longer corresponds to a plane embedding
    m.rotation["d"] = {DartRef{"da", "a"}, DartRef{"dc", "c"}, DartRef{"db", "b"}};
    CHECK_THROWS_WITH_AS(OnePlaneGraph::bake(m), doctest::Contains("not planar"), ValidationError);
}

TEST_CASE("parallel edges and self loops are rejected") {
    auto m = fixtures::plane_triangle();
    m.edges.push_back({"ab2", "a", "b"});
    CHECK_THROWS_AS(OnePlaneGraph::bake(m), ValidationError);
    auto m2 = fixtures::plane_triangle();
    m2.edges.push_back({"aa", "a", "a"});
    CHECK_THROWS_AS(OnePlaneGraph::bake(m2), ValidationError);
}

TEST_CASE("serialize / parse round trip is byte stable") {
    for (auto make : {fixtures::fig2a, fixtures::k4_kite, fixtures::w_fixture}) {
        auto g = OnePlaneGraph::bake(make());
        auto text = serialize_graph(g);
        auto g2 = parse_graph(text);
        CHECK(serialize_graph(g2) == text);
        CHECK(g2.face_count() == g.face_count());
        CHECK(g2.dummy_count() == g.dummy_count());
    }
}

TEST_CASE("three connectivity on small graphs") {
    CHECK(is_three_connected(OnePlaneGraph::bake(fixtures::k4_plane())));
    CHECK(is_three_connected(OnePlaneGraph::bake(fixtures::k4_kite())));
    CHECK(is_three_connected(OnePlaneGraph::bake(fixtures::w_fixture())));

    // K4 minus one edge has a degree-2 vertex
    auto m = fixtures::k4_plane();
    m.edges.erase(m.edges.begin());  // drop ab
    m.rotation["a"] = {DartRef{"da", "d"}, DartRef{"ca", "c"}};
    m.rotation["b"] = {DartRef{"bc", "c"}, DartRef{"db", "d"}};
    CHECK_FALSE(is_three_connected(OnePlaneGraph::bake(m)));

    // triangle: degenerate, complete -> true
    CHECK(is_three_connected(OnePlaneGraph::bake(fixtures::plane_triangle())));
}

TEST_CASE("serial and parallel three-connectivity agree") {
    for (auto make : {fixtures::k4_plane, fixtures::k4_kite, fixtures::w_fixture,
                      fixtures::w_fixture_with_pole_edge}) {
        auto g = OnePlaneGraph::bake(make());
        CHECK(is_three_connected(g) == is_three_connected_serial(g));
    }
}

TEST_CASE("region split on the outer triangle of K4") {
    auto g = OnePlaneGraph::bake(fixtures::k4_plane());
    // curve = the triangle a,b,c
    std::vector<DartId> curve;
    for (auto [e, from] : {std::pair{"ab", "a"}, {"bc", "b"}, {"ca", "c"}}) {
        EdgeId ei = g.edge_id(e);
        curve.push_back(g.dart_from(g.edge(ei).pedges[0], g.node_id(from)));
    }
    auto rs = region_split(g, curve);
    // inside = the three faces around d
    CHECK(rs.inside.size() == 3);
    CHECK(vertex_inside(g, g.node_id("d"), rs.inside));
    CHECK_FALSE(vertex_inside(g, g.node_id("a"), rs.inside));
}

TEST_CASE("region split rejects non simple walks") {
    auto g = OnePlaneGraph::bake(fixtures::k4_plane());
    EdgeId ab = g.edge_id("ab");
    DartId d1 = g.dart_from(g.edge(ab).pedges[0], g.node_id("a"));
    DartId d2 = g.dart(d1).twin;
    CHECK_THROWS_AS(region_split(g, std::vector<DartId>{d1, d2}), ValidationError);
}

TEST_CASE("k4 kite lens region u-p-z contains no vertex") {
    auto g = OnePlaneGraph::bake(fixtures::k4_kite());
    NodeId u = g.node_id("u"), z = g.node_id("z"), p = g.node_id("p");
    std::vector<DartId> curve;
    curve.push_back(g.dart_from(g.fragment_at(g.edge_id("uv"), u), u));
    curve.push_back(g.dart_from(g.fragment_at(g.edge_id("wz"), z), p));
    curve.push_back(g.dart_from(g.edge(g.edge_id("zu")).pedges[0], z));
    auto rs = region_split(g, curve);
    for (NodeId v = 0; v < g.real_vertex_count(); ++v)
        CHECK_FALSE(vertex_inside(g, v, rs.inside));
}

TEST_CASE("planarize view exposes planarization counts") {
    auto g = OnePlaneGraph::bake(fixtures::fig2a());
    auto pv = planarize_view(g);
    CHECK(pv.vertex_count() == 5);
    CHECK(pv.edge_count() == 5);
    CHECK(pv.face_count() == 2);
}
