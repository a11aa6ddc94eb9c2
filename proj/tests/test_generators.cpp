#include <doctest.h>

#include "opvr/configs.hpp"
#include "opvr/generators.hpp"

using namespace opvr;

TEST_CASE("nested triangles basics") {
    auto s1 = nested_triangles(1);
    CHECK(s1.graph.real_vertex_count() == 3);
    CHECK(s1.t_faces.size() == 1);

    auto s2 = nested_triangles(2);
    CHECK(s2.graph.real_vertex_count() == 6);
    CHECK(s2.graph.edge_count() == 12);
    CHECK(s2.t_faces.size() == 4);

    auto s3 = nested_triangles(3);
    CHECK(s3.graph.real_vertex_count() == 9);
    CHECK(s3.graph.edge_count() == 21);
    CHECK(s3.t_faces.size() == 7);
    CHECK(is_three_connected(s3.graph));
    CHECK(detect_all(s3.graph).empty());
    // maximal planar: F = E - V + 2
    CHECK(s3.graph.face_count() == 21 - 9 + 2);

    CHECK_THROWS_AS(nested_triangles(0), ValidationError);
}

TEST_CASE("fig 1a holds exactly one T-configuration") {
    auto g = fig1a();
    auto cs = detect_all(g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ForbiddenConfig::Kind::T);
    CHECK(cs[0].poles == std::vector<NodeId>{g.node_id("u"), g.node_id("v"), g.node_id("w")});
    CHECK(cs[0].witnesses.size() == 6);
    auto poles = pole_set(cs);
    CHECK_FALSE(is_separating_t(g, cs[0], poles));
    CHECK(is_three_connected(g));
}

TEST_CASE("nested separating fixture") {
    auto g = nested_separating_fixture();
    auto cs = detect_all(g);
    REQUIRE(cs.size() == 2);
    auto poles = pole_set(cs);
    int t_at = cs[0].kind == ForbiddenConfig::Kind::T ? 0 : 1;
    CHECK(cs[size_t(t_at)].kind == ForbiddenConfig::Kind::T);
    CHECK(cs[size_t(1 - t_at)].kind == ForbiddenConfig::Kind::B);
    CHECK(is_separating_t(g, cs[size_t(t_at)], poles));
    CHECK(has_separating_t(g, cs));
}

TEST_CASE("lower bound graph G(9)") {
    auto lb = lower_bound_graph(9);
    auto cs = detect_all(lb.graph);
    int b = 0, t = 0, w = 0;
    for (const auto& f : cs) {
        if (f.kind == ForbiddenConfig::Kind::B) ++b;
        if (f.kind == ForbiddenConfig::Kind::T) ++t;
        if (f.kind == ForbiddenConfig::Kind::W) ++w;
    }
    CHECK(b == 21);
    CHECK(t == 7);
    CHECK(w == 0);
    CHECK(cs.size() == 28);
    CHECK(is_three_connected(lb.graph));
    CHECK_FALSE(has_separating_t(lb.graph, cs));
    CHECK(check_properties(lb.graph, cs).all_hold());
}

TEST_CASE("lower bound graph relaxed guard np=6") {
    auto lb = lower_bound_graph(6);
    CHECK_FALSE(lb.theorem2_applies);
    auto cs = detect_all(lb.graph);
    CHECK(cs.size() == 4 * 6 - 8);
    CHECK_THROWS_AS(lower_bound_graph(7), ValidationError);
    CHECK_THROWS_AS(lower_bound_graph(3), ValidationError);
}

TEST_CASE("kite instances") {
    auto plain = kite_instance(4, 7, 0, 0);
    CHECK(plain.graph.real_vertex_count() == 4);
    CHECK(detect_all(plain.graph).empty());

    auto kites = kite_instance(16, 11, 3, 0);
    CHECK(kites.kites == 3);
    CHECK(detect_all(kites.graph).empty());
    CHECK(is_three_connected(kites.graph));

    auto planted = kite_instance(16, 13, 0, 1);
    REQUIRE(planted.planted_b == 1);
    auto cs = detect_all(planted.graph);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ForbiddenConfig::Kind::B);
    CHECK(is_three_connected(planted.graph));
}

TEST_CASE("kite corpus is deterministic by seed") {
    auto a = kite_corpus(12, 3);
    auto b = kite_corpus(12, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i)
        CHECK(serialize_graph(a[i].graph) == serialize_graph(b[i].graph));
}

TEST_CASE("b star fixture plants five B-configurations on one pole") {
    auto g = b_star_fixture(5);
    auto cs = detect_all(g);
    REQUIRE(cs.size() == 5);
    NodeId u = g.node_id("u");
    for (const auto& f : cs) {
        CHECK(f.kind == ForbiddenConfig::Kind::B);
        CHECK(std::binary_search(f.poles.begin(), f.poles.end(), u));
    }
}
