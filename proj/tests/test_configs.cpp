#include <doctest.h>

#include "opvr/configs.hpp"
#include "support/fixtures.hpp"

using namespace opvr;

TEST_CASE("plane graphs have no configurations") {
    CHECK(detect_all(OnePlaneGraph::bake(fixtures::plane_triangle())).empty());
    CHECK(detect_all(OnePlaneGraph::bake(fixtures::k4_plane())).empty());
}

TEST_CASE("kite crossings create no configurations") {
    CHECK(detect_all(OnePlaneGraph::bake(fixtures::k4_kite())).empty());
}

TEST_CASE("fig 2a is exactly one B-configuration") {
    auto g = OnePlaneGraph::bake(fixtures::fig2a());
    auto cs = detect_all(g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ForbiddenConfig::Kind::B);
    CHECK(cs[0].key == "B(u,z)@{p}");
    CHECK(cs[0].witnesses.size() == 2);
    // re-running region_split on the boundary reproduces the interior
    auto rs = region_split(g, cs[0].boundary);
    CHECK(rs.inside == cs[0].interior);
}

TEST_CASE("w fixture holds exactly one W and nothing else") {
    auto g = OnePlaneGraph::bake(fixtures::w_fixture());
    auto cs = detect_all(g);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].kind == ForbiddenConfig::Kind::W);
    CHECK(cs[0].key == "W(u,z)@{p,q}");
    CHECK(cs[0].witnesses.size() == 4);
    auto rep = check_properties(g, cs);
    CHECK(rep.all_hold());
}

TEST_CASE("pole edge routed outside adds exactly one dependent B") {
    auto g = OnePlaneGraph::bake(fixtures::w_fixture_with_pole_edge());
    auto cs = detect_all(g);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].kind == ForbiddenConfig::Kind::B);
    CHECK(cs[0].key == "B(u,z)@{p}");
    CHECK(cs[1].kind == ForbiddenConfig::Kind::W);
    CHECK(dependent(cs[0], cs[1]));
    CHECK(check_properties(g, cs).all_hold());
}

TEST_CASE("dependence is shared crossings; a config depends on itself") {
    auto g = OnePlaneGraph::bake(fixtures::w_fixture_with_pole_edge());
    auto cs = detect_all(g);
    REQUIRE(cs.size() == 2);
    CHECK(dependent(cs[0], cs[0]));
    CHECK(dependent(cs[1], cs[1]));
}

TEST_CASE("serial and parallel detection agree") {
    for (auto make : {fixtures::fig2a, fixtures::k4_kite, fixtures::w_fixture,
                      fixtures::w_fixture_with_pole_edge}) {
        auto g = OnePlaneGraph::bake(make());
        auto a = detect_all(g);
        auto b = detect_all_serial(g);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].key == b[i].key);
            CHECK(a[i].interior == b[i].interior);
        }
    }
}

TEST_CASE("config report is stable json") {
    auto g = OnePlaneGraph::bake(fixtures::fig2a());
    auto cs = detect_all(g);
    auto s1 = config_report_json(g, cs);
    auto s2 = config_report_json(g, detect_all(g));
    CHECK(s1 == s2);
    CHECK(s1.find("\"B\"") != std::string::npos);
}
