#include <doctest.h>

#include "opvr/generators.hpp"
#include "opvr/surgery.hpp"
#include "support/fixtures.hpp"

using namespace opvr;

namespace {
SurgeryResult run_pipeline(const OnePlaneGraph& g) {
    auto cs = detect_all(g);
    auto F = build_F(g, cs);
    auto a = compute_assignment(g, cs, F);
    return apply_all(g, cs, F, a);
}
}  // namespace

TEST_CASE("fig 2a single B-configuration is destroyed by one step") {
    auto g = OnePlaneGraph::bake(fixtures::fig2a());
    auto r = run_pipeline(g);
    CHECK(r.steps.size() == 1);
    CHECK(detect_all(r.graph).empty());
    // s subdivides the fragment between the crossing and the matched pole
    NodeId s = r.graph.node_id(r.steps[0].new_vertex);
    REQUIRE(s != kNone);
    CHECK(r.graph.degree(s) == 4);
}

TEST_CASE("plane graph with empty assignment is unchanged") {
    auto g = OnePlaneGraph::bake(fixtures::k4_plane());
    auto r = run_pipeline(g);
    CHECK(r.steps.empty());
    CHECK(serialize_graph(r.graph) == serialize_graph(g));
}

TEST_CASE("W fixture surgery removes both copies") {
    auto g = OnePlaneGraph::bake(fixtures::w_fixture());
    auto r = run_pipeline(g);
    CHECK(r.steps.size() == 2);
    CHECK(detect_all(r.graph).empty());
    CHECK(is_three_connected(r.graph));
}

TEST_CASE("W with dependent B resolves both crossings") {
    auto g = OnePlaneGraph::bake(fixtures::w_fixture_with_pole_edge());
    auto r = run_pipeline(g);
    CHECK(r.steps.size() == 2);
    CHECK(detect_all(r.graph).empty());
}

TEST_CASE("fig1a T-configuration surgery, both crossing choices work") {
    auto g = fig1a();
    auto cs = detect_all(g);
    auto F = build_F(g, cs);
    auto a = compute_assignment(g, cs, F);
    auto r = apply_all(g, cs, F, a);
    CHECK(detect_all(r.graph).empty());
    CHECK(is_three_connected(r.graph));

    // the non-canonical qualifying crossing also succeeds
    NodeId pole = a.pole_of[0];
    auto canonical = plan_step(g, cs, F.entries[0], pole);
    std::vector<std::string> quals;
    for (NodeId k : cs[size_t(F.entries[0].config)].crossings) {
        try {
            auto st = plan_step(g, cs, F.entries[0], pole, g.node_name(k));
            quals.push_back(st.crossing);
        } catch (const ValidationError&) {
        }
    }
    CHECK(quals.size() == 2);
    CHECK(canonical.crossing == std::min(quals[0], quals[1]));
}

TEST_CASE("G(9) full surgery") {
    auto lb = lower_bound_graph(9);
    auto r = run_pipeline(lb.graph);
    CHECK(r.steps.size() == 28);
    CHECK(detect_all(r.graph).empty());
    CHECK(is_three_connected(r.graph));
    CHECK(r.max_subdivision_neighbors <= 5);
    // subdivision vertices end with degree exactly 4
    for (const auto& s : r.steps) CHECK(r.graph.degree(r.graph.node_id(s.new_vertex)) == 4);
    // surgery never removes vertices and never adds crossings
    CHECK(r.graph.real_vertex_count() == lb.graph.real_vertex_count() + 28);
    CHECK(r.graph.dummy_count() == lb.graph.dummy_count());
    CHECK(steps_log_json(r).size() > 0);
}

TEST_CASE("corpus instance surgery") {
    auto inst = kite_instance(14, 5, 1, 2);
    auto r = run_pipeline(inst.graph);
    CHECK(detect_all(r.graph).empty());
    CHECK(is_three_connected(r.graph));
}
