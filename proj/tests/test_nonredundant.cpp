#include <doctest.h>

#include "opvr/generators.hpp"
#include "opvr/nonredundant.hpp"
#include "support/fixtures.hpp"

using namespace opvr;

TEST_CASE("build_F on G(9) has the Lemma 3 equality shape") {
    auto lb = lower_bound_graph(9);
    auto cs = detect_all(lb.graph);
    auto F = build_F(lb.graph, cs);
    CHECK(F.beta == 21);
    CHECK(F.tau == 7);
    CHECK(F.omega == 0);
    CHECK(F.entries.size() == 28);
    CHECK(F.poles.size() == 9);

    auto aux = build_aux_graph(lb.graph, cs, F);
    CHECK(aux.n_a == 9);
    CHECK(aux.m_a == 21 + 3 * 7);
    CHECK(aux.m_a == 6 * aux.n_a - 12);
    CHECK(aux.s == 0);
    CHECK(aux.max_parallel <= 2);
    CHECK(aux.planar_ok);

    auto rep = check_lemma3(F, aux, has_separating_t(lb.graph, cs));
    CHECK(rep.applicable);
    CHECK(rep.bound_holds);
    CHECK(rep.equality);
    CHECK(rep.equality_characterization_ok);
}

TEST_CASE("W multiplicity and tags") {
    SUBCASE("no dependent B gives two copies on distinct poles") {
        auto g = OnePlaneGraph::bake(fixtures::w_fixture());
        auto cs = detect_all(g);
        auto F = build_F(g, cs);
        CHECK(F.omega == 2);
        CHECK(F.entries.size() == 2);
        CHECK(F.w_dependent_b == 0);

        auto a = compute_assignment(g, cs, F);
        CHECK(a.max_load <= 5);
        CHECK(a.pole_of[0] != a.pole_of[1]);

        auto aux = build_aux_graph(g, cs, F);
        // both copies draw both crossings; the duplicates count into s
        CHECK(aux.m_a == 2);
        CHECK(aux.s == 2);
        CHECK(aux.planar_ok);
    }
    SUBCASE("one dependent B gives one copy tagged with the other crossing") {
        auto g = OnePlaneGraph::bake(fixtures::w_fixture_with_pole_edge());
        auto cs = detect_all(g);
        auto F = build_F(g, cs);
        CHECK(F.beta == 1);
        CHECK(F.omega == 1);
        CHECK(F.w_dependent_b == 1);
        CHECK(F.entries.size() == 2);
        // the B covers crossing p; the copy must be tagged q
        NodeId q = g.node_id("q");
        bool found = false;
        for (const auto& e : F.entries)
            if (e.w_tag != kNone) {
                CHECK(e.w_tag == q);
                found = true;
            }
        CHECK(found);

        auto aux = build_aux_graph(g, cs, F);
        // the copy draws both crossing edges; the p edge coincides with the B's
        CHECK(aux.m_a == 2);
        CHECK(aux.s == 1);

        auto rep = check_lemma3(F, aux, false);
        CHECK(rep.degenerate);  // |P| = 2
    }
}

TEST_CASE("plain Hall check") {
    auto g = OnePlaneGraph::bake(fixtures::fig2a());
    auto cs = detect_all(g);
    auto F = build_F(g, cs);
    CHECK(hall_check_bruteforce(cs, F));
    CHECK(compute_assignment(g, cs, F).max_load == 1);

    auto g2 = OnePlaneGraph::bake(fixtures::k4_plane());
    auto cs2 = detect_all(g2);
    auto F2 = build_F(g2, cs2);
    CHECK(hall_check_bruteforce(cs2, F2));
}

TEST_CASE("hall check rejects adversarial overload") {
    // six entries on one pole cannot be 5-matched; validates the checker
    std::vector<ForbiddenConfig> cs(6);
    for (int i = 0; i < 6; ++i) {
        cs[size_t(i)].kind = ForbiddenConfig::Kind::B;
        cs[size_t(i)].poles = {0};
        cs[size_t(i)].key = "B#" + std::to_string(i);
    }
    NonRedundantSet F;
    for (int i = 0; i < 6; ++i) F.entries.push_back({i, kNone, cs[size_t(i)].key});
    F.poles = {0};
    CHECK_FALSE(hall_check_bruteforce(cs, F));
}

TEST_CASE("b star of five assigns within load bound") {
    auto g = b_star_fixture(5);
    auto cs = detect_all(g);
    REQUIRE(cs.size() == 5);
    auto F = build_F(g, cs);
    CHECK(F.beta == 5);
    auto a = compute_assignment(g, cs, F);
    CHECK(a.max_load <= 5);
    CHECK(hall_check_bruteforce(cs, F));

    auto aux = build_aux_graph(g, cs, F);
    CHECK(aux.m_a == 5);
    CHECK(aux.planar_ok);
}

TEST_CASE("flow matches brute force hall verdict on small instances") {
    for (int n : {8, 10, 12}) {
        for (std::uint64_t seed : {1ULL, 2ULL}) {
            auto inst = kite_instance(n, seed, 1, 2);
            auto cs = detect_all(inst.graph);
            auto F = build_F(inst.graph, cs);
            if (F.entries.size() > 20) continue;
            bool hall = hall_check_bruteforce(cs, F);
            bool flow_ok = true;
            try {
                compute_assignment(inst.graph, cs, F);
            } catch (const PropertyViolation&) {
                flow_ok = false;
            }
            CHECK(hall == flow_ok);
            CHECK(flow_ok);
        }
    }
}

TEST_CASE("assignment report json is deterministic") {
    auto lb = lower_bound_graph(6);
    auto cs = detect_all(lb.graph);
    auto F = build_F(lb.graph, cs);
    auto a = compute_assignment(lb.graph, cs, F);
    CHECK(assignment_report_json(lb.graph, F, a) == assignment_report_json(lb.graph, F, a));
    CHECK(a.max_load <= 5);
}
