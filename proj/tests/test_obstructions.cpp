#include <numeric>

#include "doctest.h"
#include "oracle.hpp"
#include "zap/errors.hpp"
#include "zap/families.hpp"
#include "zap/obstructions.hpp"

using namespace zap;

TEST_CASE("mpf per edge") {
    CHECK(mpf_edge(chain_planes(3), 0) == 1);
    CHECK(mpf_edge(star_obstruction(), 0) == -1);
    for (EdgeId id = 0; id < 5; ++id) CHECK(mpf_edge(cycle_planes(5, true), id) == 1);
    CHECK_THROWS_AS(mpf_edge(chain_planes(3), 4), ReferenceError);

    auto partial = quadric_chain(3);
    partial.edges[0].normal_deg_u.reset();
    CHECK_THROWS_AS(mpf_edge(partial, 0), MissingWeightError);
    CHECK(mpf_edge(partial, 1) == 0);
}

TEST_CASE("mpf global") {
    CHECK(*mpf_global(fork_planes(4, false)) == 0);
    CHECK(*mpf_global(cycle_planes(9, false)) == 0);
    CHECK(*mpf_global(veronese_mt(3)) == 0);
    CHECK_FALSE(mpf_global(quadric_chain(3)).has_value());
}

TEST_CASE("property: global mpf is the sum over edges") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const auto g = random_planar_config(seed, 2 + static_cast<int>(seed % 11));
        std::int64_t sum = 0;
        for (EdgeId id = 0; id < g.edge_count(); ++id) {
            const auto m = mpf_edge(g, id);
            CHECK(m == oracle::planar_mpf_edge(g, id));
            sum += m;
        }
        CHECK(*mpf_global(g) == sum);
    }
}

TEST_CASE("triple point specialization") {
    auto q = two_quadrics_and_plane();
    REQUIRE(tpf_predicted_double_points(q, 1).has_value());
    CHECK(*tpf_predicted_double_points(q, 1) == 2 + 4 + 4);
    q.edges[1].normal_deg_u = 7;
    q.edges[1].normal_deg_v = 3;
    CHECK(*tpf_predicted_double_points(q, 1) == 7 + 3 + 4);
    CHECK_FALSE(tpf_predicted_double_points(chain_planes(3), 0).has_value());

    // tetrahedron: four planes, every point an E_3
    IncidenceStructure tet;
    for (const char* l : {"a", "b", "c", "d"}) tet.add_point(l);
    tet.add_plane({0, 1, 2});
    tet.add_plane({0, 1, 3});
    tet.add_plane({0, 2, 3});
    tet.add_plane({1, 2, 3});
    const auto g = derive_graph(tet);
    CHECK(counts(g).f_n(3) == 4);
    for (EdgeId id = 0; id < g.edge_count(); ++id) CHECK(*tpf_predicted_double_points(g, id) == 4);

    // octahedron: points are E_4, outside the specialization
    IncidenceStructure oct;
    for (const char* l : {"x", "X", "y", "Y", "z", "Z"}) oct.add_point(l);
    for (PointId a : {0, 1})
        for (PointId b : {2, 3})
            for (PointId c : {4, 5}) oct.add_plane({a, b, c});
    const auto o = derive_graph(oct);
    CHECK(counts(o).f_n(4) == 6);
    CHECK_FALSE(tpf_predicted_double_points(o, 0).has_value());
}

TEST_CASE("Zappa bound") {
    const auto fork = fork_planes(4, false);
    const auto z = zappa_bound(fork, full_report(fork));
    CHECK(z.applicable);
    CHECK(z.slack_min == 0);
    CHECK(z.slack_max == 0);
    CHECK(z.equality_class == EqualityClass::veronese_S4);

    const auto cyc = cycle_planes(9, false);
    const auto zc = zappa_bound(cyc, full_report(cyc));
    CHECK(zc.slack_max == 0);
    CHECK(zc.equality_class == EqualityClass::elliptic_cycle);

    const auto chain = chain_planes(6);
    const auto zch = zappa_bound(chain, full_report(chain));
    CHECK(zch.bound == 9);
    CHECK(zch.slack_min == 1);
    CHECK_FALSE(zch.equality_class.has_value());

    // E_6 points are outside the hypothesis
    CHECK_FALSE(zappa_bound(veronese_mt(3), full_report(veronese_mt(3))).applicable);
    // a 4-cycle of planes is not an elliptic normal scroll
    const auto c4 = cycle_planes(4, false);
    const auto z4 = zappa_bound(c4, full_report(c4));
    CHECK(z4.slack_max == 0);
    CHECK(z4.equality_class == EqualityClass::other);
    CHECK_FALSE(z4.warning.empty());
}

TEST_CASE("Miyaoka-Yau bound") {
    for (int d = 2; d <= 6; ++d) {
        const auto g = veronese_mt(d);
        const auto m = miyaoka_yau(g, full_report(g));
        CHECK(m.applicable);
        CHECK(m.bound == 9);
        CHECK(m.satisfied_min);
        CHECK(m.satisfied_max);
    }
    const auto p = pillow(2, 2).graph;
    CHECK(miyaoka_yau(p, full_report(p)).satisfied_max);
    const auto e7 = cycle_planes(7, true);
    CHECK_FALSE(miyaoka_yau(e7, full_report(e7)).applicable);
}

TEST_CASE("K3 profile") {
    const auto p = k3_profile(pillow(2, 2).graph);
    CHECK(p.passed());
    CHECK(p.g == 9);
    CHECK(p.face_sum == 12);

    CHECK_FALSE(k3_profile(fork_planes(4, false)).passed());

    // g = 12: fine with an E_6 face, over the cap without one
    const auto over = k3_profile(K3Counts{22, 33, {{5, 12}, {6, 1}}, true});
    CHECK(over.g == 12);
    CHECK(over.face_sum_ok);
    CHECK_FALSE(over.cap_applicable);

    const auto capped = k3_profile(K3Counts{22, 33, {{4, 1}, {5, 10}, {3, 2}}, true});
    CHECK(capped.g == 12);
    CHECK(capped.cap_applicable);
    CHECK_FALSE(capped.cap_ok);
    CHECK_FALSE(capped.passed());
}

TEST_CASE("obstruction reports") {
    const auto star = check_obstructions(star_obstruction());
    CHECK(star.obstructed());
    CHECK(star.per_edge[0].violated);
    CHECK(*star.per_edge[0].mpf_upper_bound == -1);
    for (std::size_t i = 1; i < star.per_edge.size(); ++i) CHECK_FALSE(star.per_edge[i].violated);

    // four lines pairwise meeting in the center plane
    const auto fan = check_obstructions(fork_planes(5, false));
    CHECK(fan.obstructed());
    CHECK(*fan.per_edge[0].mpf_upper_bound == -1);

    const auto ns = check_obstructions(nonsmooth_example());
    CHECK_FALSE(ns.obstructed());

    auto partial = quadric_chain(3);
    partial.edges[0].normal_deg_v.reset();
    const auto r = check_obstructions(partial);
    CHECK_FALSE(r.per_edge[0].mpf_upper_bound.has_value());
    CHECK_FALSE(r.per_edge[0].reason.empty());
    CHECK_FALSE(r.obstructed());
}

TEST_CASE("property: verdicts survive relabeling") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto g = random_planar_config(seed, 3 + static_cast<int>(seed % 9));
        std::vector<std::size_t> vp(g.vertex_count()), ep(g.edge_count());
        std::iota(vp.rbegin(), vp.rend(), 0);
        std::iota(ep.rbegin(), ep.rend(), 0);
        const auto h = relabel(g, vp, ep);
        const auto a = check_obstructions(g), b = check_obstructions(h);
        CHECK(a.obstructed() == b.obstructed());
        CHECK(a.global_mpf_upper == b.global_mpf_upper);
        CHECK(a.zappa.applicable == b.zappa.applicable);
        CHECK(a.zappa.slack_max == b.zappa.slack_max);
        CHECK(a.miyaoka_yau.satisfied_min == b.miyaoka_yau.satisfied_min);
        for (EdgeId id = 0; id < g.edge_count(); ++id)
            CHECK(a.per_edge[id].mpf_upper_bound == b.per_edge[ep[id]].mpf_upper_bound);
    }
}
