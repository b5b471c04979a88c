#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracle.hpp"
#include "zap/errors.hpp"
#include "zap/families.hpp"
#include "zap/io.hpp"

using namespace zap;

namespace {

bool has_code(const ValidationReport& r, const std::string& code) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.code == code; });
}

// Deterministic permutation of 0..n-1.
std::vector<std::size_t> shuffled(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = n; i > 1; --i) {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        std::swap(p[i - 1], p[(seed >> 33) % i]);
    }
    return p;
}

}  // namespace

TEST_CASE("load: fork document") {
    const auto g = load_graph(R"({"mode":"planar","vertices":[{},{},{},{}],
        "edges":[{"u":0,"v":1},{"u":0,"v":2},{"u":0,"v":3}],
        "points":[{"kind":"R","edges":[0,1]},{"kind":"R","edges":[0,2]},{"kind":"R","edges":[1,2]}]})");
    const auto c = counts(g);
    CHECK(c.v == 4);
    CHECK(c.e == 3);
    CHECK(c.r_n(3) == 3);
    CHECK(c.tau() == 3);
    CHECK(validate(g).passed());
}

TEST_CASE("load: malformed documents") {
    CHECK_THROWS_AS(load_graph(R"({"vertices":[]})"), ParseError);
    CHECK_THROWS_AS(load_graph(R"({"vertices":[{},{},{},{},{}],"edges":[{"u":0,"v":99}]})"), ReferenceError);
    CHECK_THROWS_AS(load_graph(R"({"vertices":[{},{}],"edges":[{"u":0,"v":1}],"points":[{"kind":"R","edges":[4]}]})"),
                    ReferenceError);
    CHECK_THROWS_AS(load_graph(R"({"vertices":[{"id":0},{"id":0}]})"), ParseError);
    CHECK_THROWS_AS(load_graph(R"({"vertices":[{}],"colour":1})"), ParseError);
    CHECK_THROWS_AS(load_graph(R"({"vertices":[{"chi":1}]})"), ParseError);
    CHECK_THROWS_AS(load_graph(R"({"mode":"curved","vertices":[{}]})"), ParseError);
    CHECK_THROWS_AS(load_graph(R"({"vertices":[{}],"points":[{"kind":"Q","edges":[]}]})"), ParseError);
    try {
        load_graph("{\n\"vertices\": [{},\n{}\n,]}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
}

TEST_CASE("load: ids may reorder records") {
    const auto g = load_graph(R"({"vertices":[{"id":1},{"id":0},{"id":2}],
        "edges":[{"id":1,"u":1,"v":2},{"id":0,"u":0,"v":1}]})");
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges[0].u == 0);
    CHECK(g.edges[0].v == 1);
    CHECK(g.edges[1].u == 1);
}

TEST_CASE("infer_r3: nonsmooth example") {
    const auto bare = make_planar(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}, {{PointKind::R, {0, 1, 2}}});
    const auto full = infer_r3(bare);
    const auto c = counts(full);
    CHECK(c.r_n(3) == 2);
    CHECK(c.r_n(4) == 1);
    // both inferred points sit at c = vertex 2 and use the pendant edge
    for (std::size_t i = 1; i < full.points.size(); ++i) {
        const auto shape = analyze_point(full, full.points[i]);
        REQUIRE(shape.ok);
        CHECK(shape.angles.front().at == 2);
        CHECK(std::count(full.points[i].edges.begin(), full.points[i].edges.end(), 3) == 1);
    }
    CHECK(infer_r3(full) == full);
}

TEST_CASE("infer_r3: S4 on a valence-4 center") {
    const auto g = make_planar(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {{PointKind::S, {1, 2, 3}}});
    const auto full = infer_r3(g);
    CHECK(full.points.size() == 4);
    CHECK(counts(full).r_n(3) == 3);
    // the three pairs containing edge 0 are the ones filled in
    for (std::size_t i = 1; i < 4; ++i) CHECK(full.points[i].edges.front() == 0);
}

TEST_CASE("infer_r3: general mode adds nothing") {
    auto g = quadric_chain(3);
    CHECK(infer_r3(g) == g);
}

TEST_CASE("validate: Veronese 3 passes with identity 12 = 12") {
    const auto report = validate(veronese_mt(3));
    CHECK(report.passed());
    CHECK(report.connected);
    REQUIRE(report.pair_identity_lhs.has_value());
    CHECK(*report.pair_identity_lhs == 12);
    CHECK(*report.pair_identity_rhs == 12);
    CHECK(report.realizability == "unknown");
}

TEST_CASE("validate: structural violations") {
    // a 4-cycle with a chord at vertex 0; the triangle 0-1-2 covers (0: e0,e4)
    // and an angle cannot reuse it
    auto g = make_planar(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}},
                         {{PointKind::E, {0, 1, 4}}, {PointKind::R, {4, 0}}});
    CHECK(has_code(validate(g), "coverage"));

    auto open = make_planar(4, {{0, 1}, {1, 2}, {2, 3}}, {{PointKind::E, {0, 1, 2}}});
    CHECK(has_code(validate(open), "point_shape"));

    auto split = make_planar(4, {{0, 1}, {2, 3}});
    CHECK(has_code(validate(split), "disconnected"));

    auto parallel = make_planar(2, {{0, 1}, {0, 1}});
    CHECK(has_code(validate(parallel), "parallel_edges"));

    auto loop = make_planar(2, {{0, 1}});
    loop.edges.push_back({1, 1, 0, 1, 1, 1, 1, 1});
    CHECK(has_code(validate(loop), "loop"));

    auto small_s = make_planar(3, {{0, 1}, {0, 2}}, {{PointKind::S, {0, 1}}});
    CHECK(has_code(validate(small_s), "point_shape"));

    ZappaticGraph empty;
    CHECK_FALSE(validate(empty).passed());
}

TEST_CASE("validate: general mode accepts parallel faces") {
    const auto g = two_quadrics_and_plane();
    const auto r = validate(g);
    CHECK(r.passed());
    CHECK_FALSE(r.pair_identity_lhs.has_value());
}

TEST_CASE("counts") {
    const auto pillow_census = counts(pillow(2, 2).graph);
    CHECK(pillow_census.v == 16);
    CHECK(pillow_census.e == 24);
    CHECK(pillow_census.f_n(3) == 4);
    CHECK(pillow_census.f_n(6) == 6);
    CHECK(pillow_census.rho_total() == 0);
    CHECK(std::all_of(pillow_census.valence.begin(), pillow_census.valence.end(), [](auto w) { return w == 3; }));

    const auto single = counts(make_planar(2, {{0, 1}}));
    CHECK(single.v == 2);
    CHECK(single.e == 1);
    CHECK(single.tau() == 0);

    const auto fork = counts(fork_planes(4, false));
    CHECK(fork.r_n(3) == 3);
    CHECK(fork.tau() == 3);
    CHECK(fork.e_tilde == 3);

    const auto q = counts(two_quadrics_and_plane());
    CHECK(q.e_tilde == 3);
    CHECK(q.f_n(3) == 4);
}

TEST_CASE("edge_local_census") {
    CHECK(edge_local_census(chain_planes(3), 0).r_n(3) == 1);
    const auto star = edge_local_census(star_obstruction(), 0);
    CHECK(star.r_n(3) == 3);
    CHECK(star.s_n(4) == 0);
    CHECK(edge_local_census(star_obstruction(), 1).s_n(4) == 1);
    for (EdgeId id = 0; id < 5; ++id) CHECK(edge_local_census(cycle_planes(5, true), id).f_n(5) == 1);
    CHECK_THROWS_AS(edge_local_census(chain_planes(3), 7), ReferenceError);
}

TEST_CASE("property: pair identity on random configurations") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const auto g = random_planar_config(seed, 2 + static_cast<int>(seed % 11));
        const auto r = validate(g);
        REQUIRE(r.passed());
        const auto c = oracle::census(g);
        long long rhs = 0;
        for (auto [n, k] : c.f) rhs += n * k;
        for (auto [n, k] : c.r) rhs += (n - 2) * k;
        for (auto [n, k] : c.s) rhs += oracle::choose2(n - 1) * k;
        CHECK(c.pairs == rhs);
        CHECK(*r.pair_identity_lhs == c.pairs);
        CHECK(*r.pair_identity_rhs == rhs);
    }
}

TEST_CASE("property: relabeling preserves validity and counts") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto g = random_planar_config(seed, 3 + static_cast<int>(seed % 9));
        const auto h = relabel(g, shuffled(g.vertex_count(), seed), shuffled(g.edge_count(), seed + 99));
        CHECK(validate(h).passed());
        const auto a = counts(g), b = counts(h);
        CHECK(a.f == b.f);
        CHECK(a.r == b.r);
        CHECK(a.s == b.s);
        CHECK(a.e_tilde == b.e_tilde);
        auto wa = a.valence, wb = b.valence;
        std::sort(wa.begin(), wa.end());
        std::sort(wb.begin(), wb.end());
        CHECK(wa == wb);
    }
}

TEST_CASE("property: rotating or reversing a face keeps the verdict") {
    int faces_seen = 0;
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto g = random_planar_config(seed, 4 + static_cast<int>(seed % 8));
        for (auto& p : g.points) {
            if (p.kind != PointKind::E) continue;
            ++faces_seen;
            std::rotate(p.edges.begin(), p.edges.begin() + static_cast<long>(seed % p.edges.size()), p.edges.end());
            if (seed % 2) std::reverse(p.edges.begin(), p.edges.end());
        }
        CHECK(validate(g).passed());
    }
    CHECK(faces_seen > 20);
}
