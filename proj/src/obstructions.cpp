#include "zap/obstructions.hpp"

#include <algorithm>

#include "zap/errors.hpp"

namespace zap {

const char* to_string(EqualityClass c) {
    switch (c) {
        case EqualityClass::veronese_S4: return "veronese_S4";
        case EqualityClass::elliptic_cycle: return "elliptic_cycle";
        case EqualityClass::other: return "other";
    }
    return "other";
}

namespace {

std::int64_t mpf_edge_inferred(const ZappaticGraph& g, EdgeId edge) {
    const auto c = edge_local_census(g, edge);
    std::int64_t normal = 2;
    if (g.mode == Mode::general) {
        const auto& e = g.edges[edge];
        if (!e.normal_deg_u || !e.normal_deg_v)
            throw MissingWeightError("missing normal degree on edge " + std::to_string(edge));
        normal = *e.normal_deg_u + *e.normal_deg_v;
    }
    std::int64_t bound = normal + c.f_n(3) - c.r_n(3);
    std::vector<int> ns;
    for (auto* m : {&c.f, &c.r, &c.s})
        for (auto& [n, k] : *m) ns.push_back(n);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (int n : ns)
        if (n >= 4) bound -= c.rho_n(n) + c.f_n(n);
    return bound;
}

// Only the kinds/orders listed in `allowed` occur.
bool census_within(const SingularityCensus& c, std::initializer_list<std::pair<PointKind, int>> allowed,
                   int max_face_order = 0) {
    auto ok = [&](PointKind kind, int n) {
        if (kind == PointKind::E && n <= max_face_order) return true;
        return std::any_of(allowed.begin(), allowed.end(), [&](auto a) { return a.first == kind && a.second == n; });
    };
    for (auto& [n, k] : c.f)
        if (k && !ok(PointKind::E, n)) return false;
    for (auto& [n, k] : c.r)
        if (k && !ok(PointKind::R, n)) return false;
    for (auto& [n, k] : c.s)
        if (k && !ok(PointKind::S, n)) return false;
    return true;
}

}  // namespace

std::int64_t mpf_edge(const ZappaticGraph& g, EdgeId edge) {
    if (edge >= g.edge_count()) throw ReferenceError("unknown edge id " + std::to_string(edge));
    return mpf_edge_inferred(infer_r3(g), edge);
}

std::optional<std::int64_t> mpf_global(const ZappaticGraph& input) {
    if (input.mode != Mode::planar) return std::nullopt;
    const auto c = counts(infer_r3(input));
    std::int64_t total = 2 * c.e + 3 * c.f_n(3) - 2 * c.r_n(3);
    for (int n : c.orders()) {
        if (n < 4) continue;
        total -= n * c.f_n(n) + (n - 1) * c.rho_n(n);
    }
    return total;
}

std::optional<std::int64_t> tpf_predicted_double_points(const ZappaticGraph& input, EdgeId edge) {
    if (edge >= input.edge_count()) throw ReferenceError("unknown edge id " + std::to_string(edge));
    const ZappaticGraph g = infer_r3(input);
    for (const auto& p : g.points)
        if (p.kind != PointKind::E || p.order() != 3) return std::nullopt;
    std::int64_t normal = 2;
    if (g.mode == Mode::general) {
        const auto& e = g.edges[edge];
        if (!e.normal_deg_u || !e.normal_deg_v) return std::nullopt;
        normal = *e.normal_deg_u + *e.normal_deg_v;
    }
    return normal + edge_local_census(g, edge).f_n(3);
}

ZappaRecord zappa_bound(const ZappaticGraph& input, const InvariantReport& report) {
    ZappaRecord z;
    const ZappaticGraph g = infer_r3(input);
    const auto& c = report.census;
    if (g.mode != Mode::planar) {
        z.reason = "requires a planar configuration";
        return z;
    }
    if (!census_within(c, {{PointKind::R, 3}}, 5)) {
        z.reason = "singularities outside R_3, E_3, E_4, E_5";
        return z;
    }
    if (!report.k2.applicable || !report.chi || !report.sectional_genus) {
        z.reason = "K^2, chi or g unavailable";
        return z;
    }
    z.applicable = true;
    z.bound = 8 * *report.chi + 1 - *report.sectional_genus;
    z.slack_min = z.bound - report.k2.max;
    z.slack_max = z.bound - report.k2.min;
    if (z.slack_max == 0) {
        const auto& w = c.valence;
        const bool only_r3 = c.f_total() == 0 && c.s_total() == 0 && c.r_total() == c.r_n(3);
        auto sorted = w;
        std::sort(sorted.begin(), sorted.end());
        if (only_r3 && c.v == 4 && c.e == 3 && c.r_n(3) == 3 && sorted == std::vector<std::int64_t>{1, 1, 1, 3}) {
            z.equality_class = EqualityClass::veronese_S4;
        } else if (only_r3 && c.v >= 5 && c.e == c.v && c.r_n(3) == c.v &&
                   std::all_of(w.begin(), w.end(), [](auto x) { return x == 2; }) && is_connected(g)) {
            z.equality_class = EqualityClass::elliptic_cycle;
        } else {
            z.equality_class = EqualityClass::other;
            z.warning = "equality outside the two known cases (Veronese fork, elliptic cycle of length >= 5)";
        }
    }
    return z;
}

MiyaokaYauRecord miyaoka_yau(const ZappaticGraph& input, const InvariantReport& report) {
    MiyaokaYauRecord m;
    if (input.mode != Mode::planar) {
        m.reason = "requires a planar configuration";
        return m;
    }
    if (!census_within(report.census, {{PointKind::R, 3}}, 6)) {
        m.reason = "singularities outside R_3 and E_m (m <= 6)";
        return m;
    }
    if (!report.k2.applicable || !report.chi) {
        m.reason = "K^2 or chi unavailable";
        return m;
    }
    m.applicable = true;
    m.bound = 9 * *report.chi;
    m.satisfied_min = report.k2.min <= m.bound;
    m.satisfied_max = report.k2.max <= m.bound;
    return m;
}

K3Profile k3_profile(const K3Counts& k) {
    K3Profile p;
    p.applicable = true;
    p.g = k.e - k.v + 1;
    p.three_valent = k.three_valent;
    std::int64_t f = 0;
    bool large_faces = false;
    for (auto& [n, count] : k.faces) {
        f += count;
        p.face_sum += (6 - n) * count;
        if (n >= 6 && count > 0) large_faces = true;
    }
    p.vertices_ok = k.v == 2 * p.g - 2;
    p.edges_ok = k.e == 3 * p.g - 3;
    p.faces_ok = f == p.g + 1;
    p.face_sum_ok = p.face_sum == 12;
    p.cap_applicable = !large_faces;
    p.cap_ok = large_faces || p.g <= 11;
    return p;
}

K3Profile k3_profile(const ZappaticGraph& g) {
    if (g.mode != Mode::planar) return {};
    const auto c = counts(infer_r3(g));
    K3Counts k;
    k.v = c.v;
    k.e = c.e;
    k.faces = c.f;
    k.three_valent = std::all_of(c.valence.begin(), c.valence.end(), [](auto w) { return w == 3; });
    return k3_profile(k);
}

ObstructionReport check_obstructions(const ZappaticGraph& input, const PhiData& phi) {
    const ZappaticGraph g = infer_r3(input);
    ObstructionReport r;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        EdgeBound b;
        b.edge = id;
        try {
            b.mpf_upper_bound = mpf_edge_inferred(g, id);
            b.violated = *b.mpf_upper_bound < 0;
        } catch (const MissingWeightError& e) {
            b.reason = e.what();
        }
        if (b.violated)
            r.reasons.push_back("multiple point formula fails on edge " + std::to_string(id) + " (bound " +
                                std::to_string(*b.mpf_upper_bound) + ")");
        r.per_edge.push_back(std::move(b));
    }
    r.global_mpf_upper = mpf_global(g);
    if (r.global_mpf_upper && *r.global_mpf_upper < 0)
        r.reasons.push_back("global multiple point formula is negative");
    const auto report = full_report(g, phi);
    r.zappa = zappa_bound(g, report);
    if (r.zappa.applicable && r.zappa.slack_max < 0) r.reasons.push_back("K^2 exceeds 8 chi + 1 - g");
    r.miyaoka_yau = miyaoka_yau(g, report);
    if (r.miyaoka_yau.applicable && !r.miyaoka_yau.satisfied_min) r.reasons.push_back("K^2 exceeds 9 chi");
    return r;
}

}  // namespace zap
