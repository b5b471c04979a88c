#include "zap/zgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zap/errors.hpp"

namespace zap {

char to_char(PointKind kind) {
    switch (kind) {
        case PointKind::E: return 'E';
        case PointKind::R: return 'R';
        case PointKind::S: return 'S';
    }
    return '?';
}

const char* to_string(Mode mode) { return mode == Mode::planar ? "planar" : "general"; }

VertexWeights VertexWeights::plane() { return {1, 9, 0, 0, 0, 1}; }

EdgeData EdgeData::line(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return {u, v, 0, 1, 1, 1, 1, 1};
}

int SingularPoint::order() const {
    const int m = static_cast<int>(edges.size());
    return kind == PointKind::E ? m : m + 1;
}

ZappaticGraph make_planar(std::size_t vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::vector<SingularPoint> points) {
    ZappaticGraph g;
    g.mode = Mode::planar;
    g.vertices.assign(vertex_count, VertexWeights::plane());
    g.edges.reserve(edges.size());
    for (auto [u, v] : edges) g.edges.push_back(EdgeData::line(u, v));
    g.points = std::move(points);
    return g;
}

namespace {

std::vector<VertexId> shared_vertices(const EdgeData& a, const EdgeData& b) {
    std::vector<VertexId> out;
    for (VertexId x : {a.u, a.v}) {
        if ((x == b.u || x == b.v) && std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(x);
    }
    return out;
}

VertexId other_end(const EdgeData& e, VertexId x) { return e.u == x ? e.v : e.u; }

Angle make_angle(VertexId at, EdgeId a, EdgeId b) {
    if (a > b) std::swap(a, b);
    return {at, a, b};
}

PointShape fail(std::string msg) {
    PointShape s;
    s.error = std::move(msg);
    return s;
}

bool all_distinct(std::vector<VertexId> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

PointShape analyze_cycle(const ZappaticGraph& g, const std::vector<EdgeId>& es) {
    const std::size_t n = es.size();
    if (n < 3) return fail("E-point needs at least 3 edges");
    std::vector<VertexId> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto common = shared_vertices(g.edges[es[i]], g.edges[es[(i + 1) % n]]);
        if (common.size() != 1)
            return fail(common.empty() ? "edge list does not close up into a cycle"
                                       : "consecutive edges are parallel");
        x[i] = common.front();
    }
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId prev = x[(i + n - 1) % n];
        const auto& e = g.edges[es[i]];
        if (prev == x[i] || !((e.u == prev && e.v == x[i]) || (e.v == prev && e.u == x[i])))
            return fail("edge list is not a cycle");
    }
    if (!all_distinct(x)) return fail("cycle repeats a vertex");
    PointShape s;
    s.ok = true;
    s.vertices = x;
    for (std::size_t i = 0; i < n; ++i) s.angles.push_back(make_angle(x[i], es[i], es[(i + 1) % n]));
    return s;
}

PointShape analyze_path(const ZappaticGraph& g, const std::vector<EdgeId>& es) {
    const std::size_t m = es.size();
    if (m < 2) return fail("R-point needs at least 2 edges");
    std::vector<VertexId> joints(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        auto common = shared_vertices(g.edges[es[i]], g.edges[es[i + 1]]);
        if (common.size() != 1)
            return fail(common.empty() ? "edge list is not a connected path"
                                       : "consecutive edges are parallel");
        joints[i] = common.front();
    }
    std::vector<VertexId> path;
    path.push_back(other_end(g.edges[es.front()], joints.front()));
    path.insert(path.end(), joints.begin(), joints.end());
    path.push_back(other_end(g.edges[es.back()], joints.back()));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& e = g.edges[es[i]];
        if (!((e.u == path[i] && e.v == path[i + 1]) || (e.v == path[i] && e.u == path[i + 1])))
            return fail("edge list is not a path");
    }
    if (!all_distinct(path)) return fail("path repeats a vertex");
    PointShape s;
    s.ok = true;
    s.vertices = path;
    for (std::size_t i = 0; i + 1 < m; ++i) s.angles.push_back(make_angle(joints[i], es[i], es[i + 1]));
    return s;
}

PointShape analyze_star(const ZappaticGraph& g, const std::vector<EdgeId>& es) {
    const std::size_t m = es.size();
    if (m < 3) return fail("S-point needs at least 3 edges");
    std::vector<VertexId> common{g.edges[es[0]].u, g.edges[es[0]].v};
    for (std::size_t i = 1; i < m; ++i) {
        const auto& e = g.edges[es[i]];
        std::erase_if(common, [&](VertexId x) { return x != e.u && x != e.v; });
    }
    if (common.size() != 1) return fail("angle edges do not share exactly one center");
    const VertexId center = common.front();
    std::vector<VertexId> all{center};
    for (EdgeId id : es) all.push_back(other_end(g.edges[id], center));
    if (!all_distinct(all)) return fail("angle edges reach a vertex twice");
    PointShape s;
    s.ok = true;
    s.vertices = all;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) s.angles.push_back(make_angle(center, es[i], es[j]));
    return s;
}

}  // namespace

PointShape analyze_point(const ZappaticGraph& g, const SingularPoint& p) {
    std::set<EdgeId> seen;
    for (EdgeId id : p.edges) {
        if (id >= g.edges.size()) return fail("unknown edge " + std::to_string(id));
        if (!seen.insert(id).second) return fail("edge " + std::to_string(id) + " listed twice");
        if (g.edges[id].u == g.edges[id].v) return fail("edge " + std::to_string(id) + " is a loop");
    }
    switch (p.kind) {
        case PointKind::E: return analyze_cycle(g, p.edges);
        case PointKind::R: return analyze_path(g, p.edges);
        case PointKind::S: return analyze_star(g, p.edges);
    }
    return fail("unknown kind");
}

std::vector<Angle> all_angles(const ZappaticGraph& g) {
    std::vector<std::vector<EdgeId>> incident(g.vertex_count());
    for (EdgeId id = 0; id < g.edges.size(); ++id) {
        const auto& e = g.edges[id];
        if (e.u == e.v || e.u >= g.vertex_count() || e.v >= g.vertex_count()) continue;
        incident[e.u].push_back(id);
        incident[e.v].push_back(id);
    }
    std::vector<Angle> out;
    for (VertexId x = 0; x < incident.size(); ++x) {
        const auto& inc = incident[x];
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) out.push_back(make_angle(x, inc[i], inc[j]));
    }
    return out;
}

std::vector<std::size_t> valences(const ZappaticGraph& g) {
    std::vector<std::size_t> w(g.vertex_count(), 0);
    for (const auto& e : g.edges) {
        if (e.u < w.size()) ++w[e.u];
        if (e.v < w.size() && e.v != e.u) ++w[e.v];
    }
    return w;
}

ZappaticGraph infer_r3(const ZappaticGraph& g) {
    if (g.mode != Mode::planar) return g;
    std::set<Angle> covered;
    for (const auto& p : g.points) {
        auto shape = analyze_point(g, p);
        if (shape.ok) covered.insert(shape.angles.begin(), shape.angles.end());
    }
    ZappaticGraph out = g;
    for (const Angle& a : all_angles(g)) {
        if (!covered.contains(a)) out.points.push_back({PointKind::R, {a.first, a.second}});
    }
    return out;
}

bool is_connected(const ZappaticGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = n;
    for (const auto& e : g.edges) {
        if (e.u >= n || e.v >= n) continue;
        auto a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

namespace {

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

void check_nonneg(std::vector<Violation>& out, const Weight& w, const std::string& what, std::int64_t min) {
    if (w && *w < min)
        out.push_back({"weight_range", what + " must be >= " + std::to_string(min)});
}

}  // namespace

ValidationReport validate(const ZappaticGraph& g) {
    ValidationReport rep;
    auto& bad = rep.violations;
    const std::size_t n = g.vertex_count();
    if (n == 0) bad.push_back({"empty", "graph has no vertices"});

    bool endpoints_ok = true;
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId id = 0; id < g.edges.size(); ++id) {
        const auto& e = g.edges[id];
        const std::string tag = "edge " + std::to_string(id);
        if (e.u >= n || e.v >= n) {
            bad.push_back({"unknown_vertex", tag + " references a missing vertex"});
            endpoints_ok = false;
            continue;
        }
        if (e.u == e.v) bad.push_back({"loop", tag + " is a loop"});
        if (e.u > e.v) bad.push_back({"orientation", tag + " is not stored with u < v"});
        if (g.mode == Mode::planar && !pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
            bad.push_back({"parallel_edges", tag + ": two planes meet along at most one line"});
        check_nonneg(bad, e.genus, tag + " genus", 0);
        check_nonneg(bad, e.degree, tag + " degree", 1);
        if (g.mode == Mode::planar && !(e == EdgeData::line(e.u, e.v)))
            bad.push_back({"planar_weights", tag + " carries non-planar weights"});
    }
    for (VertexId x = 0; x < n; ++x) {
        const auto& w = g.vertices[x];
        const std::string tag = "vertex " + std::to_string(x);
        check_nonneg(bad, w.degree, tag + " degree", 1);
        check_nonneg(bad, w.pg, tag + " pg", 0);
        check_nonneg(bad, w.q, tag + " q", 0);
        check_nonneg(bad, w.sectional_genus, tag + " sectional_genus", 0);
        if (g.mode == Mode::planar && !(w == VertexWeights::plane()))
            bad.push_back({"planar_weights", tag + " carries non-planar weights"});
    }

    rep.connected = endpoints_ok && is_connected(g);
    if (!rep.connected) bad.push_back({"disconnected", "solid graph is not connected"});
    if (!endpoints_ok) return rep;

    const ZappaticGraph h = infer_r3(g);
    std::map<Angle, int> coverage;
    bool shapes_ok = true;
    for (std::size_t i = 0; i < h.points.size(); ++i) {
        const auto& p = h.points[i];
        const std::string tag = std::string("point ") + std::to_string(i) + " (" + to_char(p.kind) + ")";
        auto shape = analyze_point(h, p);
        if (!shape.ok) {
            bad.push_back({"point_shape", tag + ": " + shape.error});
            shapes_ok = false;
            continue;
        }
        if (p.kind == PointKind::S && p.order() < 4)
            bad.push_back({"point_order", tag + ": S-points need n >= 4"});
        for (const Angle& a : shape.angles) ++coverage[a];
    }

    if (g.mode == Mode::planar && shapes_ok) {
        for (const Angle& a : all_angles(h)) {
            const int c = coverage[a];
            if (c != 1) {
                bad.push_back({"coverage", "edges " + std::to_string(a.first) + "," + std::to_string(a.second) +
                                               " at vertex " + std::to_string(a.at) + " covered " +
                                               std::to_string(c) + " times"});
            }
        }
        std::int64_t lhs = 0;
        for (auto w : valences(h)) lhs += binom2(static_cast<std::int64_t>(w));
        const auto census = counts(h);
        std::int64_t rhs = 0;
        for (int k : census.orders()) {
            rhs += k * census.f_n(k) + (k - 2) * census.r_n(k) + binom2(k - 1) * census.s_n(k);
        }
        rep.pair_identity_lhs = lhs;
        rep.pair_identity_rhs = rhs;
        if (lhs != rhs)
            bad.push_back({"pair_identity", "adjacent-pair identity fails: " + std::to_string(lhs) +
                                                " != " + std::to_string(rhs)});
    }
    return rep;
}

namespace {

std::int64_t lookup(const std::map<int, std::int64_t>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? 0 : it->second;
}

std::int64_t total(const std::map<int, std::int64_t>& m) {
    std::int64_t t = 0;
    for (auto& [k, c] : m) t += c;
    return t;
}

}  // namespace

std::int64_t SingularityCensus::f_n(int n) const { return lookup(f, n); }
std::int64_t SingularityCensus::r_n(int n) const { return lookup(r, n); }
std::int64_t SingularityCensus::s_n(int n) const { return lookup(s, n); }
std::int64_t SingularityCensus::f_total() const { return total(f); }
std::int64_t SingularityCensus::r_total() const { return total(r); }
std::int64_t SingularityCensus::s_total() const { return total(s); }

std::vector<int> SingularityCensus::orders() const {
    std::set<int> ks;
    for (auto* m : {&f, &r, &s})
        for (auto& [k, c] : *m) ks.insert(k);
    return {ks.begin(), ks.end()};
}

std::int64_t EdgeCensus::f_n(int n) const { return lookup(f, n); }
std::int64_t EdgeCensus::r_n(int n) const { return lookup(r, n); }
std::int64_t EdgeCensus::s_n(int n) const { return lookup(s, n); }

SingularityCensus counts(const ZappaticGraph& g) {
    SingularityCensus c;
    c.v = static_cast<std::int64_t>(g.vertex_count());
    c.e = static_cast<std::int64_t>(g.edge_count());
    std::set<std::pair<VertexId, VertexId>> joined;
    for (const auto& e : g.edges) joined.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    c.e_tilde = static_cast<std::int64_t>(joined.size());
    for (const auto& p : g.points) {
        auto& bucket = p.kind == PointKind::E ? c.f : p.kind == PointKind::R ? c.r : c.s;
        ++bucket[p.order()];
    }
    for (auto w : valences(g)) c.valence.push_back(static_cast<std::int64_t>(w));
    return c;
}

EdgeCensus edge_local_census(const ZappaticGraph& g, EdgeId edge) {
    if (edge >= g.edge_count()) throw ReferenceError("unknown edge id " + std::to_string(edge));
    EdgeCensus c;
    c.edge = edge;
    for (const auto& p : g.points) {
        if (std::find(p.edges.begin(), p.edges.end(), edge) == p.edges.end()) continue;
        auto& bucket = p.kind == PointKind::E ? c.f : p.kind == PointKind::R ? c.r : c.s;
        ++bucket[p.order()];
    }
    return c;
}

ZappaticGraph relabel(const ZappaticGraph& g, const std::vector<VertexId>& vertex_perm,
                      const std::vector<EdgeId>& edge_perm) {
    if (vertex_perm.size() != g.vertex_count() || edge_perm.size() != g.edge_count())
        throw DomainError("relabel: permutation size mismatch");
    ZappaticGraph out;
    out.mode = g.mode;
    out.vertices.resize(g.vertex_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) out.vertices[vertex_perm[x]] = g.vertices[x];
    out.edges.resize(g.edge_count());
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        EdgeData e = g.edges[id];
        e.u = vertex_perm[e.u];
        e.v = vertex_perm[e.v];
        if (e.u > e.v) {
            std::swap(e.u, e.v);
            std::swap(e.self_int_u, e.self_int_v);
            std::swap(e.normal_deg_u, e.normal_deg_v);
        }
        out.edges[edge_perm[id]] = e;
    }
    for (const auto& p : g.points) {
        SingularPoint q{p.kind, {}};
        for (EdgeId id : p.edges) q.edges.push_back(edge_perm[id]);
        out.points.push_back(std::move(q));
    }
    return out;
}

}  // namespace zap
