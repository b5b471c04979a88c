#pragma once

// Reference computations used to cross-check the library. Everything here
// is written from the formulas directly, with rational arithmetic or brute
// force, and shares no code with src/ beyond the plain data types.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "zap/families.hpp"
#include "zap/homology.hpp"
#include "zap/zgraph.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// Plain Gauss-Jordan over Q.
inline std::size_t rank(const std::vector<std::vector<long long>>& rows, std::size_t cols) {
    std::vector<std::vector<Rational>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
        std::size_t pivot = rk;
        while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rk]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rk || a[r][c] == 0) continue;
            const Rational factor = a[r][c] / a[rk][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rk][k];
        }
        ++rk;
    }
    return rk;
}

inline std::size_t rank(const zap::IntMatrix& m) {
    std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
    return rank(rows, m.cols());
}

struct Betti {
    long long b0 = 0, b1 = 0, b2 = 0;
    std::size_t rank_d1 = 0, rank_d2 = 0;
};

// Boundary maps built by walking each closed face from scratch.
inline Betti betti(const zap::ZappaticGraph& g) {
    const std::size_t v = g.vertices.size(), e = g.edges.size();
    std::vector<std::vector<long long>> d1(e, std::vector<long long>(v, 0));
    for (std::size_t i = 0; i < e; ++i) {
        const auto lo = std::min(g.edges[i].u, g.edges[i].v), hi = std::max(g.edges[i].u, g.edges[i].v);
        d1[i][lo] = -1;
        d1[i][hi] = 1;
    }
    std::vector<std::vector<long long>> d2;
    for (const auto& p : g.points) {
        if (p.kind != zap::PointKind::E) continue;
        std::vector<long long> row(e, 0);
        const auto& ids = p.edges;
        const auto& first = g.edges[ids[0]];
        const auto& second = g.edges[ids[1]];
        // Start at the endpoint of the first edge that the second edge misses.
        std::size_t at = (first.u == second.u || first.u == second.v) ? first.v : first.u;
        for (auto id : ids) {
            const auto& ed = g.edges[id];
            const std::size_t next = ed.u == at ? ed.v : ed.u;
            row[id] += at < next ? 1 : -1;
            at = next;
        }
        d2.push_back(std::move(row));
    }
    Betti b;
    b.rank_d1 = rank(d1, v);
    b.rank_d2 = rank(d2, e);
    b.b0 = static_cast<long long>(v - b.rank_d1);
    b.b1 = static_cast<long long>(e - b.rank_d1 - b.rank_d2);
    b.b2 = static_cast<long long>(d2.size() - b.rank_d2);
    return b;
}

inline long long choose2(long long n) { return n * (n - 1) / 2; }

// Census of a planar graph with the R_3 points that the marking convention
// leaves implicit added by counting: every adjacent pair not covered by a
// listed point is one R_3.
struct Census {
    long long v = 0, e = 0;
    std::map<int, long long> f, r, s;
    std::vector<long long> valence;
    long long pairs = 0;  // sum C(w_i, 2)
};

inline Census census(const zap::ZappaticGraph& g) {
    Census c;
    c.v = static_cast<long long>(g.vertices.size());
    c.e = static_cast<long long>(g.edges.size());
    c.valence.assign(g.vertices.size(), 0);
    for (const auto& ed : g.edges) {
        ++c.valence[ed.u];
        ++c.valence[ed.v];
    }
    for (auto w : c.valence) c.pairs += choose2(w);
    long long covered = 0;
    for (const auto& p : g.points) {
        const int k = static_cast<int>(p.edges.size());
        switch (p.kind) {
            case zap::PointKind::E: ++c.f[k]; covered += k; break;
            case zap::PointKind::R: ++c.r[k + 1]; covered += k - 1; break;
            case zap::PointKind::S: ++c.s[k + 1]; covered += choose2(k); break;
        }
    }
    if (g.mode == zap::Mode::planar) c.r[3] += c.pairs - covered;
    return c;
}

inline long long at(const std::map<int, long long>& m, int n) {
    auto it = m.find(n);
    return it == m.end() ? 0 : it->second;
}

inline long long total(const std::map<int, long long>& m) {
    long long t = 0;
    for (auto [n, k] : m) t += k;
    return t;
}

struct Invariants {
    long long degree = 0, genus = 0, chi = 0, k2_min = 0, k2_max = 0, p_omega = 0, q = 0;
};

// Planar-mode formulas only.
inline Invariants planar_invariants(const zap::ZappaticGraph& g) {
    const auto c = census(g);
    const auto b = oracle::betti(g);
    Invariants out;
    out.degree = c.v;
    out.genus = c.e - c.v + 1;
    out.chi = c.v - c.e + total(c.f);
    long long base = 9 * c.v - 10 * c.e + at(c.r, 3);
    for (auto [n, k] : c.f) base += 2 * n * k;
    long long lo = 0, hi = 0;
    for (int n = 4; n <= 64; ++n) {
        lo += (n - 2) * (at(c.r, n) + at(c.s, n));
        hi += (2 * n - 5) * at(c.r, n) + choose2(n - 1) * at(c.s, n);
    }
    out.k2_min = base + lo;
    out.k2_max = base + hi;
    out.p_omega = b.b2;
    out.q = b.b1;
    return out;
}

// General-mode K^2 (no open faces or angles of order >= 4 assumed) and
// chi(O_X), straight from the weighted sums. Every weight must be present.
inline long long general_k2(const zap::ZappaticGraph& g) {
    const auto c = census(g);
    long long k2 = 0;
    for (const auto& v : g.vertices) k2 += *v.k2;
    for (const auto& e : g.edges) k2 += (4 * *e.genus - *e.self_int_u) + (4 * *e.genus - *e.self_int_v);
    k2 -= 8 * c.e;
    for (auto [n, k] : c.f) k2 += 2 * n * k;
    return k2 + at(c.r, 3);
}

inline long long general_chi(const zap::ZappaticGraph& g) {
    long long chi = 0;
    for (const auto& v : g.vertices) chi += *v.chi;
    for (const auto& e : g.edges) chi -= 1 - *e.genus;
    return chi + total(census(g).f);
}

// Left side of the multiple point formula along one edge of a planar graph.
inline long long planar_mpf_edge(const zap::ZappaticGraph& g, std::size_t edge) {
    const auto full = zap::infer_r3(g);
    long long total = 2;
    for (const auto& p : full.points) {
        if (std::find(p.edges.begin(), p.edges.end(), edge) == p.edges.end()) continue;
        const int n = p.order();
        if (p.kind == zap::PointKind::E && n == 3) total += 1;
        else if (p.kind == zap::PointKind::R && n == 3) total -= 1;
        else if (n >= 4) total -= 1;
    }
    return total;
}

// Brute-force census of an incidence structure: for every point collect the
// planes through it and the shared lines among them, then read off the shape
// of that local graph from its degree sequence.
struct IncidenceCensus {
    long long v = 0, e = 0;
    std::map<int, long long> f, r, s;
    bool ok = true;
};

inline IncidenceCensus incidence_census(const zap::IncidenceStructure& inc) {
    IncidenceCensus out;
    const auto& planes = inc.planes();
    out.v = static_cast<long long>(planes.size());
    auto share = [&](std::size_t i, std::size_t j) -> std::vector<zap::LineKey> {
        std::vector<zap::LineKey> common;
        for (const auto& a : planes[i].sides)
            for (const auto& b : planes[j].sides)
                if (a == b) common.push_back(a);
        return common;
    };
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (std::size_t j = i + 1; j < planes.size(); ++j) out.e += static_cast<long long>(share(i, j).size());

    for (zap::PointId p = 0; p < inc.point_count(); ++p) {
        std::vector<std::size_t> local;
        for (std::size_t i = 0; i < planes.size(); ++i)
            if (std::find(planes[i].points.begin(), planes[i].points.end(), p) != planes[i].points.end())
                local.push_back(i);
        const std::size_t m = local.size();
        if (m < 3) continue;
        std::vector<int> deg(m, 0);
        std::size_t edges = 0;
        std::vector<std::size_t> parent(m);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x];
            return x;
        };
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (const auto& line : share(local[a], local[b]))
                    if (line.contains(p)) {
                        ++deg[a];
                        ++deg[b];
                        ++edges;
                        parent[find(a)] = find(b);
                    }
        std::set<std::size_t> roots;
        for (std::size_t a = 0; a < m; ++a) roots.insert(find(a));
        const bool connected = roots.size() == 1;
        const int max_deg = *std::max_element(deg.begin(), deg.end());
        const int n = static_cast<int>(m);
        if (connected && edges == m - 1 && max_deg <= 2) ++out.r[n];
        else if (connected && edges == m && max_deg == 2) ++out.f[n];
        else if (connected && edges == m - 1 && max_deg == n - 1 && n >= 4) ++out.s[n];
        else out.ok = false;
    }
    return out;
}

}  // namespace oracle
