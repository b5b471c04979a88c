#include "zap/families.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "zap/errors.hpp"

namespace zap {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

std::string coord(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

ZappaticGraph chain_planes(int n) {
    require(n >= 2, "chain_planes: n must be >= 2");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    std::vector<SingularPoint> points;
    for (int i = 1; i + 1 < n; ++i) points.push_back({PointKind::R, {EdgeId(i - 1), EdgeId(i)}});
    return make_planar(n, edges, points);
}

ZappaticGraph cycle_planes(int n, bool filled) {
    require(n >= 3, "cycle_planes: n must be >= 3");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    std::vector<SingularPoint> points;
    if (filled) {
        SingularPoint face{PointKind::E, {}};
        for (int i = 0; i < n; ++i) face.edges.push_back(i);
        points.push_back(face);
    } else {
        // R_3 at vertex i + 1, between edges i and i + 1.
        for (int i = 0; i < n; ++i) points.push_back({PointKind::R, {EdgeId(i), EdgeId((i + 1) % n)}});
    }
    return make_planar(n, edges, points);
}

ZappaticGraph fork_planes(int n, bool angle) {
    require(n >= 4, "fork_planes: n must be >= 4");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    std::vector<SingularPoint> points;
    if (angle) {
        SingularPoint s{PointKind::S, {}};
        for (int i = 0; i + 1 < n; ++i) s.edges.push_back(i);
        points.push_back(s);
    }
    return infer_r3(make_planar(n, edges, points));
}

ZappaticGraph quadric_chain(int n) {
    require(n >= 2, "quadric_chain: n must be >= 2");
    ZappaticGraph g;
    g.mode = Mode::general;
    // P^1 x P^1 embedded as a quadric: hyperplane section is a conic.
    g.vertices.assign(n, VertexWeights{1, 8, 0, 0, 0, 2});
    // Consecutive quadrics meet along a ruling line: rational, square zero.
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({VertexId(i), VertexId(i + 1), 0, 1, 0, 0, 0, 0});
    return g;
}

ZappaticGraph two_quadrics_and_plane() {
    ZappaticGraph g;
    g.mode = Mode::general;
    const VertexWeights quadric{1, 8, 0, 0, 0, 2};
    g.vertices = {quadric, quadric, VertexWeights::plane()};
    // Elliptic quartic Q1 ∩ Q2, type (2,2) on each quadric.
    g.edges.push_back({0, 1, 1, 4, 8, 8, 8, 8});
    // Conics Q_i ∩ plane: (1,1) on the quadric, a conic in the plane.
    g.edges.push_back({0, 2, 0, 2, 2, 4, 2, 4});
    g.edges.push_back({1, 2, 0, 2, 2, 4, 2, 4});
    // The quartic meets the plane in four points, each an E_3 point.
    for (int i = 0; i < 4; ++i) g.points.push_back({PointKind::E, {0, 2, 1}});
    return g;
}

IncidenceStructure veronese_incidence(int d) {
    require(d >= 2, "veronese_mt: d must be >= 2");
    IncidenceStructure inc;
    std::map<std::pair<int, int>, PointId> id;
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i + j <= d; ++i) id[{i, j}] = inc.add_point(coord(i, j));
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i + j < d; ++i) {
            inc.add_plane({id[{i, j}], id[{i + 1, j}], id[{i, j + 1}]});
            if (i + j + 2 <= d) inc.add_plane({id[{i + 1, j}], id[{i + 1, j + 1}], id[{i, j + 1}]});
        }
    }
    return inc;
}

ZappaticGraph veronese_mt(int d) { return derive_graph(veronese_incidence(d)); }

IncidenceStructure pillow_incidence(int a, int b) {
    require(a >= 2 && b >= 2, "pillow: a and b must be >= 2");
    // Grid coordinates (i, j), 0 <= i <= a, 0 <= j <= b, top row j = b.
    // Boundary labels 1 .. 2a+2b run clockwise from the top-left corner;
    // interior points of the top grid come next, then those of the bottom grid.
    std::map<std::pair<int, int>, int> boundary;
    int label = 1;
    for (int i = 0; i <= a; ++i) boundary[{i, b}] = label++;
    for (int k = 1; k <= b; ++k) boundary[{a, b - k}] = label++;
    for (int k = 1; k <= a; ++k) boundary[{a - k, 0}] = label++;
    for (int k = 1; k < b; ++k) boundary[{0, k}] = label++;
    std::map<std::pair<int, int>, int> top_inner, bottom_inner;
    for (int j = b - 1; j >= 1; --j)
        for (int i = 1; i < a; ++i) top_inner[{i, j}] = label++;
    for (int j = b - 1; j >= 1; --j)
        for (int i = 1; i < a; ++i) bottom_inner[{i, j}] = label++;

    IncidenceStructure inc;
    for (int l = 1; l < label; ++l) inc.add_point(std::to_string(l));
    auto top = [&](int i, int j) -> PointId {
        auto it = boundary.find({i, j});
        return (it != boundary.end() ? it->second : top_inner.at({i, j})) - 1;
    };
    auto bottom = [&](int i, int j) -> PointId {
        auto it = boundary.find({i, j});
        return (it != boundary.end() ? it->second : bottom_inner.at({i, j})) - 1;
    };
    // Top diagonals run (i,j)-(i+1,j+1). The bottom sheet is seen from the
    // other side, so in shared coordinates its diagonals run (i+1,j)-(i,j+1);
    // this puts exactly three planes through each corner.
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < a; ++i) {
            inc.add_plane({top(i, j), top(i + 1, j), top(i + 1, j + 1)});
            inc.add_plane({top(i, j), top(i + 1, j + 1), top(i, j + 1)});
        }
    for (int j = 0; j < b; ++j)
        for (int i = 0; i < a; ++i) {
            inc.add_plane({bottom(i, j), bottom(i + 1, j), bottom(i, j + 1)});
            inc.add_plane({bottom(i + 1, j), bottom(i + 1, j + 1), bottom(i, j + 1)});
        }
    return inc;
}

PillowResult pillow(int a, int b) {
    PillowResult out;
    out.graph = derive_graph(pillow_incidence(a, b));
    out.census = counts(out.graph);
    out.claimed_r3 = 4;
    out.claimed_f6 = 2LL * a * b - 2;
    const auto& c = out.census;
    out.matches_claim = c.r_n(3) == out.claimed_r3 && c.f_n(6) == out.claimed_f6 &&
                        c.r_total() == c.r_n(3) && c.f_total() == c.f_n(6) && c.s_total() == 0;
    if (!out.matches_claim) {
        out.note = "derived census: r3=" + std::to_string(c.r_n(3)) + " f3=" + std::to_string(c.f_n(3)) +
                   " f6=" + std::to_string(c.f_n(6)) + "; reference: four R_3 and " +
                   std::to_string(out.claimed_f6) + " E_6 points";
    }
    return out;
}

IncidenceStructure abelian_incidence(int n, int m) {
    require(n >= 2 && m >= 2, "abelian_grid: n and m must be >= 2");
    IncidenceStructure inc;
    auto id = [&](int i, int j) -> PointId { return ((i % n + n) % n) * m + ((j % m + m) % m); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) inc.add_point(coord(i, j));
    // Segments are tagged by base point and direction so that two segments
    // joining the same pair of points (n or m = 2) stay distinct lines.
    enum Dir { horizontal = 0, vertical = 1, diagonal = 2 };
    auto seg = [&](int i, int j, Dir dir) -> std::int64_t { return 1 + 3 * static_cast<std::int64_t>(id(i, j)) + dir; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            inc.add_plane({id(i, j), id(i + 1, j), id(i + 1, j + 1)},
                          {seg(i, j, horizontal), seg(i + 1, j, vertical), seg(i, j, diagonal)});
            inc.add_plane({id(i, j), id(i, j + 1), id(i + 1, j + 1)},
                          {seg(i, j, vertical), seg(i, j + 1, horizontal), seg(i, j, diagonal)});
        }
    return inc;
}

ZappaticGraph abelian_grid(int n, int m) { return derive_graph(abelian_incidence(n, m)); }

ZappaticGraph star_obstruction() {
    // A = 0; B, C, D, E = 1..4; edges AB, AC, AD, AE = 0..3.
    return infer_r3(make_planar(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {{PointKind::S, {1, 2, 3}}}));
}

ZappaticGraph nonsmooth_example() {
    // a, b, c, d, p = 0..4; edges ab, bc, cd, cp = 0..3.
    return infer_r3(make_planar(5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}, {{PointKind::R, {0, 1, 2}}}));
}

CurveGraph stick_curve_graph(StickKind kind, int n, const std::vector<std::pair<std::size_t, std::size_t>>& adjacency) {
    CurveGraph c;
    switch (kind) {
        case StickKind::R:
            require(n >= 3, "stick curve R_n needs n >= 3");
            for (int i = 0; i + 1 < n; ++i) c.edges.push_back({i, i + 1});
            break;
        case StickKind::S:
            require(n >= 4, "stick curve S_n needs n >= 4");
            for (int i = 1; i < n; ++i) c.edges.push_back({0, i});
            break;
        case StickKind::E:
            require(n >= 3, "stick curve E_n needs n >= 3");
            for (int i = 0; i < n; ++i) c.edges.push_back({i, (i + 1) % n});
            break;
        case StickKind::T:
        case StickKind::Z: {
            require(n >= 3, "stick curve needs n >= 3");
            c.edges = adjacency;
            for (auto [a, b] : adjacency) require(a < std::size_t(n) && b < std::size_t(n) && a != b, "bad adjacency");
            c.genera.assign(n, 0);
            const auto h1 = curve_pa(c);  // throws when disconnected
            if (kind == StickKind::T) require(h1 == 0, "T-curve adjacency is not a tree");
            else require(h1 == 1, "Z-curve adjacency must have h^1 = 1");
            return c;
        }
    }
    c.genera.assign(n, 0);
    return c;
}

namespace {

// SplitMix64: fixed output on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::uint64_t state_;
};

Angle angle_of(VertexId at, EdgeId a, EdgeId b) { return a < b ? Angle{at, a, b} : Angle{at, b, a}; }

ZappaticGraph random_attempt(Rng& rng, int size) {
    const std::size_t n = static_cast<std::size_t>(size);
    constexpr std::size_t max_valence = 5;
    std::set<std::pair<VertexId, VertexId>> joined;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::size_t> val(n, 0);
    auto add_edge = [&](VertexId a, VertexId b) {
        if (a == b || joined.contains({std::min(a, b), std::max(a, b)})) return;
        if (val[a] >= max_valence || val[b] >= max_valence) return;
        joined.insert({std::min(a, b), std::max(a, b)});
        edges.push_back({a, b});
        ++val[a];
        ++val[b];
    };
    for (VertexId x = 1; x < n; ++x) {
        // Attach to an earlier vertex that still has room.
        for (int tries = 0; tries < 8; ++tries) {
            const VertexId y = rng.below(x);
            if (val[y] < max_valence) {
                add_edge(x, y);
                break;
            }
        }
        if (val[x] == 0) add_edge(x, x - 1 == 0 ? 0 : x - 1);
    }
    const std::size_t extra = rng.below(n + 1);
    for (std::size_t k = 0; k < extra; ++k) add_edge(rng.below(n), rng.below(n));

    ZappaticGraph g = make_planar(n, edges);
    std::vector<std::vector<EdgeId>> incident(n);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        incident[g.edges[id].u].push_back(id);
        incident[g.edges[id].v].push_back(id);
    }
    std::set<Angle> covered;
    auto free_angles = [&](const std::vector<Angle>& as) {
        return std::none_of(as.begin(), as.end(), [&](const Angle& a) { return covered.contains(a); });
    };
    auto try_add = [&](SingularPoint p) {
        auto shape = analyze_point(g, p);
        if (!shape.ok || !free_angles(shape.angles)) return false;
        covered.insert(shape.angles.begin(), shape.angles.end());
        g.points.push_back(std::move(p));
        return true;
    };

    // Closed faces: an edge plus a shortest detour back.
    for (std::size_t attempt = 0; attempt < n && g.edge_count() > 0; ++attempt) {
        const EdgeId closing = rng.below(g.edge_count());
        const VertexId from = g.edges[closing].v, to = g.edges[closing].u;
        std::vector<EdgeId> via(n, g.edge_count());
        std::vector<bool> seen(n, false);
        std::deque<VertexId> queue{from};
        seen[from] = true;
        while (!queue.empty()) {
            const VertexId x = queue.front();
            queue.pop_front();
            auto inc = incident[x];
            rng.shuffle(inc);
            for (EdgeId id : inc) {
                if (id == closing) continue;
                const VertexId y = g.edges[id].u == x ? g.edges[id].v : g.edges[id].u;
                if (seen[y]) continue;
                seen[y] = true;
                via[y] = id;
                queue.push_back(y);
            }
        }
        if (!seen[to]) continue;
        SingularPoint face{PointKind::E, {closing}};
        for (VertexId x = to; x != from;) {
            const EdgeId id = via[x];
            face.edges.push_back(id);
            x = g.edges[id].u == x ? g.edges[id].v : g.edges[id].u;
        }
        if (face.edges.size() <= 6) try_add(face);
    }

    // Angles at vertices of valence >= 3.
    for (VertexId x = 0; x < n; ++x) {
        if (incident[x].size() < 3 || rng.below(3) != 0) continue;
        auto inc = incident[x];
        rng.shuffle(inc);
        std::vector<EdgeId> chosen;
        for (EdgeId id : inc) {
            const bool fits = std::none_of(chosen.begin(), chosen.end(),
                                           [&](EdgeId c) { return covered.contains(angle_of(x, c, id)); });
            if (fits) chosen.push_back(id);
        }
        if (chosen.size() >= 3) {
            chosen.resize(3 + rng.below(chosen.size() - 2));
            try_add({PointKind::S, chosen});
        }
    }

    // Open faces of order 4 and 5: random walks.
    for (std::size_t attempt = 0; attempt < n; ++attempt) {
        const std::size_t length = 3 + rng.below(2);
        VertexId at = rng.below(n);
        SingularPoint path{PointKind::R, {}};
        for (std::size_t step = 0; step < length; ++step) {
            if (incident[at].empty()) break;
            const EdgeId id = incident[at][rng.below(incident[at].size())];
            path.edges.push_back(id);
            at = g.edges[id].u == at ? g.edges[id].v : g.edges[id].u;
        }
        if (path.edges.size() == length) try_add(path);
    }
    return infer_r3(g);
}

}  // namespace

ZappaticGraph random_planar_config(std::uint64_t seed, int size) {
    require(size >= 2, "random_planar_config: size must be >= 2");
    Rng rng(seed);
    for (;;) {
        auto g = random_attempt(rng, size);
        if (validate(g).passed()) return g;
    }
}

ScrollProfile scroll_profile(std::int64_t d, std::int64_t g) {
    ScrollProfile p;
    p.d = d;
    p.g = g;
    p.v = d;
    p.e = g + d - 1;  // sectional genus e - v + 1 = g
    p.r3 = d - 2 * g + 2;
    p.s4 = 2 * g - 2;
    p.counts_nonnegative = d >= 1 && g >= 1 && p.r3 >= 0 && p.s4 >= 0 && p.e >= 0;
    p.chi = p.v - p.e;
    p.chi_matches = p.chi == 1 - g;
    const std::int64_t base = 9 * p.v - 10 * p.e + p.r3;
    p.k2_min = base + 2 * p.s4;
    p.k2_max = base + 3 * p.s4;
    p.k2_contains_scroll = p.k2_min <= 8 * (1 - g) && 8 * (1 - g) <= p.k2_max;
    if (p.counts_nonnegative && p.v <= 200) {
        // Valences w_i in [1, v-1] with sum 2e and sum C(w_i, 2) = r3 + 3 s4.
        const std::int64_t target_sum = 2 * p.e, target_pairs = p.r3 + 3 * p.s4;
        std::set<std::pair<std::int64_t, std::int64_t>> reach{{0, 0}};
        for (std::int64_t i = 0; i < p.v; ++i) {
            std::set<std::pair<std::int64_t, std::int64_t>> next;
            for (auto [s, q] : reach)
                for (std::int64_t w = 1; w <= std::max<std::int64_t>(1, p.v - 1); ++w) {
                    const std::int64_t s2 = s + w, q2 = q + w * (w - 1) / 2;
                    if (s2 > target_sum || q2 > target_pairs) break;
                    next.insert({s2, q2});
                }
            reach = std::move(next);
        }
        p.pair_identity_feasible = reach.contains({target_sum, target_pairs}) && (p.s4 == 0 || p.v >= 4);
    }
    return p;
}

}  // namespace zap
