#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "zap/errors.hpp"
#include "zap/families.hpp"

namespace zap {

PointId IncidenceStructure::add_point(std::string label) {
    labels_.push_back(std::move(label));
    return labels_.size() - 1;
}

void IncidenceStructure::add_plane(std::array<PointId, 3> points) { add_plane(points, {0, 0, 0}); }

void IncidenceStructure::add_plane(std::array<PointId, 3> points, std::array<std::int64_t, 3> side_tags) {
    for (PointId p : points)
        if (p >= labels_.size()) throw ReferenceError("plane references unknown point " + std::to_string(p));
    if (points[0] == points[1] || points[1] == points[2] || points[0] == points[2])
        throw ConfigurationError("plane spanned by a repeated point");
    Plane plane{points, {}};
    for (int i = 0; i < 3; ++i) plane.sides[i] = LineKey::through(points[i], points[(i + 1) % 3], side_tags[i]);
    planes_.push_back(plane);
}

namespace {

struct LocalEdge {
    std::size_t a, b;  // indices into the local plane list
    EdgeId edge;
};

// Orders the edges of a local path / cycle / star; empty when none fits.
std::optional<SingularPoint> classify(std::size_t m, const std::vector<LocalEdge>& edges) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(m);  // (neighbor, local edge index)
    for (std::size_t i = 0; i < edges.size(); ++i) {
        adj[edges[i].a].push_back({edges[i].b, i});
        adj[edges[i].b].push_back({edges[i].a, i});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end(), [&](auto x, auto y) {
        return edges[x.second].edge < edges[y.second].edge;
    });

    // connectivity
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto [y, i] : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
    }
    if (reached != m) return std::nullopt;

    std::size_t max_deg = 0;
    for (auto& list : adj) max_deg = std::max(max_deg, list.size());

    auto walk = [&](std::size_t start, std::size_t steps) {
        SingularPoint p;
        std::vector<bool> used(edges.size(), false);
        std::size_t at = start;
        for (std::size_t s = 0; s < steps; ++s) {
            for (auto [y, i] : adj[at]) {
                if (used[i]) continue;
                used[i] = true;
                p.edges.push_back(edges[i].edge);
                at = y;
                break;
            }
        }
        return p;
    };

    if (edges.size() == m - 1 && max_deg <= 2) {
        // Start from the end whose edge has the smaller id.
        std::size_t start = m;
        for (std::size_t x = 0; x < m; ++x) {
            if (adj[x].size() != 1) continue;
            if (start == m || edges[adj[x][0].second].edge < edges[adj[start][0].second].edge) start = x;
        }
        auto p = walk(start, m - 1);
        p.kind = PointKind::R;
        return p;
    }
    if (edges.size() == m && max_deg == 2) {
        auto p = walk(0, m);
        p.kind = PointKind::E;
        return p;
    }
    if (m >= 4 && edges.size() == m - 1 && max_deg == m - 1) {
        SingularPoint p;
        p.kind = PointKind::S;
        for (const auto& e : edges) p.edges.push_back(e.edge);
        std::sort(p.edges.begin(), p.edges.end());
        return p;
    }
    return std::nullopt;
}

}  // namespace

ZappaticGraph derive_graph(const IncidenceStructure& inc) {
    const auto& planes = inc.planes();
    if (planes.empty()) throw ConfigurationError("configuration has no planes");

    std::set<std::array<LineKey, 3>> distinct;
    std::map<LineKey, std::vector<std::size_t>> on_line;
    for (std::size_t i = 0; i < planes.size(); ++i) {
        auto sides = planes[i].sides;
        std::sort(sides.begin(), sides.end());
        if (sides[0] == sides[1] || sides[1] == sides[2])
            throw ConfigurationError("plane " + std::to_string(i) + " repeats a side");
        if (!distinct.insert(sides).second) throw ConfigurationError("plane " + std::to_string(i) + " is listed twice");
        for (const auto& key : sides) on_line[key].push_back(i);
    }

    std::vector<std::pair<VertexId, VertexId>> edge_list;
    std::map<LineKey, EdgeId> edge_of;
    for (const auto& [key, owners] : on_line) {
        if (owners.size() > 2)
            throw ConfigurationError("three planes share the line " + inc.label(key.a) + "-" + inc.label(key.b));
        if (owners.size() == 2) {
            edge_of[key] = edge_list.size();
            edge_list.push_back({owners[0], owners[1]});
        }
    }

    std::vector<std::vector<std::size_t>> through(inc.point_count());
    for (std::size_t i = 0; i < planes.size(); ++i)
        for (PointId p : planes[i].points) through[p].push_back(i);

    std::vector<SingularPoint> points;
    for (PointId p = 0; p < inc.point_count(); ++p) {
        const auto& local = through[p];
        if (local.size() < 2) continue;
        std::vector<LocalEdge> local_edges;
        for (const auto& [key, id] : edge_of) {
            if (!key.contains(p)) continue;
            const auto& owners = on_line.at(key);
            auto pos = [&](std::size_t plane) {
                return static_cast<std::size_t>(std::find(local.begin(), local.end(), plane) - local.begin());
            };
            local_edges.push_back({pos(owners[0]), pos(owners[1]), id});
        }
        if (local.size() == 2) {
            if (local_edges.empty())
                throw ConfigurationError("point " + inc.label(p) + ": two planes meet only at this point");
            continue;
        }
        auto point = classify(local.size(), local_edges);
        if (!point)
            throw ConfigurationError("point " + inc.label(p) +
                                     ": local graph is not a path, cycle or star; not a good Zappatic configuration");
        points.push_back(std::move(*point));
    }
    return make_planar(planes.size(), edge_list, std::move(points));
}

}  // namespace zap
