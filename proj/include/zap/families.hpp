#pragma once

// Generators for concrete configurations: unions of planes given by their
// incidence structure, stick-curve dual graphs, and small named examples.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zap/invariants.hpp"
#include "zap/zgraph.hpp"

namespace zap {

using PointId = std::size_t;

/// A line of the configuration, keyed by its two points. Distinct lines
/// through the same pair of points (possible on small tori) carry distinct tags.
struct LineKey {
    PointId a = 0;  // a < b
    PointId b = 0;
    std::int64_t tag = 0;

    static LineKey through(PointId p, PointId q, std::int64_t tag = 0) {
        return p < q ? LineKey{p, q, tag} : LineKey{q, p, tag};
    }
    bool contains(PointId p) const { return p == a || p == b; }
    auto operator<=>(const LineKey&) const = default;
};

/// Planes spanned by triples of labeled points. Side i of a plane joins
/// points[i] and points[(i + 1) % 3].
class IncidenceStructure {
public:
    struct Plane {
        std::array<PointId, 3> points;
        std::array<LineKey, 3> sides;
    };

    PointId add_point(std::string label);
    void add_plane(std::array<PointId, 3> points);
    void add_plane(std::array<PointId, 3> points, std::array<std::int64_t, 3> side_tags);

    std::size_t point_count() const { return labels_.size(); }
    const std::string& label(PointId p) const { return labels_.at(p); }
    const std::vector<Plane>& planes() const { return planes_; }

private:
    std::vector<std::string> labels_;
    std::vector<Plane> planes_;
};

/// Planes become vertices, lines on two planes become edges, and every point
/// on three or more planes becomes an R, E or S point according to whether
/// its local graph is a path, a cycle or a star. Throws ConfigurationError
/// naming the point when the configuration is not good Zappatic.
ZappaticGraph derive_graph(const IncidenceStructure& inc);

/// Path of n planes with n-2 R_3 points. n >= 2.
ZappaticGraph chain_planes(int n);
/// n-cycle of planes: n R_3 points, or one closed E_n face when `filled`. n >= 3.
ZappaticGraph cycle_planes(int n, bool filled);
/// Fork with n-1 teeth: one S_n angle, or (angle = false) all pairs as R_3. n >= 4.
ZappaticGraph fork_planes(int n, bool angle = true);

/// General mode: n quadrics glued along rulings, no singular points. n >= 2.
ZappaticGraph quadric_chain(int n);
/// General mode: two quadrics and a plane in P^3 (four E_3 points over one triangle).
ZappaticGraph two_quadrics_and_plane();

IncidenceStructure veronese_incidence(int d);
/// Triangular degeneration of the d-Veronese surface into d^2 planes. d >= 2.
ZappaticGraph veronese_mt(int d);

IncidenceStructure pillow_incidence(int a, int b);

struct PillowResult {
    ZappaticGraph graph;
    SingularityCensus census;
    // Reference census for comparison: four R_3 points and 2ab - 2 E_6 points.
    std::int64_t claimed_r3 = 0;
    std::int64_t claimed_f6 = 0;
    bool matches_claim = false;
    std::string note;
};

/// Two triangulated a x b grids glued along their boundary. a, b >= 2.
PillowResult pillow(int a, int b);

IncidenceStructure abelian_incidence(int n, int m);
/// n x m torus grid, each cell split into two triangles. n, m >= 2.
ZappaticGraph abelian_grid(int n, int m);

/// Center with four edges: an S_4 angle on three of them, R_3 on the rest.
/// Its first edge fails the multiple point formula.
ZappaticGraph star_obstruction();
/// Path a-b-c-d with an R_4 over it and a pendant plane at c.
ZappaticGraph nonsmooth_example();

enum class StickKind { R, S, E, T, Z };

/// Dual graph of a stick curve (all components rational). T and Z take an
/// explicit adjacency, which must be a tree or have h^1 = 1 respectively.
CurveGraph stick_curve_graph(StickKind kind, int n,
                             const std::vector<std::pair<std::size_t, std::size_t>>& adjacency = {});

/// Deterministic pseudo-random valid planar configuration on `size` planes.
ZappaticGraph random_planar_config(std::uint64_t seed, int size);

/// Census profile of a scroll degenerating to d planes with d - 2g + 2 R_3
/// and 2g - 2 S_4 points.
struct ScrollProfile {
    std::int64_t d = 0;
    std::int64_t g = 0;
    std::int64_t v = 0, e = 0, r3 = 0, s4 = 0;
    std::int64_t chi = 0;       // v - e + f
    std::int64_t k2_min = 0, k2_max = 0;
    bool counts_nonnegative = false;
    bool chi_matches = false;        // chi = 1 - g
    bool k2_contains_scroll = false; // 8(1 - g) in [k2_min, k2_max]
    bool pair_identity_feasible = false;  // some valence sequence meets the adjacent-pair identity

    bool passed() const { return counts_nonnegative && chi_matches && k2_contains_scroll && pair_identity_feasible; }
};

ScrollProfile scroll_profile(std::int64_t d, std::int64_t g);

}  // namespace zap
