#pragma once

// The decorated associated graph of a good Zappatic surface: one vertex per
// irreducible component, one edge per irreducible double curve, and one
// SingularPoint record per E_n / R_n / S_n point.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zap {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using Weight = std::optional<std::int64_t>;

enum class Mode { planar, general };

// E: closed face (cycle), R: open face (path), S: angle (star).
enum class PointKind { E, R, S };

char to_char(PointKind kind);
const char* to_string(Mode mode);

/// Numerical data of one component X_i. In planar mode every field is
/// filled with the values of P^2; in general mode missing fields stay empty.
struct VertexWeights {
    Weight chi;              // chi(O_{X_i})
    Weight k2;               // K^2_{X_i}
    Weight pg;               // p_g(X_i)
    Weight q;                // q(X_i)
    Weight sectional_genus;  // genus of a hyperplane section D_i
    Weight degree;           // d_i

    static VertexWeights plane();
    bool operator==(const VertexWeights&) const = default;
};

/// One irreducible component of a double curve X_u ∩ X_v. The side-dependent
/// quantities are stored once per endpoint.
struct EdgeData {
    VertexId u = 0;
    VertexId v = 0;
    Weight genus;
    Weight degree;
    Weight self_int_u;    // (C)^2 on X_u
    Weight self_int_v;    // (C)^2 on X_v
    Weight normal_deg_u;  // deg N_{C|X_u}
    Weight normal_deg_v;  // deg N_{C|X_v}

    static EdgeData line(VertexId u, VertexId v);
    bool operator==(const EdgeData&) const = default;
};

struct SingularPoint {
    PointKind kind = PointKind::E;
    std::vector<EdgeId> edges;

    /// n of E_n / R_n / S_n.
    int order() const;
    bool operator==(const SingularPoint&) const = default;
};

struct ZappaticGraph {
    Mode mode = Mode::planar;
    std::vector<VertexWeights> vertices;
    std::vector<EdgeData> edges;
    std::vector<SingularPoint> points;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }

    bool operator==(const ZappaticGraph&) const = default;
};

/// Planar graph on `vertex_count` planes. Edge endpoints are normalized to u < v.
ZappaticGraph make_planar(std::size_t vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::vector<SingularPoint> points = {});

/// An unordered pair of edges meeting at a vertex. Each closed face, open
/// face and angle covers a fixed set of these.
struct Angle {
    VertexId at = 0;
    EdgeId first = 0;   // first < second
    EdgeId second = 0;

    auto operator<=>(const Angle&) const = default;
};

/// The shape a SingularPoint traces in the graph.
struct PointShape {
    bool ok = false;
    std::string error;              // set when !ok
    std::vector<VertexId> vertices; // E: x_0..x_{n-1} with edge i from x_{i-1} to x_i; R: path order; S: center first
    std::vector<Angle> angles;      // adjacent pairs this point covers
};

/// Checks the cycle / path / star shape of `p` and lists the angles it covers.
PointShape analyze_point(const ZappaticGraph& g, const SingularPoint& p);

/// All (vertex, edge pair) angles of the solid graph.
std::vector<Angle> all_angles(const ZappaticGraph& g);

std::vector<std::size_t> valences(const ZappaticGraph& g);

/// Planar mode: adds an R_3 point over every angle not covered by any listed
/// point. General mode: returns `g` unchanged.
ZappaticGraph infer_r3(const ZappaticGraph& g);

bool is_connected(const ZappaticGraph& g);

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    bool connected = false;
    std::vector<Violation> violations;
    // sum_i C(w_i, 2) vs sum_n (n f_n + (n-2) r_n + C(n-1,2) s_n); planar only.
    std::optional<std::int64_t> pair_identity_lhs;
    std::optional<std::int64_t> pair_identity_rhs;
    // Geometric realizability is never decided.
    std::string realizability = "unknown";

    bool passed() const { return violations.empty(); }
};

ValidationReport validate(const ZappaticGraph& g);

/// Point counts f_n, r_n, s_n by order, and the valences w_i.
struct SingularityCensus {
    std::int64_t v = 0;
    std::int64_t e = 0;
    std::int64_t e_tilde = 0;  // vertex pairs joined by at least one edge
    std::map<int, std::int64_t> f;  // by order n
    std::map<int, std::int64_t> r;
    std::map<int, std::int64_t> s;
    std::vector<std::int64_t> valence;

    std::int64_t f_n(int n) const;
    std::int64_t r_n(int n) const;
    std::int64_t s_n(int n) const;
    std::int64_t rho_n(int n) const { return r_n(n) + s_n(n); }
    std::int64_t f_total() const;
    std::int64_t r_total() const;
    std::int64_t s_total() const;
    std::int64_t rho_total() const { return r_total() + s_total(); }
    std::int64_t tau() const { return rho_total() + f_total(); }

    /// Orders present across all three kinds, ascending.
    std::vector<int> orders() const;
};

SingularityCensus counts(const ZappaticGraph& g);

/// f_n(γ), r_n(γ), s_n(γ): points whose edge list contains γ.
struct EdgeCensus {
    EdgeId edge = 0;
    std::map<int, std::int64_t> f;
    std::map<int, std::int64_t> r;
    std::map<int, std::int64_t> s;

    std::int64_t f_n(int n) const;
    std::int64_t r_n(int n) const;
    std::int64_t s_n(int n) const;
    std::int64_t rho_n(int n) const { return r_n(n) + s_n(n); }
};

EdgeCensus edge_local_census(const ZappaticGraph& g, EdgeId edge);

/// Applies a vertex permutation (new id = perm[old]) and an edge permutation,
/// keeping every point's edge order. Used for relabeling invariance checks.
ZappaticGraph relabel(const ZappaticGraph& g, const std::vector<VertexId>& vertex_perm,
                      const std::vector<EdgeId>& edge_perm);

}  // namespace zap
