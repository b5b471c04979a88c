#pragma once

// Numerical invariants of a good Zappatic surface (and of the smooth surfaces
// it may degenerate from) computed from the associated graph.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zap/homology.hpp"
#include "zap/zgraph.hpp"

namespace zap {

/// An integer that may be unavailable, with the reason why.
struct MaybeInt {
    std::optional<std::int64_t> value;
    std::string reason;

    static MaybeInt of(std::int64_t v) { return {v, {}}; }
    static MaybeInt missing(std::string why) { return {std::nullopt, std::move(why)}; }
    explicit operator bool() const { return value.has_value(); }
    std::int64_t operator*() const { return value.value(); }
};

/// Dual graph of a nodal curve: components with geometric genera, nodes as edges.
struct CurveGraph {
    std::vector<std::int64_t> genera;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// p_a(C) = h^1(G_C) + sum g_i = e - v + 1 + sum g_i. Throws DomainError when disconnected.
std::int64_t curve_pa(const CurveGraph& c);

/// chi(O_C) = 1 - p_a(C).
std::int64_t curve_chi(const CurveGraph& c);

std::int64_t degree(const ZappaticGraph& g);
std::int64_t sectional_genus(const ZappaticGraph& g);
std::int64_t chi_structure_sheaf(const ZappaticGraph& g);

/// p_omega. `supplied_coker` is dim coker(Phi); negative values throw DomainError.
MaybeInt omega_genus(const ZappaticGraph& g, std::optional<std::int64_t> supplied_coker = std::nullopt);

/// q. `supplied_ker` is dim ker(Phi).
MaybeInt irregularity(const ZappaticGraph& g, std::optional<std::int64_t> supplied_ker = std::nullopt);

struct K2Interval {
    std::int64_t min = 0;
    std::int64_t max = 0;
    std::int64_t base = 0;  // everything except the correction k
    bool applicable = false;
    std::string reason;     // set when !applicable
};

K2Interval k2_interval(const ZappaticGraph& g);

struct DeltaInterval {
    std::int64_t min = 0;
    std::int64_t max = 0;
    bool applicable = false;
    std::string reason;
    // Planar only: 3 f_3 + r_3 + sum (12-n) f_n + sum (n-1) rho_n - k_max.
    std::optional<std::int64_t> lower_bound;
    bool violates_bound = false;
};

struct InvariantReport {
    MaybeInt degree;
    MaybeInt sectional_genus;
    MaybeInt chi;
    MaybeInt p_omega;
    MaybeInt irregularity_q;
    K2Interval k2;
    DeltaInterval delta_class;
    SingularityCensus census;
    BettiVector betti;
};

/// Class of the general fibre from an already computed report.
DeltaInterval class_delta(const ZappaticGraph& g, const InvariantReport& report);

struct PhiData {
    std::optional<std::int64_t> coker;
    std::optional<std::int64_t> ker;
};

InvariantReport full_report(const ZappaticGraph& g, const PhiData& phi = {});

}  // namespace zap
