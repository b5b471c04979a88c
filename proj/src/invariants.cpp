#include "zap/invariants.hpp"

#include <numeric>

#include "zap/errors.hpp"

namespace zap {

namespace {

std::int64_t need(const Weight& w, const std::string& what) {
    if (!w) throw MissingWeightError("missing " + what);
    return *w;
}

std::string vtag(std::size_t i, const char* field) { return "vertex " + std::to_string(i) + " " + field; }
std::string etag(std::size_t i, const char* field) { return "edge " + std::to_string(i) + " " + field; }

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

std::int64_t curve_pa(const CurveGraph& c) {
    const std::size_t v = c.genera.size();
    if (v == 0) throw DomainError("curve has no components");
    std::vector<std::size_t> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = v;
    for (auto [a, b] : c.edges) {
        if (a >= v || b >= v) throw ReferenceError("curve edge references a missing component");
        auto ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    if (components != 1) throw DomainError("curve dual graph is disconnected");
    std::int64_t pa = static_cast<std::int64_t>(c.edges.size()) - static_cast<std::int64_t>(v) + 1;
    for (auto gi : c.genera) {
        if (gi < 0) throw DomainError("negative component genus");
        pa += gi;
    }
    return pa;
}

std::int64_t curve_chi(const CurveGraph& c) { return 1 - curve_pa(c); }

std::int64_t degree(const ZappaticGraph& g) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) d += need(g.vertices[i].degree, vtag(i, "degree"));
    return d;
}

std::int64_t sectional_genus(const ZappaticGraph& g) {
    const auto v = static_cast<std::int64_t>(g.vertex_count());
    if (g.mode == Mode::planar) return static_cast<std::int64_t>(g.edge_count()) - v + 1;
    std::int64_t genus = 1 - v;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        genus += need(g.vertices[i].sectional_genus, vtag(i, "sectional_genus"));
    // c_ij sums the degrees of the parallel components.
    for (std::size_t i = 0; i < g.edge_count(); ++i) genus += need(g.edges[i].degree, etag(i, "degree"));
    return genus;
}

std::int64_t chi_structure_sheaf(const ZappaticGraph& g) {
    std::int64_t f = 0;
    for (const auto& p : g.points)
        if (p.kind == PointKind::E) ++f;
    if (g.mode == Mode::planar)
        return static_cast<std::int64_t>(g.vertex_count()) - static_cast<std::int64_t>(g.edge_count()) + f;
    std::int64_t chi = f;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) chi += need(g.vertices[i].chi, vtag(i, "chi"));
    // chi(O_C) = 1 - genus for each smooth irreducible component.
    for (std::size_t i = 0; i < g.edge_count(); ++i) chi -= 1 - need(g.edges[i].genus, etag(i, "genus"));
    return chi;
}

namespace {

// Phi vanishes identically when both H^1(X_i, O) and H^1(C_ij, O) do.
std::optional<std::string> phi_not_trivial(const ZappaticGraph& g, const std::string& undetermined) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& q = g.vertices[i].q;
        if (!q) return "missing " + vtag(i, "q");
        if (*q != 0) return undetermined;
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto& genus = g.edges[i].genus;
        if (!genus) return "missing " + etag(i, "genus");
        if (*genus != 0) return undetermined;
    }
    return std::nullopt;
}

MaybeInt phi_term(const ZappaticGraph& g, std::optional<std::int64_t> supplied, const std::string& what,
                  const std::string& undetermined) {
    if (supplied && *supplied < 0) throw DomainError("dimension of " + what + " must be >= 0");
    const auto blocker = phi_not_trivial(g, undetermined);
    if (!blocker) {
        if (supplied && *supplied != 0)
            throw DomainError("supplied " + what + " contradicts Phi = 0 for this graph");
        return MaybeInt::of(0);
    }
    if (supplied) return MaybeInt::of(*supplied);
    return MaybeInt::missing(*blocker);
}

}  // namespace

MaybeInt omega_genus(const ZappaticGraph& g, std::optional<std::int64_t> supplied_coker) {
    const auto coker = phi_term(g, supplied_coker, "coker(Phi)", "Phi cokernel not combinatorially determined");
    if (!coker) return coker;
    std::int64_t pg_sum = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto& pg = g.vertices[i].pg;
        if (!pg) return MaybeInt::missing("missing " + vtag(i, "pg"));
        pg_sum += *pg;
    }
    return MaybeInt::of(betti(g).b2 + pg_sum + *coker);
}

MaybeInt irregularity(const ZappaticGraph& g, std::optional<std::int64_t> supplied_ker) {
    const auto ker = phi_term(g, supplied_ker, "ker(Phi)", "Phi kernel not combinatorially determined");
    if (!ker) return ker;
    return MaybeInt::of(betti(g).b1 + *ker);
}

K2Interval k2_interval(const ZappaticGraph& input) {
    const ZappaticGraph g = infer_r3(input);
    const auto c = counts(g);
    K2Interval k2;
    try {
        std::int64_t base = 0;
        if (g.mode == Mode::planar) {
            base = 9 * c.v - 10 * c.e;
        } else {
            for (std::size_t i = 0; i < g.vertex_count(); ++i) base += need(g.vertices[i].k2, vtag(i, "k2"));
            // sum over vertices i of sum_{j != i} (4 g_ij - C_ij^2), one term per edge side.
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                const auto& e = g.edges[i];
                const auto genus = need(e.genus, etag(i, "genus"));
                base += 4 * genus - need(e.self_int_u, etag(i, "self_int_u"));
                base += 4 * genus - need(e.self_int_v, etag(i, "self_int_v"));
            }
            base -= 8 * c.e;
        }
        for (int n : c.orders()) base += 2 * n * c.f_n(n);
        base += c.r_n(3);
        std::int64_t kmin = 0, kmax = 0;
        for (int n : c.orders()) {
            if (n < 4) continue;
            kmin += (n - 2) * c.rho_n(n);
            kmax += (2 * n - 5) * c.r_n(n) + binom2(n - 1) * c.s_n(n);
        }
        k2.base = base;
        k2.min = base + kmin;
        k2.max = base + kmax;
        k2.applicable = true;
    } catch (const MissingWeightError& e) {
        k2.applicable = false;
        k2.reason = e.what();
    }
    return k2;
}

DeltaInterval class_delta(const ZappaticGraph& input, const InvariantReport& report) {
    DeltaInterval d;
    if (!report.k2.applicable) {
        d.reason = "K^2 interval not applicable: " + report.k2.reason;
        return d;
    }
    if (!report.chi) {
        d.reason = "chi unavailable: " + report.chi.reason;
        return d;
    }
    const auto& c = report.census;
    const std::int64_t chi = *report.chi;
    if (input.mode == Mode::planar) {
        const std::int64_t rest = 9 * chi + 3 * c.f_total() + c.e;
        d.min = rest - report.k2.max;
        d.max = rest - report.k2.min;
        std::int64_t bound = 3 * c.f_n(3) + c.r_n(3) - (report.k2.max - report.k2.base);
        for (int n : c.orders()) {
            if (n < 4) continue;
            bound += (12 - n) * c.f_n(n) + (n - 1) * c.rho_n(n);
        }
        d.lower_bound = bound;
        d.violates_bound = d.min < bound;
    } else {
        // Zeuthen-Segre with Noether: delta = 12 chi - K^2 + deg + 4(g - 1).
        if (!report.degree || !report.sectional_genus) {
            d.reason = "degree or sectional genus unavailable";
            return d;
        }
        const std::int64_t rest = 12 * chi + *report.degree + 4 * (*report.sectional_genus - 1);
        d.min = rest - report.k2.max;
        d.max = rest - report.k2.min;
    }
    d.applicable = true;
    return d;
}

namespace {

template <typename F>
MaybeInt guarded(F&& f) {
    try {
        return MaybeInt::of(f());
    } catch (const MissingWeightError& e) {
        return MaybeInt::missing(e.what());
    }
}

}  // namespace

InvariantReport full_report(const ZappaticGraph& input, const PhiData& phi) {
    const ZappaticGraph g = infer_r3(input);
    InvariantReport r;
    r.degree = guarded([&] { return degree(g); });
    r.sectional_genus = guarded([&] { return sectional_genus(g); });
    r.chi = guarded([&] { return chi_structure_sheaf(g); });
    r.p_omega = omega_genus(g, phi.coker);
    r.irregularity_q = irregularity(g, phi.ker);
    r.k2 = k2_interval(g);
    r.census = counts(g);
    r.betti = betti(g);
    r.delta_class = class_delta(g, r);
    return r;
}

}  // namespace zap
