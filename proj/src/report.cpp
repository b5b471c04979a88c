#include "zap/report.hpp"

namespace zap {

namespace {

ojson unavailable(const std::string& why) { return ojson{{"unavailable", why}}; }

ojson value_or_reason(const MaybeInt& m) { return m ? ojson(*m) : unavailable(m.reason); }

ojson by_order(const std::map<int, std::int64_t>& counts) {
    ojson out = ojson::object();
    for (auto [n, k] : counts)
        if (k != 0) out[std::to_string(n)] = k;
    return out;
}

}  // namespace

ojson to_json(const ValidationReport& r) {
    ojson out;
    out["valid"] = r.passed();
    out["connected"] = r.connected;
    ojson violations = ojson::array();
    for (const auto& v : r.violations) violations.push_back({{"code", v.code}, {"message", v.message}});
    out["violations"] = std::move(violations);
    if (r.pair_identity_lhs && r.pair_identity_rhs)
        out["pair_identity"] = {{"lhs", *r.pair_identity_lhs}, {"rhs", *r.pair_identity_rhs}};
    else
        out["pair_identity"] = unavailable("needs a planar graph with well-formed points");
    out["realizability"] = r.realizability;
    return out;
}

ojson to_json(const SingularityCensus& c) {
    return ojson{{"v", c.v},        {"e", c.e}, {"e_tilde", c.e_tilde}, {"f", by_order(c.f)},
                 {"r", by_order(c.r)}, {"s", by_order(c.s)}, {"valence", c.valence}};
}

ojson to_json(const HomologyResult& h) {
    ojson out;
    out["betti"] = {{"b0", h.betti.b0}, {"b1", h.betti.b1}, {"b2", h.betti.b2}};
    out["ranks"] = {{"d1", h.rank_d1}, {"d2", h.rank_d2}};
    out["cells"] = {{"vertices", h.cells0}, {"edges", h.cells1}, {"faces", h.cells2}};
    out["euler"] = h.betti.euler();
    return out;
}

ojson to_json(const InvariantReport& r) {
    ojson out;
    out["degree"] = value_or_reason(r.degree);
    out["sectional_genus"] = value_or_reason(r.sectional_genus);
    out["chi"] = value_or_reason(r.chi);
    out["p_omega"] = value_or_reason(r.p_omega);
    out["q"] = value_or_reason(r.irregularity_q);
    if (r.k2.applicable)
        out["k2"] = {{"min", r.k2.min}, {"max", r.k2.max}, {"base", r.k2.base}};
    else
        out["k2"] = unavailable(r.k2.reason);
    if (r.delta_class.applicable) {
        ojson d{{"min", r.delta_class.min}, {"max", r.delta_class.max}};
        if (r.delta_class.lower_bound) {
            d["lower_bound"] = *r.delta_class.lower_bound;
            d["violates_bound"] = r.delta_class.violates_bound;
        }
        out["delta_class"] = std::move(d);
    } else {
        out["delta_class"] = unavailable(r.delta_class.reason);
    }
    out["census"] = to_json(r.census);
    out["betti"] = {{"b0", r.betti.b0}, {"b1", r.betti.b1}, {"b2", r.betti.b2}};
    return out;
}

ojson to_json(const K3Profile& p) {
    if (!p.applicable) return unavailable("planar mode only");
    ojson out{{"g", p.g},
              {"three_valent", p.three_valent},
              {"vertices_ok", p.vertices_ok},
              {"edges_ok", p.edges_ok},
              {"faces_ok", p.faces_ok},
              {"face_sum", p.face_sum},
              {"face_sum_ok", p.face_sum_ok}};
    if (p.cap_applicable)
        out["genus_cap_ok"] = p.cap_ok;
    else
        out["genus_cap_ok"] = unavailable("faces of order >= 6 present");
    out["passed"] = p.passed();
    return out;
}

ojson to_json(const ObstructionReport& r) {
    ojson out;
    out["verdict"] = r.obstructed() ? "obstructed" : "no_obstruction_found";
    out["reasons"] = r.reasons;
    ojson edges = ojson::array();
    for (const auto& b : r.per_edge) {
        ojson e{{"edge", b.edge}};
        e["mpf_upper_bound"] = b.mpf_upper_bound ? ojson(*b.mpf_upper_bound) : unavailable(b.reason);
        e["violated"] = b.violated;
        edges.push_back(std::move(e));
    }
    out["per_edge"] = std::move(edges);
    out["global_mpf_upper"] = r.global_mpf_upper ? ojson(*r.global_mpf_upper) : unavailable("planar mode only");

    const auto& z = r.zappa;
    ojson zj{{"applicable", z.applicable}};
    if (z.applicable) {
        zj["bound"] = z.bound;
        zj["slack_min"] = z.slack_min;
        zj["slack_max"] = z.slack_max;
        zj["equality_class"] = z.equality_class ? ojson(to_string(*z.equality_class)) : ojson(nullptr);
        if (!z.warning.empty()) zj["warning"] = z.warning;
    } else {
        zj["reason"] = z.reason;
    }
    out["zappa"] = std::move(zj);

    const auto& m = r.miyaoka_yau;
    ojson mj{{"applicable", m.applicable}};
    if (m.applicable) {
        mj["bound"] = m.bound;
        mj["satisfied_min"] = m.satisfied_min;
        mj["satisfied_max"] = m.satisfied_max;
    } else {
        mj["reason"] = m.reason;
    }
    out["miyaoka_yau"] = std::move(mj);
    return out;
}

}  // namespace zap
