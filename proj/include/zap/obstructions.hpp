#pragma once

// Smoothability tests. Each inequality is checked only under the hypotheses
// it was proved for; outside them the check reports "not applicable".

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zap/invariants.hpp"
#include "zap/zgraph.hpp"

namespace zap {

/// Upper bound for the number of total-space double points along `edge`:
///   N_u + N_v + f_3 - r_3 - sum_{n>=4} (rho_n + f_n)   (all counted along the edge).
/// Planar graphs use N_u + N_v = 2. Throws MissingWeightError when a general-mode
/// normal degree is absent and ReferenceError for an unknown edge.
std::int64_t mpf_edge(const ZappaticGraph& g, EdgeId edge);

/// 2e + 3 f_3 - 2 r_3 - sum_{n>=4} n f_n - sum_{n>=4} (n-1) rho_n. Planar only.
std::optional<std::int64_t> mpf_global(const ZappaticGraph& g);

/// N_u + N_v + f_3(edge) when every singular point is an E_3 point.
std::optional<std::int64_t> tpf_predicted_double_points(const ZappaticGraph& g, EdgeId edge);

enum class EqualityClass { veronese_S4, elliptic_cycle, other };
const char* to_string(EqualityClass c);

struct ZappaRecord {
    bool applicable = false;
    std::string reason;  // why not applicable
    std::int64_t bound = 0;       // 8 chi + 1 - g
    std::int64_t slack_min = 0;   // bound - K^2_max
    std::int64_t slack_max = 0;   // bound - K^2_min
    std::optional<EqualityClass> equality_class;
    std::string warning;
};

ZappaRecord zappa_bound(const ZappaticGraph& g, const InvariantReport& report);

struct MiyaokaYauRecord {
    bool applicable = false;
    std::string reason;
    std::int64_t bound = 0;  // 9 chi
    bool satisfied_min = false;  // K^2_min <= 9 chi
    bool satisfied_max = false;  // K^2_max <= 9 chi
};

MiyaokaYauRecord miyaoka_yau(const ZappaticGraph& g, const InvariantReport& report);

/// Counts a K3 graph-surface profile is checked against.
struct K3Counts {
    std::int64_t v = 0;
    std::int64_t e = 0;
    std::map<int, std::int64_t> faces;  // f_n by n
    bool three_valent = false;
};

struct K3Profile {
    bool applicable = false;
    std::int64_t g = 0;  // e - v + 1
    bool three_valent = false;
    bool vertices_ok = false;    // v = 2g - 2
    bool edges_ok = false;       // e = 3g - 3
    bool faces_ok = false;       // f = g + 1
    bool face_sum_ok = false;    // sum (6 - n) f_n = 12
    std::int64_t face_sum = 0;
    bool cap_applicable = false; // no faces with n >= 6
    bool cap_ok = true;          // g <= 11

    bool passed() const {
        return applicable && three_valent && vertices_ok && edges_ok && faces_ok && face_sum_ok && cap_ok;
    }
};

K3Profile k3_profile(const K3Counts& counts);
K3Profile k3_profile(const ZappaticGraph& g);

struct EdgeBound {
    EdgeId edge = 0;
    std::optional<std::int64_t> mpf_upper_bound;
    std::string reason;  // when the bound is unavailable
    bool violated = false;
};

struct ObstructionReport {
    std::vector<EdgeBound> per_edge;
    std::optional<std::int64_t> global_mpf_upper;
    ZappaRecord zappa;
    MiyaokaYauRecord miyaoka_yau;
    std::vector<std::string> reasons;  // empty = no obstruction found

    bool obstructed() const { return !reasons.empty(); }
};

ObstructionReport check_obstructions(const ZappaticGraph& g, const PhiData& phi = {});

}  // namespace zap
