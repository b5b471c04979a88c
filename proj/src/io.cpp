#include "zap/io.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "zap/errors.hpp"

namespace zap {

namespace {

using json = nlohmann::json;

constexpr std::array kTopKeys{"mode", "vertices", "edges", "points"};
constexpr std::array kVertexWeightKeys{"chi", "k2", "pg", "q", "sectional_genus", "degree"};
constexpr std::array kEdgeWeightKeys{"genus",      "degree",       "self_int_u",  "self_int_v",
                                     "normal_deg_u", "normal_deg_v"};

int line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

template <std::size_t N>
bool contains(const std::array<const char*, N>& keys, const std::string& k) {
    return std::any_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; });
}

std::int64_t as_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
    if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        throw ParseError(path, "integer out of range");
    return j.get<std::int64_t>();
}

std::size_t as_index(const json& j, const std::string& path) {
    const auto x = as_int(j, path);
    if (x < 0) throw ParseError(path, "expected a nonnegative index");
    return static_cast<std::size_t>(x);
}

Weight opt_int(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    return as_int(*it, path + "/" + key);
}

// Places records by optional "id", defaulting to array position.
std::vector<const json*> order_by_id(const json& arr, const std::string& path) {
    std::vector<const json*> slots(arr.size(), nullptr);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string here = path + "/" + std::to_string(i);
        if (!arr[i].is_object()) throw ParseError(here, "expected an object");
        std::size_t id = i;
        if (auto it = arr[i].find("id"); it != arr[i].end()) id = as_index(*it, here + "/id");
        if (id >= arr.size()) throw ParseError(here + "/id", "ids must be dense 0.." + std::to_string(arr.size() - 1));
        if (slots[id]) throw ParseError(here + "/id", "duplicate id " + std::to_string(id));
        slots[id] = &arr[i];
    }
    return slots;
}

void reject_unknown(const json& obj, const std::string& path, Mode mode, bool vertex) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string& k = it.key();
        if (k == "id") continue;
        if (!vertex && (k == "u" || k == "v")) continue;
        const bool weight = vertex ? contains(kVertexWeightKeys, k) : contains(kEdgeWeightKeys, k);
        if (!weight) throw ParseError(path + "/" + k, "unknown field");
        if (mode == Mode::planar) throw ParseError(path + "/" + k, "weights are implied in planar mode");
    }
}

}  // namespace

ZappaticGraph load_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // keep only the part after "...parse error at line L, column C: "
        std::string what = e.what();
        if (auto cut = what.find(": ", what.find("column")); cut != std::string::npos) what = what.substr(cut + 2);
        throw ParseError("", what, line_of(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    if (!doc.is_object()) throw ParseError("", "top level must be an object", 1);
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!contains(kTopKeys, it.key())) throw ParseError("/" + it.key(), "unknown field");

    ZappaticGraph g;
    if (auto it = doc.find("mode"); it != doc.end()) {
        if (*it == "planar") g.mode = Mode::planar;
        else if (*it == "general") g.mode = Mode::general;
        else throw ParseError("/mode", "expected \"planar\" or \"general\"");
    }

    auto vit = doc.find("vertices");
    if (vit == doc.end() || !vit->is_array()) throw ParseError("/vertices", "expected an array");
    if (vit->empty()) throw ParseError("/vertices", "vertex list is empty");
    for (const json* rec : order_by_id(*vit, "/vertices")) {
        const std::string path = "/vertices/" + std::to_string(g.vertices.size());
        reject_unknown(*rec, path, g.mode, true);
        if (g.mode == Mode::planar) {
            g.vertices.push_back(VertexWeights::plane());
        } else {
            g.vertices.push_back({opt_int(*rec, "chi", path), opt_int(*rec, "k2", path), opt_int(*rec, "pg", path),
                                  opt_int(*rec, "q", path), opt_int(*rec, "sectional_genus", path),
                                  opt_int(*rec, "degree", path)});
        }
    }
    const std::size_t n = g.vertices.size();

    if (auto eit = doc.find("edges"); eit != doc.end()) {
        if (!eit->is_array()) throw ParseError("/edges", "expected an array");
        for (const json* rec : order_by_id(*eit, "/edges")) {
            const std::string path = "/edges/" + std::to_string(g.edges.size());
            reject_unknown(*rec, path, g.mode, false);
            if (!rec->contains("u") || !rec->contains("v")) throw ParseError(path, "edge needs \"u\" and \"v\"");
            const auto u = as_index(rec->at("u"), path + "/u");
            const auto v = as_index(rec->at("v"), path + "/v");
            for (auto [x, key] : {std::pair{u, "u"}, std::pair{v, "v"}}) {
                if (x >= n)
                    throw ReferenceError(path + "/" + key + ": unknown vertex " + std::to_string(x) + " (graph has " +
                                         std::to_string(n) + ")");
            }
            EdgeData e;
            if (g.mode == Mode::planar) {
                e = EdgeData::line(u, v);
            } else {
                e = {u,
                     v,
                     opt_int(*rec, "genus", path),
                     opt_int(*rec, "degree", path),
                     opt_int(*rec, "self_int_u", path),
                     opt_int(*rec, "self_int_v", path),
                     opt_int(*rec, "normal_deg_u", path),
                     opt_int(*rec, "normal_deg_v", path)};
                if (e.u > e.v) {
                    std::swap(e.u, e.v);
                    std::swap(e.self_int_u, e.self_int_v);
                    std::swap(e.normal_deg_u, e.normal_deg_v);
                }
            }
            g.edges.push_back(e);
        }
    }

    if (auto pit = doc.find("points"); pit != doc.end()) {
        if (!pit->is_array()) throw ParseError("/points", "expected an array");
        for (std::size_t i = 0; i < pit->size(); ++i) {
            const json& rec = (*pit)[i];
            const std::string path = "/points/" + std::to_string(i);
            if (!rec.is_object()) throw ParseError(path, "expected an object");
            for (auto it = rec.begin(); it != rec.end(); ++it)
                if (it.key() != "kind" && it.key() != "edges") throw ParseError(path + "/" + it.key(), "unknown field");
            SingularPoint p;
            auto kit = rec.find("kind");
            if (kit == rec.end() || !kit->is_string()) throw ParseError(path + "/kind", "expected \"E\", \"R\" or \"S\"");
            const auto kind = kit->get<std::string>();
            if (kind == "E") p.kind = PointKind::E;
            else if (kind == "R") p.kind = PointKind::R;
            else if (kind == "S") p.kind = PointKind::S;
            else throw ParseError(path + "/kind", "expected \"E\", \"R\" or \"S\"");
            auto lit = rec.find("edges");
            if (lit == rec.end() || !lit->is_array()) throw ParseError(path + "/edges", "expected an array");
            for (std::size_t k = 0; k < lit->size(); ++k) {
                const auto id = as_index((*lit)[k], path + "/edges/" + std::to_string(k));
                if (id >= g.edges.size())
                    throw ReferenceError(path + "/edges/" + std::to_string(k) + ": unknown edge " + std::to_string(id));
                p.edges.push_back(id);
            }
            g.points.push_back(std::move(p));
        }
    }
    return g;
}

namespace {

void put(ojson& obj, const char* key, const Weight& w) {
    if (w) obj[key] = *w;
}

}  // namespace

ojson to_json(const ZappaticGraph& g) {
    ojson out = ojson::object();
    out["mode"] = to_string(g.mode);
    out["vertices"] = ojson::array();
    for (const auto& w : g.vertices) {
        ojson rec = ojson::object();
        if (g.mode == Mode::general) {
            put(rec, "chi", w.chi);
            put(rec, "k2", w.k2);
            put(rec, "pg", w.pg);
            put(rec, "q", w.q);
            put(rec, "sectional_genus", w.sectional_genus);
            put(rec, "degree", w.degree);
        }
        out["vertices"].push_back(std::move(rec));
    }
    out["edges"] = ojson::array();
    for (const auto& e : g.edges) {
        ojson rec = ojson::object();
        rec["u"] = e.u;
        rec["v"] = e.v;
        if (g.mode == Mode::general) {
            put(rec, "genus", e.genus);
            put(rec, "degree", e.degree);
            put(rec, "self_int_u", e.self_int_u);
            put(rec, "self_int_v", e.self_int_v);
            put(rec, "normal_deg_u", e.normal_deg_u);
            put(rec, "normal_deg_v", e.normal_deg_v);
        }
        out["edges"].push_back(std::move(rec));
    }
    out["points"] = ojson::array();
    for (const auto& p : g.points) {
        ojson rec = ojson::object();
        rec["kind"] = std::string(1, to_char(p.kind));
        rec["edges"] = p.edges;
        out["points"].push_back(std::move(rec));
    }
    return out;
}

std::string serialize(const ZappaticGraph& g, bool pretty) {
    return to_json(g).dump(pretty ? 2 : -1) + "\n";
}

}  // namespace zap
