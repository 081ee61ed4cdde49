#pragma once

// JSON wire formats. Emission uses ordered maps and fixed key order so equal
// inputs serialize to equal bytes. Slopes travel as "q/p" strings ("inf" for
// the infinite slope, integer shorthand for den 1); other integers are JSON
// numbers while they fit in 64 bits and decimal strings beyond that, and the
// parsers accept either form.

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cables.hpp"
#include "classify.hpp"
#include "paths.hpp"
#include "ribbon.hpp"
#include "slope.hpp"

namespace cabletorus {

using json = nlohmann::ordered_json;

namespace detail {

template <SlopeInteger Int>
json int_to_json(const Int& v) {
    if constexpr (std::is_integral_v<Int>) {
        return static_cast<std::int64_t>(v);
    } else {
        static const Int lo(std::numeric_limits<std::int64_t>::min());
        static const Int hi(std::numeric_limits<std::int64_t>::max());
        if (lo <= v && v <= hi) return v.template convert_to<std::int64_t>();
        return v.str();
    }
}

template <SlopeInteger Int>
Int int_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string& text = j.get_ref<const std::string&>();
        try {
            if constexpr (std::is_integral_v<Int>)
                return static_cast<Int>(std::stoll(text));
            else
                return Int(text);
        } catch (const std::exception&) {
            throw std::domain_error(std::string(what) + " is not an integer: " + text);
        }
    }
    throw std::domain_error(std::string(what) + " must be an integer or integer string");
}

inline const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::domain_error(std::string("missing JSON field \"") + key + "\"");
    return j.at(key);
}

inline std::string string_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_string())
        throw std::domain_error(std::string("JSON field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

}  // namespace detail

// ---- decorated and bare paths: {"vertices": [...], "signs": [...], "truncated": b}

template <SlopeInteger Int>
json path_to_json(const BasicDecoratedPath<Int>& d) {
    json out;
    out["vertices"] = json::array();
    for (const BasicSlope<Int>& v : d.vertices) out["vertices"].push_back(to_string(v));
    out["signs"] = json::array();
    for (Sign s : d.signs) out["signs"].push_back(std::string(1, to_char(s)));
    out["truncated"] = d.truncated;
    return out;
}

template <SlopeInteger Int>
json path_to_json(const BasicVertexPath<Int>& vs) {
    BasicDecoratedPath<Int> d;
    d.vertices = vs;
    return path_to_json(d);
}

template <SlopeInteger Int = BigInt>
BasicDecoratedPath<Int> path_from_json(const json& j) {
    BasicDecoratedPath<Int> d;
    const json& vertices = detail::member(j, "vertices");
    if (!vertices.is_array()) throw std::domain_error("\"vertices\" must be an array");
    for (const json& v : vertices) {
        if (!v.is_string()) throw std::domain_error("vertices must be slope strings");
        d.vertices.push_back(parse_slope<Int>(v.get_ref<const std::string&>()));
    }
    if (j.contains("signs")) {
        const json& signs = j.at("signs");
        if (!signs.is_array()) throw std::domain_error("\"signs\" must be an array");
        for (const json& s : signs) {
            if (!s.is_string() || s.get_ref<const std::string&>().size() != 1)
                throw std::domain_error("signs must be \"+\" or \"-\"");
            d.signs.push_back(parse_sign(s.get_ref<const std::string&>()[0]));
        }
    }
    if (j.contains("truncated")) {
        if (!j.at("truncated").is_boolean())
            throw std::domain_error("\"truncated\" must be a boolean");
        d.truncated = j.at("truncated").get<bool>();
    }
    // an empty untruncated sign list is a bare vertex walk, the form the
    // path emitters produce for undecorated paths; anything else must be a
    // fully decorated path
    if (d.signs.empty() && !d.truncated)
        validate_vertex_path(d.vertices);
    else
        validate_decorated_path(d);
    return d;
}

// ---- classification results

template <SlopeInteger Int>
json contact_class_to_json(const BasicContactClass<Int>& c) {
    json out;
    out["verdict"] = to_string(c.verdict);
    out["witness"] = c.canonical_witness ? path_to_json(*c.canonical_witness) : json(nullptr);
    return out;
}

template <SlopeInteger Int>
json audit_to_json(const BasicClassifyAudit<Int>& a) {
    json out = contact_class_to_json(a.existential);
    out["strict_universal"] = a.strict_universal;
    out["modes_disagree"] = a.modes_disagree;
    return out;
}

inline json count_to_json(std::size_t count, std::size_t universally_tight) {
    json out;
    out["count"] = count;
    out["universally_tight"] = universally_tight;
    return out;
}

template <SlopeInteger Int>
json thickening_to_json(const BasicThickening<Int>& t) {
    json out;
    out["target"] = to_string(t.target);
    out["path"] = path_to_json(t.path);
    return out;
}

// ---- cable records and knot profiles: {"tb_max": n, "cables": [{"p","q","tb"}]}

template <SlopeInteger Int>
json cable_to_json(const BasicCableRecord<Int>& r) {
    json out;
    out["p"] = detail::int_to_json(r.p);
    out["q"] = detail::int_to_json(r.q);
    out["tb"] = detail::int_to_json(r.tb);
    return out;
}

template <SlopeInteger Int = BigInt>
BasicCableRecord<Int> cable_from_json(const json& j) {
    BasicCableRecord<Int> r;
    r.p = detail::int_from_json<Int>(detail::member(j, "p"), "\"p\"");
    r.q = detail::int_from_json<Int>(detail::member(j, "q"), "\"q\"");
    r.tb = detail::int_from_json<Int>(detail::member(j, "tb"), "\"tb\"");
    validate(r);
    return r;
}

template <SlopeInteger Int>
json profile_to_json(const BasicKnotProfile<Int>& k) {
    json out;
    out["tb_max"] = detail::int_to_json(k.tb_max);
    out["cables"] = json::array();
    for (const BasicCableRecord<Int>& r : k.cables) out["cables"].push_back(cable_to_json(r));
    return out;
}

template <SlopeInteger Int = BigInt>
BasicKnotProfile<Int> profile_from_json(const json& j) {
    BasicKnotProfile<Int> k;
    k.tb_max = detail::int_from_json<Int>(detail::member(j, "tb_max"), "\"tb_max\"");
    const json& cables = detail::member(j, "cables");
    if (!cables.is_array()) throw std::domain_error("\"cables\" must be an array");
    for (const json& c : cables) k.cables.push_back(cable_from_json<Int>(c));
    return k;
}

template <SlopeInteger Int>
json llc_to_json(const BasicLlcReport<Int>& r) {
    json out;
    out["llc"] = r.llc;
    out["witnesses"] = json::array();
    for (const BasicCableRecord<Int>& w : r.witnesses) out["witnesses"].push_back(cable_to_json(w));
    out["width_lower_bound"] = r.width ? json(to_string(r.width->lower_bound)) : json(nullptr);
    out["virtually_overtwisted_torus"] = r.virtually_overtwisted_torus;
    return out;
}

template <SlopeInteger Int>
json ut_verdict_to_json(const BasicUniformThicknessVerdict<Int>& v) {
    json out;
    out["refuted"] = v.refuted;
    out["witness"] = v.witness ? cable_to_json(*v.witness) : json(nullptr);
    out["only_trivial_cables"] = v.only_trivial_cables;
    return out;
}

// ---- ribbon presentations and traces

inline json ribbon_to_json(const RibbonPresentation& r) {
    json out;
    out["n"] = r.n;
    out["chords"] = json::array();
    for (const auto& [a, b] : r.chords) out["chords"].push_back(json::array({a, b}));
    out["alpha"] = json::object();
    for (const auto& [id, face] : r.alpha) out["alpha"][std::to_string(id)] = face;
    out["framings"] = json::object();
    for (const auto& [id, f] : r.framings) out["framings"][std::to_string(id)] = f;
    return out;
}

inline RibbonPresentation ribbon_from_json(const json& j) {
    RibbonPresentation r;
    const json& n = detail::member(j, "n");
    if (!n.is_number_integer()) throw std::domain_error("\"n\" must be an integer");
    r.n = n.get<int>();
    const json& chords = detail::member(j, "chords");
    if (!chords.is_array()) throw std::domain_error("\"chords\" must be an array");
    for (const json& c : chords) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
            !c[1].is_number_integer())
            throw std::domain_error("each chord must be a pair of marks");
        r.chords.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    auto parse_id = [](const std::string& key) {
        try {
            return std::stoi(key);
        } catch (const std::exception&) {
            throw std::domain_error("singularity keys must be integers, got \"" + key + "\"");
        }
    };
    const json& alpha = detail::member(j, "alpha");
    if (!alpha.is_object()) throw std::domain_error("\"alpha\" must be an object");
    for (const auto& [key, face] : alpha.items()) {
        if (!face.is_string()) throw std::domain_error("alpha values must be face ids");
        r.alpha[parse_id(key)] = face.get<std::string>();
    }
    if (j.contains("framings")) {
        const json& framings = j.at("framings");
        if (!framings.is_object()) throw std::domain_error("\"framings\" must be an object");
        for (const auto& [key, f] : framings.items()) {
            if (!f.is_number_integer())
                throw std::domain_error("framings must be integers");
            r.framings[parse_id(key)] = f.get<long long>();
        }
    }
    return r;
}

inline json trace_to_json(const SimplificationTrace& t) {
    json out;
    out["n"] = t.n;
    out["cuts"] = t.cuts;
    out["pieces"] = t.pieces;
    out["moves"] = json::array();
    for (const Move& m : t.moves) {
        json mv;
        mv["move"] = m.kind == Move::Kind::cut ? "cut" : "slide";
        mv["id"] = m.id;
        mv["piece"] = m.piece;
        out["moves"].push_back(mv);
    }
    out["piece_ids"] = t.piece_ids;
    out["cut_singularities"] = t.cut_singularities;
    out["dual_edges"] = json::array();
    for (const DualEdge& e : t.dual_edges) {
        json ed;
        ed["cut"] = e.cut_id;
        ed["from"] = e.piece_a;
        ed["to"] = e.piece_b;
        out["dual_edges"].push_back(ed);
    }
    return out;
}

inline SimplificationTrace trace_from_json(const json& j) {
    SimplificationTrace t;
    t.n = detail::member(j, "n").get<int>();
    t.cuts = detail::member(j, "cuts").get<int>();
    t.pieces = detail::member(j, "pieces").get<int>();
    const json& moves = detail::member(j, "moves");
    if (!moves.is_array()) throw std::domain_error("\"moves\" must be an array");
    for (const json& m : moves) {
        Move mv;
        std::string kind = detail::string_member(m, "move");
        if (kind == "cut")
            mv.kind = Move::Kind::cut;
        else if (kind == "slide")
            mv.kind = Move::Kind::slide;
        else
            throw std::domain_error("unknown move kind \"" + kind + "\"");
        mv.id = detail::member(m, "id").get<int>();
        mv.piece = detail::string_member(m, "piece");
        t.moves.push_back(mv);
    }
    for (const json& p : detail::member(j, "piece_ids")) t.piece_ids.push_back(p.get<std::string>());
    for (const json& s : detail::member(j, "cut_singularities"))
        t.cut_singularities.push_back(s.get<int>());
    for (const json& e : detail::member(j, "dual_edges"))
        t.dual_edges.push_back({detail::member(e, "cut").get<int>(),
                                detail::string_member(e, "from"),
                                detail::string_member(e, "to")});
    return t;
}

inline json handlebody_to_json(const HandlebodySummary& h) {
    json out;
    out["handle_pairs"] = h.handle_pairs;
    out["framings"] = json::array();
    for (const auto& [cut, f] : h.framings)
        out["framings"].push_back(json::array({json(cut), json(f)}));
    out["parity_adjustments"] = json::array();
    for (const ParityAdjustment& a : h.parity_adjustments) {
        json adj;
        adj["cut"] = a.cut_id;
        adj["from"] = a.from;
        adj["to"] = a.to;
        out["parity_adjustments"].push_back(adj);
    }
    out["unknot_without_handles"] = h.unknot_without_handles;
    return out;
}

}  // namespace cabletorus
