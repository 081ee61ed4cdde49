#pragma once

// Combinatorial ribbon-disk presentations and their simplification.
//
// The disk boundary carries 2n marks. Each ribbon singularity i contributes
// a beta chord between two marks (the matching is non-crossing) and an alpha
// arc living in one face of the chord arrangement. Faces are enumerated by
// walking boundary segments from segment 0 (segment s sits between marks s
// and s+1); two segments see the same face exactly when the same set of
// chords covers them, and face ids f1, f2, ... follow first appearance.
//
// simplify removes one chord per step. A disk slide is free when the chord
// is outermost (no chord inside its span) and its span hosts neither another
// pending alpha nor the seam of an earlier cut; the chord's own alpha never
// obstructs, since the slide removes the whole singularity. When nothing is
// free, the first outermost chord is cut: the alphas in its span move to a
// new piece, seams nested in the span move with them, and a new seam marks
// the cut. The last chord always slides without a cut, so a presentation
// with n singularities needs at most n-1 cuts and the cut seams assemble
// into a tree on the pieces.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cabletorus {

struct RibbonPresentation {
    int n = 0;
    std::vector<std::pair<int, int>> chords;  // chords[i] is the beta arc of singularity i+1
    std::map<int, std::string> alpha;         // singularity id -> face id
    std::map<int, long long> framings;        // singularity id -> half twists (default 0)
};

struct RibbonFace {
    std::string id;
    std::vector<int> covering;  // singularity ids whose chord covers the face
    std::vector<int> segments;  // boundary segments showing this face
};

namespace detail {

inline std::pair<int, int> sorted_chord(std::pair<int, int> c) {
    if (c.first > c.second) std::swap(c.first, c.second);
    return c;
}

// Chord (a,b), a < b, covers boundary segments a..b-1.
inline bool covers(const std::pair<int, int>& chord, int segment) {
    return chord.first <= segment && segment < chord.second;
}

}  // namespace detail

// Canonical face table of the chord arrangement. Requires structurally sound
// chords (validate first).
inline std::vector<RibbonFace> faces(const RibbonPresentation& r) {
    std::vector<RibbonFace> out;
    std::map<std::vector<int>, std::size_t> index;
    for (int seg = 0; seg < 2 * r.n; ++seg) {
        std::vector<int> covering;
        for (int i = 0; i < r.n; ++i)
            if (detail::covers(detail::sorted_chord(r.chords[i]), seg)) covering.push_back(i + 1);
        auto [at, fresh] = index.try_emplace(covering, out.size());
        if (fresh) out.push_back({"f" + std::to_string(out.size() + 1), covering, {}});
        out[at->second].segments.push_back(seg);
    }
    return out;
}

// Well-formedness diagnostics; empty means valid.
inline std::vector<std::string> validate(const RibbonPresentation& r) {
    std::vector<std::string> bad;
    if (r.n < 1) {
        bad.push_back("presentation needs at least one singularity");
        return bad;
    }
    if (static_cast<int>(r.chords.size()) != r.n) {
        bad.push_back("expected " + std::to_string(r.n) + " chords, got " +
                      std::to_string(r.chords.size()));
        return bad;
    }
    std::set<int> used;
    for (int i = 0; i < r.n; ++i) {
        auto [a, b] = r.chords[i];
        for (int m : {a, b}) {
            if (m < 0 || m >= 2 * r.n)
                bad.push_back("chord " + std::to_string(i + 1) + " uses mark " +
                              std::to_string(m) + " outside 0.." + std::to_string(2 * r.n - 1));
            else if (!used.insert(m).second)
                bad.push_back("mark " + std::to_string(m) + " used twice");
        }
        if (a == b) bad.push_back("chord " + std::to_string(i + 1) + " joins a mark to itself");
    }
    if (!bad.empty()) return bad;

    for (int i = 0; i < r.n; ++i)
        for (int j = i + 1; j < r.n; ++j) {
            auto [a, b] = detail::sorted_chord(r.chords[i]);
            auto [c, d] = detail::sorted_chord(r.chords[j]);
            bool c_in = a < c && c < b, d_in = a < d && d < b;
            if (c_in != d_in)
                bad.push_back("chords " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " cross");
        }
    if (!bad.empty()) return bad;

    std::vector<RibbonFace> table = faces(r);
    std::set<std::string> face_ids;
    for (const RibbonFace& f : table) face_ids.insert(f.id);
    for (int i = 1; i <= r.n; ++i) {
        auto at = r.alpha.find(i);
        if (at == r.alpha.end())
            bad.push_back("singularity " + std::to_string(i) + " has no alpha placement");
        else if (!face_ids.count(at->second))
            bad.push_back("alpha of singularity " + std::to_string(i) + " names unknown face " +
                          at->second);
    }
    for (const auto& [id, face] : r.alpha)
        if (id < 1 || id > r.n)
            bad.push_back("alpha entry for unknown singularity " + std::to_string(id));
    for (const auto& [id, f] : r.framings) {
        (void)f;
        if (id < 1 || id > r.n)
            bad.push_back("framing entry for unknown singularity " + std::to_string(id));
    }
    return bad;
}

namespace detail {

inline void require_valid(const RibbonPresentation& r) {
    std::vector<std::string> bad = validate(r);
    if (bad.empty()) return;
    std::string msg = "invalid ribbon presentation";
    for (const std::string& b : bad) msg += "; " + b;
    throw std::domain_error(msg);
}

}  // namespace detail

struct OutermostChord {
    int singularity = 0;
    std::pair<int, int> chord;
    std::vector<int> empty_side;  // the span's boundary segments
};

// Chords whose span contains no other chord, ascending by smaller mark. The
// span may still contain alpha faces. A span reaching around the wrap side
// of the disk does not count as empty.
inline std::vector<OutermostChord> outermost_chords(const RibbonPresentation& r) {
    detail::require_valid(r);
    std::vector<OutermostChord> out;
    for (int i = 0; i < r.n; ++i) {
        auto [a, b] = detail::sorted_chord(r.chords[i]);
        bool empty = true;
        for (int j = 0; j < r.n && empty; ++j) {
            if (j == i) continue;
            auto [c, d] = detail::sorted_chord(r.chords[j]);
            if ((a < c && c < b) || (a < d && d < b)) empty = false;
        }
        if (!empty) continue;
        OutermostChord oc{i + 1, {a, b}, {}};
        for (int seg = a; seg < b; ++seg) oc.empty_side.push_back(seg);
        out.push_back(oc);
    }
    std::sort(out.begin(), out.end(),
              [](const OutermostChord& x, const OutermostChord& y) {
                  return x.chord.first < y.chord.first;
              });
    return out;
}

struct Move {
    enum class Kind { cut, slide };
    Kind kind = Kind::slide;
    int id = 0;         // cut number for cuts, singularity id for slides
    std::string piece;  // new piece for cuts; piece holding the alpha for slides
};

struct DualEdge {
    int cut_id = 0;
    std::string piece_a;  // piece split off by the cut
    std::string piece_b;  // final holder of the cut seam
};

struct SimplificationTrace {
    int n = 0;
    int cuts = 0;
    int pieces = 1;
    std::vector<Move> moves;
    std::vector<std::string> piece_ids;
    std::vector<DualEdge> dual_edges;
    std::vector<int> cut_singularities;  // cut k happened at this chord
};

inline SimplificationTrace simplify(const RibbonPresentation& r) {
    detail::require_valid(r);

    std::map<int, std::pair<int, int>> live;  // singularity id -> chord
    std::map<int, int> alpha_seg;             // pending alpha's face segment
    std::map<int, int> alpha_piece;           // 0 = main, k = piece of cut k
    {
        std::map<std::string, int> face_seg;
        for (const RibbonFace& f : faces(r)) face_seg[f.id] = f.segments.front();
        for (int i = 1; i <= r.n; ++i) {
            live[i] = detail::sorted_chord(r.chords[i - 1]);
            alpha_seg[i] = face_seg.at(r.alpha.at(i));
            alpha_piece[i] = 0;
        }
    }

    struct Seam {
        int cut_id;
        std::pair<int, int> span;
        int holder;  // piece index currently carrying the seam
    };
    std::vector<Seam> seams;

    SimplificationTrace trace;
    trace.n = r.n;
    trace.piece_ids.push_back("p0");

    auto piece_name = [](int k) { return "p" + std::to_string(k); };
    auto slide = [&](int id) {
        trace.moves.push_back({Move::Kind::slide, id, piece_name(alpha_piece.at(id))});
        live.erase(id);
        alpha_seg.erase(id);
        alpha_piece.erase(id);
    };

    while (!live.empty()) {
        if (live.size() == 1) {  // the last chord never needs a cut
            slide(live.begin()->first);
            break;
        }

        std::vector<int> outer;  // ascending smaller mark, the map is keyed by id
        for (const auto& [id, chord] : live) {
            bool empty = true;
            for (const auto& [jd, other] : live) {
                if (jd == id) continue;
                if ((chord.first < other.first && other.first < chord.second) ||
                    (chord.first < other.second && other.second < chord.second)) {
                    empty = false;
                    break;
                }
            }
            if (empty) outer.push_back(id);
        }
        std::sort(outer.begin(), outer.end(), [&](int x, int y) {
            return live.at(x).first < live.at(y).first;
        });

        auto blocked = [&](int id) {
            const std::pair<int, int>& chord = live.at(id);
            for (const auto& [jd, seg] : alpha_seg)
                if (jd != id && alpha_piece.at(jd) == 0 && detail::covers(chord, seg))
                    return true;
            for (const Seam& s : seams)
                if (s.holder == 0 && chord.first <= s.span.first && s.span.second <= chord.second)
                    return true;
            return false;
        };

        int free_id = 0;
        for (int id : outer)
            if (!blocked(id)) {
                free_id = id;
                break;
            }
        if (free_id != 0) {
            slide(free_id);
            continue;
        }

        // no free slide: cut off the first outermost chord's span
        int id = outer.front();
        std::pair<int, int> chord = live.at(id);
        int k = ++trace.cuts;
        trace.piece_ids.push_back(piece_name(k));
        for (auto& [jd, seg] : alpha_seg)
            if (alpha_piece.at(jd) == 0 && detail::covers(chord, seg)) alpha_piece[jd] = k;
        for (Seam& s : seams)
            if (s.holder == 0 && chord.first <= s.span.first && s.span.second <= chord.second)
                s.holder = k;
        seams.push_back({k, chord, 0});
        trace.moves.push_back({Move::Kind::cut, k, piece_name(k)});
        trace.cut_singularities.push_back(id);
        slide(id);
    }

    trace.pieces = trace.cuts + 1;
    for (const Seam& s : seams)
        trace.dual_edges.push_back({s.cut_id, piece_name(s.cut_id), piece_name(s.holder)});
    return trace;
}

struct DualGraphCertificate {
    int vertices = 0;
    int edges = 0;
    std::vector<std::string> peel_order;  // univalent eliminations, root last
};

// Proves the dual graph is a tree by peeling univalent vertices (largest
// piece index first); a trace that cannot be peeled indicates a bug in
// simplify, never bad input.
inline DualGraphCertificate dual_graph_certificate(const SimplificationTrace& t) {
    int v = static_cast<int>(t.piece_ids.size());
    if (t.pieces != v || t.pieces != t.cuts + 1 ||
        static_cast<int>(t.dual_edges.size()) != t.cuts)
        throw std::logic_error("trace bookkeeping is inconsistent");

    std::map<std::string, int> index;
    for (int i = 0; i < v; ++i) index[t.piece_ids[i]] = i;
    std::vector<std::set<int>> adj(v);
    for (const DualEdge& e : t.dual_edges) {
        auto a = index.find(e.piece_a), b = index.find(e.piece_b);
        if (a == index.end() || b == index.end() || a->second == b->second)
            throw std::logic_error("dual edge names a bad piece pair");
        if (!adj[a->second].insert(b->second).second)
            throw std::logic_error("duplicate dual edge");
        adj[b->second].insert(a->second);
    }

    DualGraphCertificate cert{v, t.cuts, {}};
    if (v == 1) return cert;
    std::vector<bool> alive(v, true);
    for (int remaining = v; remaining > 1; --remaining) {
        int leaf = -1;
        for (int i = v - 1; i >= 0; --i)
            if (alive[i] && adj[i].size() == 1) {
                leaf = i;
                break;
            }
        if (leaf < 0) throw std::logic_error("dual graph has a cycle");
        alive[leaf] = false;
        int nbr = *adj[leaf].begin();
        adj[nbr].erase(leaf);
        adj[leaf].clear();
        cert.peel_order.push_back(t.piece_ids[leaf]);
    }
    for (int i = 0; i < v; ++i)
        if (alive[i]) cert.peel_order.push_back(t.piece_ids[i]);
    return cert;
}

struct ParityAdjustment {
    int cut_id = 0;
    long long from = 0;
    long long to = 0;
};

struct HandlebodySummary {
    int handle_pairs = 0;
    std::vector<std::pair<int, long long>> framings;  // per cut, even after adjustment
    std::vector<ParityAdjustment> parity_adjustments;
    bool unknot_without_handles = false;
};

// One canceling 1-2 handle pair per cut; a 2-handle framing counts half
// twists, so odd values take one extra half twist to land on an even count.
inline HandlebodySummary handlebody_summary(const SimplificationTrace& t,
                                            const std::map<int, long long>& framings) {
    if (t.cuts > t.n - 1) throw std::logic_error("more cuts than the n-1 bound allows");
    HandlebodySummary out;
    out.handle_pairs = t.cuts;
    out.unknot_without_handles = t.cuts == 0;
    for (int k = 1; k <= t.cuts; ++k) {
        int sing = t.cut_singularities[static_cast<std::size_t>(k) - 1];
        auto at = framings.find(sing);
        long long f = at == framings.end() ? 0 : at->second;
        if (f % 2 != 0) {
            out.parity_adjustments.push_back({k, f, f - 1});
            f -= 1;
        }
        out.framings.emplace_back(k, f);
    }
    return out;
}

}  // namespace cabletorus
