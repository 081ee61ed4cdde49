#pragma once

// Decorated clockwise paths and the tight-structure bookkeeping built on
// them: sign shuffles inside continued fraction blocks, shortenings,
// classification, enumeration of decoration classes, thickening targets.
//
// A decorated path carries one sign per jump; a truncated path leaves its
// first jump undecorated. Paths that differ only by shuffling signs within a
// continued fraction block are equivalent; the canonical form sorts each
// block's signs with + before -.

#include "cabletorus/paths.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cabletorus {

enum class Sign { plus, minus };

inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

inline Sign parse_sign(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    throw std::domain_error("sign must be '+' or '-'");
}

template <SlopeInteger Int>
struct BasicDecoratedPath {
    BasicVertexPath<Int> vertices;
    std::vector<Sign> signs;  // one per decorated jump, left to right
    bool truncated = false;   // first jump undecorated

    friend bool operator==(const BasicDecoratedPath&, const BasicDecoratedPath&) = default;
};

using DecoratedPath = BasicDecoratedPath<BigInt>;

template <SlopeInteger Int>
std::size_t jump_count(const BasicDecoratedPath<Int>& d) {
    return d.vertices.size() - 1;
}

// 1-based index of the first decorated jump.
template <SlopeInteger Int>
std::size_t first_decorated_jump(const BasicDecoratedPath<Int>& d) {
    return d.truncated ? 2 : 1;
}

template <SlopeInteger Int>
void validate_decorated_path(const BasicDecoratedPath<Int>& d) {
    validate_vertex_path(d.vertices);
    std::size_t jumps = jump_count(d);
    if (d.truncated && jumps == 0)
        throw std::domain_error("truncated path needs a first jump");
    std::size_t expect = jumps - (d.truncated ? 1 : 0);
    if (d.signs.size() != expect)
        throw std::domain_error("decorated path needs one sign per decorated jump");
}

// Sign of jump j (1-based); nullopt on the undecorated first jump.
template <SlopeInteger Int>
std::optional<Sign> sign_of_jump(const BasicDecoratedPath<Int>& d, std::size_t j) {
    if (j < 1 || j > jump_count(d)) throw std::domain_error("jump index out of range");
    std::size_t fd = first_decorated_jump(d);
    if (j < fd) return std::nullopt;
    return d.signs[j - fd];
}

template <SlopeInteger Int>
BasicDecoratedPath<Int> canonical_form(const BasicDecoratedPath<Int>& d) {
    validate_decorated_path(d);
    BasicDecoratedPath<Int> out = d;
    if (jump_count(d) == 0) return out;
    std::size_t fd = first_decorated_jump(d);
    for (const JumpRange& blk : cf_blocks(d.vertices).blocks) {
        std::size_t lo = std::max(blk.first, fd);
        if (lo > blk.last) continue;
        std::sort(out.signs.begin() + (lo - fd), out.signs.begin() + (blk.last - fd + 1));
    }
    return out;
}

template <SlopeInteger Int>
bool shuffle_equivalent(const BasicDecoratedPath<Int>& d1, const BasicDecoratedPath<Int>& d2) {
    validate_decorated_path(d1);
    validate_decorated_path(d2);
    if (d1.vertices != d2.vertices || d1.truncated != d2.truncated) return false;
    return canonical_form(d1).signs == canonical_form(d2).signs;
}

// Every sign arrangement reachable by block shuffles, starting from the
// canonical form; deterministic order (rightmost block advances fastest).
template <SlopeInteger Int>
std::vector<BasicDecoratedPath<Int>> block_shuffles(const BasicDecoratedPath<Int>& d) {
    BasicDecoratedPath<Int> cur = canonical_form(d);
    if (jump_count(cur) == 0 || cur.signs.empty()) return {cur};
    std::size_t fd = first_decorated_jump(cur);
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // sign index ranges [lo, hi)
    for (const JumpRange& blk : cf_blocks(cur.vertices).blocks) {
        std::size_t lo = std::max(blk.first, fd);
        if (lo > blk.last) continue;
        spans.emplace_back(lo - fd, blk.last - fd + 1);
    }
    std::vector<BasicDecoratedPath<Int>> out;
    while (true) {
        out.push_back(cur);
        std::size_t k = spans.size();
        while (k > 0) {
            auto [lo, hi] = spans[k - 1];
            if (std::next_permutation(cur.signs.begin() + lo, cur.signs.begin() + hi)) break;
            --k;  // this block wrapped back to sorted order, carry left
        }
        if (k == 0) break;
    }
    return out;
}

template <SlopeInteger Int>
struct BasicShortenResult {
    BasicDecoratedPath<Int> path;
    bool consistent = false;
    // Sign carried into the merged jump, surfaced even when the merged jump
    // of a truncated path stays structurally undecorated.
    std::optional<Sign> merged_sign;
};

using ShortenResult = BasicShortenResult<BigInt>;

// Delete vertex i, merging jumps i and i+1. Equal signs merge consistently;
// the undecorated first jump of a truncated path merges consistently with
// either sign and the merged jump stays undecorated.
template <SlopeInteger Int>
BasicShortenResult<Int> shorten(const BasicDecoratedPath<Int>& d, std::size_t i) {
    validate_decorated_path(d);
    if (i < 1 || i + 1 > jump_count(d)) throw std::domain_error("shorten: jump index out of range");
    if (!is_edge(d.vertices[i - 1], d.vertices[i + 1]))
        throw std::domain_error("shorten: no shortening site at this index");

    std::optional<Sign> s1 = sign_of_jump(d, i);
    std::optional<Sign> s2 = sign_of_jump(d, i + 1);
    BasicShortenResult<Int> out;
    out.consistent = !s1 || !s2 || *s1 == *s2;
    out.merged_sign = s1 ? s1 : s2;

    out.path.vertices = d.vertices;
    out.path.vertices.erase(out.path.vertices.begin() + static_cast<std::ptrdiff_t>(i));
    out.path.truncated = d.truncated;
    out.path.signs = d.signs;
    std::size_t fd = first_decorated_jump(d);
    out.path.signs.erase(out.path.signs.begin() + static_cast<std::ptrdiff_t>(i + 1 - fd));
    if (i >= fd) out.path.signs[i - fd] = *out.merged_sign;
    return out;
}

enum class Verdict { overtwisted, universally_tight, virtually_overtwisted };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::overtwisted: return "Overtwisted";
        case Verdict::universally_tight: return "UniversallyTight";
        case Verdict::virtually_overtwisted: return "VirtuallyOvertwisted";
    }
    throw std::logic_error("unknown verdict");
}

template <SlopeInteger Int>
struct BasicContactClass {
    Verdict verdict = Verdict::overtwisted;
    std::optional<BasicDecoratedPath<Int>> canonical_witness;
};

using ContactClass = BasicContactClass<BigInt>;

namespace detail {

template <SlopeInteger Int>
std::string state_key(const BasicDecoratedPath<Int>& d) {
    std::string key = d.truncated ? "t" : "u";
    for (const BasicSlope<Int>& v : d.vertices) {
        key += '|';
        key += to_string(v);
    }
    key += '|';
    for (Sign s : d.signs) key += to_char(s);
    return key;
}

// Tight on a minimal path: all decorated signs equal, or at most one of them.
template <SlopeInteger Int>
Verdict minimal_verdict(const BasicDecoratedPath<Int>& witness) {
    for (Sign s : witness.signs)
        if (s != witness.signs.front()) return Verdict::virtually_overtwisted;
    return Verdict::universally_tight;
}

}  // namespace detail

// Shared memo for the two tightness predicates; pass one instance across
// many calls when sweeping.
struct ClassifyContext {
    std::map<std::string, bool> existential;
    std::map<std::string, bool> universal;
};

// Some interleaving of block shuffles and consistent shortenings reaches a
// minimal path.
template <SlopeInteger Int>
bool existential_tight(const BasicDecoratedPath<Int>& d, ClassifyContext& ctx) {
    BasicDecoratedPath<Int> c = canonical_form(d);
    std::string key = detail::state_key(c);
    auto hit = ctx.existential.find(key);
    if (hit != ctx.existential.end()) return hit->second;
    bool tight = false;
    if (is_minimal(c.vertices)) {
        tight = true;
    } else {
        for (const BasicDecoratedPath<Int>& arr : block_shuffles(c)) {
            for (std::size_t i : shortening_sites(arr.vertices)) {
                BasicShortenResult<Int> r = shorten(arr, i);
                if (r.consistent && existential_tight(r.path, ctx)) {
                    tight = true;
                    break;
                }
            }
            if (tight) break;
        }
    }
    ctx.existential[key] = tight;
    return tight;
}

// Every shortening of every shuffle is consistent, recursively, and a
// non-minimal path always has somewhere to go.
template <SlopeInteger Int>
bool strict_universal_tight(const BasicDecoratedPath<Int>& d, ClassifyContext& ctx) {
    BasicDecoratedPath<Int> c = canonical_form(d);
    std::string key = detail::state_key(c);
    auto hit = ctx.universal.find(key);
    if (hit != ctx.universal.end()) return hit->second;
    bool tight;
    if (is_minimal(c.vertices)) {
        tight = true;
    } else if (shortening_sites(c.vertices).empty()) {
        tight = false;
    } else {
        tight = true;
        for (const BasicDecoratedPath<Int>& arr : block_shuffles(c)) {
            for (std::size_t i : shortening_sites(arr.vertices)) {
                BasicShortenResult<Int> r = shorten(arr, i);
                if (!r.consistent || !strict_universal_tight(r.path, ctx)) {
                    tight = false;
                    break;
                }
            }
            if (!tight) break;
        }
    }
    ctx.universal[key] = tight;
    return tight;
}

template <SlopeInteger Int>
bool existential_tight(const BasicDecoratedPath<Int>& d) {
    ClassifyContext ctx;
    return existential_tight(d, ctx);
}

template <SlopeInteger Int>
bool strict_universal_tight(const BasicDecoratedPath<Int>& d) {
    ClassifyContext ctx;
    return strict_universal_tight(d, ctx);
}

// Breadth-first search over canonical states; at each state every block
// shuffle is tried and shortening sites are tried left to right, so the
// witness (the first minimal path reached) is deterministic.
template <SlopeInteger Int>
BasicContactClass<Int> classify(const BasicDecoratedPath<Int>& d) {
    validate_decorated_path(d);
    BasicDecoratedPath<Int> start = canonical_form(d);
    if (is_minimal(start.vertices)) return {detail::minimal_verdict(start), start};

    std::set<std::string> seen{detail::state_key(start)};
    std::deque<BasicDecoratedPath<Int>> queue{start};
    while (!queue.empty()) {
        BasicDecoratedPath<Int> cur = std::move(queue.front());
        queue.pop_front();
        for (const BasicDecoratedPath<Int>& arr : block_shuffles(cur)) {
            for (std::size_t i : shortening_sites(arr.vertices)) {
                BasicShortenResult<Int> r = shorten(arr, i);
                if (!r.consistent) continue;
                BasicDecoratedPath<Int> child = canonical_form(r.path);
                if (is_minimal(child.vertices)) return {detail::minimal_verdict(child), child};
                if (seen.insert(detail::state_key(child)).second) queue.push_back(std::move(child));
            }
        }
    }
    return {Verdict::overtwisted, std::nullopt};
}

template <SlopeInteger Int>
struct BasicClassifyAudit {
    BasicContactClass<Int> existential;
    bool strict_universal = false;
    bool modes_disagree = false;
};

using ClassifyAudit = BasicClassifyAudit<BigInt>;

template <SlopeInteger Int>
BasicClassifyAudit<Int> classify_audit(const BasicDecoratedPath<Int>& d, ClassifyContext& ctx) {
    BasicClassifyAudit<Int> out;
    out.existential = classify(d);
    out.strict_universal = strict_universal_tight(d, ctx);
    bool existential_is_tight = out.existential.verdict != Verdict::overtwisted;
    out.modes_disagree = existential_is_tight != out.strict_universal;
    return out;
}

template <SlopeInteger Int>
BasicClassifyAudit<Int> classify_audit(const BasicDecoratedPath<Int>& d) {
    ClassifyContext ctx;
    return classify_audit(d, ctx);
}

// All decoration classes of the canonical minimal path between two boundary
// slopes, two dividing curves each.
template <SlopeInteger Int>
std::vector<BasicContactClass<Int>> enumerate_tight_t2xi(const BasicTorusBoundary<Int>& g1,
                                                         const BasicTorusBoundary<Int>& g2) {
    validate(g1);
    validate(g2);
    if (g1.num_dividing_curves != 2 || g2.num_dividing_curves != 2)
        throw std::domain_error("enumeration needs exactly two dividing curves per boundary");
    if (g1.dividing_slope == g2.dividing_slope)
        throw std::domain_error("boundary slopes must be distinct");

    BasicDecoratedPath<Int> skel;
    skel.vertices = minimal_path(g1.dividing_slope, g2.dividing_slope);
    std::size_t jumps = jump_count(skel);
    if (jumps > 24) throw std::domain_error("enumeration too large to materialize");

    std::vector<BasicContactClass<Int>> out;
    std::set<std::string> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << jumps); ++mask) {
        BasicDecoratedPath<Int> d = skel;
        for (std::size_t j = 0; j < jumps; ++j)
            d.signs.push_back((mask >> j) & 1 ? Sign::minus : Sign::plus);
        BasicDecoratedPath<Int> rep = canonical_form(d);
        if (!seen.insert(detail::state_key(rep)).second) continue;
        out.push_back({detail::minimal_verdict(rep), rep});
    }
    return out;
}

// Decoration classes on a solid torus: same skeleton from the meridian, but
// the first jump stays undecorated.
template <SlopeInteger Int>
std::vector<BasicContactClass<Int>> enumerate_tight_solid_torus(
    const BasicSlope<Int>& meridian, const BasicTorusBoundary<Int>& g) {
    validate(g);
    if (g.num_dividing_curves != 2)
        throw std::domain_error("enumeration needs exactly two dividing curves");
    if (g.dividing_slope == meridian)
        throw std::domain_error("dividing slope must differ from the meridian");

    BasicDecoratedPath<Int> skel;
    skel.vertices = minimal_path(meridian, g.dividing_slope);
    skel.truncated = true;
    std::size_t decorated = jump_count(skel) - 1;
    if (decorated > 24) throw std::domain_error("enumeration too large to materialize");

    std::vector<BasicContactClass<Int>> out;
    std::set<std::string> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << decorated); ++mask) {
        BasicDecoratedPath<Int> d = skel;
        for (std::size_t j = 0; j < decorated; ++j)
            d.signs.push_back((mask >> j) & 1 ? Sign::minus : Sign::plus);
        BasicDecoratedPath<Int> rep = canonical_form(d);
        if (!seen.insert(detail::state_key(rep)).second) continue;
        out.push_back({detail::minimal_verdict(rep), rep});
    }
    return out;
}

template <SlopeInteger Int>
struct BasicThickening {
    BasicSlope<Int> target;
    BasicVertexPath<Int> path;
};

using Thickening = BasicThickening<BigInt>;

// Thickening path of a virtually overtwisted solid torus with boundary slope
// s = -r/s' <= -1: the target slope is -ceil(r/s') + 1 and decorating the
// minimal path to it with one common sign gives a universally tight layer.
template <SlopeInteger Int>
BasicThickening<Int> universally_tight_thickening(const BasicSlope<Int>& s) {
    if (s.is_infinite())
        throw std::domain_error(
            "universally_tight_thickening expects a finite slope; inf has no "
            "continued fraction expansion");
    if (compare(s, BasicSlope<Int>(Int(-1), Int(1))) > 0)
        throw std::domain_error(
            "universally_tight_thickening expects a slope <= -1; apply a shear "
            "q/p -> (q+kp)/p to normalize first");
    Int neg_r = s.num;  // s = -r/den, so s.num is already -r
    Int n = -floor_div(neg_r, s.den);  // ceil(r / den)
    BasicThickening<Int> out;
    out.target = BasicSlope<Int>(Int(1) - n, Int(1));
    out.path = minimal_path(s, out.target);
    return out;
}

}  // namespace cabletorus
