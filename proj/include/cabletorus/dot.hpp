#pragma once

// Graphviz DOT emitters: a decorated path becomes a left-to-right chain with
// sign edge labels, and a simplification trace's dual graph becomes an
// undirected tree. A vertex on a block boundary belongs to two consecutive
// blocks, so block membership rides on the edges (block=N) where it is
// unambiguous, not on node clusters.

#include <string>

#include "classify.hpp"
#include "paths.hpp"
#include "ribbon.hpp"
#include "slope.hpp"

namespace cabletorus {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

template <SlopeInteger Int>
std::string path_to_dot(const BasicDecoratedPath<Int>& d) {
    // an empty untruncated sign list means a bare vertex walk
    bool bare = d.signs.empty() && !d.truncated;
    if (bare)
        validate_vertex_path(d.vertices);
    else
        validate_decorated_path(d);
    std::string out = "digraph farey_path {\n";
    out += "    rankdir=LR;\n";
    out += "    node [shape=ellipse];\n";
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        out += "    v" + std::to_string(i) +
               " [label=" + detail::dot_quote(to_string(d.vertices[i])) + "];\n";
    if (d.vertices.size() > 1) {
        BlockDecomposition blocks = cf_blocks(d.vertices);
        for (std::size_t j = 1; j < d.vertices.size(); ++j) {
            out += "    v" + std::to_string(j - 1) + " -> v" + std::to_string(j) + " [";
            if (!bare)
                if (std::optional<Sign> s = sign_of_jump(d, j))
                    out += "label=\"" + std::string(1, to_char(*s)) + "\", ";
            out += "block=" + std::to_string(blocks.block_of(j) + 1) + "];\n";
        }
    }
    out += "}\n";
    return out;
}

template <SlopeInteger Int>
std::string path_to_dot(const BasicVertexPath<Int>& vs) {
    BasicDecoratedPath<Int> d;
    d.vertices = vs;
    return path_to_dot(d);
}

inline std::string dual_graph_to_dot(const SimplificationTrace& t) {
    std::string out = "graph ribbon_dual {\n";
    out += "    node [shape=box];\n";
    for (const std::string& p : t.piece_ids) out += "    " + p + ";\n";
    for (const DualEdge& e : t.dual_edges)
        out += "    " + e.piece_a + " -- " + e.piece_b + " [label=\"c" +
               std::to_string(e.cut_id) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace cabletorus
