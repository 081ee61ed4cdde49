#pragma once

// Clockwise edge-paths in the Farey tessellation: greedy minimal paths,
// half-maximal jumps, continued fraction blocks.
//
// A path is a vertex sequence v_0, ..., v_k whose consecutive vertices are
// Farey neighbors, traversed strictly clockwise: v_{i+1} lies on the open
// clockwise arc from v_i back to v_0 for i >= 1 (the first jump is free).
// Jumps are numbered 1..k, jump j going from v_{j-1} to v_j.

#include "cabletorus/slope.hpp"

#include <cstddef>
#include <vector>

namespace cabletorus {

template <SlopeInteger Int>
using BasicVertexPath = std::vector<BasicSlope<Int>>;

using VertexPath = BasicVertexPath<BigInt>;

template <SlopeInteger Int>
void validate_vertex_path(const BasicVertexPath<Int>& vs) {
    if (vs.empty()) throw std::domain_error("path needs at least one vertex");
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        if (vs[i] == vs[i + 1])
            throw std::domain_error("consecutive path vertices must be distinct");
        if (!is_edge(vs[i], vs[i + 1]))
            throw std::domain_error("consecutive path vertices must be Farey neighbors");
        if (i >= 1 && !in_clockwise_interval(vs[i + 1], vs[i], vs[0], Closure::open))
            throw std::domain_error("path traversal must be strictly clockwise");
    }
}

// Canonical shortest clockwise path from a to b: repeatedly jump to the
// clockwise-farthest neighbor inside the half-open interval (current, b].
// This is the continued fraction path; its length equals the graph distance
// (cross-checked against a BFS oracle in the test suite).
template <SlopeInteger Int>
BasicVertexPath<Int> minimal_path(const BasicSlope<Int>& a, const BasicSlope<Int>& b) {
    BasicVertexPath<Int> path{a};
    while (path.back() != b) path.push_back(farthest_neighbor_within(path.back(), b, true));
    return path;
}

template <SlopeInteger Int>
bool is_minimal(const BasicVertexPath<Int>& vs) {
    validate_vertex_path(vs);
    if (vs.size() <= 1) return true;
    return vs.size() == minimal_path(vs.front(), vs.back()).size();
}

// Interior vertices that can be deleted: site i (1 <= i <= jumps-1) merges
// jumps i and i+1, which requires v_{i-1} and v_{i+1} to be neighbors.
template <SlopeInteger Int>
std::vector<std::size_t> shortening_sites(const BasicVertexPath<Int>& vs) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 1; i + 1 < vs.size(); ++i)
        if (is_edge(vs[i - 1], vs[i + 1])) sites.push_back(i);
    return sites;
}

// Whether p3 is the half-way point of the maximal clockwise jump from p2 in
// the interval bounded by p1: with q_max the clockwise-farthest neighbor of
// p2 in the open arc (p2, p1), p3 must be the mediant of p2 and q_max.
template <SlopeInteger Int>
bool half_maximal(const BasicSlope<Int>& p1, const BasicSlope<Int>& p2,
                  const BasicSlope<Int>& p3) {
    if (!is_edge(p1, p2) || !is_edge(p2, p3))
        throw std::domain_error("half_maximal expects consecutive Farey neighbors");
    if (p1 == p2 || p2 == p3 || !in_clockwise_interval(p3, p2, p1, Closure::open))
        throw std::domain_error("half_maximal expects a clockwise vertex triple");
    BasicSlope<Int> q_max = farthest_neighbor_within(p2, p1, false);
    return p3 == mediant(p2, q_max);
}

// Jump range of one continued fraction block, 1-based and inclusive.
struct JumpRange {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t length() const { return last - first + 1; }
    friend bool operator==(const JumpRange&, const JumpRange&) = default;
};

struct BlockDecomposition {
    std::vector<JumpRange> blocks;

    std::size_t block_of(std::size_t jump) const {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].first <= jump && jump <= blocks[i].last) return i;
        throw std::domain_error("jump index outside the decomposition");
    }
};

// Greedy left-to-right maximal partition of the jumps: a jump joins the
// current block exactly when it is half-maximal after the block's previous
// jump, otherwise it starts a new block.
template <SlopeInteger Int>
BlockDecomposition cf_blocks(const BasicVertexPath<Int>& vs) {
    validate_vertex_path(vs);
    if (vs.size() < 2) throw std::domain_error("cf_blocks needs at least one jump");
    BlockDecomposition out;
    out.blocks.push_back({1, 1});
    for (std::size_t j = 2; j + 1 <= vs.size(); ++j) {
        if (half_maximal(vs[j - 2], vs[j - 1], vs[j]))
            out.blocks.back().last = j;
        else
            out.blocks.push_back({j, j});
    }
    return out;
}

}  // namespace cabletorus
