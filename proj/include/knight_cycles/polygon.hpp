#pragma once

#include "knight_cycles/board.hpp"
#include "knight_cycles/cycle.hpp"

#include <cstddef>
#include <cstdint>

namespace knight_cycles {

// Edge between two cell centres, in (row, col) lattice coordinates.
struct Segment {
    Coord a;
    Coord b;
};

// Sign of the cross product (q - p) x (r - p), with row as the first axis
// and col as the second: +1, 0 or -1. Exact.
[[nodiscard]] constexpr int orientation(Coord p, Coord q, Coord r) noexcept {
    const std::int64_t cross =
        static_cast<std::int64_t>(q.row - p.row) * (r.col - p.col) -
        static_cast<std::int64_t>(q.col - p.col) * (r.row - p.row);
    return (cross > 0) - (cross < 0);
}

// True iff the segments share a point other than a common endpoint: proper
// crossings, an endpoint touching the other's interior, and collinear overlap.
[[nodiscard]] bool segments_cross(const Segment& s1, const Segment& s2) noexcept;

// Visits every pair of cycle edges i < j that share no vertex, where edge i
// runs from vertex i to vertex (i + 1) mod k; there are k(k-3)/2 of them.
// Stops early and returns false as soon as fn(i, j) returns false.
template <class Fn>
bool for_each_non_adjacent_edge_pair(std::size_t k, Fn&& fn) {
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1)
                continue;
            if (!fn(i, j))
                return false;
        }
    return true;
}

// The polygon through the cell centres has no self-intersection.
[[nodiscard]] bool is_simple(const CycleSeq& c);
[[nodiscard]] bool is_simple(std::span<const Coord> polygon);

} // namespace knight_cycles
