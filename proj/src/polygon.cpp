#include "knight_cycles/polygon.hpp"

#include <algorithm>

namespace knight_cycles {

namespace {

// r is collinear with [p, q]; is it inside the closed bounding box?
bool within_box(Coord p, Coord q, Coord r) noexcept {
    return std::min(p.row, q.row) <= r.row && r.row <= std::max(p.row, q.row) &&
           std::min(p.col, q.col) <= r.col && r.col <= std::max(p.col, q.col);
}

bool intersects_closed(const Segment& s1, const Segment& s2) noexcept {
    const int o1 = orientation(s1.a, s1.b, s2.a);
    const int o2 = orientation(s1.a, s1.b, s2.b);
    const int o3 = orientation(s2.a, s2.b, s1.a);
    const int o4 = orientation(s2.a, s2.b, s1.b);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    return (o1 == 0 && within_box(s1.a, s1.b, s2.a)) || (o2 == 0 && within_box(s1.a, s1.b, s2.b)) ||
           (o3 == 0 && within_box(s2.a, s2.b, s1.a)) || (o4 == 0 && within_box(s2.a, s2.b, s1.b));
}

} // namespace

bool segments_cross(const Segment& s1, const Segment& s2) noexcept {
    Coord shared{};
    int shared_count = 0;
    for (Coord p : {s1.a, s1.b})
        for (Coord q : {s2.a, s2.b})
            if (p == q) {
                shared = p;
                ++shared_count;
            }
    if (shared_count == 0)
        return intersects_closed(s1, s2);
    if (shared_count >= 2)
        return true; // same segment
    // One common endpoint. Any further common point needs the segments to
    // be collinear and to leave `shared` in the same direction.
    const Coord u = s1.a == shared ? s1.b : s1.a;
    const Coord v = s2.a == shared ? s2.b : s2.a;
    if (orientation(shared, u, v) != 0)
        return false;
    const std::int64_t dot = static_cast<std::int64_t>(u.row - shared.row) * (v.row - shared.row) +
                     static_cast<std::int64_t>(u.col - shared.col) * (v.col - shared.col);
    return dot > 0;
}

bool is_simple(std::span<const Coord> polygon) {
    const std::size_t k = polygon.size();
    const auto edge = [&](std::size_t i) { return Segment{polygon[i], polygon[(i + 1) % k]}; };
    for (std::size_t i = 0; i < k; ++i)
        if (segments_cross(edge(i), edge((i + 1) % k)))
            return false;
    return for_each_non_adjacent_edge_pair(
        k, [&](std::size_t i, std::size_t j) { return !segments_cross(edge(i), edge(j)); });
}

bool is_simple(const CycleSeq& c) {
    const auto pts = decode(c.cells(), c.board());
    return is_simple(pts);
}

} // namespace knight_cycles
