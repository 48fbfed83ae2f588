#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// canonicalization, enumeration or geometry code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Point = std::pair<int, int>; // (row, col)

inline Point decode(int cell, int width) { return {(cell - 1) / width, (cell - 1) % width}; }
inline int encode(Point p, int width) { return p.first * width + p.second + 1; }

inline bool knight_step(Point a, Point b) {
    const int dr = std::abs(a.first - b.first);
    const int dc = std::abs(a.second - b.second);
    return dr * dr + dc * dc == 5;
}

inline bool is_closed_knight_cycle(const std::vector<int>& cells, int width) {
    const std::set<int> distinct(cells.begin(), cells.end());
    if (distinct.size() != cells.size() || cells.size() < 4 || cells.size() % 2)
        return false;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!knight_step(decode(cells[i], width), decode(cells[(i + 1) % cells.size()], width)))
            return false;
    return true;
}

// The 8 symmetries as 2x2 integer matrices.
inline const std::array<std::array<int, 4>, 8>& matrices() {
    static const std::array<std::array<int, 4>, 8> m{{
        {1, 0, 0, 1}, {0, 1, -1, 0}, {-1, 0, 0, -1}, {0, -1, 1, 0},
        {1, 0, 0, -1}, {-1, 0, 0, 1}, {0, 1, 1, 0}, {0, -1, -1, 0},
    }};
    return m;
}

// Canonical sequence of normalized points, minimized over the 8 symmetries,
// all starts and both directions.
inline std::vector<Point> canonical_points(const std::vector<Point>& pts) {
    std::vector<Point> best;
    const std::size_t n = pts.size();
    for (const auto& m : matrices()) {
        std::vector<Point> img;
        for (auto [r, c] : pts)
            img.push_back({m[0] * r + m[1] * c, m[2] * r + m[3] * c});
        int min_r = img[0].first, min_c = img[0].second;
        for (auto [r, c] : img) {
            min_r = std::min(min_r, r);
            min_c = std::min(min_c, c);
        }
        for (auto& p : img)
            p = {p.first - min_r, p.second - min_c};
        for (std::size_t s = 0; s < n; ++s)
            for (int d : {1, -1}) {
                std::vector<Point> seq;
                for (std::size_t i = 0; i < n; ++i)
                    seq.push_back(img[(s + n + d * static_cast<long>(i)) % n]);
                if (best.empty() || seq < best)
                    best = seq;
            }
    }
    return best;
}

inline std::vector<int> canonical_cells(const std::vector<int>& cells, int width) {
    std::vector<Point> pts;
    for (int c : cells)
        pts.push_back(decode(c, width));
    const int target = static_cast<int>(cells.size()) + 1;
    std::vector<int> out;
    for (Point p : canonical_points(pts))
        out.push_back(encode(p, target));
    return out;
}

// Every closed knight cycle of length k on the (k+1)^2 board starting from
// any cell of `starts` (all cells when empty), with no pruning at all.
// Canonicalized and deduplicated.
inline std::set<std::vector<int>> naive_classes(int k, std::vector<int> starts = {}) {
    const int w = k + 1;
    if (starts.empty()) {
        starts.resize(w * w);
        std::iota(starts.begin(), starts.end(), 1);
    }
    std::set<std::vector<int>> classes;
    std::vector<int> path;
    std::vector<bool> used(w * w + 1);
    auto rec = [&](auto&& self) -> void {
        const Point u = decode(path.back(), w);
        if (static_cast<int>(path.size()) == k) {
            if (knight_step(u, decode(path.front(), w)))
                classes.insert(canonical_cells(path, w));
            return;
        }
        for (int v = 1; v <= w * w; ++v)
            if (!used[v] && knight_step(u, decode(v, w))) {
                used[v] = true;
                path.push_back(v);
                self(self);
                path.pop_back();
                used[v] = false;
            }
    };
    for (int s : starts) {
        path = {s};
        used[s] = true;
        rec(rec);
        used[s] = false;
    }
    return classes;
}

// Exact rational: num / den with den > 0.
struct Rational {
    std::int64_t num;
    std::int64_t den;
};

inline bool rless(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
inline bool rle(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }

// Do closed segments p1-p2 and q1-q2 share a point, other than one endpoint
// common to both? Solves the 2x2 parametric system with rationals.
inline bool segments_share_extra_point(Point p1, Point p2, Point q1, Point q2) {
    const std::int64_t dx = p2.first - p1.first, dy = p2.second - p1.second;
    const std::int64_t ex = q2.first - q1.first, ey = q2.second - q1.second;
    const std::int64_t fx = q1.first - p1.first, fy = q1.second - p1.second;
    const std::int64_t det = dx * (-ey) - (-ex) * dy;
    const int common = (p1 == q1) + (p1 == q2) + (p2 == q1) + (p2 == q2);
    if (det != 0) {
        // p1 + t d = q1 + u e
        std::int64_t tn = fx * (-ey) - (-ex) * fy;
        std::int64_t un = dx * fy - dy * fx;
        std::int64_t den = det;
        if (den < 0) {
            tn = -tn;
            un = -un;
            den = -den;
        }
        const Rational t{tn, den}, u{un, den}, zero{0, 1}, one{1, 1};
        if (!(rle(zero, t) && rle(t, one) && rle(zero, u) && rle(u, one)))
            return false;
        // The only intersection point; is it just the shared endpoint?
        if (common == 1) {
            const bool t_end = t.num == 0 || t.num == t.den;
            const bool u_end = u.num == 0 || u.num == u.den;
            return !(t_end && u_end);
        }
        return true;
    }
    // Parallel: must be collinear to meet.
    if (fx * dy - fy * dx != 0)
        return false;
    // Project q's endpoints onto p's parameter: t = f.d / d.d
    const std::int64_t dd = dx * dx + dy * dy;
    std::int64_t t0 = fx * dx + fy * dy;
    std::int64_t t1 = (q2.first - p1.first) * dx + (q2.second - p1.second) * dy;
    if (t0 > t1)
        std::swap(t0, t1);
    const std::int64_t lo = std::max<std::int64_t>(0, t0), hi = std::min(dd, t1);
    if (lo > hi)
        return false;
    if (lo < hi)
        return true; // overlap of positive length
    return common == 0; // a single touching point: fine only if it is a shared endpoint
}

inline bool polygon_is_simple(const std::vector<Point>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point a1 = poly[i], a2 = poly[(i + 1) % n];
            const Point b1 = poly[j], b2 = poly[(j + 1) % n];
            if (segments_share_extra_point(a1, a2, b1, b2))
                return false;
        }
    return true;
}

} // namespace oracle
