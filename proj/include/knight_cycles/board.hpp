#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knight_cycles {

// Lattice point; row 0 is the top, col 0 the leftmost column. Negative values
// are legal while a figure is being transformed.
struct Coord {
    int row = 0;
    int col = 0;

    friend constexpr bool operator==(Coord, Coord) = default;
    friend constexpr auto operator<=>(Coord, Coord) = default;
};

// 1-based, row-major: cell (row, col) has index row * width + col + 1.
using CellIndex = std::int32_t;

struct BoardSpec {
    int width = 0;
    int height = 0;

    constexpr BoardSpec() = default;
    BoardSpec(int width, int height);

    [[nodiscard]] constexpr int cell_count() const noexcept { return width * height; }
    [[nodiscard]] constexpr bool contains(Coord c) const noexcept {
        return c.row >= 0 && c.row < height && c.col >= 0 && c.col < width;
    }
    [[nodiscard]] constexpr bool contains(CellIndex i) const noexcept {
        return i >= 1 && i <= cell_count();
    }

    // The (k+1) x (k+1) board every cycle of length k fits on.
    static BoardSpec for_length(int k);

    friend constexpr bool operator==(const BoardSpec&, const BoardSpec&) = default;
};

[[nodiscard]] CellIndex index_of(Coord c, const BoardSpec& board);
[[nodiscard]] Coord coord_of(CellIndex i, const BoardSpec& board);

[[nodiscard]] constexpr bool is_knight_move(Coord a, Coord b) noexcept {
    const int dr = a.row > b.row ? a.row - b.row : b.row - a.row;
    const int dc = a.col > b.col ? a.col - b.col : b.col - a.col;
    return (dr == 1 && dc == 2) || (dr == 2 && dc == 1);
}

inline constexpr std::array<Coord, 8> knight_offsets{{
    {-2, -1}, {-2, 1}, {-1, -2}, {-1, 2}, {1, -2}, {1, 2}, {2, -1}, {2, 1},
}};

// On-board knight neighbours of `i`, ascending.
[[nodiscard]] std::vector<CellIndex> knight_neighbors(CellIndex i, const BoardSpec& board);

// Precomputed knight graph of one board. Immutable once built.
class KnightGraph {
public:
    explicit KnightGraph(const BoardSpec& board);

    [[nodiscard]] const BoardSpec& board() const noexcept { return board_; }
    [[nodiscard]] std::span<const CellIndex> neighbors(CellIndex i) const noexcept {
        return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
    }
    [[nodiscard]] Coord coord(CellIndex i) const noexcept { return coords_[i]; }
    [[nodiscard]] bool adjacent(CellIndex a, CellIndex b) const noexcept {
        return is_knight_move(coords_[a], coords_[b]);
    }
    [[nodiscard]] std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

    // Knight-move distance from every cell to `target` using only cells with
    // index >= `floor`; -1 where unreachable. Entry 0 is unused.
    [[nodiscard]] std::vector<int> distances_to(CellIndex target, CellIndex floor = 1) const;

private:
    BoardSpec board_;
    std::vector<std::size_t> offsets_;
    std::vector<CellIndex> adjacency_;
    std::vector<Coord> coords_;
};

// The eight symmetries of the square, acting on signed coordinates.
enum class Dihedral : std::uint8_t {
    identity,
    rot90,          // (r, c) -> (c, -r)
    rot180,         // (r, c) -> (-r, -c)
    rot270,         // (r, c) -> (-c, r)
    mirror_vertical,    // about the vertical axis: (r, c) -> (r, -c)
    mirror_horizontal,  // (r, c) -> (-r, c)
    transpose,          // (r, c) -> (c, r)
    anti_transpose,     // (r, c) -> (-c, -r)
};

inline constexpr std::array<Dihedral, 8> all_dihedral{
    Dihedral::identity,        Dihedral::rot90,
    Dihedral::rot180,          Dihedral::rot270,
    Dihedral::mirror_vertical, Dihedral::mirror_horizontal,
    Dihedral::transpose,       Dihedral::anti_transpose,
};

[[nodiscard]] constexpr Coord apply(Dihedral e, Coord p) noexcept {
    switch (e) {
    case Dihedral::identity: return p;
    case Dihedral::rot90: return {p.col, -p.row};
    case Dihedral::rot180: return {-p.row, -p.col};
    case Dihedral::rot270: return {-p.col, p.row};
    case Dihedral::mirror_vertical: return {p.row, -p.col};
    case Dihedral::mirror_horizontal: return {-p.row, p.col};
    case Dihedral::transpose: return {p.col, p.row};
    case Dihedral::anti_transpose: return {-p.col, -p.row};
    }
    return p;
}

// compose(a, b) acts as "apply b, then a".
[[nodiscard]] constexpr Dihedral compose(Dihedral a, Dihedral b) noexcept {
    const Coord x = apply(a, apply(b, Coord{1, 0}));
    const Coord y = apply(a, apply(b, Coord{0, 1}));
    for (Dihedral e : all_dihedral)
        if (apply(e, Coord{1, 0}) == x && apply(e, Coord{0, 1}) == y)
            return e;
    return Dihedral::identity;
}

[[nodiscard]] constexpr Dihedral inverse(Dihedral e) noexcept {
    for (Dihedral f : all_dihedral)
        if (compose(f, e) == Dihedral::identity)
            return f;
    return Dihedral::identity;
}

[[nodiscard]] std::string_view to_string(Dihedral e) noexcept;

[[nodiscard]] std::vector<Coord> apply_dihedral(std::span<const Coord> pts, Dihedral e);

// Shift so the minimum row and minimum column are both 0. Order preserved.
[[nodiscard]] std::vector<Coord> normalize_translation(std::span<const Coord> pts);

[[nodiscard]] std::vector<Coord> decode(std::span<const CellIndex> cells, const BoardSpec& board);
[[nodiscard]] std::vector<CellIndex> encode(std::span<const Coord> pts, const BoardSpec& board);

} // namespace knight_cycles
