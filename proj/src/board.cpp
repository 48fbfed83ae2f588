#include "knight_cycles/board.hpp"

#include "knight_cycles/errors.hpp"

#include <algorithm>
#include <deque>

namespace knight_cycles {

const char* to_string(ValidationFault fault) {
    switch (fault) {
    case ValidationFault::odd_length: return "odd length";
    case ValidationFault::too_short: return "too short";
    case ValidationFault::out_of_range: return "cell out of range";
    case ValidationFault::duplicate_cell: return "duplicate cell";
    case ValidationFault::not_a_knight_move: return "not a knight move";
    case ValidationFault::open_endpoints: return "open endpoints";
    }
    return "unknown";
}

BoardSpec::BoardSpec(int w, int h) : width(w), height(h) {
    if (w < 1 || h < 1)
        throw DomainError("board dimensions must be positive, got " + std::to_string(w) + "x" +
                          std::to_string(h));
}

BoardSpec BoardSpec::for_length(int k) {
    if (k < 4 || k % 2 != 0)
        throw DomainError("cycle length must be even and >= 4, got " + std::to_string(k));
    return {k + 1, k + 1};
}

CellIndex index_of(Coord c, const BoardSpec& board) {
    if (!board.contains(c))
        throw DomainError("coordinate (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                          ") is off the " + std::to_string(board.width) + "x" +
                          std::to_string(board.height) + " board");
    return c.row * board.width + c.col + 1;
}

Coord coord_of(CellIndex i, const BoardSpec& board) {
    if (!board.contains(i))
        throw DomainError("cell index " + std::to_string(i) + " is outside 1.." +
                          std::to_string(board.cell_count()));
    return {(i - 1) / board.width, (i - 1) % board.width};
}

std::vector<CellIndex> knight_neighbors(CellIndex i, const BoardSpec& board) {
    const Coord c = coord_of(i, board);
    std::vector<CellIndex> out;
    // knight_offsets is sorted by (row, col), so the indices come out ascending
    for (Coord d : knight_offsets) {
        const Coord n{c.row + d.row, c.col + d.col};
        if (board.contains(n))
            out.push_back(index_of(n, board));
    }
    return out;
}

KnightGraph::KnightGraph(const BoardSpec& board) : board_(board) {
    const int n = board.cell_count();
    offsets_.reserve(n + 2);
    coords_.resize(n + 1);
    offsets_.push_back(0); // cell 0 does not exist
    offsets_.push_back(0);
    for (CellIndex i = 1; i <= n; ++i) {
        coords_[i] = coord_of(i, board);
        for (CellIndex j : knight_neighbors(i, board))
            adjacency_.push_back(j);
        offsets_.push_back(adjacency_.size());
    }
}

std::vector<int> KnightGraph::distances_to(CellIndex target, CellIndex floor) const {
    std::vector<int> dist(board_.cell_count() + 1, -1);
    if (!board_.contains(target) || target < floor)
        return dist;
    std::deque<CellIndex> queue{target};
    dist[target] = 0;
    while (!queue.empty()) {
        const CellIndex u = queue.front();
        queue.pop_front();
        for (CellIndex v : neighbors(u)) {
            if (v < floor || dist[v] >= 0)
                continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

std::string_view to_string(Dihedral e) noexcept {
    switch (e) {
    case Dihedral::identity: return "identity";
    case Dihedral::rot90: return "rot90";
    case Dihedral::rot180: return "rot180";
    case Dihedral::rot270: return "rot270";
    case Dihedral::mirror_vertical: return "mirror_vertical";
    case Dihedral::mirror_horizontal: return "mirror_horizontal";
    case Dihedral::transpose: return "transpose";
    case Dihedral::anti_transpose: return "anti_transpose";
    }
    return "?";
}

std::vector<Coord> apply_dihedral(std::span<const Coord> pts, Dihedral e) {
    std::vector<Coord> out;
    out.reserve(pts.size());
    for (Coord p : pts)
        out.push_back(apply(e, p));
    return out;
}

std::vector<Coord> normalize_translation(std::span<const Coord> pts) {
    if (pts.empty())
        throw DomainError("cannot normalize an empty point list");
    int min_row = pts.front().row;
    int min_col = pts.front().col;
    for (Coord p : pts) {
        min_row = std::min(min_row, p.row);
        min_col = std::min(min_col, p.col);
    }
    std::vector<Coord> out;
    out.reserve(pts.size());
    for (Coord p : pts)
        out.push_back({p.row - min_row, p.col - min_col});
    return out;
}

std::vector<Coord> decode(std::span<const CellIndex> cells, const BoardSpec& board) {
    std::vector<Coord> out;
    out.reserve(cells.size());
    for (CellIndex i : cells)
        out.push_back(coord_of(i, board));
    return out;
}

std::vector<CellIndex> encode(std::span<const Coord> pts, const BoardSpec& board) {
    std::vector<CellIndex> out;
    out.reserve(pts.size());
    for (Coord p : pts)
        out.push_back(index_of(p, board));
    return out;
}

} // namespace knight_cycles
