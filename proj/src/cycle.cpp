#include "knight_cycles/cycle.hpp"

#include "knight_cycles/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>

namespace knight_cycles {

namespace {

// Every cycle of length k spans at most k rows and k columns, so after
// normalization (row, col) orders like the key row * (k + 1) + col.
std::vector<int> normalized_keys(std::span<const Coord> pts, Dihedral e, int stride) {
    int min_row = std::numeric_limits<int>::max();
    int min_col = std::numeric_limits<int>::max();
    for (Coord p : pts) {
        const Coord q = apply(e, p);
        min_row = std::min(min_row, q.row);
        min_col = std::min(min_col, q.col);
    }
    std::vector<int> keys;
    keys.reserve(pts.size());
    for (Coord p : pts) {
        const Coord q = apply(e, p);
        keys.push_back((q.row - min_row) * stride + (q.col - min_col));
    }
    return keys;
}

// Smallest representing sequence (any start, either direction) of one placement.
std::vector<int> min_rotation(const std::vector<int>& keys) {
    const std::size_t k = keys.size();
    std::vector<int> best;
    std::vector<int> candidate(k);
    for (std::size_t start = 0; start < k; ++start) {
        for (int dir : {1, -1}) {
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t at = (start + k + dir * static_cast<std::ptrdiff_t>(i)) % k;
                candidate[i] = keys[at];
            }
            if (best.empty() || candidate < best)
                best = candidate;
        }
    }
    return best;
}

// Canonical sequence as normalized keys with stride k + 1.
std::vector<int> canonical_keys(const CycleSeq& c) {
    const int stride = c.length() + 1;
    const auto pts = decode(c.cells(), c.board());
    std::vector<int> best;
    for (Dihedral e : all_dihedral) {
        auto candidate = min_rotation(normalized_keys(pts, e, stride));
        if (best.empty() || candidate < best)
            best = std::move(candidate);
    }
    return best;
}

CycleSeq from_keys(const std::vector<int>& keys, int stride, const BoardSpec& board) {
    std::vector<CellIndex> cells;
    cells.reserve(keys.size());
    for (int key : keys)
        cells.push_back(index_of({key / stride, key % stride}, board));
    return CycleSeq::trusted(std::move(cells), board);
}

std::string describe(std::size_t pos, CellIndex cell) {
    return " at position " + std::to_string(pos) + " (cell " + std::to_string(cell) + ")";
}

} // namespace

CycleSeq validate_cycle(std::span<const CellIndex> cells, const BoardSpec& board) {
    const std::size_t k = cells.size();
    if (k % 2 != 0)
        throw ValidationError(ValidationFault::odd_length, k == 0 ? 0 : k - 1,
                              "cycle length " + std::to_string(k) + " is odd");
    if (k < 4)
        throw ValidationError(ValidationFault::too_short, 0,
                              "cycle length " + std::to_string(k) + " is below 4");
    for (std::size_t i = 0; i < k; ++i)
        if (!board.contains(cells[i]))
            throw ValidationError(ValidationFault::out_of_range, i,
                                  "cell out of range" + describe(i, cells[i]));
    std::vector<bool> seen(board.cell_count() + 1, false);
    for (std::size_t i = 0; i < k; ++i) {
        if (seen[cells[i]])
            throw ValidationError(ValidationFault::duplicate_cell, i,
                                  "duplicate cell" + describe(i, cells[i]));
        seen[cells[i]] = true;
    }
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (!is_knight_move(coord_of(cells[i], board), coord_of(cells[i + 1], board)))
            throw ValidationError(ValidationFault::not_a_knight_move, i + 1,
                                  "step " + std::to_string(cells[i]) + " -> " +
                                      std::to_string(cells[i + 1]) + " is not a knight move" +
                                      describe(i + 1, cells[i + 1]));
    if (!is_knight_move(coord_of(cells[k - 1], board), coord_of(cells[0], board)))
        throw ValidationError(ValidationFault::open_endpoints, k - 1,
                              "last cell " + std::to_string(cells[k - 1]) +
                                  " is not a knight move from the first " +
                                  std::to_string(cells[0]));
    return CycleSeq::trusted({cells.begin(), cells.end()}, board);
}

std::vector<CellIndex> parse_sequence(std::string_view text) {
    std::vector<CellIndex> out;
    std::size_t pos = 0;
    const auto is_sep = [](char ch) { return ch == ',' || ch == ' ' || ch == '\t'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos]))
            ++pos;
        if (pos == text.size())
            break;
        CellIndex value = 0;
        const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || (end != text.data() + text.size() && !is_sep(*end)))
            throw DomainError("malformed cell sequence near '" +
                              std::string(text.substr(pos, 12)) + "'");
        out.push_back(value);
        pos = static_cast<std::size_t>(end - text.data());
    }
    return out;
}

std::string format_sequence(std::span<const CellIndex> cells, char sep) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(cells[i]);
    }
    return out;
}

CycleSeq embed(const CycleSeq& c, const BoardSpec& board) {
    return CycleSeq::trusted(encode(decode(c.cells(), c.board()), board), board);
}

CycleSeq canonicalize(const CycleSeq& c) {
    return from_keys(canonical_keys(c), c.length() + 1, c.board());
}

CycleSeq canonical_form(const CycleSeq& c) {
    return from_keys(canonical_keys(c), c.length() + 1, BoardSpec::for_length(c.length()));
}

bool is_minimal(const CycleSeq& c) {
    return MinimalityChecker(c.board())(c.cells());
}

bool are_equivalent(const CycleSeq& a, const CycleSeq& b) {
    return a.length() == b.length() && canonical_keys(a) == canonical_keys(b);
}

CellSetKey canonical_cell_set(const CycleSeq& c) {
    const BoardSpec target = BoardSpec::for_length(c.length());
    const int stride = target.width;
    const auto pts = decode(c.cells(), c.board());
    CellSetKey best;
    for (Dihedral e : all_dihedral) {
        auto keys = normalized_keys(pts, e, stride);
        std::ranges::sort(keys);
        for (int& key : keys)
            ++key; // stride == width, so key + 1 is the cell index
        if (best.cells.empty() || keys < best.cells)
            best.cells = std::move(keys);
    }
    return best;
}

MinimalityChecker::MinimalityChecker(const BoardSpec& board)
    : board_(board), coords_(board.cell_count() + 1) {
    for (CellIndex i = 1; i <= board.cell_count(); ++i)
        coords_[i] = coord_of(i, board);
}

bool MinimalityChecker::operator()(std::span<const CellIndex> cells) const {
    const std::size_t k = cells.size();
    const int stride = static_cast<int>(k) + 1;
    constexpr std::size_t max_len = 64;
    if (k > max_len)
        return std::ranges::equal(
            canonicalize(CycleSeq::trusted({cells.begin(), cells.end()}, board_)).cells(), cells);

    std::array<Coord, max_len> pts;
    int min_row = std::numeric_limits<int>::max();
    int min_col = std::numeric_limits<int>::max();
    int max_row = std::numeric_limits<int>::min();
    int max_col = std::numeric_limits<int>::min();
    for (std::size_t i = 0; i < k; ++i) {
        pts[i] = coords_[cells[i]];
        min_row = std::min(min_row, pts[i].row);
        min_col = std::min(min_col, pts[i].col);
        max_row = std::max(max_row, pts[i].row);
        max_col = std::max(max_col, pts[i].col);
    }
    // The canonical placement touches row 0 and column 0.
    if (min_row != 0 || min_col != 0)
        return false;

    std::array<int, max_len> own;
    for (std::size_t i = 0; i < k; ++i)
        own[i] = pts[i].row * stride + pts[i].col;
    for (std::size_t i = 1; i < k; ++i)
        if (own[i] < own[0])
            return false;
    if (own[k - 1] < own[1])
        return false;

    // Returns <0, 0, >0 comparing image sequence (from `start`, stepping
    // `dir`) against `own`.
    const auto compare = [&](const std::array<int, max_len>& img, std::size_t start, int dir) {
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t at = (start + k + dir * static_cast<std::ptrdiff_t>(i)) % k;
            if (img[at] != own[i])
                return img[at] < own[i] ? -1 : 1;
        }
        return 0;
    };

    std::array<int, max_len> img;
    for (Dihedral e : all_dihedral) {
        if (e == Dihedral::identity)
            continue;
        // Image of the bounding box [0, max_row] x [0, max_col], shifted back to the origin.
        const Coord a = apply(e, Coord{0, 0});
        const Coord b = apply(e, Coord{max_row, max_col});
        const int shift_row = std::min(a.row, b.row);
        const int shift_col = std::min(a.col, b.col);
        std::size_t start = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const Coord q = apply(e, pts[i]);
            img[i] = (q.row - shift_row) * stride + (q.col - shift_col);
            if (img[i] < img[start])
                start = i;
        }
        if (img[start] > own[0])
            continue;
        if (img[start] < own[0])
            return false;
        if (compare(img, start, 1) < 0 || compare(img, start, -1) < 0)
            return false;
    }
    return true;
}

} // namespace knight_cycles
