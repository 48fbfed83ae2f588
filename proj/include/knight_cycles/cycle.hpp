#pragma once

#include "knight_cycles/board.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knight_cycles {

// A closed knight cycle: k pairwise distinct cells, k even and >= 4, every
// consecutive pair (including last -> first) one knight move apart.
// Only validate_cycle and trusted engine code construct one.
class CycleSeq {
public:
    CycleSeq() = default;

    [[nodiscard]] std::span<const CellIndex> cells() const noexcept { return cells_; }
    [[nodiscard]] const BoardSpec& board() const noexcept { return board_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(cells_.size()); }

    // Caller guarantees the invariants (used by the enumeration engines).
    [[nodiscard]] static CycleSeq trusted(std::vector<CellIndex> cells, const BoardSpec& board) {
        return CycleSeq(std::move(cells), board);
    }

    friend bool operator==(const CycleSeq&, const CycleSeq&) = default;

private:
    CycleSeq(std::vector<CellIndex> cells, const BoardSpec& board)
        : cells_(std::move(cells)), board_(board) {}

    std::vector<CellIndex> cells_;
    BoardSpec board_;
};

// Throws ValidationError naming the first offending position.
[[nodiscard]] CycleSeq validate_cycle(std::span<const CellIndex> cells, const BoardSpec& board);

// Parses "c1,c2,...,ck" (commas and/or whitespace). Throws DomainError.
[[nodiscard]] std::vector<CellIndex> parse_sequence(std::string_view text);
[[nodiscard]] std::string format_sequence(std::span<const CellIndex> cells, char sep = ',');

// Same placement, re-indexed on another board. Throws DomainError if a cell
// falls off `board`.
[[nodiscard]] CycleSeq embed(const CycleSeq& c, const BoardSpec& board);

// Lexicographically smallest of the 16k representing sequences (8 symmetry
// images, each shifted to touch row 0 and column 0, times k starting cells
// times 2 directions), indexed on c.board(). This is the exhaustive form.
[[nodiscard]] CycleSeq canonicalize(const CycleSeq& c);

// canonicalize, re-indexed on the (k+1) x (k+1) board.
[[nodiscard]] CycleSeq canonical_form(const CycleSeq& c);

// Equivalent to `canonicalize(c).cells() == c.cells()` but exits at the first
// strictly smaller candidate.
[[nodiscard]] bool is_minimal(const CycleSeq& c);

[[nodiscard]] bool are_equivalent(const CycleSeq& a, const CycleSeq& b);

// Visited cells, symmetry-minimized: the smallest ascending index list over
// the 8 normalized images, on the (k+1) x (k+1) board.
struct CellSetKey {
    std::vector<CellIndex> cells;

    friend bool operator==(const CellSetKey&, const CellSetKey&) = default;
    friend auto operator<=>(const CellSetKey&, const CellSetKey&) = default;
};

[[nodiscard]] CellSetKey canonical_cell_set(const CycleSeq& c);

// Early-exit minimality test bound to one board; the enumeration hot path.
// Works on raw cell spans that are already known to form a cycle.
class MinimalityChecker {
public:
    explicit MinimalityChecker(const BoardSpec& board);

    [[nodiscard]] bool operator()(std::span<const CellIndex> cells) const;

private:
    BoardSpec board_;
    std::vector<Coord> coords_;
};

} // namespace knight_cycles
