#pragma once

#include "knight_cycles/board.hpp"
#include "knight_cycles/cycle.hpp"

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace knight_cycles {

// Largest supported board for enumeration: (16 + 1)^2 = 289 cells.
inline constexpr int max_enumeration_length = 16;

enum class Algorithm { dfs, mitm };

[[nodiscard]] std::string_view to_string(Algorithm a) noexcept;
[[nodiscard]] Algorithm parse_algorithm(std::string_view name);

// Starting cells sufficient to seed every canonical cycle of length k: the
// first k/2 + 1 cells of the top row.
struct StartSet {
    int k = 0;
    std::vector<CellIndex> cells;
};

[[nodiscard]] StartSet start_set(int k);

// Constant-time membership over the cells of a board with at most 320 cells.
class CellSet {
public:
    static constexpr int capacity = 320;

    constexpr void insert(CellIndex i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void erase(CellIndex i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    [[nodiscard]] constexpr bool contains(CellIndex i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    [[nodiscard]] constexpr bool disjoint(const CellSet& o) const noexcept {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            acc |= words_[w] & o.words_[w];
        return acc == 0;
    }
    [[nodiscard]] constexpr int size() const noexcept {
        int n = 0;
        for (auto w : words_)
            n += std::popcount(w);
        return n;
    }

    friend constexpr bool operator==(const CellSet&, const CellSet&) = default;

private:
    std::array<std::uint64_t, capacity / 64> words_{};
};

// Open knight path s -> t with exactly k/2 edges; the building block of the
// meet-in-the-middle engine.
struct HalfPath {
    std::vector<CellIndex> cells;
    CellSet visited;

    [[nodiscard]] CellIndex start() const noexcept { return cells.front(); }
    [[nodiscard]] CellIndex end() const noexcept { return cells.back(); }
};

// All simple knight paths from s to t with k/2 edges whose cells are all >= s,
// in lexicographic order.
[[nodiscard]] std::vector<HalfPath> half_paths(CellIndex s, CellIndex t, int k, const BoardSpec& board);

// a followed by the reversed interior of b, if the halves meet only at their
// endpoints. Throws DomainError when the endpoints differ.
[[nodiscard]] std::optional<CycleSeq> assemble(const HalfPath& a, const HalfPath& b,
                                               const BoardSpec& board);

struct EnumerationOptions {
    int jobs = 1;
    // Also classify every accepted cycle with is_simple.
    bool simple_filter = false;
    // Per (s, t) pair cap on the half-path lists of the mitm engine.
    std::size_t memory_budget_bytes = std::size_t{4} << 30;
    // Restrict the search to one start cell (used for sharded listings).
    std::optional<CellIndex> only_start;

    // Diagnostic switches honoured by the dfs engine only. With
    // minimality_filter off, every closure is emitted and counted.
    bool start_floor_prune = true;  // skip cells below the start cell
    bool closure_prune = true;      // skip paths that can no longer close in time
    bool minimality_filter = true;
    // Seed from every top-row cell instead of the start set.
    bool full_top_row = false;
};

struct EnumerationSummary {
    int k = 0;
    Algorithm algorithm = Algorithm::dfs;
    std::uint64_t total = 0;
    std::optional<std::uint64_t> simple;
    std::map<CellIndex, std::uint64_t> per_start;
    double elapsed_seconds = 0.0;
};

// Receives accepted cycles (on the (k+1) x (k+1) board). `simple` is
// meaningful only when the simple filter ran. Calls are serialized, in no
// particular order; an exception aborts the enumeration and is rethrown.
using CycleSink = std::function<void(std::span<const CellIndex> cells, bool simple)>;

// Exhaustive depth-first backtracking from every start cell.
EnumerationSummary enumerate_dfs(int k, const CycleSink& sink, const EnumerationOptions& options = {});

// Meet in the middle: pairs of half paths joined at their endpoints.
EnumerationSummary enumerate_mitm(int k, const CycleSink& sink, const EnumerationOptions& options = {});

EnumerationSummary enumerate(int k, Algorithm algorithm, const EnumerationOptions& options = {},
                             const CycleSink& sink = {});

} // namespace knight_cycles
