#pragma once

#include "knight_cycles/cycle.hpp"
#include "knight_cycles/enumeration.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace knight_cycles {

// Inequivalent cycles that visit the same (symmetry-minimized) cell set.
struct TwinGroup {
    CellSetKey key;
    std::vector<CycleSeq> members; // sorted lexicographically, at least two
};

// Streaming form of group_geometric_twins.
class TwinGrouper {
public:
    // `c` must be canonical; all inputs must share one length.
    void add(const CycleSeq& c);

    [[nodiscard]] std::size_t cell_set_count() const noexcept { return groups_.size(); }
    [[nodiscard]] std::vector<TwinGroup> groups() const;

private:
    int length_ = 0;
    std::map<CellSetKey, std::vector<CycleSeq>> groups_;
};

// Groups of two or more, ordered by key. Throws DomainError on mixed lengths.
[[nodiscard]] std::vector<TwinGroup> group_geometric_twins(std::span<const CycleSeq> cycles);

struct ExpectedCount {
    int k = 0;
    std::uint64_t total = 0;
    std::uint64_t simple = 0;
};

// Published class counts: all closed knight cycles and the non-self-intersecting ones.
inline constexpr std::array<ExpectedCount, 7> published_counts{{
    {4, 3, 3},
    {6, 25, 13},
    {8, 480, 178},
    {10, 12000, 3034},
    {12, 350256, 64877},
    {14, 10780549, 1503790},
    {16, 344680960, 36930111},
}};

[[nodiscard]] std::optional<ExpectedCount> expected_for(int k,
                                                        std::span<const ExpectedCount> table = published_counts);

struct VerificationRow {
    int k = 0;
    Algorithm algorithm = Algorithm::dfs;
    ExpectedCount expected;
    std::uint64_t total = 0;
    std::uint64_t simple = 0;
    double elapsed_seconds = 0.0;

    [[nodiscard]] bool passed() const noexcept {
        return total == expected.total && simple == expected.simple;
    }
    // "k=8 dfs: expected 480/178, got 480/178 (0.01 s) PASS"
    [[nodiscard]] std::string describe() const;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;

    [[nodiscard]] bool passed() const noexcept;
    [[nodiscard]] std::vector<const VerificationRow*> failures() const;
};

// Enumerates every even k in 4..k_max with each algorithm and the simple
// filter on, comparing against `table`.
[[nodiscard]] VerificationReport verify_tables(int k_max, std::span<const Algorithm> algorithms,
                                               int jobs = 1,
                                               std::span<const ExpectedCount> table = published_counts);

// Enumerates one start cell at a time, writes each sorted shard next to `out`
// and merges the shards into `out`. Counting never holds more than one shard.
EnumerationSummary write_listing(const std::filesystem::path& out, int k, Algorithm algorithm,
                                 const EnumerationOptions& options, bool simple_only);

enum class RenderFormat { svg, ascii };

[[nodiscard]] RenderFormat parse_render_format(std::string_view name);

// svg: the board grid plus a closed polyline through the cell centres.
// ascii: one text row per board row, the 1-based move number at visited cells
// and '.' elsewhere, right-aligned in equal-width columns.
[[nodiscard]] std::string render(const CycleSeq& c, RenderFormat format);

} // namespace knight_cycles
