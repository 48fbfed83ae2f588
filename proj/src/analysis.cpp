#include "knight_cycles/analysis.hpp"

#include "knight_cycles/cycle_file.hpp"
#include "knight_cycles/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace knight_cycles {

void TwinGrouper::add(const CycleSeq& c) {
    if (length_ == 0)
        length_ = c.length();
    else if (c.length() != length_)
        throw DomainError("twin grouping needs cycles of one length, got " +
                          std::to_string(length_) + " and " + std::to_string(c.length()));
    groups_[canonical_cell_set(c)].push_back(c);
}

std::vector<TwinGroup> TwinGrouper::groups() const {
    std::vector<TwinGroup> out;
    for (const auto& [key, members] : groups_) {
        if (members.size() < 2)
            continue;
        TwinGroup group{key, members};
        std::ranges::sort(group.members, [](const CycleSeq& a, const CycleSeq& b) {
            return std::ranges::lexicographical_compare(a.cells(), b.cells());
        });
        out.push_back(std::move(group));
    }
    return out;
}

std::vector<TwinGroup> group_geometric_twins(std::span<const CycleSeq> cycles) {
    TwinGrouper grouper;
    for (const CycleSeq& c : cycles)
        grouper.add(c);
    return grouper.groups();
}

std::optional<ExpectedCount> expected_for(int k, std::span<const ExpectedCount> table) {
    for (const ExpectedCount& e : table)
        if (e.k == k)
            return e;
    return std::nullopt;
}

std::string VerificationRow::describe() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "k=%d %s: expected %llu/%llu, got %llu/%llu (%.2f s) %s", k,
                  std::string(to_string(algorithm)).c_str(),
                  static_cast<unsigned long long>(expected.total),
                  static_cast<unsigned long long>(expected.simple),
                  static_cast<unsigned long long>(total), static_cast<unsigned long long>(simple),
                  elapsed_seconds, passed() ? "PASS" : "FAIL");
    return buf;
}

bool VerificationReport::passed() const noexcept {
    return std::ranges::all_of(rows, [](const VerificationRow& r) { return r.passed(); });
}

std::vector<const VerificationRow*> VerificationReport::failures() const {
    std::vector<const VerificationRow*> out;
    for (const VerificationRow& r : rows)
        if (!r.passed())
            out.push_back(&r);
    return out;
}

VerificationReport verify_tables(int k_max, std::span<const Algorithm> algorithms, int jobs,
                                 std::span<const ExpectedCount> table) {
    if (k_max < 4 || k_max % 2 != 0 || k_max > max_enumeration_length)
        throw DomainError("max length must be even in 4.." +
                          std::to_string(max_enumeration_length) + ", got " + std::to_string(k_max));
    VerificationReport report;
    for (int k = 4; k <= k_max; k += 2) {
        const auto expected = expected_for(k, table);
        if (!expected)
            throw DomainError("no expected counts for k=" + std::to_string(k));
        for (Algorithm algorithm : algorithms) {
            EnumerationOptions options;
            options.jobs = jobs;
            options.simple_filter = true;
            const auto summary = enumerate(k, algorithm, options);
            report.rows.push_back({k, algorithm, *expected, summary.total, summary.simple.value_or(0),
                                   summary.elapsed_seconds});
        }
    }
    return report;
}

EnumerationSummary write_listing(const std::filesystem::path& out, int k, Algorithm algorithm,
                                 const EnumerationOptions& options, bool simple_only) {
    EnumerationOptions shard_options = options;
    shard_options.simple_filter = options.simple_filter || simple_only;
    const BoardSpec board = BoardSpec::for_length(k);

    EnumerationSummary merged;
    merged.k = k;
    merged.algorithm = algorithm;
    std::uint64_t simple = 0;
    std::vector<std::filesystem::path> shards;
    for (CellIndex s : start_set(k).cells) {
        shard_options.only_start = s;
        std::vector<CycleSeq> cycles;
        const auto summary = enumerate(k, algorithm, shard_options,
                                       [&](std::span<const CellIndex> cells, bool is_simple) {
                                           if (!simple_only || is_simple)
                                               cycles.push_back(CycleSeq::trusted(
                                                   {cells.begin(), cells.end()}, board));
                                       });
        std::ranges::sort(cycles, [](const CycleSeq& a, const CycleSeq& b) {
            return std::ranges::lexicographical_compare(a.cells(), b.cells());
        });
        auto shard = out;
        shard += ".shard-" + std::to_string(s);
        write_cycles(shard, {k, board, cycles.size(), simple_only}, cycles);
        shards.push_back(shard);

        merged.total += summary.total;
        merged.per_start[s] = summary.total;
        simple += summary.simple.value_or(0);
        merged.elapsed_seconds += summary.elapsed_seconds;
    }
    if (shard_options.simple_filter)
        merged.simple = simple;
    merge_cycle_files(shards, out);
    for (const auto& shard : shards)
        std::filesystem::remove(shard);
    return merged;
}

RenderFormat parse_render_format(std::string_view name) {
    if (name == "svg")
        return RenderFormat::svg;
    if (name == "ascii")
        return RenderFormat::ascii;
    throw DomainError("unknown render format '" + std::string(name) + "' (expected svg or ascii)");
}

namespace {

std::string render_ascii(const CycleSeq& c) {
    const BoardSpec& board = c.board();
    std::vector<int> order(board.cell_count() + 1, 0);
    for (int i = 0; i < c.length(); ++i)
        order[c.cells()[i]] = i + 1;
    const int field = static_cast<int>(std::to_string(c.length()).size());
    std::string out;
    for (int row = 0; row < board.height; ++row) {
        for (int col = 0; col < board.width; ++col) {
            const int n = order[index_of({row, col}, board)];
            std::string text = n ? std::to_string(n) : ".";
            if (col)
                out += ' ';
            out.append(field - text.size(), ' ');
            out += text;
        }
        out += '\n';
    }
    return out;
}

std::string render_svg(const CycleSeq& c) {
    constexpr int cell = 40;
    const BoardSpec& board = c.board();
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << board.width * cell
        << "\" height=\"" << board.height * cell << "\" viewBox=\"0 0 " << board.width * cell << ' '
        << board.height * cell << "\">\n";
    for (int row = 0; row < board.height; ++row)
        for (int col = 0; col < board.width; ++col)
            svg << "  <rect x=\"" << col * cell << "\" y=\"" << row * cell << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << ((row + col) % 2 ? "#b58863" : "#f0d9b5")
                << "\"/>\n";
    svg << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\" points=\"";
    const auto point = [&](CellIndex i) {
        const Coord p = coord_of(i, board);
        svg << p.col * cell + cell / 2 << ',' << p.row * cell + cell / 2;
    };
    for (CellIndex i : c.cells()) {
        point(i);
        svg << ' ';
    }
    point(c.cells().front());
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

} // namespace

std::string render(const CycleSeq& c, RenderFormat format) {
    return format == RenderFormat::svg ? render_svg(c) : render_ascii(c);
}

} // namespace knight_cycles
