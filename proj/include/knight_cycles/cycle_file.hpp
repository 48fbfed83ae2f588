#pragma once

#include "knight_cycles/board.hpp"
#include "knight_cycles/cycle.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knight_cycles {

// Cycle listing format, ASCII with LF line endings:
//
//   KNIGHT-CYCLES v1 k=<k> board=<W>x<H> count=<n> filter=<all|simple>
//   <k space-separated cell indices>      (n lines, ascending)
struct CycleFileHeader {
    int k = 0;
    BoardSpec board;
    std::uint64_t count = 0;
    bool simple_only = false;

    friend bool operator==(const CycleFileHeader&, const CycleFileHeader&) = default;
};

[[nodiscard]] std::string format_header(const CycleFileHeader& header);
// Throws ParseError at line 1.
[[nodiscard]] CycleFileHeader parse_header(std::string_view line);

struct CycleFile {
    CycleFileHeader header;
    std::vector<CycleSeq> cycles;
};

// `cycles` must already be sorted; header.count is taken from cycles.size().
void write_cycles(std::ostream& out, CycleFileHeader header, std::span<const CycleSeq> cycles);
void write_cycles(const std::filesystem::path& file, CycleFileHeader header,
                  std::span<const CycleSeq> cycles);

// Throws ParseError (with line number) on a malformed header, a count
// mismatch, an out-of-range index or a line that is not a knight cycle.
[[nodiscard]] CycleFile read_cycles(std::istream& in);
[[nodiscard]] CycleFile read_cycles(const std::filesystem::path& file);

// Problems found by a full re-check of a listing: parse errors, lines that are
// not canonical, and ordering violations. Empty when the file is valid.
[[nodiscard]] std::vector<std::string> check_cycle_file(const std::filesystem::path& file);

// Streaming k-way merge of sorted listings with identical k, board and filter
// into one sorted listing. Duplicate lines across inputs are an error.
void merge_cycle_files(std::span<const std::filesystem::path> inputs,
                       const std::filesystem::path& output);

} // namespace knight_cycles
