#include "knight_cycles/cycle_file.hpp"

#include "knight_cycles/errors.hpp"
#include "knight_cycles/polygon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <queue>
#include <sstream>

namespace knight_cycles {

namespace {

constexpr std::string_view magic = "KNIGHT-CYCLES";
constexpr std::string_view version = "v1";

bool less_cells(std::span<const CellIndex> a, std::span<const CellIndex> b) {
    return std::ranges::lexicographical_compare(a, b);
}

template <class T>
T parse_field(std::string_view token, std::string_view key) {
    if (!token.starts_with(key) || token.size() == key.size())
        throw ParseError(1, "expected '" + std::string(key) + "<value>' in header");
    T value{};
    const auto digits = token.substr(key.size());
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size())
        throw ParseError(1, "bad value in header field '" + std::string(token) + "'");
    return value;
}

// One body line: exactly k single-space-separated decimal indices.
std::vector<CellIndex> parse_body_line(std::string_view line, std::size_t line_no, int k,
                                       const BoardSpec& board) {
    std::vector<CellIndex> cells;
    cells.reserve(k);
    std::size_t pos = 0;
    while (pos <= line.size()) {
        const std::size_t space = std::min(line.find(' ', pos), line.size());
        const auto token = line.substr(pos, space - pos);
        CellIndex value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
            throw ParseError(line_no, "malformed cell index '" + std::string(token) + "'");
        if (!board.contains(value))
            throw ParseError(line_no, "cell index " + std::to_string(value) + " out of range 1.." +
                                          std::to_string(board.cell_count()));
        cells.push_back(value);
        pos = space + 1;
    }
    if (static_cast<int>(cells.size()) != k)
        throw ParseError(line_no, "expected " + std::to_string(k) + " cells, got " +
                                      std::to_string(cells.size()));
    return cells;
}

CycleSeq parse_cycle_line(std::string_view line, std::size_t line_no, const CycleFileHeader& header) {
    auto cells = parse_body_line(line, line_no, header.k, header.board);
    try {
        return validate_cycle(cells, header.board);
    } catch (const ValidationError& e) {
        throw ParseError(line_no, std::string("not a knight cycle: ") + e.what());
    }
}

std::ifstream open_input(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + file.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + file.string());
    return out;
}

} // namespace

std::string format_header(const CycleFileHeader& header) {
    return std::string(magic) + ' ' + std::string(version) + " k=" + std::to_string(header.k) +
           " board=" + std::to_string(header.board.width) + 'x' +
           std::to_string(header.board.height) + " count=" + std::to_string(header.count) +
           " filter=" + (header.simple_only ? "simple" : "all");
}

CycleFileHeader parse_header(std::string_view line) {
    std::vector<std::string_view> tokens;
    for (std::size_t pos = 0; pos <= line.size();) {
        const std::size_t space = std::min(line.find(' ', pos), line.size());
        tokens.push_back(line.substr(pos, space - pos));
        pos = space + 1;
    }
    if (tokens.size() != 6 || tokens[0] != magic || tokens[1] != version)
        throw ParseError(1, "not a KNIGHT-CYCLES v1 header");
    CycleFileHeader header;
    header.k = parse_field<int>(tokens[2], "k=");
    const auto board = tokens[3];
    const auto x = board.find('x');
    if (!board.starts_with("board=") || x == std::string_view::npos)
        throw ParseError(1, "expected 'board=<W>x<H>' in header");
    const int width = parse_field<int>(board.substr(0, x), "board=");
    const int height = parse_field<int>("h=" + std::string(board.substr(x + 1)), "h=");
    if (width < 1 || height < 1)
        throw ParseError(1, "board dimensions must be positive");
    header.board = BoardSpec(width, height);
    header.count = parse_field<std::uint64_t>(tokens[4], "count=");
    if (tokens[5] == "filter=all")
        header.simple_only = false;
    else if (tokens[5] == "filter=simple")
        header.simple_only = true;
    else
        throw ParseError(1, "expected 'filter=all' or 'filter=simple' in header");
    if (header.k < 4 || header.k % 2 != 0)
        throw ParseError(1, "cycle length must be even and >= 4");
    if (format_header(header) != line)
        throw ParseError(1, "header is not in canonical form");
    return header;
}

void write_cycles(std::ostream& out, CycleFileHeader header, std::span<const CycleSeq> cycles) {
    header.count = cycles.size();
    out << format_header(header) << '\n';
    for (const CycleSeq& c : cycles)
        out << format_sequence(c.cells(), ' ') << '\n';
}

void write_cycles(const std::filesystem::path& file, CycleFileHeader header,
                  std::span<const CycleSeq> cycles) {
    auto out = open_output(file);
    write_cycles(out, header, cycles);
    if (!out.flush())
        throw std::runtime_error("write failed: " + file.string());
}

CycleFile read_cycles(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(1, "empty file");
    CycleFile file;
    file.header = parse_header(line);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (file.cycles.size() == file.header.count)
            throw ParseError(line_no, "more lines than count=" + std::to_string(file.header.count));
        file.cycles.push_back(parse_cycle_line(line, line_no, file.header));
    }
    if (file.cycles.size() != file.header.count)
        throw ParseError(line_no + 1, "expected count=" + std::to_string(file.header.count) +
                                          " cycles, found " + std::to_string(file.cycles.size()));
    return file;
}

CycleFile read_cycles(const std::filesystem::path& file) {
    auto in = open_input(file);
    return read_cycles(in);
}

std::vector<std::string> check_cycle_file(const std::filesystem::path& path) {
    std::vector<std::string> problems;
    CycleFile file;
    try {
        file = read_cycles(path);
    } catch (const ParseError& e) {
        problems.push_back(e.what());
        return problems;
    }
    const std::size_t first_body_line = 2;
    if (file.header.board != BoardSpec::for_length(file.header.k))
        problems.push_back("line 1: listings use the " + std::to_string(file.header.k + 1) + "x" +
                           std::to_string(file.header.k + 1) + " board");
    for (std::size_t i = 0; i < file.cycles.size(); ++i) {
        const CycleSeq& c = file.cycles[i];
        const std::string where = "line " + std::to_string(first_body_line + i) + ": ";
        if (!is_minimal(c))
            problems.push_back(where + "not canonical (canonical form is " +
                               format_sequence(canonicalize(c).cells(), ' ') + ")");
        if (file.header.simple_only && !is_simple(c))
            problems.push_back(where + "self-intersecting cycle in a filter=simple listing");
        if (i > 0 && !less_cells(file.cycles[i - 1].cells(), c.cells()))
            problems.push_back(where + "not strictly ascending");
    }
    return problems;
}

void merge_cycle_files(std::span<const std::filesystem::path> inputs,
                       const std::filesystem::path& output) {
    if (inputs.empty())
        throw DomainError("nothing to merge");

    struct Source {
        std::ifstream in;
        CycleFileHeader header;
        std::size_t line_no = 1;
        std::uint64_t read = 0;
        std::optional<std::vector<CellIndex>> current;
        std::filesystem::path name;

        void advance() {
            std::string line;
            if (read == header.count) {
                if (std::getline(in, line))
                    throw ParseError(line_no + 1, name.string() + ": more lines than count");
                current.reset();
                return;
            }
            if (!std::getline(in, line))
                throw ParseError(line_no + 1, name.string() + ": fewer lines than count");
            ++line_no;
            ++read;
            auto next = parse_cycle_line(line, line_no, header);
            std::vector<CellIndex> cells(next.cells().begin(), next.cells().end());
            if (current && !less_cells(*current, cells))
                throw ParseError(line_no, name.string() + ": not strictly ascending");
            current = std::move(cells);
        }
    };

    std::vector<Source> sources(inputs.size());
    CycleFileHeader merged;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        Source& src = sources[i];
        src.name = inputs[i];
        src.in = open_input(inputs[i]);
        std::string line;
        if (!std::getline(src.in, line))
            throw ParseError(1, inputs[i].string() + ": empty file");
        src.header = parse_header(line);
        if (i == 0) {
            merged = src.header;
            merged.count = 0;
        } else if (src.header.k != merged.k || src.header.board != merged.board ||
                   src.header.simple_only != merged.simple_only) {
            throw ParseError(1, inputs[i].string() + ": header does not match " + inputs[0].string());
        }
        merged.count += src.header.count;
        src.advance();
    }

    auto out = open_output(output);
    out << format_header(merged) << '\n';
    const auto later = [&](std::size_t a, std::size_t b) {
        return less_cells(*sources[b].current, *sources[a].current);
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> heap(later);
    for (std::size_t i = 0; i < sources.size(); ++i)
        if (sources[i].current)
            heap.push(i);
    std::optional<std::vector<CellIndex>> last;
    while (!heap.empty()) {
        const std::size_t i = heap.top();
        heap.pop();
        auto& cells = *sources[i].current;
        if (last && !less_cells(*last, cells))
            throw DomainError("duplicate cycle " + format_sequence(cells, ' ') + " across inputs");
        out << format_sequence(cells, ' ') << '\n';
        last = cells;
        sources[i].advance();
        if (sources[i].current)
            heap.push(i);
    }
    if (!out.flush())
        throw std::runtime_error("write failed: " + output.string());
}

} // namespace knight_cycles
