#include "knight_cycles/enumeration.hpp"

#include "knight_cycles/errors.hpp"
#include "knight_cycles/polygon.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace knight_cycles {

std::string_view to_string(Algorithm a) noexcept {
    return a == Algorithm::dfs ? "dfs" : "mitm";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "dfs")
        return Algorithm::dfs;
    if (name == "mitm")
        return Algorithm::mitm;
    throw DomainError("unknown algorithm '" + std::string(name) + "' (expected dfs or mitm)");
}

StartSet start_set(int k) {
    (void)BoardSpec::for_length(k); // validates k
    StartSet out{k, {}};
    for (CellIndex s = 1; s <= k / 2 + 1; ++s)
        out.cells.push_back(s);
    return out;
}

namespace {

void check_enumeration_length(int k) {
    if (k < 4 || k % 2 != 0 || k > max_enumeration_length)
        throw DomainError("enumeration needs an even length in 4.." +
                          std::to_string(max_enumeration_length) + ", got " + std::to_string(k));
}

void check_cell_capacity(const BoardSpec& board) {
    if (board.cell_count() >= CellSet::capacity)
        throw DomainError("board " + std::to_string(board.width) + "x" +
                          std::to_string(board.height) + " exceeds the cell-set capacity");
}

// Depth-first generation of the simple knight paths s -> t with `edges` edges
// over cells >= s, in lexicographic order. `dist_to_t` comes from
// KnightGraph::distances_to(t, s) and only prunes.
template <class Visit>
void generate_half_paths(const KnightGraph& graph, CellIndex s, CellIndex t, int edges,
                         const std::vector<int>& dist_to_t, Visit&& visit) {
    std::array<CellIndex, max_enumeration_length + 1> path{};
    CellSet visited;
    path[0] = s;
    visited.insert(s);

    const auto extend = [&](auto&& self, int len) -> void {
        if (len == edges + 1) {
            visit(std::span<const CellIndex>(path.data(), len), visited);
            return;
        }
        const int remaining = edges - len; // edges still to go after placing path[len]
        for (CellIndex v : graph.neighbors(path[len - 1])) {
            if (v <= s || visited.contains(v))
                continue;
            if (len == edges ? v != t : (v == t || dist_to_t[v] < 0 || dist_to_t[v] > remaining))
                continue;
            path[len] = v;
            visited.insert(v);
            self(self, len + 1);
            visited.erase(v);
        }
    };
    if (t > s && dist_to_t[s] >= 0 && dist_to_t[s] <= edges)
        extend(extend, 1);
}

// Serializes sink delivery across workers, in batches.
class Emitter {
public:
    Emitter(const CycleSink& sink, std::mutex& mutex, int k) : sink_(sink), mutex_(mutex), k_(k) {}
    Emitter(const Emitter&) = delete;
    Emitter& operator=(const Emitter&) = delete;
    ~Emitter() = default;

    [[nodiscard]] bool active() const noexcept { return static_cast<bool>(sink_); }

    void push(std::span<const CellIndex> cells, bool simple) {
        cells_.insert(cells_.end(), cells.begin(), cells.end());
        flags_.push_back(simple);
        if (flags_.size() >= batch_size)
            flush();
    }

    void flush() {
        if (flags_.empty())
            return;
        std::lock_guard lock(mutex_);
        for (std::size_t i = 0; i < flags_.size(); ++i)
            sink_(std::span<const CellIndex>(cells_.data() + i * k_, k_), flags_[i] != 0);
        cells_.clear();
        flags_.clear();
    }

private:
    static constexpr std::size_t batch_size = 4096;

    const CycleSink& sink_;
    std::mutex& mutex_;
    std::size_t k_;
    std::vector<CellIndex> cells_;
    std::vector<char> flags_;
};

struct ShardResult {
    CellIndex start = 0;
    std::uint64_t total = 0;
    std::uint64_t simple = 0;
};

// Runs fn(shard, emitter) for shard = 0..count-1 on up to `jobs` threads.
// The first exception stops the remaining shards and is rethrown.
template <class Fn>
void run_shards(std::size_t count, int jobs, const CycleSink& sink, int k, Fn&& fn) {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::mutex sink_mutex;

    const auto worker = [&] {
        Emitter emitter(sink, sink_mutex, k);
        try {
            for (;;) {
                const std::size_t shard = next.fetch_add(1);
                if (shard >= count || failed.load(std::memory_order_relaxed))
                    break;
                fn(shard, emitter);
                emitter.flush();
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
                error = std::current_exception();
            failed = true;
        }
    };

    const auto threads = static_cast<std::size_t>(std::max(1, jobs));
    if (threads == 1 || count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < std::min(threads, count); ++i)
            pool.emplace_back(worker);
    }
    if (error)
        std::rethrow_exception(error);
}

EnumerationSummary summarize(int k, Algorithm algorithm, const EnumerationOptions& options,
                             const std::vector<ShardResult>& shards,
                             std::chrono::steady_clock::time_point began) {
    EnumerationSummary summary;
    summary.k = k;
    summary.algorithm = algorithm;
    for (CellIndex s : start_set(k).cells)
        summary.per_start[s] = 0;
    std::uint64_t simple = 0;
    for (const ShardResult& r : shards) {
        summary.total += r.total;
        summary.per_start[r.start] += r.total;
        simple += r.simple;
    }
    if (options.simple_filter)
        summary.simple = simple;
    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - began).count();
    return summary;
}

bool polygon_is_simple(const KnightGraph& graph, std::span<const CellIndex> cells) {
    std::array<Coord, max_enumeration_length> pts;
    for (std::size_t i = 0; i < cells.size(); ++i)
        pts[i] = graph.coord(cells[i]);
    return is_simple(std::span<const Coord>(pts.data(), cells.size()));
}

// Minimal steps between columns: a knight changes column by at most 2.
constexpr int column_steps(int col) noexcept { return (col + 1) / 2; }

class DfsSearch {
public:
    DfsSearch(const KnightGraph& graph, const MinimalityChecker& minimal, int k, CellIndex start,
              const std::vector<int>& dist_to_start, const EnumerationOptions& options,
              Emitter& emitter)
        : graph_(graph), minimal_(minimal), k_(k), start_(start), dist_(dist_to_start),
          options_(options), emitter_(emitter),
          start_col_steps_(column_steps(graph.coord(start).col)) {}

    ShardResult run(CellIndex second) {
        path_[0] = start_;
        path_[1] = second;
        visited_.insert(start_);
        visited_.insert(second);
        extend(2, std::min(graph_.coord(start_).col, graph_.coord(second).col));
        return {start_, total_, simple_};
    }

    // Whether `v` may become path vertex number `len` (0-based).
    [[nodiscard]] bool admissible(CellIndex v, int len, int min_col) const {
        if (visited_.contains(v))
            return false;
        if (options_.start_floor_prune && v < start_)
            return false;
        if (!options_.closure_prune)
            return true;
        const int remaining = k_ - len; // edges left after v, including the closing one
        if (dist_[v] < 0 || dist_[v] > remaining)
            return false;
        if (options_.minimality_filter && min_col > 0 &&
            column_steps(graph_.coord(v).col) + start_col_steps_ > remaining)
            return false;
        return true;
    }

private:
    void extend(int len, int min_col) {
        const CellIndex u = path_[len - 1];
        if (len == k_) {
            if (graph_.adjacent(u, start_))
                accept();
            return;
        }
        for (CellIndex v : graph_.neighbors(u)) {
            const int col = std::min(min_col, graph_.coord(v).col);
            if (!admissible(v, len, col))
                continue;
            path_[len] = v;
            visited_.insert(v);
            extend(len + 1, col);
            visited_.erase(v);
        }
    }

    void accept() {
        const std::span<const CellIndex> cycle(path_.data(), k_);
        if (options_.minimality_filter && !minimal_(cycle))
            return;
        ++total_;
        bool simple = false;
        if (options_.simple_filter && (simple = polygon_is_simple(graph_, cycle)))
            ++simple_;
        if (emitter_.active())
            emitter_.push(cycle, simple);
    }

    const KnightGraph& graph_;
    const MinimalityChecker& minimal_;
    int k_;
    CellIndex start_;
    const std::vector<int>& dist_;
    const EnumerationOptions& options_;
    Emitter& emitter_;
    int start_col_steps_;
    std::array<CellIndex, max_enumeration_length> path_{};
    CellSet visited_;
    std::uint64_t total_ = 0;
    std::uint64_t simple_ = 0;
};

// Flat storage for one (s, t) pair's half paths.
struct HalfPathTable {
    int stride = 0; // vertices per path
    std::vector<std::uint16_t> cells;
    std::vector<CellSet> interiors;
    std::vector<std::uint8_t> min_cols;

    [[nodiscard]] std::size_t size() const noexcept { return interiors.size(); }
    [[nodiscard]] const std::uint16_t* path(std::size_t i) const noexcept {
        return cells.data() + i * stride;
    }
    [[nodiscard]] static std::size_t bytes_per_path(int stride) noexcept {
        return stride * sizeof(std::uint16_t) + sizeof(CellSet) + sizeof(std::uint8_t);
    }
};

} // namespace

std::vector<HalfPath> half_paths(CellIndex s, CellIndex t, int k, const BoardSpec& board) {
    if (k < 4 || k % 2 != 0)
        throw DomainError("cycle length must be even and >= 4, got " + std::to_string(k));
    if (k / 2 > max_enumeration_length)
        throw DomainError("half-path length too large");
    check_cell_capacity(board);
    if (!board.contains(s) || !board.contains(t))
        throw DomainError("half-path endpoints must lie on the board");
    const KnightGraph graph(board);
    const auto dist = graph.distances_to(t, s);
    std::vector<HalfPath> out;
    generate_half_paths(graph, s, t, k / 2, dist,
                        [&](std::span<const CellIndex> cells, const CellSet& visited) {
                            out.push_back({{cells.begin(), cells.end()}, visited});
                        });
    return out;
}

std::optional<CycleSeq> assemble(const HalfPath& a, const HalfPath& b, const BoardSpec& board) {
    if (a.cells.size() < 2 || a.cells.size() != b.cells.size() || a.start() != b.start() ||
        a.end() != b.end())
        throw DomainError("half paths must share both endpoints and their length");
    for (std::size_t i = 1; i + 1 < b.cells.size(); ++i)
        if (a.visited.contains(b.cells[i]))
            return std::nullopt;
    std::vector<CellIndex> cells(a.cells.begin(), a.cells.end());
    for (std::size_t i = b.cells.size() - 2; i >= 1; --i)
        cells.push_back(b.cells[i]);
    return CycleSeq::trusted(std::move(cells), board);
}

EnumerationSummary enumerate_dfs(int k, const CycleSink& sink, const EnumerationOptions& options) {
    check_enumeration_length(k);
    const auto began = std::chrono::steady_clock::now();
    const BoardSpec board = BoardSpec::for_length(k);
    const KnightGraph graph(board);
    const MinimalityChecker minimal(board);
    StartSet starts = start_set(k);
    if (options.full_top_row)
        for (CellIndex s = static_cast<CellIndex>(starts.cells.size()) + 1; s <= board.width; ++s)
            starts.cells.push_back(s);

    struct Shard {
        CellIndex start;
        CellIndex second;
    };
    std::vector<Shard> shards;
    std::map<CellIndex, std::vector<int>> dist;
    for (CellIndex s : starts.cells) {
        if (options.only_start && *options.only_start != s)
            continue;
        dist[s] = graph.distances_to(s, options.start_floor_prune ? s : 1);
        for (CellIndex v : graph.neighbors(s))
            if (!options.start_floor_prune || v > s)
                shards.push_back({s, v});
    }

    std::vector<ShardResult> results(shards.size());
    run_shards(shards.size(), options.jobs, sink, k, [&](std::size_t i, Emitter& emitter) {
        const Shard& shard = shards[i];
        DfsSearch search(graph, minimal, k, shard.start, dist.at(shard.start), options, emitter);
        results[i] = {shard.start, 0, 0};
        if (search.admissible(shard.second, 1,
                              std::min(graph.coord(shard.start).col, graph.coord(shard.second).col)))
            results[i] = search.run(shard.second);
    });
    return summarize(k, Algorithm::dfs, options, results, began);
}

EnumerationSummary enumerate_mitm(int k, const CycleSink& sink, const EnumerationOptions& options) {
    check_enumeration_length(k);
    const auto began = std::chrono::steady_clock::now();
    const BoardSpec board = BoardSpec::for_length(k);
    const KnightGraph graph(board);
    const MinimalityChecker minimal(board);
    const int half = k / 2;
    const int stride = half + 1;

    struct Shard {
        CellIndex start;
        CellIndex end;
    };
    std::vector<Shard> shards;
    for (CellIndex s : start_set(k).cells) {
        if (options.only_start && *options.only_start != s)
            continue;
        const auto from_s = graph.distances_to(s, s);
        for (CellIndex t = s + 1; t <= board.cell_count(); ++t)
            if (from_s[t] >= 0 && from_s[t] <= half && (half - from_s[t]) % 2 == 0)
                shards.push_back({s, t});
    }

    std::vector<ShardResult> results(shards.size());
    run_shards(shards.size(), options.jobs, sink, k, [&](std::size_t i, Emitter& emitter) {
        const auto [s, t] = shards[i];
        ShardResult result{s, 0, 0};

        HalfPathTable table;
        table.stride = stride;
        const std::size_t per_path = HalfPathTable::bytes_per_path(stride);
        const auto dist = graph.distances_to(t, s);
        generate_half_paths(graph, s, t, half, dist,
                            [&](std::span<const CellIndex> cells, const CellSet& visited) {
                                if ((table.size() + 1) * per_path > options.memory_budget_bytes)
                                    throw ResourceError(
                                        "half-path list for (s=" + std::to_string(s) +
                                        ", t=" + std::to_string(t) + ") exceeds the memory budget of " +
                                        std::to_string(options.memory_budget_bytes) + " bytes");
                                CellSet interior = visited;
                                interior.erase(s);
                                interior.erase(t);
                                int min_col = graph.coord(s).col;
                                for (CellIndex c : cells) {
                                    table.cells.push_back(static_cast<std::uint16_t>(c));
                                    min_col = std::min(min_col, graph.coord(c).col);
                                }
                                table.interiors.push_back(interior);
                                table.min_cols.push_back(static_cast<std::uint8_t>(min_col));
                            });

        // Paths arrive in lexicographic order, so equal second cells are
        // contiguous. A minimal cycle has cycle[1] = a[1] < cycle[k-1] = b[1],
        // so each a only pairs with the later groups.
        const std::size_t n = table.size();
        std::vector<std::size_t> group_end(n);
        for (std::size_t j = n; j-- > 0;)
            group_end[j] = (j + 1 < n && table.path(j + 1)[1] == table.path(j)[1]) ? group_end[j + 1]
                                                                                   : j + 1;
        std::array<CellIndex, max_enumeration_length> cycle{};
        for (std::size_t a = 0; a < n; ++a) {
            const std::uint16_t* pa = table.path(a);
            for (int v = 0; v < stride; ++v)
                cycle[v] = pa[v];
            const bool a_touches_left = table.min_cols[a] == 0;
            for (std::size_t b = group_end[a]; b < n; ++b) {
                if (!a_touches_left && table.min_cols[b] != 0)
                    continue;
                if (!table.interiors[a].disjoint(table.interiors[b]))
                    continue;
                const std::uint16_t* pb = table.path(b);
                for (int v = 1; v < half; ++v)
                    cycle[half + v] = pb[half - v];
                const std::span<const CellIndex> closed(cycle.data(), k);
                if (!minimal(closed))
                    continue;
                ++result.total;
                bool simple = false;
                if (options.simple_filter && (simple = polygon_is_simple(graph, closed)))
                    ++result.simple;
                if (emitter.active())
                    emitter.push(closed, simple);
            }
        }
        results[i] = result;
    });
    return summarize(k, Algorithm::mitm, options, results, began);
}

EnumerationSummary enumerate(int k, Algorithm algorithm, const EnumerationOptions& options,
                             const CycleSink& sink) {
    if (options.jobs < 1)
        throw DomainError("jobs must be >= 1");
    return algorithm == Algorithm::dfs ? enumerate_dfs(k, sink, options)
                                       : enumerate_mitm(k, sink, options);
}

} // namespace knight_cycles
