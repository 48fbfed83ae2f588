#include "knight_cycles/enumeration.hpp"
#include "knight_cycles/errors.hpp"
#include "knight_cycles/polygon.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

using namespace knight_cycles;

namespace {

using Listing = std::vector<std::vector<CellIndex>>;

Listing listing(int k, Algorithm algorithm, EnumerationOptions options = {}) {
    Listing out;
    (void)enumerate(k, algorithm, options, [&](std::span<const CellIndex> cells, bool) {
        out.emplace_back(cells.begin(), cells.end());
    });
    std::ranges::sort(out);
    return out;
}

// Brute-force s -> t paths with `edges` edges over cells >= s.
Listing brute_half_paths(int s, int t, int edges, int width) {
    Listing out;
    std::vector<int> path{s};
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == edges + 1) {
            if (path.back() == t)
                out.push_back(path);
            return;
        }
        for (int v = s; v <= width * width; ++v) {
            if (std::ranges::find(path, v) != path.end())
                continue;
            if (!oracle::knight_step(oracle::decode(path.back(), width), oracle::decode(v, width)))
                continue;
            path.push_back(v);
            self(self);
            path.pop_back();
        }
    };
    rec(rec);
    return out;
}

} // namespace

TEST_CASE("start_set") {
    CHECK(start_set(6).cells == std::vector<CellIndex>{1, 2, 3, 4});
    CHECK(start_set(4).cells == std::vector<CellIndex>{1, 2, 3});
    CHECK(start_set(16).cells == std::vector<CellIndex>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK_THROWS_AS((void)start_set(7), DomainError);
    CHECK_THROWS_AS((void)start_set(2), DomainError);
    // all on the top row of the (k+1) x (k+1) board
    for (int k = 4; k <= 16; k += 2)
        CHECK(start_set(k).cells.back() <= k + 1);
}

TEST_CASE("half_paths") {
    const BoardSpec b5(5, 5);
    const auto one = half_paths(1, 15, 4, b5);
    REQUIRE(one.size() == 1);
    CHECK(one[0].cells == std::vector<CellIndex>{1, 8, 15});
    CHECK(half_paths(1, 25, 4, b5).empty());

    const auto two = half_paths(2, 18, 4, b5);
    std::set<std::vector<CellIndex>> found;
    for (const auto& h : two)
        found.insert(h.cells);
    CHECK(found.contains({2, 9, 18}));
    CHECK(found.contains({2, 11, 18}));

    SUBCASE("matches brute force at k = 8 on 9x9") {
        const BoardSpec b9(9, 9);
        for (CellIndex s : start_set(8).cells)
            for (CellIndex t : {s + 1, 12, 20, 21, 31, 40}) {
                const auto got = half_paths(s, t, 8, b9);
                Listing cells;
                for (const auto& h : got) {
                    cells.push_back(h.cells);
                    CHECK(h.visited.size() == 5);
                    for (CellIndex c : h.cells)
                        CHECK(h.visited.contains(c));
                }
                CHECK(std::ranges::is_sorted(cells));
                CHECK(cells == brute_half_paths(s, t, 4, 9));
            }
    }
}

TEST_CASE("assemble") {
    const BoardSpec b5(5, 5);
    const auto halves = half_paths(2, 18, 4, b5);
    const auto find = [&](std::vector<CellIndex> cells) {
        return *std::ranges::find_if(halves, [&](const HalfPath& h) { return h.cells == cells; });
    };
    const auto cycle = assemble(find({2, 9, 18}), find({2, 11, 18}), b5);
    REQUIRE(cycle);
    CHECK(std::ranges::equal(cycle->cells(), std::vector<CellIndex>{2, 9, 18, 11}));
    CHECK(oracle::is_closed_knight_cycle({2, 9, 18, 11}, 5));

    const auto corner = half_paths(1, 15, 4, b5).front();
    CHECK_FALSE(assemble(corner, corner, b5));

    // sharing an interior cell
    const BoardSpec b9(9, 9);
    const auto longer = half_paths(1, 21, 8, b9);
    const auto shares_interior = [](const HalfPath& a, const HalfPath& b) {
        for (std::size_t i = 1; i + 1 < a.cells.size(); ++i)
            for (std::size_t j = 1; j + 1 < b.cells.size(); ++j)
                if (a.cells[i] == b.cells[j])
                    return true;
        return false;
    };
    bool saw_overlap = false;
    for (const auto& a : longer)
        for (const auto& b : longer)
            if (&a != &b && shares_interior(a, b)) {
                CHECK_FALSE(assemble(a, b, b9));
                saw_overlap = true;
            }
    CHECK(saw_overlap);

    CHECK_THROWS_AS((void)assemble(corner, half_paths(2, 18, 4, b5).front(), b5), DomainError);
}

TEST_CASE("class counts for small k") {
    for (Algorithm algorithm : {Algorithm::dfs, Algorithm::mitm}) {
        EnumerationOptions options;
        options.simple_filter = true;
        const auto k4 = enumerate(4, algorithm, options);
        CHECK(k4.total == 3);
        CHECK(k4.simple == 3);
        const auto k6 = enumerate(6, algorithm, options);
        CHECK(k6.total == 25);
        CHECK(k6.simple == 13);
        const auto k8 = enumerate(8, algorithm, options);
        CHECK(k8.total == 480);
        CHECK(k8.simple == 178);
        const auto k10 = enumerate(10, algorithm, options);
        CHECK(k10.total == 12000);
        CHECK(k10.simple == 3034);

        for (const auto* s : {&k4, &k6, &k8, &k10}) {
            CHECK(s->algorithm == algorithm);
            CHECK(std::accumulate(s->per_start.begin(), s->per_start.end(), std::uint64_t{0},
                                  [](auto acc, const auto& kv) { return acc + kv.second; }) == s->total);
            CHECK(*s->simple <= s->total);
        }
    }
    CHECK_FALSE(enumerate(6, Algorithm::dfs).simple.has_value());
}

TEST_CASE("dfs and mitm emit identical listings") {
    for (int k : {4, 6, 8}) {
        const auto dfs = listing(k, Algorithm::dfs);
        const auto mitm = listing(k, Algorithm::mitm);
        CHECK(dfs == mitm);
        CHECK(std::ranges::adjacent_find(dfs) == dfs.end()); // no duplicates
        for (const auto& cells : dfs) {
            REQUIRE(oracle::is_closed_knight_cycle(cells, k + 1));
            REQUIRE(oracle::canonical_cells(cells, k + 1) == cells);
            for (CellIndex c : cells) {
                const auto [r, col] = oracle::decode(c, k + 1);
                REQUIRE(r <= k);
                REQUIRE(col <= k);
            }
        }
    }
}

TEST_CASE("listings match an unpruned brute force") {
    for (int k : {4, 6}) {
        const auto classes = oracle::naive_classes(k);
        const Listing expected(classes.begin(), classes.end());
        CHECK(listing(k, Algorithm::dfs) == expected);
        // canonical starts never exceed k/2 + 1
        for (const auto& c : expected)
            CHECK(c[0] <= k / 2 + 1);
    }
}

TEST_CASE("prune soundness: no floor prune, no minimality filter") {
    for (int k : {4, 6}) {
        EnumerationOptions options;
        options.start_floor_prune = false;
        options.minimality_filter = false;
        std::set<std::vector<int>> classes;
        std::uint64_t closures = 0;
        const auto summary = enumerate(k, Algorithm::dfs, options, [&](std::span<const CellIndex> cells, bool) {
            ++closures;
            classes.insert(oracle::canonical_cells({cells.begin(), cells.end()}, k + 1));
        });
        CHECK(summary.total == closures);
        CHECK(closures > classes.size());
        CHECK(classes.size() == (k == 4 ? 3u : 25u));

        options.closure_prune = false;
        std::set<std::vector<int>> unpruned;
        (void)enumerate(k, Algorithm::dfs, options, [&](std::span<const CellIndex> cells, bool) {
            unpruned.insert(oracle::canonical_cells({cells.begin(), cells.end()}, k + 1));
        });
        CHECK(unpruned == classes);
    }
}

TEST_CASE("start bound: seeding from the whole top row finds nothing past k/2 + 1") {
    for (int k : {4, 6, 8, 10}) {
        EnumerationOptions options;
        options.full_top_row = true;
        const auto summary = enumerate(k, Algorithm::dfs, options);
        CAPTURE(k);
        CHECK(summary.total == enumerate(k, Algorithm::dfs).total);
        for (const auto& [s, n] : summary.per_start)
            if (s > k / 2 + 1)
                CHECK(n == 0);
        CHECK(summary.per_start.size() == static_cast<std::size_t>(k + 1));
    }
}

TEST_CASE("results do not depend on the number of jobs") {
    for (Algorithm algorithm : {Algorithm::dfs, Algorithm::mitm}) {
        EnumerationOptions options;
        options.simple_filter = true;
        const auto base = listing(8, algorithm, options);
        const auto base_summary = enumerate(8, algorithm, options);
        for (int jobs : {2, 3, 8}) {
            options.jobs = jobs;
            CHECK(listing(8, algorithm, options) == base);
            const auto s = enumerate(8, algorithm, options);
            CHECK(s.total == base_summary.total);
            CHECK(s.simple == base_summary.simple);
            CHECK(s.per_start == base_summary.per_start);
        }
    }
}

TEST_CASE("the simple flag matches is_simple") {
    EnumerationOptions options;
    options.simple_filter = true;
    const BoardSpec b = BoardSpec::for_length(8);
    (void)enumerate(8, Algorithm::mitm, options, [&](std::span<const CellIndex> cells, bool simple) {
        REQUIRE(simple == is_simple(CycleSeq::trusted({cells.begin(), cells.end()}, b)));
    });
}

TEST_CASE("only_start restricts the search to one start cell") {
    std::uint64_t sum = 0;
    for (CellIndex s : start_set(8).cells) {
        EnumerationOptions options;
        options.only_start = s;
        for (const auto& cells : listing(8, Algorithm::mitm, options))
            REQUIRE(cells[0] == s);
        sum += enumerate(8, Algorithm::dfs, options).total;
    }
    CHECK(sum == 480);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS((void)enumerate(7, Algorithm::dfs), DomainError);
    CHECK_THROWS_AS((void)enumerate(18, Algorithm::mitm), DomainError);
    EnumerationOptions zero_jobs;
    zero_jobs.jobs = 0;
    CHECK_THROWS_AS((void)enumerate(6, Algorithm::dfs, zero_jobs), DomainError);
    CHECK(parse_algorithm("mitm") == Algorithm::mitm);
    CHECK_THROWS_AS((void)parse_algorithm("bfs"), DomainError);

    SUBCASE("a failing sink aborts and propagates") {
        for (int jobs : {1, 4}) {
            EnumerationOptions options;
            options.jobs = jobs;
            int calls = 0;
            const auto sink = [&](std::span<const CellIndex>, bool) {
                if (++calls == 7)
                    throw std::runtime_error("sink full");
            };
            CHECK_THROWS_WITH_AS((void)enumerate(8, Algorithm::dfs, options, sink), "sink full",
                                 std::runtime_error);
            calls = 0;
            CHECK_THROWS_WITH_AS((void)enumerate(8, Algorithm::mitm, options, sink), "sink full",
                                 std::runtime_error);
        }
    }

    SUBCASE("memory budget") {
        EnumerationOptions options;
        options.memory_budget_bytes = 64;
        try {
            (void)enumerate(8, Algorithm::mitm, options);
            FAIL("expected a ResourceError");
        } catch (const ResourceError& e) {
            CHECK(std::string(e.what()).find("(s=") != std::string::npos);
            CHECK(std::string(e.what()).find(", t=") != std::string::npos);
        }
    }
}
