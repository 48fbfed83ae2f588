#include "knight_cycles/analysis.hpp"
#include "knight_cycles/cycle.hpp"
#include "knight_cycles/cycle_file.hpp"
#include "knight_cycles/enumeration.hpp"
#include "knight_cycles/errors.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace kc = knight_cycles;

namespace {

enum Exit : int { ok = 0, failed = 1, usage = 2 };

void add_jobs(CLI::App* cmd, int& jobs) {
    cmd->add_option("--jobs", jobs, "worker threads")
        ->envname("KNIGHT_CYCLES_JOBS")
        ->check(CLI::PositiveNumber);
}

void add_algorithm(CLI::App* cmd, std::string& algorithm, std::vector<std::string> choices) {
    cmd->add_option("--algorithm", algorithm, "enumeration engine")
        ->check(CLI::IsMember(std::move(choices)));
}

int emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return ok;
    }
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!(file << text)) {
        std::cerr << "error: cannot write " << out << '\n';
        return failed;
    }
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate and classify closed knight's cycles"};
    app.require_subcommand(1);

    int length = 0;
    int max_length = 0;
    int jobs = 1;
    int width = 0;
    bool simple_only = false;
    std::string algorithm = "mitm";
    std::string out;
    std::string in;
    std::string seq;
    std::string format = "ascii";

    auto* count = app.add_subcommand("count", "count nonequivalent cycles of one length");
    count->add_option("--length", length, "cycle length k")->required();
    add_algorithm(count, algorithm, {"dfs", "mitm"});
    count->add_flag("--simple-only", simple_only, "also count non-self-intersecting cycles");
    add_jobs(count, jobs);

    auto* list = app.add_subcommand("list", "write the canonical listing of one length");
    list->add_option("--length", length, "cycle length k")->required();
    list->add_option("--out", out, "output file")->required();
    list->add_flag("--simple-only", simple_only, "keep only non-self-intersecting cycles");
    add_algorithm(list, algorithm, {"dfs", "mitm"});
    add_jobs(list, jobs);

    auto* verify = app.add_subcommand("verify", "compare counts against the published table");
    verify->add_option("--max-length", max_length, "largest k to check")->required();
    add_algorithm(verify, algorithm, {"dfs", "mitm", "both"});
    add_jobs(verify, jobs);

    auto* twins = app.add_subcommand("twins", "groups of inequivalent cycles on one cell set");
    twins->add_option("--length", length, "cycle length k")->required();
    twins->add_option("--out", out, "output file");
    add_jobs(twins, jobs);

    auto* render = app.add_subcommand("render", "draw one cycle");
    render->add_option("--seq", seq, "comma-separated cell indices")->required();
    render->add_option("--width", width, "board width used to decode the indices")
        ->required()
        ->check(CLI::PositiveNumber);
    render->add_option("--format", format, "svg or ascii")->check(CLI::IsMember({"svg", "ascii"}));
    render->add_option("--out", out, "output file");

    auto* check = app.add_subcommand("check", "re-validate a cycle listing");
    check->add_option("--in", in, "listing file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        kc::EnumerationOptions options;
        options.jobs = jobs;

        if (*count) {
            options.simple_filter = simple_only;
            const auto summary = kc::enumerate(length, kc::parse_algorithm(algorithm), options);
            std::printf("k=%d total=%llu", summary.k, static_cast<unsigned long long>(summary.total));
            if (summary.simple)
                std::printf(" simple=%llu", static_cast<unsigned long long>(*summary.simple));
            std::printf(" elapsed=%.3f\n", summary.elapsed_seconds);
            return ok;
        }

        if (*list) {
            const auto summary =
                kc::write_listing(out, length, kc::parse_algorithm(algorithm), options, simple_only);
            std::fprintf(stderr, "k=%d total=%llu", summary.k,
                         static_cast<unsigned long long>(summary.total));
            if (summary.simple)
                std::fprintf(stderr, " simple=%llu", static_cast<unsigned long long>(*summary.simple));
            std::fprintf(stderr, " elapsed=%.3f -> %s\n", summary.elapsed_seconds, out.c_str());
            return ok;
        }

        if (*verify) {
            std::vector<kc::Algorithm> algorithms;
            if (algorithm == "both")
                algorithms = {kc::Algorithm::dfs, kc::Algorithm::mitm};
            else
                algorithms = {kc::parse_algorithm(algorithm)};
            const auto report = kc::verify_tables(max_length, algorithms, jobs);
            for (const auto& row : report.rows)
                std::cout << row.describe() << '\n';
            std::cout << (report.passed() ? "all counts match\n" : "MISMATCH\n");
            return report.passed() ? ok : failed;
        }

        if (*twins) {
            const kc::BoardSpec board = kc::BoardSpec::for_length(length);
            kc::TwinGrouper grouper;
            kc::enumerate(length, kc::Algorithm::mitm, options,
                          [&](std::span<const kc::CellIndex> cells, bool) {
                              grouper.add(kc::CycleSeq::trusted({cells.begin(), cells.end()}, board));
                          });
            std::string text;
            const auto groups = grouper.groups();
            for (std::size_t g = 0; g < groups.size(); ++g) {
                if (g)
                    text += '\n';
                text += "group " + std::to_string(g + 1) + " cells=" +
                        kc::format_sequence(groups[g].key.cells) +
                        " members=" + std::to_string(groups[g].members.size()) + '\n';
                for (const auto& m : groups[g].members)
                    text += kc::format_sequence(m.cells()) + '\n';
            }
            std::fprintf(stderr, "k=%d cell sets=%zu twin groups=%zu\n", length,
                         grouper.cell_set_count(), groups.size());
            return emit(text, out);
        }

        if (*render) {
            const auto cells = kc::parse_sequence(seq);
            int height = width;
            for (kc::CellIndex c : cells)
                if (c > 0)
                    height = std::max(height, (c - 1) / width + 1);
            const kc::BoardSpec board(width, height);
            const auto cycle = kc::validate_cycle(cells, board);
            return emit(kc::render(cycle, kc::parse_render_format(format)), out);
        }

        if (*check) {
            const auto problems = kc::check_cycle_file(in);
            for (const auto& p : problems)
                std::cerr << p << '\n';
            if (problems.empty())
                std::cout << in << ": ok\n";
            return problems.empty() ? ok : failed;
        }
    } catch (const kc::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const kc::ValidationError& e) {
        std::cerr << "invalid cycle: " << e.what() << '\n';
        return failed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failed;
    }
    return usage;
}
