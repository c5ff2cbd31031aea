#include "hvsplit/bench.hpp"

#include <chrono>
#include <sstream>

#include "hvsplit/io.hpp"

namespace hvsplit {

std::vector<BenchRow> run_bench_grid(const BenchSpec& spec) {
    struct Cell {
        int n;
        int d;
        std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (int n : spec.n_values) {
        for (int d : spec.d_values) {
            if (spec.family == Family::kPermutationSymmetric && n != d) continue;
            for (std::uint64_t seed : spec.seeds) cells.push_back({n, d, seed});
        }
    }

    std::vector<BenchRow> rows(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(cells.size()); ++i) {
        const Cell& cell = cells[static_cast<std::size_t>(i)];
        BenchRow& row = rows[static_cast<std::size_t>(i)];
        row.family = spec.family;
        row.n = cell.n;
        row.d = cell.d;
        row.seed = cell.seed;
        try {
            GenSpec gen_spec;
            gen_spec.n = cell.n;
            gen_spec.d = cell.d;
            gen_spec.family = spec.family;
            gen_spec.seed = cell.seed;
            gen_spec.ref_margin = spec.ref_margin;
            const GeneratedFront gen = generate(gen_spec);

            const auto start = std::chrono::steady_clock::now();
            CalcResult result = calc_volume(gen.front, gen.ref, spec.options);
            const auto stop = std::chrono::steady_clock::now();

            row.volume = result.volume;
            row.stats = std::move(result.stats);
            row.wall_time_s = std::chrono::duration<double>(stop - start).count();
            row.ok = true;
        } catch (const std::exception& e) {
            row.ok = false;
            row.error = e.what();
        }
    }
    return rows;
}

std::string bench_table_tsv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "family\tn\td\tseed\tvolume\tcalls\tmax_depth\tpeak_live_points"
           "\tcomparisons\twall_time_s\terror\n";
    for (const BenchRow& row : rows) {
        out << family_name(row.family) << '\t' << row.n << '\t' << row.d << '\t'
            << row.seed << '\t';
        if (row.ok) {
            out << format_double(row.volume) << '\t' << row.stats.calls << '\t'
                << row.stats.max_depth << '\t' << row.stats.peak_live_points << '\t'
                << row.stats.comparisons << '\t' << format_double(row.wall_time_s)
                << "\t\n";
        } else {
            out << "-\t-\t-\t-\t-\t-\t" << row.error << '\n';
        }
    }
    return out.str();
}

}  // namespace hvsplit
