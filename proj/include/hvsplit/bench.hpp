/**
 * @file bench.hpp
 * @brief Scaling-benchmark grid: generated fronts x (n, d, seed), one
 *        timed splitter run per instance. Instances run concurrently
 *        (each computation is independent and pure); rows come back in
 *        grid order regardless of completion order.
 */

#ifndef HVSPLIT_BENCH_HPP
#define HVSPLIT_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hvsplit/frontgen.hpp"
#include "hvsplit/splitter.hpp"

namespace hvsplit {

struct BenchSpec {
    std::vector<int> n_values;
    std::vector<int> d_values;
    std::vector<std::uint64_t> seeds;
    Family family = Family::kSimplex;
    CalcOptions options;
    double ref_margin = 0.1;
};

struct BenchRow {
    Family family = Family::kSimplex;
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;  ///< set when ok is false
    double volume = 0.0;
    RecursionStats stats;
    double wall_time_s = 0.0;
};

/**
 * Runs the grid n_values x d_values x seeds. Cells a family cannot
 * produce by construction (permutation-symmetric with n != d) are
 * skipped; per-instance failures become rows with ok = false. The calls
 * and volume columns are deterministic for fixed seeds.
 */
std::vector<BenchRow> run_bench_grid(const BenchSpec& spec);

/// Tab-separated rendering with a header row; volumes at 17 significant digits.
std::string bench_table_tsv(const std::vector<BenchRow>& rows);

}  // namespace hvsplit

#endif  // HVSPLIT_BENCH_HPP
