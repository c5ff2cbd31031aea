/**
 * @file hvcalc.cpp
 * @brief Command-line hypervolume calculator.
 *
 * Subcommands:
 *   compute  — hypervolume of a front file, with recursion statistics
 *   compare  — run several algorithms and check mutual agreement
 *   gen      — write a generated front file
 *   bench    — scaling grid over (n, d, seed), TSV output
 *
 * Exit codes: 0 success (compare: PASS), 1 I/O or parse failure,
 * 2 validation or parameter failure (compare: FAIL).
 */

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hvsplit/bench.hpp"
#include "hvsplit/core.hpp"
#include "hvsplit/frontgen.hpp"
#include "hvsplit/io.hpp"
#include "hvsplit/numeric.hpp"
#include "hvsplit/oracles.hpp"
#include "hvsplit/splitter.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitSpec = 2;

using hvsplit::CalcOptions;
using hvsplit::Front;
using hvsplit::RefPoint;
using hvsplit::SplitRule;

struct RefSpec {
    bool auto_ref = true;
    double margin = 0.1;
    std::vector<double> coords;
};

RefSpec parse_ref_spec(const std::string& text) {
    RefSpec spec;
    if (text == "auto" || text.rfind("auto:", 0) == 0) {
        spec.auto_ref = true;
        if (text.size() > 5) {
            char* end = nullptr;
            spec.margin = std::strtod(text.c_str() + 5, &end);
            if (end == nullptr || *end != '\0' || !(spec.margin >= 0.0)) {
                throw hvsplit::Error("invalid auto reference margin in '" + text + "'");
            }
        }
        return spec;
    }
    spec.auto_ref = false;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end == token.c_str() || *end != '\0') {
            throw hvsplit::Error("invalid reference coordinate '" + token + "'");
        }
        spec.coords.push_back(v);
    }
    if (spec.coords.empty()) {
        throw hvsplit::Error("reference spec '" + text + "' has no coordinates");
    }
    return spec;
}

RefPoint resolve_ref(const RefSpec& spec, const Front& front) {
    if (!spec.auto_ref) return RefPoint{std::vector<double>(spec.coords)};
    if (front.n() == 0) {
        throw hvsplit::Error("auto reference needs a nonempty front");
    }
    RefPoint ref;
    ref.coords.assign(static_cast<std::size_t>(front.dimension),
                      -std::numeric_limits<double>::infinity());
    for (const auto& p : front.points) {
        for (int j = 0; j < front.dimension; ++j) {
            ref[j] = std::max(ref[j], p[j]);
        }
    }
    for (int j = 0; j < front.dimension; ++j) ref[j] += spec.margin;
    return ref;
}

void negate_front(Front& front) {
    for (auto& p : front.points) {
        for (double& c : p.coords) c = -c;
    }
}

struct AlgoOutcome {
    bool skipped = false;
    std::string skip_reason;
    double volume = 0.0;
    hvsplit::RecursionStats stats;
    double seconds = 0.0;
};

AlgoOutcome run_algorithm(const std::string& name, const Front& front,
                          const RefPoint& ref, int ie_cap) {
    AlgoOutcome out;
    const auto start = std::chrono::steady_clock::now();
    if (name == "splitter" || name == "splitter-noprune" || name == "splitter-scan") {
        CalcOptions options;
        options.prune_dominated_children = name != "splitter-noprune";
        options.split_rule =
            name == "splitter-scan" ? SplitRule::kScan : SplitRule::kLexicographic;
        hvsplit::CalcResult result = hvsplit::calc_volume(front, ref, options);
        out.volume = result.volume;
        out.stats = std::move(result.stats);
    } else if (name == "inclusion-exclusion" || name == "ie") {
        if (front.n() > ie_cap) {
            out.skipped = true;
            out.skip_reason = "n=" + std::to_string(front.n()) +
                              " exceeds the subset cap of " + std::to_string(ie_cap);
            return out;
        }
        out.volume = hvsplit::hv_inclusion_exclusion(front, ref, ie_cap);
    } else if (name == "sweep2d") {
        if (front.dimension != 2) {
            out.skipped = true;
            out.skip_reason = "needs d=2, front has d=" + std::to_string(front.dimension);
            return out;
        }
        out.volume = hvsplit::hv_sweep_2d(front, ref);
    } else {
        throw hvsplit::Error("unknown algorithm '" + name +
                             "' (known: splitter, splitter-noprune, splitter-scan, "
                             "inclusion-exclusion, sweep2d)");
    }
    const auto stop = std::chrono::steady_clock::now();
    out.seconds = std::chrono::duration<double>(stop - start).count();
    return out;
}

/// Shared front-loading path: read, optionally negate, resolve the
/// reference, validate. Throws; callers translate to exit codes.
struct LoadedProblem {
    Front front;
    RefPoint ref;
};

LoadedProblem load_problem(const std::string& path, const std::string& ref_text,
                           bool maximize) {
    LoadedProblem problem;
    problem.front = hvsplit::read_front_file(path);

    RefSpec ref_spec = parse_ref_spec(ref_text);  // may throw Error (spec)
    if (maximize) {
        negate_front(problem.front);
        if (!ref_spec.auto_ref) {
            for (double& c : ref_spec.coords) c = -c;
        }
    }
    if (!ref_spec.auto_ref &&
        static_cast<int>(ref_spec.coords.size()) != problem.front.dimension &&
        problem.front.n() > 0) {
        throw hvsplit::Error("reference has " + std::to_string(ref_spec.coords.size()) +
                             " coordinates, front has dimension " +
                             std::to_string(problem.front.dimension));
    }
    if (problem.front.n() == 0 && !ref_spec.auto_ref) {
        problem.front.dimension = static_cast<int>(ref_spec.coords.size());
    }
    problem.ref = resolve_ref(ref_spec, problem.front);

    const hvsplit::ValidationReport report =
        hvsplit::validate(problem.front, problem.ref);
    if (!report.ok()) {
        throw hvsplit::ReferenceBoundViolation("input failed validation: " +
                                               report.summary());
    }
    return problem;
}

/// load_problem error -> exit code, shared by compute and compare.
int report_load_failure(const std::string& path) {
    try {
        throw;  // rethrow the active exception
    } catch (const hvsplit::ParseError& e) {
        std::cerr << "hvcalc: " << path << ": " << e.what() << '\n';
        return kExitIo;
    } catch (const hvsplit::IoError& e) {
        std::cerr << "hvcalc: " << e.what() << '\n';
        return kExitIo;
    } catch (const hvsplit::Error& e) {
        std::cerr << "hvcalc: " << e.what() << '\n';
        return kExitSpec;
    }
}

int cmd_compute(const std::string& path, const std::string& ref_text,
                const std::string& algorithm, bool maximize, bool json,
                int ie_cap) {
    LoadedProblem problem;
    try {
        problem = load_problem(path, ref_text, maximize);
    } catch (const hvsplit::Error&) {
        return report_load_failure(path);
    }

    try {
        AlgoOutcome outcome = run_algorithm(algorithm, problem.front, problem.ref, ie_cap);
        if (outcome.skipped) {
            std::cerr << "hvcalc: " << algorithm << " not applicable: "
                      << outcome.skip_reason << '\n';
            return kExitSpec;
        }
        hvsplit::ResultRecord record;
        record.algorithm = algorithm;
        record.n = problem.front.n();
        record.d = problem.front.dimension;
        record.ref = problem.ref.coords;
        record.volume = outcome.volume;
        record.stats = std::move(outcome.stats);
        record.wall_time_s = outcome.seconds;
        std::cout << (json ? hvsplit::to_json_string(record) + "\n"
                           : hvsplit::to_key_value(record));
        return kExitOk;
    } catch (const hvsplit::Error& e) {
        std::cerr << "hvcalc: " << e.what() << '\n';
        return kExitSpec;
    }
}

int cmd_compare(const std::string& path, const std::string& ref_text,
                std::vector<std::string> algorithms, bool maximize, int ie_cap) {
    LoadedProblem problem;
    try {
        problem = load_problem(path, ref_text, maximize);
    } catch (const hvsplit::Error&) {
        return report_load_failure(path);
    }

    if (algorithms.empty()) {
        algorithms = {"splitter", "inclusion-exclusion", "sweep2d"};
    }

    struct Row {
        std::string name;
        AlgoOutcome outcome;
    };
    std::vector<Row> rows;
    try {
        for (const std::string& name : algorithms) {
            rows.push_back({name, run_algorithm(name, problem.front, problem.ref, ie_cap)});
        }
    } catch (const hvsplit::Error& e) {
        std::cerr << "hvcalc: " << e.what() << '\n';
        return kExitSpec;
    }

    std::cout << "algorithm\tvolume\twall_time_s\n";
    for (const Row& row : rows) {
        if (row.outcome.skipped) {
            std::cout << row.name << "\tskipped: " << row.outcome.skip_reason << "\t-\n";
        } else {
            std::cout << row.name << '\t' << hvsplit::format_double(row.outcome.volume)
                      << '\t' << hvsplit::format_double(row.outcome.seconds) << '\n';
        }
    }

    bool agree = true;
    int computed = 0;
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (rows[a].outcome.skipped) continue;
        ++computed;
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            if (rows[b].outcome.skipped) continue;
            const double va = rows[a].outcome.volume;
            const double vb = rows[b].outcome.volume;
            if (std::abs(va - vb) >
                hvsplit::kRelTol * std::max({1.0, std::abs(va), std::abs(vb)})) {
                agree = false;
            }
        }
    }
    std::cout << (agree ? "PASS" : "FAIL") << " (" << computed
              << " computed, tolerance " << hvsplit::kRelTol << " relative)\n";
    return agree ? kExitOk : kExitSpec;
}

int cmd_gen(int n, int d, const std::string& family_text, std::uint64_t seed,
            double margin, const std::string& out_path) {
    const auto family = hvsplit::parse_family(family_text);
    if (!family) {
        std::cerr << "hvcalc: unknown family '" << family_text << "'\n";
        return kExitSpec;
    }
    hvsplit::GenSpec spec;
    spec.n = n;
    spec.d = d;
    spec.family = *family;
    spec.seed = seed;
    spec.ref_margin = margin;

    hvsplit::GeneratedFront gen;
    try {
        gen = hvsplit::generate(spec);
    } catch (const hvsplit::GenError& e) {
        std::cerr << "hvcalc: " << e.what() << '\n';
        return kExitSpec;
    }

    std::ostringstream ref_line;
    ref_line << "ref=";
    for (int j = 0; j < gen.ref.dim(); ++j) {
        if (j > 0) ref_line << ',';
        ref_line << hvsplit::format_double(gen.ref[j]);
    }
    const std::vector<std::string> header = {
        "hvcalc gen family=" + family_text + " n=" + std::to_string(n) +
            " d=" + std::to_string(d) + " seed=" + std::to_string(seed) +
            " margin=" + hvsplit::format_double(margin),
        ref_line.str()};

    try {
        if (out_path.empty()) {
            hvsplit::write_front(std::cout, gen.front, header);
        } else {
            hvsplit::write_front_file(out_path, gen.front, header);
        }
    } catch (const hvsplit::Error& e) {
        std::cerr << "hvcalc: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int cmd_bench(const std::vector<int>& ns, const std::vector<int>& ds,
              const std::string& family_text, const std::vector<std::uint64_t>& seeds,
              double margin, bool no_prune, SplitRule rule,
              const std::string& out_path) {
    const auto family = hvsplit::parse_family(family_text);
    if (!family) {
        std::cerr << "hvcalc: unknown family '" << family_text << "'\n";
        return kExitSpec;
    }
    hvsplit::BenchSpec spec;
    spec.n_values = ns;
    spec.d_values = ds;
    spec.seeds = seeds;
    spec.family = *family;
    spec.ref_margin = margin;
    spec.options.prune_dominated_children = !no_prune;
    spec.options.split_rule = rule;

    const std::vector<hvsplit::BenchRow> rows = hvsplit::run_bench_grid(spec);
    const std::string table = hvsplit::bench_table_tsv(rows);

    if (out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "hvcalc: cannot open '" << out_path << "' for writing\n";
            return kExitIo;
        }
        out << table;
        if (!out) {
            std::cerr << "hvcalc: write to '" << out_path << "' failed\n";
            return kExitIo;
        }
    }

    for (const auto& row : rows) {
        if (!row.ok) {
            std::cerr << "hvcalc: bench cell n=" << row.n << " d=" << row.d
                      << " seed=" << row.seed << " failed: " << row.error << '\n';
            return kExitSpec;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypervolume indicator calculator (minimization convention)"};
    app.require_subcommand(1);

    const std::map<std::string, SplitRule> rule_map = {
        {"lex", SplitRule::kLexicographic}, {"scan", SplitRule::kScan}};

    // compute
    std::string in_path;
    std::string ref_text = "auto";
    std::string algorithm = "splitter";
    bool maximize = false;
    bool json = false;
    int ie_cap = hvsplit::kDefaultSubsetCap;
    auto* compute = app.add_subcommand("compute", "Hypervolume of a front file");
    compute->add_option("input", in_path, "front file")->required();
    compute->add_option("--ref", ref_text,
                        "reference point: v1,v2,... or auto[:margin]");
    compute->add_option("--algorithm", algorithm, "one of: splitter, "
                        "splitter-noprune, splitter-scan, inclusion-exclusion, sweep2d");
    compute->add_flag("--maximize", maximize,
                      "negate coordinates and reference on ingestion");
    compute->add_flag("--json", json, "emit a JSON record instead of key=value lines");
    compute->add_option("--ie-cap", ie_cap, "subset cap for inclusion-exclusion");

    // compare
    std::string cmp_path;
    std::string cmp_ref = "auto";
    std::vector<std::string> cmp_algorithms;
    bool cmp_maximize = false;
    int cmp_ie_cap = hvsplit::kDefaultSubsetCap;
    auto* compare = app.add_subcommand(
        "compare", "Run several algorithms and check mutual agreement");
    compare->add_option("input", cmp_path, "front file")->required();
    compare->add_option("--ref", cmp_ref, "reference point: v1,v2,... or auto[:margin]");
    compare->add_option("--algorithms", cmp_algorithms,
                        "comma-separated list (default: splitter,inclusion-exclusion,sweep2d)")
        ->delimiter(',');
    compare->add_flag("--maximize", cmp_maximize, "negate on ingestion");
    compare->add_option("--ie-cap", cmp_ie_cap, "subset cap for inclusion-exclusion");

    // gen
    int gen_n = 0;
    int gen_d = 0;
    std::string gen_family = "simplex";
    std::uint64_t gen_seed = 0;
    double gen_margin = 0.1;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a non-comparable front file");
    gen->add_option("--n", gen_n, "point count")->required();
    gen->add_option("--d", gen_d, "dimension")->required();
    gen->add_option("--family", gen_family,
                    "simplex | sphere | uniform-filtered | permutation-symmetric | "
                    "tied-coordinates");
    gen->add_option("--seed", gen_seed, "64-bit seed");
    gen->add_option("--margin", gen_margin, "additive reference margin");
    gen->add_option("-o,--out", gen_out, "output path (default: stdout)");

    // bench
    std::vector<int> bench_ns;
    std::vector<int> bench_ds;
    std::string bench_family = "simplex";
    std::vector<std::uint64_t> bench_seeds = {1};
    double bench_margin = 0.1;
    bool bench_no_prune = false;
    SplitRule bench_rule = SplitRule::kLexicographic;
    std::string bench_out;
    auto* bench = app.add_subcommand(
        "bench", "Scaling grid: one timed run per (n, d, seed); TSV output");
    bench->add_option("--n", bench_ns, "point counts")->required()->delimiter(',');
    bench->add_option("--d", bench_ds, "dimensions")->required()->delimiter(',');
    bench->add_option("--family", bench_family, "front family");
    bench->add_option("--seeds", bench_seeds, "seeds")->delimiter(',');
    bench->add_option("--margin", bench_margin, "additive reference margin");
    bench->add_flag("--no-prune", bench_no_prune, "keep dominated points in children");
    bench->add_option("--split-rule", bench_rule, "lex | scan")
        ->transform(CLI::CheckedTransformer(rule_map, CLI::ignore_case));
    bench->add_option("-o,--out", bench_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitSpec;
    }

    if (compute->parsed()) {
        return cmd_compute(in_path, ref_text, algorithm, maximize, json, ie_cap);
    }
    if (compare->parsed()) {
        return cmd_compare(cmp_path, cmp_ref, cmp_algorithms, cmp_maximize, cmp_ie_cap);
    }
    if (gen->parsed()) {
        return cmd_gen(gen_n, gen_d, gen_family, gen_seed, gen_margin, gen_out);
    }
    if (bench->parsed()) {
        return cmd_bench(bench_ns, bench_ds, bench_family, bench_seeds, bench_margin,
                         bench_no_prune, bench_rule, bench_out);
    }
    return kExitSpec;
}
