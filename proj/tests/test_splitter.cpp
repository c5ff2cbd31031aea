#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hvsplit/frontgen.hpp"
#include "hvsplit/numeric.hpp"
#include "hvsplit/oracles.hpp"
#include "hvsplit/rng.hpp"
#include "hvsplit/splitter.hpp"
#include "helpers.hpp"

using namespace hvsplit;
using test_helpers::make_front;
using test_helpers::make_ref;
using test_helpers::worked_example_front;

namespace {

/// Pairwise strict-count oracle: the definition of delta, independent of
/// the sort-based implementation.
OrderMatrix brute_order_matrix(const Front& front) {
    const int n = front.n();
    const int d = front.dimension;
    OrderMatrix om;
    om.n = n;
    om.d = d;
    om.delta.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(d), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) {
            int count = 0;
            for (int k = 0; k < n; ++k) {
                if (k != i && front.points[k][j] < front.points[i][j]) ++count;
            }
            om.delta[static_cast<std::size_t>(i) * d + j] = count;
        }
    }
    return om;
}

/// Direct transcription of the lexicographic selection rule over dense
/// omega vectors read at k = n-1 down to 1; fewer dimensions win, lowest
/// index wins full ties.
int brute_lex_winner(const OrderMatrix& om) {
    int best = 0;
    OmegaRow best_omega = omega_histogram(om, 0);
    for (int i = 1; i < om.n; ++i) {
        const OmegaRow omega = omega_histogram(om, i);
        for (int k = om.n - 1; k >= 1; --k) {
            if (omega[static_cast<std::size_t>(k)] <
                best_omega[static_cast<std::size_t>(k)]) {
                best = i;
                best_omega = omega;
                break;
            }
            if (omega[static_cast<std::size_t>(k)] >
                best_omega[static_cast<std::size_t>(k)]) {
                break;
            }
        }
    }
    return best;
}

Front random_multiset_front(SplitMix64& rng, int n, int d) {
    Front front;
    front.dimension = d;
    for (int i = 0; i < n; ++i) {
        Point p;
        for (int j = 0; j < d; ++j) {
            p.coords.push_back(static_cast<double>(rng.next_u64() % 7) * 0.125);
        }
        front.points.push_back(std::move(p));
    }
    return front;
}

GeneratedFront gen_instance(Family family, int n, int d, std::uint64_t seed) {
    GenSpec spec;
    spec.family = family;
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    return generate(spec);
}

}  // namespace

TEST_CASE("order matrix: worked example values") {
    const OrderMatrix om = compute_order_matrix(worked_example_front());
    // column of the first dimension, points y1..y5
    const int expected_col1[5] = {0, 3, 4, 2, 1};
    for (int i = 0; i < 5; ++i) CHECK(om.at(i, 0) == expected_col1[i]);
    // full matrix, rows hand-counted from the delta definition
    const int expected[5][3] = {{0, 1, 3}, {3, 3, 1}, {4, 0, 4}, {2, 4, 0}, {1, 1, 2}};
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(om.at(i, j) == expected[i][j]);
    }
}

TEST_CASE("order matrix: single point has a zero row; empty front rejected") {
    const OrderMatrix om = compute_order_matrix(make_front({{3, 1, 4, 1}}));
    for (int j = 0; j < 4; ++j) CHECK(om.at(0, j) == 0);
    CHECK_THROWS_AS(compute_order_matrix(Front{}), Error);
}

TEST_CASE("order matrix: matches the pairwise definition, ties included") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 12);
        const int d = 2 + static_cast<int>(rng.next_u64() % 4);
        const Front front = random_multiset_front(rng, n, d);
        const OrderMatrix fast = compute_order_matrix(front);
        const OrderMatrix brute = brute_order_matrix(front);
        CHECK(fast.delta == brute.delta);
    }
}

TEST_CASE("omega histogram: worked example rows") {
    const OrderMatrix om = compute_order_matrix(worked_example_front());
    const OmegaRow y5 = omega_histogram(om, 4);  // delta row (1,1,2)
    CHECK(y5[1] == 2);
    CHECK(y5[2] == 1);
    CHECK(y5[0] + y5[3] + y5[4] == 0);
    const OmegaRow y3 = omega_histogram(om, 2);  // delta row (4,0,4)
    CHECK(y3[0] == 1);
    CHECK(y3[4] == 2);

    CHECK_THROWS_AS(omega_histogram(om, 5), Error);
    CHECK_THROWS_AS(omega_histogram(om, -1), Error);
}

TEST_CASE("omega histogram: single point concentrates at zero") {
    const OrderMatrix om = compute_order_matrix(make_front({{0.5, 0.25, 0.125}}));
    const OmegaRow omega = omega_histogram(om, 0);
    CHECK(omega[0] == 3);
}

TEST_CASE("select_split: worked example picks y5 under both rules") {
    const OrderMatrix om = compute_order_matrix(worked_example_front());
    CHECK(select_split(om, SplitRule::kLexicographic).split_index == 4);
    CHECK(select_split(om, SplitRule::kScan).split_index == 4);
    const OmegaRow omega = select_split(om).omega;
    CHECK(omega[1] == 2);
    CHECK(omega[2] == 1);
}

TEST_CASE("select_split: lexicographic rule matches the dense-omega oracle") {
    SplitMix64 rng(505);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 10);
        const int d = 2 + static_cast<int>(rng.next_u64() % 5);
        const Front front = random_multiset_front(rng, n, d);
        const OrderMatrix om = compute_order_matrix(front);
        CHECK(select_split(om, SplitRule::kLexicographic).split_index ==
              brute_lex_winner(om));
    }
}

TEST_CASE("select_split: two-point fronts") {
    // d = 2: the rows are (0,1) and (1,0) for any non-comparable pair, a
    // full tie, so the first point wins.
    const OrderMatrix tie = compute_order_matrix(make_front({{1, 3}, {3, 1}}));
    CHECK(select_split(tie).split_index == 0);
    // d = 3 asymmetric pair: (1,5,5) is beaten at two dimensions, (2,1,1)
    // at one, so the second omega vector reads lower at k = 1.
    const OrderMatrix skew = compute_order_matrix(make_front({{1, 5, 5}, {2, 1, 1}}));
    CHECK(select_split(skew).split_index == brute_lex_winner(skew));
    CHECK(select_split(skew).split_index == 1);

    CHECK_THROWS_AS(select_split(compute_order_matrix(make_front({{1, 2}}))), Error);
}

TEST_CASE("select_split: permutation-symmetric fronts tie to index 0") {
    for (int n = 3; n <= 7; ++n) {
        const GeneratedFront gen =
            gen_instance(Family::kPermutationSymmetric, n, n, 0);
        const OrderMatrix om = compute_order_matrix(gen.front);
        CHECK(select_split(om, SplitRule::kLexicographic).split_index == 0);
        CHECK(select_split(om, SplitRule::kScan).split_index == 0);
    }
}

TEST_CASE("select_split: the two rules can genuinely disagree") {
    // delta rows: (2,2,0), (0,1,1), (1,0,2). The second point is the
    // lexicographic winner (never beaten by two points at any dimension);
    // the scan pass re-selects on any k whose count drops below the
    // incumbent's and so ends on the third point instead.
    const Front front = make_front({{5, 5, 0}, {1, 2, 7}, {2, 1, 9}});
    const OrderMatrix om = compute_order_matrix(front);
    const int lex = select_split(om, SplitRule::kLexicographic).split_index;
    const int scan = select_split(om, SplitRule::kScan).split_index;
    CHECK(lex == 1);
    CHECK(scan == 2);

    const RefPoint ref{{6, 6, 10}};
    CalcOptions scan_options;
    scan_options.split_rule = SplitRule::kScan;
    CHECK(within_rel_tol(calc_volume(front, ref, scan_options).volume,
                         calc_volume(front, ref).volume));
}

TEST_CASE("split_children: worked example children") {
    const Front front = worked_example_front();
    const SubproblemFrame frame{front.points, make_ref({6, 6, 6})};
    const SplitDecision split = select_split(compute_order_matrix(front));
    REQUIRE(split.split_index == 4);

    const std::vector<SubproblemFrame> children = split_children(frame, split);
    REQUIRE(children.size() == 3);
    CHECK(children[0].points.size() == 1);
    CHECK(children[1].points.size() == 1);
    CHECK(children[2].points.size() == 2);

    CHECK(children[0].ref == make_ref({2, 6, 6}));
    CHECK(children[1].ref == make_ref({6, 2, 6}));
    CHECK(children[2].ref == make_ref({6, 6, 2.5}));

    // the third cut collects the two points below y5 at the last
    // dimension, unclamped because no earlier cut touched them
    CHECK(children[2].points[0] == Point{4, 3, 2});
    CHECK(children[2].points[1] == Point{3, 5, 1});
}

TEST_CASE("split_children: two-point 2-D cut") {
    const SubproblemFrame frame{{Point{1, 3}, Point{3, 1}}, make_ref({4, 4})};
    const std::vector<SubproblemFrame> children =
        split_children(frame, SplitDecision{0, {}});
    REQUIRE(children.size() == 1);
    CHECK(children[0].points == std::vector<Point>{Point{3, 1}});
    CHECK(children[0].ref == make_ref({4, 3}));
}

TEST_CASE("split_children: clamps carry into later children") {
    // (1,1,3) sits below the split point at the first two dimensions: it
    // enters the first child unclamped and the second child with its
    // first coordinate clamped to the split value.
    const SubproblemFrame frame{{Point{2, 2, 2}, Point{1, 1, 3}}, make_ref({4, 4, 4})};
    const std::vector<SubproblemFrame> children =
        split_children(frame, SplitDecision{0, {}});
    REQUIRE(children.size() == 2);
    CHECK(children[0].points == std::vector<Point>{Point{1, 1, 3}});
    CHECK(children[0].ref == make_ref({2, 4, 4}));
    CHECK(children[1].points == std::vector<Point>{Point{2, 1, 3}});
    CHECK(children[1].ref == make_ref({4, 2, 4}));

    // pinned decomposition: 8 (split box) + 3 + 2 = 13
    const double total =
        box_volume(frame.points[0], frame.ref) +
        calc_volume(Front{3, children[0].points}, children[0].ref).volume +
        calc_volume(Front{3, children[1].points}, children[1].ref).volume;
    CHECK(total == doctest::Approx(13.0).epsilon(1e-12));
    CHECK(calc_volume(Front{3, frame.points}, frame.ref).volume ==
          doctest::Approx(13.0).epsilon(1e-12));
}

TEST_CASE("split_children: argument validation") {
    const SubproblemFrame frame{{Point{1, 3}, Point{3, 1}}, make_ref({4, 4})};
    CHECK_THROWS_AS(split_children(frame, SplitDecision{2, {}}), Error);
    const SubproblemFrame single{{Point{1, 3}}, make_ref({4, 4})};
    CHECK_THROWS_AS(split_children(single, SplitDecision{0, {}}), Error);
}

TEST_CASE("calc_volume: base cases and worked example") {
    CHECK(calc_volume(make_front({{1, 2, 3}}), make_ref({6, 6, 6})).volume ==
          doctest::Approx(60.0));
    CHECK(calc_volume(Front{3, {}}, make_ref({6, 6, 6})).volume == 0.0);
    CHECK(calc_volume(make_front({{1, 3}, {3, 1}}), make_ref({4, 4})).volume ==
          doctest::Approx(5.0).epsilon(1e-12));

    const CalcResult fig = calc_volume(worked_example_front(), make_ref({6, 6, 6}));
    CHECK(within_rel_tol(fig.volume, test_helpers::kWorkedExampleVolume));
    // cross-check the frozen constant against the live oracle
    CHECK(within_rel_tol(
        hv_inclusion_exclusion(worked_example_front(), make_ref({6, 6, 6})),
        test_helpers::kWorkedExampleVolume));
}

TEST_CASE("calc_volume: input validation") {
    CHECK_THROWS_AS(calc_volume(make_front({{1, 2}}), make_ref({1, 1})),
                    ReferenceBoundViolation);
    CHECK_THROWS_AS(calc_volume(make_front({{1, 2}}), make_ref({2, 2, 2})),
                    DimensionMismatch);
    Front bad = make_front({{1, 2}});
    bad.points[0][0] = std::nan("");
    CHECK_THROWS_AS(calc_volume(bad, make_ref({2, 2})), ReferenceBoundViolation);
    // touching the reference is allowed and measures zero
    CHECK(calc_volume(make_front({{6, 2, 3}}), make_ref({6, 6, 6})).volume == 0.0);
}

TEST_CASE("calc_volume: one-dimensional fronts reduce to the best extent") {
    // d = 1 only ever has one non-dominated point; the rest are tolerated
    const CalcResult result = calc_volume(make_front({{3}, {1}, {2}}), make_ref({5}));
    CHECK(result.volume == doctest::Approx(4.0));
    CHECK(result.stats.calls == 1);
}

TEST_CASE("calc_volume: duplicates and dominated points contribute nothing") {
    CHECK(calc_volume(make_front({{1, 2}, {1, 2}}), make_ref({3, 3})).volume ==
          doctest::Approx(2.0));
    const double with_dominated =
        calc_volume(make_front({{1, 3}, {3, 1}, {3, 3}, {2, 2}}), make_ref({4, 4}))
            .volume;
    const double without =
        calc_volume(make_front({{1, 3}, {3, 1}, {2, 2}}), make_ref({4, 4})).volume;
    CHECK(within_rel_tol(with_dominated, without));
}

TEST_CASE("calc_volume: agrees with inclusion-exclusion on random fronts") {
    int index = 0;
    for (int n = 1; n <= 10; ++n) {
        for (int d = 2; d <= 5; ++d) {
            for (int rep = 0; rep < 6; ++rep, ++index) {
                const GeneratedFront gen =
                    gen_instance(test_helpers::mixed_family(index, d), n, d,
                                 test_helpers::instance_seed(11, index));
                const double exact = hv_inclusion_exclusion(gen.front, gen.ref);
                for (const bool prune : {true, false}) {
                    for (const SplitRule rule :
                         {SplitRule::kLexicographic, SplitRule::kScan}) {
                        CalcOptions options;
                        options.prune_dominated_children = prune;
                        options.split_rule = rule;
                        const CalcResult result =
                            calc_volume(gen.front, gen.ref, options);
                        CHECK(within_rel_tol(result.volume, exact));
                    }
                }
            }
        }
    }
}

TEST_CASE("calc_volume: permutation of the points preserves the volume") {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 8);
        const int d = 2 + static_cast<int>(rng.next_u64() % 3);
        GeneratedFront gen = gen_instance(test_helpers::mixed_family(trial, d), n, d,
                                          test_helpers::instance_seed(13, trial));
        const double reference_volume = calc_volume(gen.front, gen.ref).volume;

        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            for (int i = gen.front.n() - 1; i > 0; --i) {
                const int k =
                    static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
                std::swap(gen.front.points[static_cast<std::size_t>(i)],
                          gen.front.points[static_cast<std::size_t>(k)]);
            }
            CHECK(within_rel_tol(calc_volume(gen.front, gen.ref).volume,
                                 reference_volume));
        }
    }
}

TEST_CASE("calc_volume: decomposition at the root is exact") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 9;
        const int d = 2 + trial % 4;
        const GeneratedFront gen = gen_instance(test_helpers::mixed_family(trial, d),
                                                n, d, test_helpers::instance_seed(17, trial));
        const double parent = calc_volume(gen.front, gen.ref).volume;

        const SplitDecision split = select_split(compute_order_matrix(gen.front));
        const SubproblemFrame frame{gen.front.points, gen.ref};
        CompensatedSum sum;
        for (const SubproblemFrame& child : split_children(frame, split)) {
            sum.add(calc_volume(Front{d, child.points}, child.ref).volume);
        }
        sum.add(box_volume(gen.front.points[static_cast<std::size_t>(split.split_index)],
                           gen.ref));
        CHECK(within_rel_tol(sum.value(), parent));
    }
}

TEST_CASE("calc_volume: 2-D recursion makes exactly n calls") {
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + (trial * 7) % 40;
        const Family family = trial % 2 == 0 ? Family::kSimplex : Family::kSphere;
        const GeneratedFront gen =
            gen_instance(family, n, 2, test_helpers::instance_seed(19, trial));
        for (const bool prune : {true, false}) {
            CalcOptions options;
            options.prune_dominated_children = prune;
            const CalcResult result = calc_volume(gen.front, gen.ref, options);
            CHECK(result.stats.calls == static_cast<std::uint64_t>(n));
        }
    }
}

TEST_CASE("calc_volume: permutation-symmetric fronts make exactly n calls") {
    for (int n = 3; n <= 8; ++n) {
        const GeneratedFront gen = gen_instance(Family::kPermutationSymmetric, n, n, 0);
        const CalcResult result = calc_volume(gen.front, gen.ref);
        CHECK(result.stats.calls == static_cast<std::uint64_t>(n));
    }
}

TEST_CASE("calc_volume: recursion statistics are coherent") {
    const GeneratedFront gen = gen_instance(Family::kSimplex, 9, 4, 3);
    CalcOptions options;
    const CalcResult result = calc_volume(gen.front, gen.ref, options);
    CHECK(result.stats.calls >= 1);
    CHECK(result.stats.max_depth >= 1);
    CHECK(result.stats.peak_live_points >= 9);
    // live storage grows with depth, not child count
    CHECK(result.stats.peak_live_points <=
          static_cast<std::size_t>(9) *
              static_cast<std::size_t>(result.stats.max_depth));
    CHECK(result.stats.comparisons > 0);
    std::uint64_t children = 0;
    for (const auto& [size, count] : result.stats.child_sizes) {
        CHECK(size >= 1);
        children += count;
    }
    CHECK(children == result.stats.calls - 1);  // every non-root call is some child

    options.collect_stats = false;
    const CalcResult bare = calc_volume(gen.front, gen.ref, options);
    CHECK(bare.stats.child_sizes.empty());
    CHECK(bare.volume == result.volume);

    // empty front still reports the one invocation
    const CalcResult empty = calc_volume(Front{4, {}}, gen.ref);
    CHECK(empty.stats.calls == 1);
    CHECK(empty.stats.max_depth == 1);
}

TEST_CASE("calc_volume: scaling covariance and translation invariance") {
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + trial % 7;
        const int d = 2 + trial % 4;
        const GeneratedFront gen = gen_instance(test_helpers::mixed_family(trial, d),
                                                n, d, test_helpers::instance_seed(23, trial));
        const double base = calc_volume(gen.front, gen.ref).volume;

        for (const double s : {0.5, 3.0}) {
            Front scaled = gen.front;
            RefPoint scaled_ref = gen.ref;
            for (auto& p : scaled.points) {
                for (double& c : p.coords) c *= s;
            }
            for (double& c : scaled_ref.coords) c *= s;
            CHECK(within_rel_tol(calc_volume(scaled, scaled_ref).volume,
                                 base * std::pow(s, d)));
        }

        SplitMix64 rng(test_helpers::instance_seed(29, trial));
        Front moved = gen.front;
        RefPoint moved_ref = gen.ref;
        for (int j = 0; j < d; ++j) {
            const double shift = rng.next_unit() * 2.0 - 1.0;
            for (auto& p : moved.points) p[j] += shift;
            moved_ref[j] += shift;
        }
        CHECK(within_rel_tol(calc_volume(moved, moved_ref).volume, base));
    }
}

TEST_CASE("calc_volume: adding a strictly better point grows the volume") {
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + trial % 6;
        const int d = 2 + trial % 3;
        const GeneratedFront gen = gen_instance(test_helpers::mixed_family(trial, d),
                                                n, d, test_helpers::instance_seed(37, trial));
        const double base = calc_volume(gen.front, gen.ref).volume;

        Point better;
        better.coords.assign(static_cast<std::size_t>(d),
                             std::numeric_limits<double>::infinity());
        for (const auto& p : gen.front.points) {
            for (int j = 0; j < d; ++j) better[j] = std::min(better[j], p[j]);
        }
        for (int j = 0; j < d; ++j) better[j] -= 0.1;

        Front grown = gen.front;
        grown.points.push_back(better);
        CHECK(calc_volume(grown, gen.ref).volume > base);
    }
}
