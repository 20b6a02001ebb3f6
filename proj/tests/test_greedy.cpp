#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "arboral/greedy.hpp"
#include "arboral/patterns.hpp"
#include "arboral/rng.hpp"

using namespace arboral;

namespace {

std::vector<Key> touched_at(const ExecutionTrace& trace, std::int64_t time) {
    return trace.steps[static_cast<std::size_t>(time - 1)].touched;
}

void require_equal_runs(const AccessSequence& seq, const InitialTree& init) {
    const ExecutionTrace fast = greedy_run_fast(seq, init);
    const ExecutionTrace oracle = greedy_run_oracle(seq, init);
    REQUIRE(fast == oracle);
}

}  // namespace

TEST_CASE("first access touches nothing") {
    for (const InitialTree& init :
         {InitialTree::flat(), mirror(AccessSequence{1})}) {
        const ExecutionTrace trace = greedy_run_fast(AccessSequence{1}, init);
        REQUIRE(trace.cost == 1);
        REQUIRE(trace.touched_total == 0);
        REQUIRE(touched_at(trace, 1).empty());
        REQUIRE(greedy_run_oracle(AccessSequence{1}, init) == trace);
    }
}

TEST_CASE("reference runs under the flat tree") {
    const AccessSequence ascending{1, 2, 3};
    const ExecutionTrace a = greedy_run_fast(ascending, InitialTree::flat());
    REQUIRE(touched_at(a, 1).empty());
    REQUIRE(touched_at(a, 2) == std::vector<Key>{1});
    REQUIRE(touched_at(a, 3) == std::vector<Key>{2});
    REQUIRE(a.cost == 5);
    REQUIRE(greedy_run_oracle(ascending, InitialTree::flat()) == a);

    const AccessSequence rooted{2, 1, 3};
    const ExecutionTrace b = greedy_run_fast(rooted, InitialTree::flat());
    REQUIRE(touched_at(b, 1).empty());
    REQUIRE(touched_at(b, 2) == std::vector<Key>{2});
    REQUIRE(touched_at(b, 3) == std::vector<Key>{2});
    REQUIRE(b.cost == 5);
    REQUIRE(greedy_run_oracle(rooted, InitialTree::flat()) == b);
}

TEST_CASE("mirror run equals the flat run on the reference case") {
    const AccessSequence seq{2, 1, 3};
    const InitialTree init = mirror(seq);
    REQUIRE(init.points() == PointSet{{2, -1}, {1, -2}, {3, -3}});

    const ExecutionTrace mirrored = greedy_run_fast(seq, init);
    REQUIRE(touched_at(mirrored, 2) == std::vector<Key>{2});
    REQUIRE(touched_at(mirrored, 3) == std::vector<Key>{2});
    REQUIRE(mirrored.cost == 5);
    REQUIRE(mirrored.steps == greedy_run_fast(seq, InitialTree::flat()).steps);
    REQUIRE(greedy_run_oracle(seq, init) == mirrored);
}

TEST_CASE("sequential access costs 2n-1") {
    for (std::int64_t n = 1; n <= 10; ++n) {
        const AccessSequence seq = AccessSequence::sequential(n);
        const ExecutionTrace oracle = greedy_run_oracle(seq, InitialTree::flat());
        REQUIRE(oracle.cost == 2 * n - 1);
    }
    const AccessSequence hundred = AccessSequence::sequential(100);
    REQUIRE(greedy_run_fast(hundred, InitialTree::flat()).cost == 199);
    REQUIRE(greedy_run_fast(hundred, mirror(hundred)).cost == 199);
}

TEST_CASE("staircase walks follow the running maximum") {
    LastTouchIndex four(4);
    four.record(1, 3);
    four.record(2, 1);
    four.record(3, 2);
    REQUIRE(touched_staircase(4, Side::Left, four) == std::vector<Key>{1, 3});
    REQUIRE(touched_staircase(4, Side::Right, four).empty());

    const LastTouchIndex empty(5);
    REQUIRE(touched_staircase(5, Side::Left, empty).empty());
    REQUIRE(touched_staircase(1, Side::Right, empty).empty());

    // A tie blocks everything beyond it: the equal-time point is a witness
    // on the closed rectangle boundary.
    LastTouchIndex tied(3);
    tied.record(2, 7);
    tied.record(1, 7);
    REQUIRE(touched_staircase(3, Side::Left, tied) == std::vector<Key>{2});

    // The accessed column's own value blocks lower columns outright.
    LastTouchIndex seeded(3);
    seeded.record(3, 5);
    seeded.record(2, 4);
    seeded.record(1, 6);
    REQUIRE(touched_staircase(3, Side::Left, seeded) == std::vector<Key>{1});
}

TEST_CASE("column maxima from initial trees") {
    const LastTouchIndex flat = last_touch_init(InitialTree::flat(), 5);
    for (Key k = 1; k <= 5; ++k) {
        REQUIRE_FALSE(flat.has(k));
        REQUIRE(flat.get(k) == kTimeNegInf);
    }

    const LastTouchIndex rows =
        last_touch_init(InitialTree::permutation_rows({2, 1, 3}), 3);
    REQUIRE(rows.get(2) == -1);
    REQUIRE(rows.get(1) == -2);
    REQUIRE(rows.get(3) == -3);

    const LastTouchIndex arb = last_touch_init(
        InitialTree::arbitrary(PointSet{{4, -1}, {6, -1}, {4, -2}}), 6);
    REQUIRE(arb.get(4) == -1);
    REQUIRE(arb.get(6) == -1);
    REQUIRE_FALSE(arb.has(5));

    REQUIRE_THROWS_AS(
        last_touch_init(InitialTree::arbitrary(PointSet{{9, -1}}), 5),
        std::invalid_argument);
}

TEST_CASE("last-touch index queries agree with linear scans") {
    const std::int64_t n = 24;
    Rng rng(21);
    LastTouchIndex index(n);
    std::vector<Time> shadow(static_cast<std::size_t>(n) + 1, kTimeNegInf);
    for (int round = 0; round < 400; ++round) {
        const Key k = 1 + static_cast<Key>(rng.bounded(static_cast<std::uint64_t>(n)));
        const Time t = static_cast<Time>(rng.bounded(41)) - 20;
        index.record(k, t);
        auto& cell = shadow[static_cast<std::size_t>(k)];
        cell = std::max(cell, t);

        const Key x = 1 + static_cast<Key>(rng.bounded(static_cast<std::uint64_t>(n)));
        const Time v = static_cast<Time>(rng.bounded(41)) - 20;
        std::optional<Key> left, right;
        for (Key j = x - 1; j >= 1; --j)
            if (shadow[static_cast<std::size_t>(j)] > v) {
                left = j;
                break;
            }
        for (Key j = x + 1; j <= n; ++j)
            if (shadow[static_cast<std::size_t>(j)] > v) {
                right = j;
                break;
            }
        REQUIRE(index.nearest_exceeding_left(x, v) == left);
        REQUIRE(index.nearest_exceeding_right(x, v) == right);
        REQUIRE(index.get(x) == shadow[static_cast<std::size_t>(x)]);
    }

    // Recording an older time is a no-op.
    LastTouchIndex mono(3);
    mono.record(2, 5);
    mono.record(2, 3);
    REQUIRE(mono.get(2) == 5);
}

TEST_CASE("cost accessor") {
    const ExecutionTrace one = greedy_run_fast(AccessSequence{1}, InitialTree::flat());
    REQUIRE(cost(one) == 1);
    const ExecutionTrace three =
        greedy_run_fast(AccessSequence{1, 2, 3}, InitialTree::flat());
    REQUIRE(cost(three) == three.cost);
    REQUIRE(cost(three) == 5);
}

TEST_CASE("run input validation") {
    const AccessSequence seq{1, 2, 3};
    const InitialTree short_rows = InitialTree::permutation_rows({2, 1});
    REQUIRE_THROWS_AS(greedy_run_fast(seq, short_rows), std::invalid_argument);
    REQUIRE_THROWS_AS(greedy_run_oracle(seq, short_rows), std::invalid_argument);

    const InitialTree outside = InitialTree::arbitrary(PointSet{{5, -1}});
    REQUIRE_THROWS_AS(greedy_run_fast(seq, outside), std::invalid_argument);
    REQUIRE_THROWS_AS(greedy_run_oracle(seq, outside), std::invalid_argument);
}

TEST_CASE("repeated accesses are served without mirror machinery") {
    const AccessSequence twice{1, 1};
    const ExecutionTrace t2 = greedy_run_fast(twice, InitialTree::flat());
    REQUIRE(t2.cost == 2);
    REQUIRE(t2.touched_total == 0);
    REQUIRE(greedy_run_oracle(twice, InitialTree::flat()) == t2);

    const AccessSequence wrap{1, 2, 1};
    const ExecutionTrace t3 = greedy_run_fast(wrap, InitialTree::flat());
    REQUIRE(touched_at(t3, 2) == std::vector<Key>{1});
    REQUIRE(touched_at(t3, 3).empty());
    REQUIRE(t3.cost == 4);
    REQUIRE(greedy_run_oracle(wrap, InitialTree::flat()) == t3);
}

TEST_CASE("uniform bottom row behaves like the flat tree") {
    Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.bounded(19));
        const AccessSequence seq(random_permutation(n, rng));
        std::vector<Point> row;
        for (Key k = 1; k <= n; ++k)
            row.push_back({k, -1});
        const InitialTree bottom = InitialTree::arbitrary(PointSet(std::move(row)));
        REQUIRE(greedy_run_fast(seq, bottom).steps ==
                greedy_run_fast(seq, InitialTree::flat()).steps);
    }
    require_equal_runs(AccessSequence{3, 1, 4, 2, 5},
                       InitialTree::arbitrary(
                           PointSet{{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}}));
}

TEST_CASE("oracle fixpoint is scan-order insensitive") {
    for (std::int64_t n = 1; n <= 5; ++n) {
        std::vector<Key> keys(static_cast<std::size_t>(n));
        std::iota(keys.begin(), keys.end(), Key{1});
        do {
            const AccessSequence seq(keys);
            for (const InitialTree& init : {InitialTree::flat(), mirror(seq)}) {
                const ExecutionTrace forward = greedy_run_oracle(seq, init);
                REQUIRE(greedy_run_oracle(
                            seq, init, {ScanOrder::Reverse, 0}) == forward);
                REQUIRE(greedy_run_oracle(
                            seq, init, {ScanOrder::Shuffled, 1}) == forward);
                REQUIRE(greedy_run_oracle(
                            seq, init, {ScanOrder::Shuffled, 2}) == forward);
                REQUIRE(greedy_run_fast(seq, init) == forward);
            }
        } while (std::next_permutation(keys.begin(), keys.end()));
    }
}

TEST_CASE("mirror initial trees never leak future keys into touches") {
    Rng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.bounded(39));
        const AccessSequence seq(random_permutation(n, rng));
        const ExecutionTrace trace = greedy_run_fast(seq, mirror(seq));
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::int64_t i = 1; i <= n; ++i) {
            for (Key y : touched_at(trace, i))
                REQUIRE(seen[static_cast<std::size_t>(y)]);
            seen[static_cast<std::size_t>(seq.at_time(i))] = true;
        }
        REQUIRE(touched_at(trace, 1).empty());
    }
}

TEST_CASE("final point sets are satisfied above the zero line") {
    Rng rng(91);
    for (int trial = 0; trial < 30; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.bounded(59));
        const AccessSequence seq(random_permutation(n, rng));
        InitialTree init = InitialTree::flat();
        switch (trial % 4) {
        case 0:
            break;
        case 1:
            init = mirror(seq);
            break;
        case 2:
            init = InitialTree::permutation_rows(random_permutation(n, rng));
            break;
        case 3:
            init = bst_to_initial_points(
                bst_from_insertions(AccessSequence(random_permutation(n, rng))));
            break;
        }
        const ExecutionTrace trace = greedy_run_fast(seq, init);
        REQUIRE(pairs_satisfied_above(final_point_set(init, trace), 1));
    }
}

TEST_CASE("engines agree on random instances") {
    Rng rng(101);
    for (int trial = 0; trial < 900; ++trial) {
        const AccessSequence seq(random_permutation(50, rng));
        require_equal_runs(seq, InitialTree::flat());
        require_equal_runs(seq, mirror(seq));
        require_equal_runs(seq,
                           InitialTree::permutation_rows(random_permutation(50, rng)));
        if (trial % 5 == 0)
            require_equal_runs(seq, bst_to_initial_points(bst_from_insertions(
                                        AccessSequence(random_permutation(50, rng)))));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const AccessSequence seq(random_permutation(200, rng));
        require_equal_runs(seq, InitialTree::flat());
        require_equal_runs(seq, mirror(seq));
        require_equal_runs(seq,
                           InitialTree::permutation_rows(random_permutation(200, rng)));
    }
}

TEST_CASE("final point set assembles initial, access, and touch points") {
    const AccessSequence seq{1, 2, 3};
    const InitialTree init = mirror(seq);
    const ExecutionTrace trace = greedy_run_fast(seq, init);
    const PointSet set = final_point_set(init, trace);
    REQUIRE(set.contains({1, -1}));
    REQUIRE(set.contains({1, 1}));
    REQUIRE(set.contains({2, 2}));
    REQUIRE(set.contains({1, 2}));
    REQUIRE(set.size() == init.points().size() + 3 +
                              static_cast<std::size_t>(trace.touched_total));
}
