#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <vector>

#include "arboral/patterns.hpp"
#include "arboral/rng.hpp"

using namespace arboral;

namespace {

bool witness_ok(const AccessSequence& seq, const PatternReport& report) {
    if (!report.witness)
        return false;
    const auto& w = *report.witness;
    if (!(1 <= w[0] && w[0] < w[1] && w[1] < w[2] && w[2] <= seq.n()))
        return false;
    return seq.at_time(w[2]) < seq.at_time(w[0]) &&
           seq.at_time(w[0]) < seq.at_time(w[1]);
}

}  // namespace

TEST_CASE("pattern checker on reference sequences") {
    const PatternReport hit = avoids_231(AccessSequence{2, 3, 1});
    REQUIRE_FALSE(hit.avoids);
    REQUIRE(hit.witness == std::array<std::int64_t, 3>{1, 2, 3});

    REQUIRE(avoids_231(AccessSequence::sequential(8)).avoids);
    REQUIRE(avoids_231(AccessSequence{3, 1, 2}).avoids);
    REQUIRE(avoids_231(AccessSequence{5, 4, 3, 2, 1}).avoids);

    REQUIRE_FALSE(avoids_231_bruteforce(AccessSequence{2, 3, 1}).avoids);
    REQUIRE(avoids_231_bruteforce(AccessSequence{1}).avoids);
}

TEST_CASE("pattern checkers reject non-permutations") {
    REQUIRE_THROWS_AS(avoids_231(AccessSequence{1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(avoids_231_bruteforce(AccessSequence{2, 2}),
                      std::invalid_argument);
}

TEST_CASE("pattern checkers agree on every small permutation") {
    for (std::int64_t n = 1; n <= 6; ++n) {
        std::vector<Key> keys(static_cast<std::size_t>(n));
        std::iota(keys.begin(), keys.end(), Key{1});
        do {
            const AccessSequence seq(keys);
            const PatternReport fast = avoids_231(seq);
            const PatternReport brute = avoids_231_bruteforce(seq);
            REQUIRE(fast.avoids == brute.avoids);
            if (!fast.avoids) {
                REQUIRE(witness_ok(seq, fast));
                REQUIRE(witness_ok(seq, brute));
            }
        } while (std::next_permutation(keys.begin(), keys.end()));
    }
}

TEST_CASE("pattern checkers agree on random permutations") {
    Rng rng(23);
    for (int trial = 0; trial < 10000; ++trial) {
        const AccessSequence seq(random_permutation(50, rng));
        const PatternReport fast = avoids_231(seq);
        REQUIRE(fast.avoids == avoids_231_bruteforce(seq).avoids);
        if (!fast.avoids)
            REQUIRE(witness_ok(seq, fast));
    }
}

TEST_CASE("insertion builds the expected trees") {
    const Bst balanced = bst_from_insertions(AccessSequence{2, 1, 3});
    REQUIRE(balanced.root() == 2);
    REQUIRE(balanced.left(2) == 1);
    REQUIRE(balanced.right(2) == 3);

    const Bst zig = bst_from_insertions(AccessSequence{1, 3, 2});
    REQUIRE(zig.root() == 1);
    REQUIRE(zig.right(1) == 3);
    REQUIRE(zig.left(3) == 2);

    const Bst single = bst_from_insertions(AccessSequence{1});
    REQUIRE(single.root() == 1);
    REQUIRE(single.left(1) == 0);
    REQUIRE(single.right(1) == 0);

    REQUIRE_THROWS_AS(bst_from_insertions(AccessSequence{1, 1}),
                      std::invalid_argument);
}

TEST_CASE("preorder traversals") {
    REQUIRE(preorder_of(bst_from_insertions(AccessSequence{2, 1, 3})) ==
            AccessSequence{2, 1, 3});
    REQUIRE(preorder_of(bst_from_insertions(AccessSequence{1, 3, 2})) ==
            AccessSequence{1, 3, 2});
    REQUIRE(preorder_of(bst_from_insertions(AccessSequence{1})) ==
            AccessSequence{1});
}

TEST_CASE("avoiders are exactly the preorder traversals") {
    const std::array<std::int64_t, 6> catalan{1, 2, 5, 14, 42, 132};
    for (std::int64_t n = 1; n <= 6; ++n) {
        std::vector<Key> keys(static_cast<std::size_t>(n));
        std::iota(keys.begin(), keys.end(), Key{1});
        std::int64_t avoiders = 0;
        do {
            const AccessSequence seq(keys);
            if (avoids_231(seq).avoids) {
                ++avoiders;
                REQUIRE(preorder_of(bst_from_insertions(seq)) == seq);
            }
        } while (std::next_permutation(keys.begin(), keys.end()));
        REQUIRE(avoiders == catalan[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("preorders of random trees pass the checker") {
    Rng rng(29);
    for (std::int64_t n : {100, 1000, 10000}) {
        const AccessSequence perm(random_permutation(n, rng));
        const AccessSequence pre = preorder_of(bst_from_insertions(perm));
        REQUIRE(pre.n() == n);
        REQUIRE(pre.is_permutation());
        REQUIRE(avoids_231(pre).avoids);
    }
}

TEST_CASE("seeded preorder generation is deterministic") {
    REQUIRE(random_preorder(1, 99) == AccessSequence{1});
    REQUIRE(random_preorder(50, 7) == random_preorder(50, 7));
    REQUIRE_FALSE(random_preorder(50, 7) == random_preorder(50, 8));
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        REQUIRE(avoids_231(random_preorder(64, seed)).avoids);
    REQUIRE_THROWS_AS(random_preorder(0, 1), std::invalid_argument);
}

TEST_CASE("mirror construction") {
    const InitialTree m = mirror(AccessSequence{2, 1, 3});
    REQUIRE(m.kind() == InitialTreeKind::PermutationRows);
    REQUIRE(m.points() == PointSet{{2, -1}, {1, -2}, {3, -3}});
    REQUIRE(mirror(AccessSequence{1}).points() == PointSet{{1, -1}});
    REQUIRE_THROWS_AS(mirror(AccessSequence{1, 1}), std::invalid_argument);
}

TEST_CASE("mirror inversion") {
    const InitialTree rows =
        InitialTree::from_points(PointSet{{2, -1}, {1, -2}, {3, -3}});
    REQUIRE(rows.kind() == InitialTreeKind::PermutationRows);
    REQUIRE(mirror_inverse(rows) == AccessSequence{2, 1, 3});
    REQUIRE(mirror_inverse(InitialTree::from_points(PointSet{{1, -1}})) ==
            AccessSequence{1});

    REQUIRE_THROWS_AS(mirror_inverse(InitialTree::flat()), std::invalid_argument);
    REQUIRE_THROWS_AS(
        mirror_inverse(InitialTree::arbitrary(PointSet{{1, -1}, {2, -1}})),
        std::invalid_argument);
}

TEST_CASE("mirror round-trips") {
    for (std::int64_t n = 1; n <= 5; ++n) {
        std::vector<Key> keys(static_cast<std::size_t>(n));
        std::iota(keys.begin(), keys.end(), Key{1});
        do {
            const AccessSequence seq(keys);
            const InitialTree tree = mirror(seq);
            REQUIRE(mirror_inverse(tree) == seq);
            REQUIRE(mirror(mirror_inverse(tree)) == tree);
        } while (std::next_permutation(keys.begin(), keys.end()));
    }
    Rng rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const AccessSequence seq(random_permutation(200, rng));
        REQUIRE(mirror_inverse(mirror(seq)) == seq);
    }
}

TEST_CASE("distinct permutations give distinct row trees") {
    for (std::int64_t n = 1; n <= 5; ++n) {
        std::vector<Key> keys(static_cast<std::size_t>(n));
        std::iota(keys.begin(), keys.end(), Key{1});
        std::set<std::vector<Key>> rows_seen;
        std::int64_t count = 0;
        do {
            rows_seen.insert(mirror(AccessSequence(keys)).rows());
            ++count;
        } while (std::next_permutation(keys.begin(), keys.end()));
        REQUIRE(static_cast<std::int64_t>(rows_seen.size()) == count);
    }
}

TEST_CASE("tree-to-points encoding") {
    const InitialTree balanced =
        bst_to_initial_points(bst_from_insertions(AccessSequence{2, 1, 3}));
    REQUIRE(balanced.kind() == InitialTreeKind::ArbitraryPoints);
    REQUIRE(balanced.points() == PointSet{{2, -1}, {1, -2}, {3, -2}});

    const InitialTree spine =
        bst_to_initial_points(bst_from_insertions(AccessSequence{1, 2, 3}));
    REQUIRE(spine.kind() == InitialTreeKind::PermutationRows);
    REQUIRE(spine.points() == PointSet{{1, -1}, {2, -2}, {3, -3}});
    REQUIRE(spine.rows() == std::vector<Key>{1, 2, 3});

    const InitialTree single =
        bst_to_initial_points(bst_from_insertions(AccessSequence{1}));
    REQUIRE(single.points() == PointSet{{1, -1}});
}
