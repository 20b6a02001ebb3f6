#pragma once

// Permutation-pattern and BST utilities: 231-avoidance checking, the
// preorder/BST bijection, seeded preorder generators, the mirror
// construction, and BST-to-point-set conversion.
//
// A sequence avoids (2,3,1) exactly when it is the preorder traversal of
// some binary search tree on [1, n].

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arboral/geometry.hpp"
#include "arboral/initial_tree.hpp"
#include "arboral/rng.hpp"
#include "arboral/sequence.hpp"

namespace arboral {

struct PatternReport {
    bool avoids = true;
    // 1-based indices (i1, i2, i3), i1 < i2 < i3, with
    // s[i3] < s[i1] < s[i2] when avoids is false.
    std::optional<std::array<std::int64_t, 3>> witness;
};

// Single pass with a monotone stack. The stack keeps indices of a strictly
// decreasing suffix; whenever a new element pops entries, each popped value
// is the low end of an ascent ending at the popper. The best such low end
// (largest value) is the only candidate that matters for the "1" role.
inline PatternReport avoids_231(const AccessSequence& seq) {
    seq.require_permutation("avoids_231");
    const auto& keys = seq.keys();
    std::vector<std::int64_t> stack;  // indices, values strictly decreasing
    Key best_value = 0;
    std::int64_t best_i = 0, best_j = 0;
    for (std::int64_t idx = 0; idx < seq.n(); ++idx) {
        const Key v = keys[static_cast<std::size_t>(idx)];
        if (best_value > v)
            return {false,
                    std::array<std::int64_t, 3>{best_i + 1, best_j + 1, idx + 1}};
        while (!stack.empty() &&
               keys[static_cast<std::size_t>(stack.back())] < v) {
            const std::int64_t popped = stack.back();
            stack.pop_back();
            if (keys[static_cast<std::size_t>(popped)] > best_value) {
                best_value = keys[static_cast<std::size_t>(popped)];
                best_i = popped;
                best_j = idx;
            }
        }
        stack.push_back(idx);
    }
    return {true, std::nullopt};
}

// Direct enumeration of all index triples; the testing oracle for
// avoids_231.
inline PatternReport avoids_231_bruteforce(const AccessSequence& seq) {
    seq.require_permutation("avoids_231_bruteforce");
    const auto& keys = seq.keys();
    const std::int64_t n = seq.n();
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = a + 1; b < n; ++b)
            for (std::int64_t c = b + 1; c < n; ++c) {
                const Key va = keys[static_cast<std::size_t>(a)];
                const Key vb = keys[static_cast<std::size_t>(b)];
                const Key vc = keys[static_cast<std::size_t>(c)];
                if (vc < va && va < vb)
                    return {false, std::array<std::int64_t, 3>{a + 1, b + 1, c + 1}};
            }
    return {true, std::nullopt};
}

// Binary search tree over keys [1, n], nodes addressed by key. 0 = no child.
class Bst {
public:
    explicit Bst(std::int64_t n)
        : n_(n), left_(static_cast<std::size_t>(n) + 1, 0),
          right_(static_cast<std::size_t>(n) + 1, 0) {}

    std::int64_t n() const { return n_; }
    Key root() const { return root_; }
    Key left(Key k) const { return left_[static_cast<std::size_t>(k)]; }
    Key right(Key k) const { return right_[static_cast<std::size_t>(k)]; }

    void insert(Key k) {
        if (root_ == 0) {
            root_ = k;
            return;
        }
        Key at = root_;
        for (;;) {
            if (k == at)
                throw std::invalid_argument("Bst: duplicate key");
            Key& next = k < at ? left_[static_cast<std::size_t>(at)]
                               : right_[static_cast<std::size_t>(at)];
            if (next == 0) {
                next = k;
                return;
            }
            at = next;
        }
    }

    // Depths indexed by key; root has depth 0. Iterative, so spine-shaped
    // trees of any size are fine.
    std::vector<std::int64_t> depths() const {
        std::vector<std::int64_t> depth(static_cast<std::size_t>(n_) + 1, -1);
        if (root_ == 0)
            return depth;
        std::vector<Key> stack{root_};
        depth[static_cast<std::size_t>(root_)] = 0;
        while (!stack.empty()) {
            const Key at = stack.back();
            stack.pop_back();
            for (Key child : {left(at), right(at)})
                if (child != 0) {
                    depth[static_cast<std::size_t>(child)] =
                        depth[static_cast<std::size_t>(at)] + 1;
                    stack.push_back(child);
                }
        }
        return depth;
    }

private:
    std::int64_t n_ = 0;
    Key root_ = 0;
    std::vector<Key> left_, right_;
};

inline Bst bst_from_insertions(const AccessSequence& perm) {
    perm.require_permutation("bst_from_insertions");
    Bst tree(perm.n());
    for (Key k : perm.keys())
        tree.insert(k);
    return tree;
}

inline AccessSequence preorder_of(const Bst& tree) {
    std::vector<Key> out;
    out.reserve(static_cast<std::size_t>(tree.n()));
    std::vector<Key> stack;
    if (tree.root() != 0)
        stack.push_back(tree.root());
    while (!stack.empty()) {
        const Key at = stack.back();
        stack.pop_back();
        out.push_back(at);
        if (tree.right(at) != 0)
            stack.push_back(tree.right(at));
        if (tree.left(at) != 0)
            stack.push_back(tree.left(at));
    }
    return AccessSequence(std::move(out));
}

// Preorder traversal of the BST built by inserting a uniformly random
// permutation. Deterministic per seed. Note this is not uniform over all
// 231-avoiding sequences; it is the push-through of the uniform measure on
// permutations.
inline AccessSequence random_preorder(std::int64_t n, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random_preorder: n must be >= 1");
    Rng rng(seed);
    AccessSequence perm(random_permutation(n, rng));
    return preorder_of(bst_from_insertions(perm));
}

// The mirror of a permutation sequence: the access at time i becomes the
// initial-tree row at time -i.
inline InitialTree mirror(const AccessSequence& seq) {
    seq.require_permutation("mirror");
    return InitialTree::permutation_rows(seq.keys());
}

inline AccessSequence mirror_inverse(const InitialTree& init) {
    if (init.kind() != InitialTreeKind::PermutationRows)
        throw std::invalid_argument(
            "mirror_inverse: initial tree must be permutation rows");
    return AccessSequence(init.rows());
}

// Nodes of depth d become initial points at time -(d+1): the root row sits
// just below the t = 0 line and each level drops one row further. The
// result goes through the same classifier as points loaded from disk, so a
// path-shaped tree comes back as permutation rows.
inline InitialTree bst_to_initial_points(const Bst& tree) {
    const auto depth = tree.depths();
    std::vector<Point> pts;
    for (Key k = 1; k <= tree.n(); ++k)
        if (depth[static_cast<std::size_t>(k)] >= 0)
            pts.push_back({k, -(depth[static_cast<std::size_t>(k)] + 1)});
    return InitialTree::from_points(PointSet(std::move(pts)));
}

}  // namespace arboral
