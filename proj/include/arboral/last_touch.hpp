#pragma once

// Per-key record of the latest point time strictly below the sweep line.
// Backed by a segment tree over the key range so the engine can ask for the
// nearest column on either side of x whose value strictly exceeds a
// threshold, in logarithmic time. Empty columns hold kTimeNegInf.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arboral/geometry.hpp"
#include "arboral/initial_tree.hpp"

namespace arboral {

class LastTouchIndex {
public:
    explicit LastTouchIndex(std::int64_t n) : n_(n) {
        if (n < 0)
            throw std::invalid_argument("LastTouchIndex: n must be >= 0");
        size_ = 1;
        while (size_ < static_cast<std::size_t>(n))
            size_ *= 2;
        tree_.assign(2 * size_, kTimeNegInf);
    }

    LastTouchIndex(std::int64_t n, const std::map<Key, Time>& values)
        : LastTouchIndex(n) {
        for (const auto& [key, time] : values)
            record(key, time);
    }

    std::int64_t n() const { return n_; }

    Time get(Key key) const {
        check_key(key);
        return tree_[size_ + static_cast<std::size_t>(key - 1)];
    }

    bool has(Key key) const { return get(key) != kTimeNegInf; }

    // Values only ever move forward in time.
    void record(Key key, Time time) {
        check_key(key);
        std::size_t v = size_ + static_cast<std::size_t>(key - 1);
        if (time <= tree_[v])
            return;
        tree_[v] = time;
        for (v /= 2; v >= 1; v /= 2)
            tree_[v] = std::max(tree_[2 * v], tree_[2 * v + 1]);
    }

    // Largest key j < x with value > v, if any.
    std::optional<Key> nearest_exceeding_left(Key x, Time v) const {
        check_key(x);
        return descend_range(1, 0, size_, 0, static_cast<std::size_t>(x - 1), v, false);
    }

    // Smallest key j > x with value > v, if any.
    std::optional<Key> nearest_exceeding_right(Key x, Time v) const {
        check_key(x);
        return descend_range(1, 0, size_, static_cast<std::size_t>(x),
                             static_cast<std::size_t>(n_), v, true);
    }

private:
    void check_key(Key key) const {
        if (key < 1 || key > n_)
            throw std::invalid_argument("LastTouchIndex: key outside [1, n]");
    }

    // Finds the extreme position in [qlo, qhi) with value > v; leftmost when
    // `leftmost`, rightmost otherwise. Node spans [lo, hi).
    std::optional<Key> descend_range(std::size_t node, std::size_t lo, std::size_t hi,
                                     std::size_t qlo, std::size_t qhi, Time v,
                                     bool leftmost) const {
        if (qlo >= qhi || lo >= qhi || hi <= qlo || tree_[node] <= v)
            return std::nullopt;
        if (hi - lo == 1)
            return static_cast<Key>(lo + 1);
        const std::size_t mid = lo + (hi - lo) / 2;
        const std::size_t first = leftmost ? 2 * node : 2 * node + 1;
        const std::size_t flo = leftmost ? lo : mid;
        const std::size_t fhi = leftmost ? mid : hi;
        if (auto hit = descend_range(first, flo, fhi, qlo, qhi, v, leftmost))
            return hit;
        const std::size_t second = leftmost ? 2 * node + 1 : 2 * node;
        const std::size_t slo = leftmost ? mid : lo;
        const std::size_t shi = leftmost ? hi : mid;
        return descend_range(second, slo, shi, qlo, qhi, v, leftmost);
    }

    std::int64_t n_ = 0;
    std::size_t size_ = 1;
    std::vector<Time> tree_;
};

// Column maxima of the initial point set; kTimeNegInf where a column holds
// no point.
inline LastTouchIndex last_touch_init(const InitialTree& init, std::int64_t n) {
    LastTouchIndex index(n);
    for (const Point& p : init.points()) {
        if (p.key > n)
            throw std::invalid_argument(
                "last_touch_init: initial point key exceeds universe");
        index.record(p.key, p.time);
    }
    return index;
}

}  // namespace arboral
