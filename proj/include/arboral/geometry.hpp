#pragma once

// Integer point-plane primitives: points, closed rectangles, arboral
// satisfaction predicates, and whole-set satisfaction checking.
//
// Conventions used throughout the library:
//   - key  = x coordinate, always >= 1
//   - time = y coordinate, never 0; negative times hold the initial tree,
//     positive times hold accesses and touches
//   - rectangles are closed: a point on the boundary counts as a witness

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace arboral {

using Key = std::int64_t;
using Time = std::int64_t;

// Sentinel for "no point in this column" / "-infinity" cutoffs.
inline constexpr Time kTimeNegInf = std::numeric_limits<Time>::min();

struct Point {
    Key key = 0;
    Time time = 0;

    friend auto operator<=>(const Point&, const Point&) = default;
};

// Finite duplicate-free set of points, kept sorted by (key, time).
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::vector<Point> points) {
        points_ = std::move(points);
        std::sort(points_.begin(), points_.end());
        auto dup = std::adjacent_find(points_.begin(), points_.end());
        if (dup != points_.end())
            throw std::invalid_argument("PointSet: duplicate point");
    }

    PointSet(std::initializer_list<Point> points)
        : PointSet(std::vector<Point>(points)) {}

    // Returns false if the point was already present.
    bool insert(Point p) {
        auto it = std::lower_bound(points_.begin(), points_.end(), p);
        if (it != points_.end() && *it == p)
            return false;
        points_.insert(it, p);
        return true;
    }

    bool contains(Point p) const {
        return std::binary_search(points_.begin(), points_.end(), p);
    }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    const std::vector<Point>& points() const { return points_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

// Two points span a proper rectangle only when they share neither
// coordinate.
inline bool degenerate_pair(Point p, Point q) {
    return p.key == q.key || p.time == q.time;
}

// True iff some r in `set`, r != p and r != q, lies in the closed
// axis-aligned rectangle spanned by p and q. Reference predicate: plain
// linear scan, no indexing.
inline bool rect_satisfied(Point p, Point q, const PointSet& set) {
    if (p == q || degenerate_pair(p, q))
        throw std::invalid_argument(
            "rect_satisfied: p and q must span a proper rectangle");
    const auto [xlo, xhi] = std::minmax(p.key, q.key);
    const auto [tlo, thi] = std::minmax(p.time, q.time);
    for (const Point& r : set) {
        if (r == p || r == q)
            continue;
        if (r.key >= xlo && r.key <= xhi && r.time >= tlo && r.time <= thi)
            return true;
    }
    return false;
}

// Counts points of a fixed set inside closed rectangles. Segment tree over
// the distinct keys; each node stores the sorted times of its key range.
class RectCountIndex {
public:
    explicit RectCountIndex(const PointSet& set) {
        for (const Point& p : set.points())
            keys_.push_back(p.key);
        keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
        cols_ = keys_.size();
        if (cols_ == 0)
            return;
        nodes_.assign(2 * cols_, {});
        for (const Point& p : set.points())
            nodes_[cols_ + col_of(p.key)].push_back(p.time);
        // Times arrive sorted per column already (set is (key,time)-sorted);
        // internal nodes merge their children.
        for (std::size_t v = cols_ - 1; v >= 1; --v) {
            const auto& l = nodes_[2 * v];
            const auto& r = nodes_[2 * v + 1];
            nodes_[v].resize(l.size() + r.size());
            std::merge(l.begin(), l.end(), r.begin(), r.end(), nodes_[v].begin());
        }
    }

    // Number of set points with key in [xlo, xhi] and time in [tlo, thi].
    std::int64_t count(Key xlo, Key xhi, Time tlo, Time thi) const {
        if (cols_ == 0 || xlo > xhi || tlo > thi)
            return 0;
        std::size_t lo = std::lower_bound(keys_.begin(), keys_.end(), xlo) - keys_.begin();
        std::size_t hi = std::upper_bound(keys_.begin(), keys_.end(), xhi) - keys_.begin();
        std::int64_t total = 0;
        for (std::size_t l = lo + cols_, r = hi + cols_; l < r; l >>= 1, r >>= 1) {
            if (l & 1)
                total += count_in(nodes_[l++], tlo, thi);
            if (r & 1)
                total += count_in(nodes_[--r], tlo, thi);
        }
        return total;
    }

private:
    static std::int64_t count_in(const std::vector<Time>& times, Time tlo, Time thi) {
        auto lo = std::lower_bound(times.begin(), times.end(), tlo);
        auto hi = std::upper_bound(times.begin(), times.end(), thi);
        return hi - lo;
    }

    std::size_t col_of(Key k) const {
        return std::lower_bound(keys_.begin(), keys_.end(), k) - keys_.begin();
    }

    std::vector<Key> keys_;
    std::size_t cols_ = 0;
    std::vector<std::vector<Time>> nodes_;
};

// First pair (p, q) with max(p.time, q.time) >= cutoff whose rectangle has
// no witness, or nullopt if all such pairs are satisfied. Scans every pair;
// a pair's corners always lie in their own closed rectangle, so a witness
// exists iff the rectangle holds at least three set points.
inline std::optional<std::pair<Point, Point>>
first_unsatisfied_pair_above(const PointSet& set, Time cutoff) {
    RectCountIndex index(set);
    const auto& pts = set.points();
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const Point p = pts[a];
            const Point q = pts[b];
            if (degenerate_pair(p, q))
                continue;
            if (std::max(p.time, q.time) < cutoff)
                continue;
            const auto [xlo, xhi] = std::minmax(p.key, q.key);
            const auto [tlo, thi] = std::minmax(p.time, q.time);
            if (index.count(xlo, xhi, tlo, thi) < 3)
                return std::make_pair(p, q);
        }
    }
    return std::nullopt;
}

inline bool pairs_satisfied_above(const PointSet& set, Time cutoff) {
    return !first_unsatisfied_pair_above(set, cutoff).has_value();
}

inline bool is_arborally_satisfied_set(const PointSet& set) {
    return pairs_satisfied_above(set, kTimeNegInf);
}

}  // namespace arboral
