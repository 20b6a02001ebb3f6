#pragma once

// The Greedy sweep-line algorithm, twice over.
//
// greedy_run_oracle: definition-level semantics. At each time i it places
// the access point, then repeatedly scans every non-degenerate pair with at
// least one endpoint on the sweep line and adds the below-endpoint's column
// corner whenever the pair's closed rectangle holds no third point,
// iterating to a fixpoint.
//
// greedy_run_fast: the staircase characterization of the same fixpoint. A
// key y on one side of the accessed key x is touched iff its last-touch
// time strictly exceeds the last-touch time of every column strictly
// between y and x and of column x itself (x's own below-line point sits on
// the closed rectangle boundary, so it blocks exactly the ties).
//
// The two must produce identical traces on every input; the test suite
// holds them to that.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arboral/geometry.hpp"
#include "arboral/initial_tree.hpp"
#include "arboral/last_touch.hpp"
#include "arboral/rng.hpp"
#include "arboral/sequence.hpp"

namespace arboral {

struct TraceStep {
    Key accessed = 0;
    std::vector<Key> touched;  // ascending, never contains `accessed`

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ExecutionTrace {
    std::int64_t n = 0;
    std::vector<TraceStep> steps;
    std::int64_t touched_total = 0;
    std::int64_t cost = 0;  // n + touched_total

    friend bool operator==(const ExecutionTrace&, const ExecutionTrace&) = default;
};

inline std::int64_t cost(const ExecutionTrace& trace) {
    return trace.n + trace.touched_total;
}

enum class Side { Left, Right };

// Keys on `side` of x that the fixpoint would touch, given the below-line
// column maxima. Walks outward from x, keeping the running maximum of the
// columns passed so far (seeded with column x itself); each next touched key
// is the nearest column strictly exceeding it.
inline std::vector<Key> touched_staircase(Key x, Side side,
                                          const LastTouchIndex& last_touch) {
    std::vector<Key> touched;
    Time running_max = last_touch.get(x);
    Key at = x;
    for (;;) {
        std::optional<Key> next =
            side == Side::Left ? last_touch.nearest_exceeding_left(at, running_max)
                               : last_touch.nearest_exceeding_right(at, running_max);
        if (!next)
            break;
        touched.push_back(*next);
        running_max = last_touch.get(*next);
        at = *next;
    }
    std::sort(touched.begin(), touched.end());
    return touched;
}

namespace detail {

inline void validate_run_input(const AccessSequence& seq, const InitialTree& init) {
    const std::int64_t n = seq.n();
    for (const Point& p : init.points()) {
        if (p.time >= 0)
            throw std::invalid_argument("greedy: initial point at time >= 0");
        if (p.key < 1 || p.key > n)
            throw std::invalid_argument(
                "greedy: initial point key outside universe [1, n]");
    }
    if (init.kind() == InitialTreeKind::PermutationRows &&
        static_cast<std::int64_t>(init.rows().size()) != n)
        throw std::invalid_argument(
            "greedy: permutation-rows initial tree size differs from universe");
}

}  // namespace detail

inline ExecutionTrace greedy_run_fast(const AccessSequence& seq,
                                      const InitialTree& init) {
    detail::validate_run_input(seq, init);
    const std::int64_t n = seq.n();
    LastTouchIndex last_touch = last_touch_init(init, n);

    ExecutionTrace trace;
    trace.n = n;
    trace.steps.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        const Key x = seq.at_time(i);
        std::vector<Key> touched = touched_staircase(x, Side::Left, last_touch);
        std::vector<Key> right = touched_staircase(x, Side::Right, last_touch);
        touched.insert(touched.end(), right.begin(), right.end());

        last_touch.record(x, i);
        for (Key y : touched)
            last_touch.record(y, i);

        trace.touched_total += static_cast<std::int64_t>(touched.size());
        trace.steps.push_back({x, std::move(touched)});
    }
    trace.cost = trace.n + trace.touched_total;
    return trace;
}

// Pair-scan order for the oracle's fixpoint loop. The final point set is
// order-insensitive (tested); exposing the order lets the suite check that.
enum class ScanOrder { Forward, Reverse, Shuffled };

struct OracleOptions {
    ScanOrder order = ScanOrder::Forward;
    std::uint64_t shuffle_seed = 0;
};

namespace detail {

// All points of one run keyed by column, times sorted ascending. Appends
// happen in sweep order so the vectors stay sorted.
class ColumnStore {
public:
    ColumnStore(const InitialTree& init, std::int64_t n)
        : cols_(static_cast<std::size_t>(n) + 1) {
        for (const Point& p : init.points())
            cols_[static_cast<std::size_t>(p.key)].push_back(p.time);
        for (auto& col : cols_)
            std::sort(col.begin(), col.end());
    }

    void add(Key key, Time time) {
        cols_[static_cast<std::size_t>(key)].push_back(time);
    }

    const std::vector<Time>& times(Key key) const {
        return cols_[static_cast<std::size_t>(key)];
    }

    // Any point in column `key` with time in [tlo, thi]?
    bool any_in(Key key, Time tlo, Time thi) const {
        const auto& col = cols_[static_cast<std::size_t>(key)];
        auto it = std::lower_bound(col.begin(), col.end(), tlo);
        return it != col.end() && *it <= thi;
    }

    PointSet to_point_set() const {
        std::vector<Point> pts;
        for (std::size_t k = 1; k < cols_.size(); ++k)
            for (Time t : cols_[k])
                pts.push_back({static_cast<Key>(k), t});
        return PointSet(std::move(pts));
    }

private:
    std::vector<std::vector<Time>> cols_;
};

// Satisfaction check for a sweep-line pair: p = (px, i) on the line,
// q = (qx, qt) strictly below. Endpoint columns first (they hold the
// witness in the common case), then the interior columns.
inline bool line_pair_satisfied(const ColumnStore& cols, Key px, Key qx,
                                Time qt, Time i) {
    if (cols.any_in(qx, qt + 1, i))
        return true;
    if (cols.any_in(px, qt, i - 1))
        return true;
    const auto [xlo, xhi] = std::minmax(px, qx);
    for (Key c = xlo + 1; c < xhi; ++c)
        if (cols.any_in(c, qt, i))
            return true;
    return false;
}

}  // namespace detail

inline ExecutionTrace greedy_run_oracle(const AccessSequence& seq,
                                        const InitialTree& init,
                                        const OracleOptions& options = {}) {
    detail::validate_run_input(seq, init);
    const std::int64_t n = seq.n();
    detail::ColumnStore cols(init, n);
    Rng shuffle_rng(options.shuffle_seed);

    ExecutionTrace trace;
    trace.n = n;
    trace.steps.reserve(static_cast<std::size_t>(n));

    // Below-line points accumulated so far, in insertion order.
    std::vector<Point> below;
    for (const Point& p : init.points())
        below.push_back(p);

    for (std::int64_t i = 1; i <= n; ++i) {
        const Key x = seq.at_time(i);
        std::vector<Key> line_keys{x};
        cols.add(x, i);

        bool changed = true;
        while (changed) {
            changed = false;
            // Snapshot the pair list; additions join the next round.
            std::vector<std::pair<Key, std::size_t>> pairs;
            pairs.reserve(line_keys.size() * below.size());
            for (Key lk : line_keys)
                for (std::size_t b = 0; b < below.size(); ++b)
                    if (below[b].key != lk)
                        pairs.emplace_back(lk, b);
            switch (options.order) {
                case ScanOrder::Forward:
                    break;
                case ScanOrder::Reverse:
                    std::reverse(pairs.begin(), pairs.end());
                    break;
                case ScanOrder::Shuffled:
                    shuffle_rng.shuffle(pairs);
                    break;
            }
            for (const auto& [lk, b] : pairs) {
                const Point q = below[b];
                if (detail::line_pair_satisfied(cols, lk, q.key, q.time, i))
                    continue;
                line_keys.push_back(q.key);
                cols.add(q.key, i);
                changed = true;
            }
        }

        std::vector<Key> touched(line_keys.begin() + 1, line_keys.end());
        std::sort(touched.begin(), touched.end());
        trace.touched_total += static_cast<std::int64_t>(touched.size());
        trace.steps.push_back({x, std::move(touched)});

        below.push_back({x, i});
        for (std::size_t t = 1; t < line_keys.size(); ++t)
            below.push_back({line_keys[t], i});
    }
    trace.cost = trace.n + trace.touched_total;
    return trace;
}

// Initial tree plus every access and touch point of the trace.
inline PointSet final_point_set(const InitialTree& init, const ExecutionTrace& trace) {
    PointSet set = init.points();
    for (std::int64_t i = 1; i <= trace.n; ++i) {
        const TraceStep& step = trace.steps[static_cast<std::size_t>(i - 1)];
        set.insert({step.accessed, i});
        for (Key y : step.touched)
            set.insert({y, i});
    }
    return set;
}

}  // namespace arboral
