#pragma once

// Verification and measurement harness: trace-equality checks between flat
// and mirror initial trees, exhaustive small-n oracle batteries, and
// scaling studies over seeded sequence families.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arboral/geometry.hpp"
#include "arboral/greedy.hpp"
#include "arboral/initial_tree.hpp"
#include "arboral/patterns.hpp"
#include "arboral/rng.hpp"
#include "arboral/sequence.hpp"

namespace arboral {

struct Divergence {
    Time time = 0;
    std::vector<Key> flat_touched;
    std::vector<Key> mirror_touched;
};

struct LemmaCheckResult {
    std::int64_t n = 0;
    std::int64_t case_id = 0;
    bool equal_traces = false;
    std::int64_t cost_flat = 0;
    std::int64_t cost_mirror = 0;
    std::optional<Divergence> first_divergence;
};

// Runs the same sequence under the flat tree and under its mirror, and
// compares the touched-key sets time by time. The claim under test is that
// they never differ.
inline LemmaCheckResult verify_lemma(const AccessSequence& seq,
                                     std::int64_t case_id = 0) {
    seq.require_permutation("verify_lemma");
    const ExecutionTrace flat = greedy_run_fast(seq, InitialTree::flat());
    const ExecutionTrace mirr = greedy_run_fast(seq, mirror(seq));
    LemmaCheckResult out;
    out.n = seq.n();
    out.case_id = case_id;
    out.equal_traces = true;
    out.cost_flat = flat.cost;
    out.cost_mirror = mirr.cost;
    for (std::size_t i = 0; i < flat.steps.size(); ++i)
        if (flat.steps[i].touched != mirr.steps[i].touched) {
            out.equal_traces = false;
            out.first_divergence =
                Divergence{static_cast<Time>(i) + 1, flat.steps[i].touched,
                           mirr.steps[i].touched};
            break;
        }
    return out;
}

struct CorollaryCheckResult {
    LemmaCheckResult lemma;
    // Whether the row sequence of the given tree avoids (2,3,1), i.e. is a
    // preorder traversal of some BST.
    bool preorder_rows = false;
};

inline CorollaryCheckResult verify_corollary_initial(const InitialTree& init,
                                                     std::int64_t case_id = 0) {
    const AccessSequence seq = mirror_inverse(init);
    return {verify_lemma(seq, case_id), avoids_231(seq).avoids};
}

namespace detail {

inline std::string perm_text(const std::vector<Key>& keys) {
    std::string out = "(";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(keys[i]);
    }
    out += ')';
    return out;
}

inline bool witness_realizes_231(const AccessSequence& seq,
                                 const std::array<std::int64_t, 3>& w) {
    if (!(1 <= w[0] && w[0] < w[1] && w[1] < w[2] && w[2] <= seq.n()))
        return false;
    const Key a = seq.at_time(w[0]);
    const Key b = seq.at_time(w[1]);
    const Key c = seq.at_time(w[2]);
    return c < a && a < b;
}

}  // namespace detail

struct ExhaustiveSummary {
    std::int64_t n = 0;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    // Permutation and check name of the first failing case, if any.
    std::optional<std::string> first_failure;
};

// Sweeps every permutation of [1, n] and asserts, per case: the two engines
// agree under flat and mirror trees, the flat and mirror traces are equal
// to each other, final point sets pass the satisfaction scan, and the two
// pattern checkers agree (with a valid witness when one is reported).
inline ExhaustiveSummary exhaustive_check(std::int64_t n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("exhaustive_check: n must be in [1, 8]");
    std::vector<Key> keys(static_cast<std::size_t>(n));
    std::iota(keys.begin(), keys.end(), Key{1});
    ExhaustiveSummary out;
    out.n = n;
    do {
        ++out.cases;
        const AccessSequence seq(keys);
        const InitialTree flat_init = InitialTree::flat();
        const InitialTree mirror_init = mirror(seq);

        const char* failed = nullptr;
        const ExecutionTrace flat_fast = greedy_run_fast(seq, flat_init);
        const ExecutionTrace mirror_fast = greedy_run_fast(seq, mirror_init);
        if (greedy_run_oracle(seq, flat_init) != flat_fast)
            failed = "fast-vs-oracle-flat";
        else if (greedy_run_oracle(seq, mirror_init) != mirror_fast)
            failed = "fast-vs-oracle-mirror";
        else if (!std::equal(flat_fast.steps.begin(), flat_fast.steps.end(),
                             mirror_fast.steps.begin(), mirror_fast.steps.end(),
                             [](const TraceStep& a, const TraceStep& b) {
                                 return a.touched == b.touched;
                             }))
            failed = "flat-vs-mirror-trace";
        else if (!pairs_satisfied_above(final_point_set(flat_init, flat_fast), 1))
            failed = "final-set-unsatisfied-flat";
        else if (!pairs_satisfied_above(final_point_set(mirror_init, mirror_fast),
                                        1))
            failed = "final-set-unsatisfied-mirror";
        else {
            const PatternReport fast_report = avoids_231(seq);
            const PatternReport brute_report = avoids_231_bruteforce(seq);
            if (fast_report.avoids != brute_report.avoids)
                failed = "pattern-checker-disagreement";
            else if (fast_report.witness &&
                     !detail::witness_realizes_231(seq, *fast_report.witness))
                failed = "pattern-witness-invalid";
        }
        if (failed) {
            ++out.failures;
            if (!out.first_failure)
                out.first_failure = detail::perm_text(keys) + " " + failed;
        }
    } while (std::next_permutation(keys.begin(), keys.end()));
    return out;
}

enum class SequenceFamily { PreorderRandom, Sequential, UniformRandom };

inline const char* family_name(SequenceFamily family) {
    switch (family) {
    case SequenceFamily::PreorderRandom:
        return "preorder-random";
    case SequenceFamily::Sequential:
        return "sequential";
    case SequenceFamily::UniformRandom:
        return "uniform-random";
    }
    return "?";
}

inline std::optional<SequenceFamily> parse_family(std::string_view name) {
    if (name == "preorder-random")
        return SequenceFamily::PreorderRandom;
    if (name == "sequential")
        return SequenceFamily::Sequential;
    if (name == "uniform-random")
        return SequenceFamily::UniformRandom;
    return std::nullopt;
}

inline AccessSequence generate_sequence(SequenceFamily family, std::int64_t n,
                                        std::uint64_t seed) {
    switch (family) {
    case SequenceFamily::PreorderRandom:
        return random_preorder(n, seed);
    case SequenceFamily::Sequential:
        return AccessSequence::sequential(n);
    case SequenceFamily::UniformRandom: {
        Rng rng(seed);
        return AccessSequence(random_permutation(n, rng));
    }
    }
    throw std::logic_error("generate_sequence: bad family");
}

enum class ScalingInit { Flat, Mirror };

inline const char* scaling_init_name(ScalingInit init) {
    return init == ScalingInit::Flat ? "flat" : "mirror";
}

struct ScalingRow {
    SequenceFamily family = SequenceFamily::Sequential;
    std::int64_t n = 0;
    std::uint64_t seed = 0;
    ScalingInit initial_tree = ScalingInit::Flat;
    std::int64_t cost = 0;
    // cost_per_n is the exact rational cost / n; see format_cost_per_n.
};

// Exact long division of num / den rendered with 6 fractional digits,
// rounding half up on the seventh. Integer arithmetic only.
inline std::string format_decimal_ratio(std::int64_t num, std::int64_t den) {
    if (num < 0 || den < 1)
        throw std::invalid_argument("format_decimal_ratio: need num >= 0, den >= 1");
    std::int64_t whole = num / den;
    std::int64_t rem = num % den;
    std::array<int, 6> digits{};
    for (int i = 0; i < 6; ++i) {
        rem *= 10;
        digits[static_cast<std::size_t>(i)] = static_cast<int>(rem / den);
        rem %= den;
    }
    if (2 * rem >= den) {
        int i = 5;
        for (; i >= 0; --i) {
            if (digits[static_cast<std::size_t>(i)] < 9) {
                ++digits[static_cast<std::size_t>(i)];
                break;
            }
            digits[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0)
            ++whole;
    }
    std::string out = std::to_string(whole);
    out += '.';
    for (int d : digits)
        out += static_cast<char>('0' + d);
    return out;
}

inline std::string format_cost_per_n(const ScalingRow& row) {
    return format_decimal_ratio(row.cost, row.n);
}

// For each (size, trial) generates one sequence (trial t uses seed + t) and
// runs it under both the flat tree and its mirror, emitting one row per
// run. The two costs in each pair must agree; callers treat a mismatch as a
// claim violation.
inline std::vector<ScalingRow> scaling_study(SequenceFamily family,
                                             const std::vector<std::int64_t>& sizes,
                                             std::int64_t trials,
                                             std::uint64_t seed) {
    if (sizes.empty())
        throw std::invalid_argument("scaling_study: sizes must be nonempty");
    if (trials < 1)
        throw std::invalid_argument("scaling_study: trials must be >= 1");
    for (std::int64_t n : sizes)
        if (n < 1)
            throw std::invalid_argument("scaling_study: sizes must be >= 1");
    std::vector<ScalingRow> rows;
    rows.reserve(sizes.size() * static_cast<std::size_t>(trials) * 2);
    for (std::int64_t n : sizes)
        for (std::int64_t trial = 0; trial < trials; ++trial) {
            const std::uint64_t trial_seed =
                seed + static_cast<std::uint64_t>(trial);
            const AccessSequence seq = generate_sequence(family, n, trial_seed);
            const ExecutionTrace flat = greedy_run_fast(seq, InitialTree::flat());
            const ExecutionTrace mirr = greedy_run_fast(seq, mirror(seq));
            rows.push_back({family, n, trial_seed, ScalingInit::Flat, flat.cost});
            rows.push_back({family, n, trial_seed, ScalingInit::Mirror, mirr.cost});
        }
    return rows;
}

inline bool scaling_rows_lemma_equal(const std::vector<ScalingRow>& rows) {
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2)
        if (rows[i].cost != rows[i + 1].cost)
            return false;
    return true;
}

// Per-size aggregate of the flat rows, in first-seen size order.
struct FamilySizeStat {
    std::int64_t n = 0;
    std::int64_t trials = 0;
    std::int64_t total_cost = 0;
};

inline std::vector<FamilySizeStat> flat_cost_by_size(
    const std::vector<ScalingRow>& rows) {
    std::vector<FamilySizeStat> stats;
    for (const ScalingRow& row : rows) {
        if (row.initial_tree != ScalingInit::Flat)
            continue;
        if (stats.empty() || stats.back().n != row.n)
            stats.push_back({row.n, 0, 0});
        ++stats.back().trials;
        stats.back().total_cost += row.cost;
    }
    return stats;
}

// mean(big) / mean(small) <= num/den, evaluated exactly in integers.
inline bool mean_ratio_at_most(const FamilySizeStat& small,
                               const FamilySizeStat& big, std::int64_t num,
                               std::int64_t den) {
    return big.total_cost * small.trials * den <=
           small.total_cost * big.trials * num;
}

inline bool doubling_ratios_at_most(const std::vector<FamilySizeStat>& stats,
                                    std::int64_t num, std::int64_t den) {
    for (std::size_t i = 0; i + 1 < stats.size(); ++i)
        if (!mean_ratio_at_most(stats[i], stats[i + 1], num, den))
            return false;
    return true;
}

inline bool strictly_increasing_cost_per_n(
    const std::vector<FamilySizeStat>& stats) {
    for (std::size_t i = 0; i + 1 < stats.size(); ++i) {
        const FamilySizeStat& a = stats[i];
        const FamilySizeStat& b = stats[i + 1];
        if (!(b.total_cost * a.trials * a.n > a.total_cost * b.trials * b.n))
            return false;
    }
    return true;
}

}  // namespace arboral
