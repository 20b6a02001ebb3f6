// Command-line surface over the library: run Greedy on sequences, generate
// sequences, check 231-avoidance, verify the flat/mirror trace equality,
// sweep small universes exhaustively, run scaling studies, and render runs
// as SVG.
//
// Exit codes: 0 success, 1 invariant or claim violation, 2 usage or input
// error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arboral/arboral.hpp"

namespace {

using namespace arboral;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        atomic_write_file(out_path, text);
}

int do_run(const std::string& seq_arg, const std::string& initial_arg,
           const std::string& out_path) {
    const AccessSequence seq = load_sequence_arg(seq_arg);
    const InitialTree init = load_initial_tree_arg(initial_arg, &seq);
    const ExecutionTrace trace = greedy_run_fast(seq, init);
    emit(format_trace(trace), out_path);
    if (!out_path.empty())
        std::cout << trace_summary_line(trace) << "\n";
    return 0;
}

int do_gen(std::int64_t n, const std::string& family_arg, std::uint64_t seed,
           const std::string& out_path) {
    const auto family = parse_family(family_arg);
    if (!family)
        throw ParseError("unknown family: " + family_arg);
    if (n < 1)
        throw ParseError("gen: --n must be >= 1");
    emit(format_sequence(generate_sequence(*family, n, seed)), out_path);
    return 0;
}

int do_check_preorder(const std::string& seq_arg) {
    const AccessSequence seq = load_sequence_arg(seq_arg);
    const PatternReport report = avoids_231(seq);
    if (report.avoids) {
        std::cout << "avoids=true\n";
        return 0;
    }
    const auto& w = *report.witness;
    std::cout << "avoids=false witness=(" << w[0] << "," << w[1] << "," << w[2]
              << ")\n";
    return 1;
}

int do_verify_single(const std::string& seq_arg, const std::string& out_path) {
    const LemmaCheckResult r = verify_lemma(load_sequence_arg(seq_arg));
    const std::string line = format_lemma_line(r) + "\n";
    std::cout << line;
    if (!out_path.empty())
        atomic_write_file(out_path, line);
    if (!r.equal_traces && r.first_divergence)
        std::cerr << "divergence at time " << r.first_divergence->time << "\n";
    return r.equal_traces ? 0 : 1;
}

int do_verify_corollary(const std::string& initial_arg,
                        const std::string& out_path) {
    const InitialTree init = load_initial_tree_arg(initial_arg, nullptr);
    const CorollaryCheckResult r = verify_corollary_initial(init);
    const std::string text = format_lemma_line(r.lemma) + "\n# preorder=" +
                             (r.preorder_rows ? "true" : "false") + "\n";
    std::cout << text;
    if (!out_path.empty())
        atomic_write_file(out_path, text);
    return r.lemma.equal_traces ? 0 : 1;
}

int do_verify_sweep(std::int64_t n, const std::string& out_path) {
    if (n < 1 || n > 9)
        throw ParseError("verify-lemma: --exhaustive must be in [1, 9]");
    std::vector<Key> keys(static_cast<std::size_t>(n));
    std::iota(keys.begin(), keys.end(), Key{1});
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::string lines;
    do {
        ++cases;
        const LemmaCheckResult r = verify_lemma(AccessSequence(keys), cases);
        if (!out_path.empty())
            lines += format_lemma_line(r) + "\n";
        if (!r.equal_traces) {
            ++failures;
            std::cerr << format_lemma_line(r) << "\n";
        }
    } while (std::next_permutation(keys.begin(), keys.end()));
    if (!out_path.empty())
        atomic_write_file(out_path, lines);
    std::cout << cases << " cases, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

int do_exhaustive(std::int64_t n, const std::string& out_path) {
    ExhaustiveSummary summary;
    try {
        summary = exhaustive_check(n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    const std::string line = std::to_string(summary.cases) + " cases, " +
                             std::to_string(summary.failures) + " failures\n";
    std::cout << line;
    if (summary.first_failure)
        std::cerr << "first failure: " << *summary.first_failure << "\n";
    if (!out_path.empty())
        atomic_write_file(out_path, line);
    return summary.failures == 0 ? 0 : 1;
}

int do_scaling(const std::string& family_arg, const std::string& sizes_arg,
               std::int64_t trials, std::uint64_t seed,
               const std::string& out_path) {
    const auto family = parse_family(family_arg);
    if (!family)
        throw ParseError("unknown family: " + family_arg);
    const std::vector<std::int64_t> sizes = parse_sizes(sizes_arg);
    const std::vector<ScalingRow> rows = scaling_study(*family, sizes, trials, seed);
    const bool lemma_equal = scaling_rows_lemma_equal(rows);
    emit(format_scaling_csv(rows), out_path);

    if (!out_path.empty()) {
        std::cout << "rows=" << rows.size() << "\n";
        std::cout << "lemma_equal=" << (lemma_equal ? "true" : "false") << "\n";
        bool doubling = sizes.size() >= 2;
        for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
            if (sizes[i + 1] != 2 * sizes[i])
                doubling = false;
        if (doubling) {
            const auto stats = flat_cost_by_size(rows);
            // Largest consecutive mean-cost ratio, exact integer comparison.
            std::int64_t best_num = 0, best_den = 1;
            for (std::size_t i = 0; i + 1 < stats.size(); ++i) {
                const std::int64_t num = stats[i + 1].total_cost * stats[i].trials;
                const std::int64_t den = stats[i].total_cost * stats[i + 1].trials;
                if (num * best_den > best_num * den) {
                    best_num = num;
                    best_den = den;
                }
            }
            if (*family == SequenceFamily::PreorderRandom) {
                const bool ok = doubling_ratios_at_most(stats, 11, 5);
                std::cout << "doubling_ratio_max="
                          << format_decimal_ratio(best_num, best_den)
                          << " threshold=2.200000 ok=" << (ok ? "true" : "false")
                          << "\n";
            }
            if (*family == SequenceFamily::UniformRandom) {
                const bool inc = strictly_increasing_cost_per_n(stats);
                std::cout << "cost_per_n_increasing=" << (inc ? "true" : "false")
                          << "\n";
            }
        }
    }
    if (!lemma_equal)
        std::cerr << "flat/mirror cost mismatch in scaling rows\n";
    return lemma_equal ? 0 : 1;
}

int do_render(const std::string& seq_arg, const std::string& initial_arg,
              const std::string& out_path) {
    const AccessSequence seq = load_sequence_arg(seq_arg);
    const InitialTree init = load_initial_tree_arg(initial_arg, &seq);
    const ExecutionTrace trace = greedy_run_fast(seq, init);
    emit(render_svg(init, trace), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy BST simulator over the point-plane model"};
    app.require_subcommand(1);

    struct {
        std::string seq, initial = "flat", out;
    } run_opts;
    auto* run = app.add_subcommand("run", "Run Greedy and print the trace");
    run->add_option("--seq", run_opts.seq,
                    "Sequence file or inline form like (2,1,3)")
        ->required();
    run->add_option("--initial", run_opts.initial,
                    "Initial tree: flat, mirror, rows:PATH, or bst:PATH");
    run->add_option("--out", run_opts.out, "Write the trace here (atomic)");

    struct {
        std::int64_t n = 0;
        std::string family = "preorder-random", out;
        std::uint64_t seed = 0;
    } gen_opts;
    auto* gen = app.add_subcommand(
        "gen",
        "Generate a sequence. preorder-random draws a uniform random "
        "permutation, inserts it into a BST, and emits the preorder "
        "traversal; every output avoids the pattern (2,3,1), but the "
        "distribution is NOT uniform over all such sequences.");
    gen->add_option("--n", gen_opts.n, "Sequence length")->required();
    gen->add_option("--family", gen_opts.family,
                    "preorder-random, sequential, or uniform-random");
    gen->add_option("--seed", gen_opts.seed, "RNG seed (default 0)");
    gen->add_option("--out", gen_opts.out, "Write the sequence here (atomic)");

    struct {
        std::string seq;
    } chk_opts;
    auto* chk = app.add_subcommand("check-preorder",
                                   "Exit 0 iff the sequence avoids (2,3,1)");
    chk->add_option("--seq", chk_opts.seq, "Sequence file or inline form")
        ->required();

    struct {
        std::string seq, initial, out;
        std::int64_t exhaustive = 0;
    } ver_opts;
    auto* ver = app.add_subcommand(
        "verify-lemma",
        "Check that flat and mirror initial trees give identical traces");
    ver->add_option("--seq", ver_opts.seq, "Single sequence to check");
    ver->add_option("--initial", ver_opts.initial,
                    "rows:PATH of a permutation-rows tree to check via its "
                    "mirror-inverse sequence");
    ver->add_option("--exhaustive", ver_opts.exhaustive,
                    "Sweep all permutations of this size (1..9)");
    ver->add_option("--out", ver_opts.out, "Write per-case report lines here");

    struct {
        std::int64_t n = 0;
        std::string out;
    } exh_opts;
    auto* exh = app.add_subcommand(
        "exhaustive",
        "Full oracle battery over all permutations of a small universe");
    exh->add_option("--n", exh_opts.n, "Universe size (1..8)")->required();
    exh->add_option("--out", exh_opts.out, "Write the summary line here");

    struct {
        std::string family = "preorder-random", sizes, out;
        std::int64_t trials = 1;
        std::uint64_t seed = 0;
    } sca_opts;
    auto* sca = app.add_subcommand("scaling", "Cost scaling study, CSV output");
    sca->add_option("--family", sca_opts.family,
                    "preorder-random, sequential, or uniform-random");
    sca->add_option("--sizes", sca_opts.sizes,
                    "Comma list; entries N or doubling A..B")
        ->required();
    sca->add_option("--trials", sca_opts.trials, "Trials per size (default 1)");
    sca->add_option("--seed", sca_opts.seed,
                    "Base seed; trial t uses seed+t (default 0)");
    sca->add_option("--out", sca_opts.out, "Write the CSV here (atomic)");

    struct {
        std::string seq, initial = "flat", out;
    } ren_opts;
    auto* ren = app.add_subcommand("render", "Render a run as SVG");
    ren->add_option("--seq", ren_opts.seq, "Sequence file or inline form")
        ->required();
    ren->add_option("--initial", ren_opts.initial,
                    "Initial tree: flat, mirror, rows:PATH, or bst:PATH");
    ren->add_option("--out", ren_opts.out, "Write the SVG here (atomic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed())
            return do_run(run_opts.seq, run_opts.initial, run_opts.out);
        if (gen->parsed())
            return do_gen(gen_opts.n, gen_opts.family, gen_opts.seed, gen_opts.out);
        if (chk->parsed())
            return do_check_preorder(chk_opts.seq);
        if (ver->parsed()) {
            const int modes = (ver_opts.seq.empty() ? 0 : 1) +
                              (ver_opts.initial.empty() ? 0 : 1) +
                              (ver->count("--exhaustive") > 0 ? 1 : 0);
            if (modes != 1)
                throw ParseError("verify-lemma needs exactly one of --seq, "
                                 "--initial, --exhaustive");
            if (!ver_opts.seq.empty())
                return do_verify_single(ver_opts.seq, ver_opts.out);
            if (!ver_opts.initial.empty())
                return do_verify_corollary(ver_opts.initial, ver_opts.out);
            return do_verify_sweep(ver_opts.exhaustive, ver_opts.out);
        }
        if (exh->parsed())
            return do_exhaustive(exh_opts.n, exh_opts.out);
        if (sca->parsed())
            return do_scaling(sca_opts.family, sca_opts.sizes, sca_opts.trials,
                              sca_opts.seed, sca_opts.out);
        if (ren->parsed())
            return do_render(ren_opts.seq, ren_opts.initial, ren_opts.out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
