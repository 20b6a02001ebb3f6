#pragma once

// File formats and text rendering shared by the CLI and the tests.
//
//   sequences:  one integer per line, '#' starts a comment
//   point sets: "key<SPACE>time" per line, '#' starts a comment
//   traces:     "n=<n> touched=<k> cost=<n+k>" header, then
//               "<time>\t<accessed>\t<touched ascending, comma-separated>"
//   scaling:    CSV with header "family,n,seed,initial_tree,cost,cost_per_n"
//
// Output files are written to a temporary sibling and renamed into place,
// so readers never observe a partial file.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arboral/experiments.hpp"
#include "arboral/geometry.hpp"
#include "arboral/greedy.hpp"
#include "arboral/initial_tree.hpp"
#include "arboral/patterns.hpp"
#include "arboral/sequence.hpp"

namespace arboral {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp(target);
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

namespace detail {

// Strips the comment tail and returns the whitespace-separated integer
// tokens of one line; throws on anything that is not an integer.
inline std::vector<std::int64_t> line_integers(std::string_view line,
                                               const std::string& what) {
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::int64_t> values;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw ParseError(what + ": not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw ParseError(what + ": not an integer: '" + token + "'");
        values.push_back(value);
    }
    return values;
}

}  // namespace detail

inline AccessSequence parse_sequence_text(const std::string& text,
                                          const std::string& what) {
    std::vector<Key> keys;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto values = detail::line_integers(line, what);
        if (values.empty())
            continue;
        if (values.size() != 1)
            throw ParseError(what + ": expected one integer per line");
        keys.push_back(values[0]);
    }
    if (keys.empty())
        throw ParseError(what + ": no entries");
    return AccessSequence(std::move(keys));
}

inline AccessSequence load_sequence(const std::string& path) {
    return parse_sequence_text(read_text_file(path), path);
}

// "(2,1,3)", "2,1,3", and whitespace-separated forms all parse.
inline AccessSequence parse_inline_sequence(const std::string& text) {
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == '(' || c == ')' || c == ',')
            c = ' ';
    const auto keys = detail::line_integers(cleaned, "inline sequence");
    if (keys.empty())
        throw ParseError("inline sequence: no entries");
    return AccessSequence(std::vector<Key>(keys.begin(), keys.end()));
}

// A sequence argument names a file when one exists at that path; otherwise
// it must parse as an inline sequence.
inline AccessSequence load_sequence_arg(const std::string& arg) {
    if (std::filesystem::exists(arg))
        return load_sequence(arg);
    const bool inline_like =
        !arg.empty() &&
        arg.find_first_not_of("0123456789(), \t") == std::string::npos;
    if (inline_like)
        return parse_inline_sequence(arg);
    throw ParseError("sequence argument is neither a file nor inline: " + arg);
}

inline PointSet parse_point_set_text(const std::string& text,
                                     const std::string& what) {
    std::vector<Point> pts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto values = detail::line_integers(line, what);
        if (values.empty())
            continue;
        if (values.size() != 2)
            throw ParseError(what + ": expected 'key time' per line");
        pts.push_back({values[0], values[1]});
    }
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(what + ": duplicate point");
    return PointSet(std::move(pts));
}

inline PointSet load_point_set(const std::string& path) {
    return parse_point_set_text(read_text_file(path), path);
}

// Initial-tree argument: flat | mirror | rows:PATH | bst:PATH. The mirror
// form needs the access sequence; rows files are classified by shape; bst
// files hold the insertion order of the tree's keys.
inline InitialTree load_initial_tree_arg(const std::string& spec,
                                         const AccessSequence* seq) {
    if (spec == "flat")
        return InitialTree::flat();
    if (spec == "mirror") {
        if (!seq)
            throw ParseError("initial tree 'mirror' requires a sequence");
        return mirror(*seq);
    }
    if (spec.rfind("rows:", 0) == 0) {
        const std::string path = spec.substr(5);
        try {
            return InitialTree::from_points(load_point_set(path));
        } catch (const std::invalid_argument& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    if (spec.rfind("bst:", 0) == 0) {
        const std::string path = spec.substr(4);
        try {
            return bst_to_initial_points(bst_from_insertions(load_sequence(path)));
        } catch (const std::invalid_argument& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    throw ParseError("unknown initial tree spec: " + spec +
                     " (expected flat, mirror, rows:PATH, or bst:PATH)");
}

inline std::string format_sequence(const AccessSequence& seq) {
    std::string out;
    for (Key k : seq.keys()) {
        out += std::to_string(k);
        out += '\n';
    }
    return out;
}

// Rows print top-down: later (higher) times first, keys ascending within a
// row, matching how the plane is read.
inline std::string format_point_set(const PointSet& set) {
    std::vector<Point> pts = set.points();
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        if (a.time != b.time)
            return a.time > b.time;
        return a.key < b.key;
    });
    std::string out;
    for (const Point& p : pts) {
        out += std::to_string(p.key);
        out += ' ';
        out += std::to_string(p.time);
        out += '\n';
    }
    return out;
}

inline std::string format_trace(const ExecutionTrace& trace) {
    std::string out = "n=" + std::to_string(trace.n) +
                      " touched=" + std::to_string(trace.touched_total) +
                      " cost=" + std::to_string(trace.cost) + "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        out += std::to_string(i + 1);
        out += '\t';
        out += std::to_string(step.accessed);
        out += '\t';
        for (std::size_t t = 0; t < step.touched.size(); ++t) {
            if (t)
                out += ',';
            out += std::to_string(step.touched[t]);
        }
        out += '\n';
    }
    return out;
}

inline std::string trace_summary_line(const ExecutionTrace& trace) {
    return "n=" + std::to_string(trace.n) +
           " touched=" + std::to_string(trace.touched_total) +
           " cost=" + std::to_string(trace.cost);
}

inline std::string format_lemma_line(const LemmaCheckResult& result) {
    return "n=" + std::to_string(result.n) +
           " case=" + std::to_string(result.case_id) +
           " equal=" + (result.equal_traces ? "true" : "false") +
           " cost=" + std::to_string(result.cost_flat);
}

inline std::string format_scaling_csv(const std::vector<ScalingRow>& rows) {
    std::string out = "family,n,seed,initial_tree,cost,cost_per_n\n";
    for (const ScalingRow& row : rows) {
        out += family_name(row.family);
        out += ',';
        out += std::to_string(row.n);
        out += ',';
        out += std::to_string(row.seed);
        out += ',';
        out += scaling_init_name(row.initial_tree);
        out += ',';
        out += std::to_string(row.cost);
        out += ',';
        out += format_cost_per_n(row);
        out += '\n';
    }
    return out;
}

// Sizes argument: comma-separated entries, each either an integer or a
// doubling range "A..B" (A, 2A, 4A, ... up to B inclusive).
inline std::vector<std::int64_t> parse_sizes(const std::string& text) {
    std::vector<std::int64_t> sizes;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            throw ParseError("sizes: empty entry");
        const std::size_t dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                std::size_t used = 0;
                const std::int64_t v = std::stoll(item, &used);
                if (used != item.size() || v < 1)
                    throw ParseError("");
                sizes.push_back(v);
            } else {
                std::size_t used_a = 0, used_b = 0;
                const std::string a_text = item.substr(0, dots);
                const std::string b_text = item.substr(dots + 2);
                const std::int64_t a = std::stoll(a_text, &used_a);
                const std::int64_t b = std::stoll(b_text, &used_b);
                if (used_a != a_text.size() || used_b != b_text.size() ||
                    a < 1 || b < a)
                    throw ParseError("");
                for (std::int64_t v = a; v <= b; v *= 2)
                    sizes.push_back(v);
            }
        } catch (const std::exception&) {
            throw ParseError("sizes: bad entry '" + item +
                             "' (expected N or A..B)");
        }
    }
    if (sizes.empty())
        throw ParseError("sizes: no entries");
    return sizes;
}

}  // namespace arboral
