#pragma once

// Deterministic SVG rendering of one execution: accesses as filled squares,
// touches as filled circles, initial points as hollow circles, a dashed
// line at t = 0, axes labeled Key and Time. Time runs upward. All
// coordinates are integers, so identical inputs give identical bytes.

#include <algorithm>
#include <cstdint>
#include <string>

#include "arboral/geometry.hpp"
#include "arboral/greedy.hpp"
#include "arboral/initial_tree.hpp"

namespace arboral {

inline std::string render_svg(const InitialTree& init, const ExecutionTrace& trace) {
    const std::int64_t n = trace.n;
    Time tmin = 0;
    for (const Point& p : init.points())
        tmin = std::min(tmin, p.time);

    const std::int64_t cell = 20;
    const std::int64_t margin = 40;
    const auto x_of = [&](Key k) { return margin + (k - 1) * cell; };
    const auto y_of = [&](Time t) { return margin + (n - t) * cell; };

    const std::int64_t width = 2 * margin + (n - 1) * cell;
    const std::int64_t height = y_of(tmin) + margin;
    const std::int64_t axis_x = margin - 10;
    const std::int64_t axis_bottom = y_of(tmin) + 10;
    const std::int64_t axis_top = y_of(static_cast<Time>(n)) - 10;
    const std::int64_t axis_right = x_of(static_cast<Key>(n)) + 10;

    std::string svg;
    const auto num = [](std::int64_t v) { return std::to_string(v); };

    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) +
           " " + num(height) + "\">\n";
    svg += "<style>\n"
           ".access{fill:#b03030;}\n"
           ".touch{fill:#3060b0;}\n"
           ".initial{fill:none;stroke:#606060;stroke-width:2;}\n"
           ".axis{stroke:#202020;stroke-width:1;}\n"
           ".zero{stroke:#202020;stroke-width:1;stroke-dasharray:5 4;}\n"
           "text{font-family:monospace;font-size:14px;fill:#202020;}\n"
           "</style>\n";

    svg += "<line class=\"axis\" x1=\"" + num(axis_x) + "\" y1=\"" + num(axis_top) +
           "\" x2=\"" + num(axis_x) + "\" y2=\"" + num(axis_bottom) + "\"/>\n";
    svg += "<line class=\"axis\" x1=\"" + num(axis_x) + "\" y1=\"" + num(axis_bottom) +
           "\" x2=\"" + num(axis_right) + "\" y2=\"" + num(axis_bottom) + "\"/>\n";
    svg += "<line class=\"zero\" x1=\"" + num(axis_x) + "\" y1=\"" + num(y_of(0)) +
           "\" x2=\"" + num(axis_right) + "\" y2=\"" + num(y_of(0)) + "\"/>\n";
    svg += "<text x=\"" + num(axis_right) + "\" y=\"" + num(axis_bottom + 28) +
           "\" text-anchor=\"end\">Key</text>\n";
    svg += "<text x=\"" + num(axis_x - 16) + "\" y=\"" + num(axis_top) +
           "\" text-anchor=\"end\" transform=\"rotate(-90 " + num(axis_x - 16) +
           " " + num(axis_top) + ")\">Time</text>\n";

    for (const Point& p : init.points())
        svg += "<circle class=\"initial\" cx=\"" + num(x_of(p.key)) + "\" cy=\"" +
               num(y_of(p.time)) + "\" r=\"6\"/>\n";

    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        const Time t = static_cast<Time>(i) + 1;
        for (Key y : step.touched)
            svg += "<circle class=\"touch\" cx=\"" + num(x_of(y)) + "\" cy=\"" +
                   num(y_of(t)) + "\" r=\"5\"/>\n";
        svg += "<rect class=\"access\" x=\"" + num(x_of(step.accessed) - 6) +
               "\" y=\"" + num(y_of(t) - 6) + "\" width=\"12\" height=\"12\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace arboral
