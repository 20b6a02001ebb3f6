#pragma once

// Initial trees: the point set present at strictly negative times before a
// sweep begins. Flat = no points. PermutationRows = one point per time row
// -1..-n and one per key column (a permutation matrix), stored together
// with its row sequence z_1..z_n. ArbitraryPoints = any duplicate-free set
// below the t = 0 line.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arboral/geometry.hpp"

namespace arboral {

enum class InitialTreeKind { Flat, PermutationRows, ArbitraryPoints };

class InitialTree {
public:
    InitialTree() = default;

    static InitialTree flat() { return InitialTree(); }

    // z_i sits at time -i. Rows must form a permutation of [1, m].
    static InitialTree permutation_rows(std::vector<Key> rows) {
        const auto m = static_cast<Key>(rows.size());
        std::vector<bool> seen(rows.size() + 1, false);
        std::vector<Point> pts;
        pts.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Key z = rows[i];
            if (z < 1 || z > m || seen[static_cast<std::size_t>(z)])
                throw std::invalid_argument(
                    "InitialTree: rows must be a permutation of [1, n]");
            seen[static_cast<std::size_t>(z)] = true;
            pts.push_back({z, -static_cast<Time>(i) - 1});
        }
        InitialTree tree;
        tree.kind_ = InitialTreeKind::PermutationRows;
        tree.points_ = PointSet(std::move(pts));
        tree.rows_ = std::move(rows);
        return tree;
    }

    static InitialTree arbitrary(PointSet points) {
        for (const Point& p : points) {
            if (p.time >= 0)
                throw std::invalid_argument(
                    "InitialTree: points must have strictly negative times");
            if (p.key < 1)
                throw std::invalid_argument("InitialTree: key must be >= 1");
        }
        InitialTree tree;
        tree.kind_ = InitialTreeKind::ArbitraryPoints;
        tree.points_ = std::move(points);
        return tree;
    }

    // Classifies a raw point set: a full permutation matrix on rows -1..-m
    // becomes PermutationRows, anything else ArbitraryPoints.
    static InitialTree from_points(PointSet points) {
        const auto m = points.size();
        if (m == 0)
            return flat();
        std::vector<Key> rows(m, 0);
        std::vector<bool> key_seen(m + 1, false);
        bool matrix = true;
        for (const Point& p : points) {
            if (p.time >= 0)
                throw std::invalid_argument(
                    "InitialTree: points must have strictly negative times");
            Time row = -p.time;
            if (p.key < 1 || p.key > static_cast<Key>(m) || row < 1 ||
                row > static_cast<Time>(m) ||
                rows[static_cast<std::size_t>(row - 1)] != 0 ||
                key_seen[static_cast<std::size_t>(p.key)]) {
                matrix = false;
                break;
            }
            rows[static_cast<std::size_t>(row - 1)] = p.key;
            key_seen[static_cast<std::size_t>(p.key)] = true;
        }
        if (matrix)
            return permutation_rows(std::move(rows));
        return arbitrary(std::move(points));
    }

    InitialTreeKind kind() const { return kind_; }
    const PointSet& points() const { return points_; }

    // Row sequence z_1..z_n; PermutationRows only.
    const std::vector<Key>& rows() const {
        if (kind_ != InitialTreeKind::PermutationRows)
            throw std::invalid_argument(
                "InitialTree: rows() requires a permutation-rows tree");
        return rows_;
    }

    friend bool operator==(const InitialTree&, const InitialTree&) = default;

private:
    InitialTreeKind kind_ = InitialTreeKind::Flat;
    PointSet points_;
    std::vector<Key> rows_;
};

}  // namespace arboral
