#pragma once

// Access sequences: keys 1..n accessed at times 1..n. The universe size is
// the sequence length; every key must fall in [1, n]. Permutations are the
// default mode, but the type itself also carries sequences with repeats.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arboral/geometry.hpp"

namespace arboral {

class AccessSequence {
public:
    AccessSequence() = default;

    explicit AccessSequence(std::vector<Key> keys) : keys_(std::move(keys)) {
        const auto n = static_cast<Key>(keys_.size());
        for (Key k : keys_)
            if (k < 1 || k > n)
                throw std::invalid_argument(
                    "AccessSequence: key outside [1, n]");
    }

    AccessSequence(std::initializer_list<Key> keys)
        : AccessSequence(std::vector<Key>(keys)) {}

    static AccessSequence sequential(std::int64_t n) {
        std::vector<Key> keys(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i)
            keys[static_cast<std::size_t>(i)] = i + 1;
        return AccessSequence(std::move(keys));
    }

    std::int64_t n() const { return static_cast<std::int64_t>(keys_.size()); }

    // Key accessed at 1-based time i.
    Key at_time(std::int64_t i) const { return keys_.at(static_cast<std::size_t>(i - 1)); }

    const std::vector<Key>& keys() const { return keys_; }

    bool is_permutation() const {
        std::vector<bool> seen(keys_.size() + 1, false);
        for (Key k : keys_) {
            if (seen[static_cast<std::size_t>(k)])
                return false;
            seen[static_cast<std::size_t>(k)] = true;
        }
        return true;
    }

    void require_permutation(const char* what) const {
        if (!is_permutation())
            throw std::invalid_argument(std::string(what) +
                                        ": sequence must be a permutation");
    }

    friend bool operator==(const AccessSequence&, const AccessSequence&) = default;

private:
    std::vector<Key> keys_;
};

}  // namespace arboral
