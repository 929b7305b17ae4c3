#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "semibandit/errors.hpp"

namespace semibandit {

// A strategy is a feasible subset of arm indices, stored strictly increasing.
// Empty strategies are not representable as plays: size is 1..N.
struct Strategy {
    std::vector<int> arms;

    bool operator==(const Strategy&) const = default;
    std::size_t size() const { return arms.size(); }
};

inline bool lex_less(const Strategy& a, const Strategy& b) {
    return std::lexicographical_compare(a.arms.begin(), a.arms.end(),
                                        b.arms.begin(), b.arms.end());
}

// Sorted, duplicate-free, in range, size in [1, max_size].
inline void validate_strategy(const Strategy& s, int arm_count, int max_size) {
    if (s.arms.empty())
        fail(Errc::invalid_strategy, "strategy is empty");
    if (static_cast<int>(s.arms.size()) > max_size)
        fail(Errc::invalid_strategy, "strategy has " + std::to_string(s.arms.size()) +
                                         " arms, limit is " + std::to_string(max_size));
    int prev = -1;
    for (int k : s.arms) {
        if (k < 0 || k >= arm_count)
            fail(Errc::invalid_strategy, "arm index " + std::to_string(k) +
                                             " out of range [0," + std::to_string(arm_count) + ")");
        if (k <= prev)
            fail(Errc::invalid_strategy, "arm indices must be strictly increasing");
        prev = k;
    }
}

// "{1,2,4,5,9}" -- the human-facing form used by the CLI.
inline std::string format_strategy(const Strategy& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.arms.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.arms[i]);
    }
    out += '}';
    return out;
}

// "1|2|4" -- the CSV cell form.
inline std::string format_strategy_csv(const Strategy& s) {
    std::string out;
    for (std::size_t i = 0; i < s.arms.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(s.arms[i]);
    }
    return out;
}

} // namespace semibandit
