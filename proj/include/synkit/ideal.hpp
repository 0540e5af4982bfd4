#pragma once

#include <span>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/word.hpp"

namespace synkit {

/// border[i-1] is the length of the longest proper prefix of w[1..i] that is
/// also a suffix of w[1..i]. Classic failure-function computation, O(n).
inline std::vector<int> border_table(const Word& w) {
    const int n = w.size();
    std::vector<int> border(static_cast<std::size_t>(n), 0);
    int k = 0;
    for (int i = 1; i < n; ++i) {
        while (k > 0 && w[k] != w[i]) k = border[static_cast<std::size_t>(k - 1)];
        if (w[k] == w[i]) ++k;
        border[static_cast<std::size_t>(i)] = k;
    }
    return border;
}

/// The minimal acceptor of the words containing w as a factor. States are
/// prefix lengths 0..n; state i advances to i+1 on the next letter of w and
/// falls back along the border table on the other letter; state n is a sink.
/// Initial state 0, unique final state n.
inline Dfa minimal_ideal_dfa(const Word& w) {
    const int n = w.size();
    const auto border = border_table(w);
    std::vector<std::array<int, 2>> delta(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        for (Letter x : {Letter::a, Letter::b}) {
            int target;
            if (w[i] == x) {
                target = i + 1;
            } else {
                int k = i;
                while (k > 0 && w[k] != x) k = border[static_cast<std::size_t>(k - 1)];
                target = (w[k] == x) ? k + 1 : 0;
            }
            delta[static_cast<std::size_t>(i)][index_of(x)] = target;
        }
    }
    delta[static_cast<std::size_t>(n)] = {n, n};
    return Dfa(std::move(delta), 0, std::vector<int>{n});
}

/// Naive factor scan, independent of minimal_ideal_dfa; serves as the
/// membership oracle in tests.
inline bool contains_factor(std::span<const Letter> u, const Word& w) {
    const int n = w.size();
    const int len = static_cast<int>(u.size());
    for (int start = 0; start + n <= len; ++start) {
        bool match = true;
        for (int i = 0; i < n; ++i) {
            if (u[static_cast<std::size_t>(start + i)] != w[i]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

} // namespace synkit
