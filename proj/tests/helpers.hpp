#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <tuple>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/word.hpp"

namespace synkit::testing {

inline Dfa random_dfa(std::mt19937& rng, int m, bool with_decorations = false) {
    std::uniform_int_distribution<int> state(0, m - 1);
    std::vector<std::array<int, 2>> delta(static_cast<std::size_t>(m));
    for (auto& row : delta) row = {state(rng), state(rng)};
    if (!with_decorations) return Dfa(std::move(delta));
    std::vector<int> finals;
    for (int q = 0; q < m; ++q)
        if (rng() % 2 == 0) finals.push_back(q);
    return Dfa(std::move(delta), state(rng), std::move(finals));
}

inline Word random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    const int n = len(rng);
    Letters letters;
    letters.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        letters.push_back(rng() % 2 == 0 ? Letter::a : Letter::b);
    return Word(std::move(letters));
}

/// Every binary word of the given length, in lexicographic order (a < b).
inline std::vector<Word> all_words_of_length(int n) {
    std::vector<Word> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Letters letters(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            letters[static_cast<std::size_t>(i)] =
                (bits >> (n - 1 - i) & 1) ? Letter::b : Letter::a;
        out.emplace_back(std::move(letters));
    }
    return out;
}

inline std::vector<Word> all_words_up_to(int max_len) {
    std::vector<Word> out;
    for (int n = 1; n <= max_len; ++n)
        for (auto& w : all_words_of_length(n)) out.push_back(std::move(w));
    return out;
}

/// Direct check that a letter sequence maps all states to one state.
inline bool synchronizes(const Dfa& d, std::span<const Letter> u) {
    const int target = apply_letters(d, 0, u);
    for (int q = 1; q < d.state_count(); ++q)
        if (apply_letters(d, q, u) != target) return false;
    return true;
}

/// Moore partition refinement. Returns the number of equivalence classes of
/// the acceptor; the acceptor is minimal iff this equals the state count and
/// every state is reachable.
inline int distinguishable_classes(const Dfa& d) {
    const int m = d.state_count();
    std::vector<int> cls(static_cast<std::size_t>(m));
    for (int q = 0; q < m; ++q) cls[static_cast<std::size_t>(q)] = d.is_final(q) ? 1 : 0;
    while (true) {
        std::map<std::tuple<int, int, int>, int> renumber;
        std::vector<int> next(static_cast<std::size_t>(m));
        for (int q = 0; q < m; ++q) {
            const auto signature =
                std::make_tuple(cls[static_cast<std::size_t>(q)],
                                cls[static_cast<std::size_t>(d.next(q, Letter::a))],
                                cls[static_cast<std::size_t>(d.next(q, Letter::b))]);
            auto [it, inserted] = renumber.try_emplace(signature, static_cast<int>(renumber.size()));
            next[static_cast<std::size_t>(q)] = it->second;
        }
        const bool stable = std::equal(cls.begin(), cls.end(), next.begin());
        cls = std::move(next);
        if (stable) return static_cast<int>(*std::max_element(cls.begin(), cls.end())) + 1;
    }
}

inline bool all_states_reachable(const Dfa& d, int from) {
    std::vector<char> seen(static_cast<std::size_t>(d.state_count()), 0);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!stack.empty()) {
        const int q = stack.back();
        stack.pop_back();
        for (Letter x : {Letter::a, Letter::b}) {
            const int next = d.next(q, x);
            if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = 1;
                stack.push_back(next);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

} // namespace synkit::testing
