#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/errors.hpp"
#include "synkit/word.hpp"

namespace synkit {

inline constexpr std::size_t kDefaultSubsetLimit = 1'000'000;

/// Deterministic automaton whose states are subsets of a base DFA's states,
/// with every singleton merged into one absorbing sink. The sink is always
/// state 0; non-sink states carry their subset as a bit mask and have
/// cardinality >= 2.
struct SubsetDfa {
    int base_state_count = 0;
    std::vector<std::uint64_t> masks; // masks[0] == 0 stands for the sink
    std::vector<std::array<int, 2>> delta;
    int sink = 0;
    std::optional<int> initial;

    int state_count() const noexcept { return static_cast<int>(delta.size()); }

    std::string label(int id) const {
        if (id == sink) return "s";
        std::string out = "{";
        bool first = true;
        for (int q = 0; q < base_state_count; ++q) {
            if (masks[static_cast<std::size_t>(id)] >> q & 1) {
                if (!first) out += ',';
                out += std::to_string(q);
                first = false;
            }
        }
        return out + "}";
    }

    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(masks.size());
        for (int id = 0; id < state_count(); ++id) out.push_back(label(id));
        return out;
    }

    /// Re-encoding as an ordinary acceptor: final state is the sink, initial
    /// is the designated start subset when present.
    Dfa to_acceptor() const { return Dfa(delta, initial, std::vector<int>{sink}); }
};

namespace detail {

inline void require_subset_capable(const Dfa& d) {
    if (d.state_count() > 64)
        throw std::invalid_argument("subset machinery supports at most 64 base states, got " +
                                    std::to_string(d.state_count()));
}

inline std::uint64_t subset_image(const Dfa& d, std::uint64_t mask, Letter x) {
    std::uint64_t out = 0;
    while (mask != 0) {
        const int q = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << d.next(q, x);
    }
    return out;
}

} // namespace detail

/// The modified power automaton: subsets reachable from the full state set,
/// singletons merged into the sink. Recognizes the synchronizing language
/// with the full set as initial state and the sink as the only final state.
inline SubsetDfa power_automaton(const Dfa& d, std::size_t subset_limit = kDefaultSubsetLimit) {
    detail::require_subset_capable(d);
    const int m = d.state_count();
    const std::uint64_t full =
        (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);

    SubsetDfa out;
    out.base_state_count = m;
    out.masks.push_back(0); // sink
    out.delta.push_back({0, 0});

    if (m == 1) {
        out.initial = 0;
        return out;
    }

    std::unordered_map<std::uint64_t, int> ids;
    std::deque<int> queue;
    auto intern = [&](std::uint64_t mask) {
        if (std::popcount(mask) == 1) return 0;
        auto [it, inserted] = ids.try_emplace(mask, out.state_count());
        if (inserted) {
            if (out.masks.size() > subset_limit)
                throw LimitError("power automaton exceeded the subset cap of " +
                                     std::to_string(subset_limit) + " states",
                                 subset_limit);
            out.masks.push_back(mask);
            out.delta.push_back({-1, -1});
            queue.push_back(it->second);
        }
        return it->second;
    };

    out.initial = intern(full);
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        const std::uint64_t mask = out.masks[static_cast<std::size_t>(id)];
        for (Letter x : {Letter::a, Letter::b})
            out.delta[static_cast<std::size_t>(id)][index_of(x)] =
                intern(detail::subset_image(d, mask, x));
    }
    return out;
}

/// The pair automaton: every 2-element subset of the base states plus the
/// sink. Pairs are numbered 1.. in lexicographic order of (min, max).
inline SubsetDfa pair_automaton(const Dfa& d) {
    detail::require_subset_capable(d);
    const int m = d.state_count();

    SubsetDfa out;
    out.base_state_count = m;
    out.masks.push_back(0);
    out.delta.push_back({0, 0});

    std::unordered_map<std::uint64_t, int> ids;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const std::uint64_t mask = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
            ids.emplace(mask, out.state_count());
            out.masks.push_back(mask);
            out.delta.push_back({-1, -1});
        }
    for (int id = 1; id < out.state_count(); ++id) {
        for (Letter x : {Letter::a, Letter::b}) {
            const std::uint64_t image =
                detail::subset_image(d, out.masks[static_cast<std::size_t>(id)], x);
            out.delta[static_cast<std::size_t>(id)][index_of(x)] =
                (std::popcount(image) == 1) ? 0 : ids.at(image);
        }
    }
    return out;
}

/// Pairwise-collapse criterion: synchronizing iff every 2-element subset can
/// reach the sink in the pair automaton.
inline bool is_synchronizing(const Dfa& d) {
    const SubsetDfa pairs = pair_automaton(d);
    const int k = pairs.state_count();
    std::vector<std::vector<int>> reverse(static_cast<std::size_t>(k));
    for (int id = 0; id < k; ++id)
        for (int x = 0; x < 2; ++x)
            reverse[static_cast<std::size_t>(pairs.delta[static_cast<std::size_t>(id)][x])]
                .push_back(id);
    std::vector<char> reached(static_cast<std::size_t>(k), 0);
    std::deque<int> queue{pairs.sink};
    reached[static_cast<std::size_t>(pairs.sink)] = 1;
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        for (int prev : reverse[static_cast<std::size_t>(id)])
            if (!reached[static_cast<std::size_t>(prev)]) {
                reached[static_cast<std::size_t>(prev)] = 1;
                queue.push_back(prev);
            }
    }
    for (int id = 0; id < k; ++id)
        if (!reached[static_cast<std::size_t>(id)]) return false;
    return true;
}

/// The power automaton re-encoded as an acceptor of the synchronizing
/// language.
inline Dfa syn_acceptor(const Dfa& d, std::size_t subset_limit = kDefaultSubsetLimit) {
    return power_automaton(d, subset_limit).to_acceptor();
}

struct LanguagesEqualResult {
    bool equal = false;
    /// A shortest word in the symmetric difference, lexicographically least
    /// among those; present iff not equal. May be empty (the empty word).
    std::optional<Letters> counterexample;
};

/// Product-automaton reachability over two complete acceptors. Breadth-first
/// with letter a expanded before b, so the counterexample is deterministic.
inline LanguagesEqualResult languages_equal(const Dfa& d1, const Dfa& d2) {
    if (!d1.is_acceptor() || !d2.is_acceptor())
        throw std::invalid_argument("languages_equal needs acceptors with initial and finals");
    const int m2 = d2.state_count();
    const auto encode = [m2](int q1, int q2) { return q1 * m2 + q2; };
    const int total = d1.state_count() * m2;
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::vector<int> parent(static_cast<std::size_t>(total), -1);
    std::vector<Letter> via(static_cast<std::size_t>(total), Letter::a);

    const auto reconstruct = [&](int id) {
        Letters path;
        while (parent[static_cast<std::size_t>(id)] != -1) {
            path.push_back(via[static_cast<std::size_t>(id)]);
            id = parent[static_cast<std::size_t>(id)];
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    std::deque<std::pair<int, int>> queue;
    const int start = encode(*d1.initial(), *d2.initial());
    seen[static_cast<std::size_t>(start)] = 1;
    if (d1.is_final(*d1.initial()) != d2.is_final(*d2.initial()))
        return {false, Letters{}};
    queue.emplace_back(*d1.initial(), *d2.initial());

    while (!queue.empty()) {
        const auto [q1, q2] = queue.front();
        queue.pop_front();
        for (Letter x : {Letter::a, Letter::b}) {
            const int n1 = d1.next(q1, x);
            const int n2 = d2.next(q2, x);
            const int id = encode(n1, n2);
            if (seen[static_cast<std::size_t>(id)]) continue;
            seen[static_cast<std::size_t>(id)] = 1;
            parent[static_cast<std::size_t>(id)] = encode(q1, q2);
            via[static_cast<std::size_t>(id)] = x;
            if (d1.is_final(n1) != d2.is_final(n2)) return {false, reconstruct(id)};
            queue.emplace_back(n1, n2);
        }
    }
    return {true, std::nullopt};
}

/// A minimum-length word mapping the full state set to a singleton, ties
/// broken lexicographically (a < b); absent iff the automaton is not
/// synchronizing. The result is the empty sequence only for a 1-state base.
inline std::optional<Letters> shortest_sync_word(const Dfa& d,
                                                 std::size_t subset_limit = kDefaultSubsetLimit) {
    const SubsetDfa power = power_automaton(d, subset_limit);
    const int k = power.state_count();
    const int start = *power.initial;
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    std::vector<int> parent(static_cast<std::size_t>(k), -1);
    std::vector<Letter> via(static_cast<std::size_t>(k), Letter::a);
    std::deque<int> queue{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
        const int id = queue.front();
        queue.pop_front();
        if (id == power.sink) {
            Letters path;
            int cur = id;
            while (parent[static_cast<std::size_t>(cur)] != -1) {
                path.push_back(via[static_cast<std::size_t>(cur)]);
                cur = parent[static_cast<std::size_t>(cur)];
            }
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (Letter x : {Letter::a, Letter::b}) {
            const int next = power.delta[static_cast<std::size_t>(id)][index_of(x)];
            if (seen[static_cast<std::size_t>(next)]) continue;
            seen[static_cast<std::size_t>(next)] = 1;
            parent[static_cast<std::size_t>(next)] = id;
            via[static_cast<std::size_t>(next)] = x;
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

} // namespace synkit
