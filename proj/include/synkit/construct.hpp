#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/ideal.hpp"
#include "synkit/word.hpp"

namespace synkit {

struct TransitionFix {
    int state;
    Letter letter;
    int target;

    bool operator==(const TransitionFix&) const = default;
};

/// One step of the inductive construction: the prefix w[1..i] it handles,
/// the pair of output states associated with that prefix (the sink for the
/// whole word), the transitions fixed at this step, and the lookup that
/// resolved the complementary letter: the prefix j the minimal automaton
/// falls back to, together with its associated pair.
struct TraceStep {
    int prefix_len = 0;
    int p = -1;
    int q = -1;
    bool sink = false;
    int fallback_prefix = -1;
    int fallback_p = -1;
    int fallback_q = -1;
    std::vector<TransitionFix> fixed;

    bool operator==(const TraceStep&) const = default;
};

struct ConstructionTrace {
    std::vector<TraceStep> steps;
    /// First-step wiring: 1 is the standard three-state wiring, 0 the
    /// explicit 2-state table used for one-letter words.
    int variant = 1;
    /// True when the input started with b and the construction ran on the
    /// complemented word.
    bool swapped = false;

    std::string pair_sequence() const {
        std::string out;
        for (const auto& step : steps) {
            if (!out.empty()) out += ',';
            out += step.sink ? "s"
                             : "(" + std::to_string(step.p) + "," + std::to_string(step.q) + ")";
        }
        return out;
    }
};

struct ConstructionResult {
    Dfa automaton;
    ConstructionTrace trace;
};

namespace detail {

inline std::string dump_partial_table(const std::vector<std::array<int, 2>>& delta) {
    std::ostringstream out;
    for (std::size_t q = 0; q < delta.size(); ++q)
        out << "  " << q << ": a->" << delta[q][0] << " b->" << delta[q][1] << "\n";
    return out.str();
}

// Rebuilds the per-step trace from a finished table: step 1 fixes the rows of
// states 0 and 1, step i >= 2 fixes the row of state i, and the pair for the
// prefix w[1..i] is (i+1, q_i) with q_i = q_{i-1} . w[i]. The final prefix is
// the sink.
inline ConstructionTrace replay_trace(const Dfa& d, const Word& w, int variant) {
    const int n = w.size();
    ConstructionTrace trace;
    trace.variant = variant;
    trace.steps.push_back({0, 0, 1, false, {}});
    int q_prev = 1;
    for (int i = 1; i <= n; ++i) {
        TraceStep step;
        step.prefix_len = i;
        const Letter advance = w[i - 1];
        if (i == 1) {
            for (int state : {0, 1})
                for (Letter x : {Letter::a, Letter::b})
                    step.fixed.push_back({state, x, d.next(state, x)});
        } else {
            step.fixed.push_back({i, advance, d.next(i, advance)});
            step.fixed.push_back({i, complement(advance), d.next(i, complement(advance))});
        }
        const int q_here = d.next(q_prev, advance);
        if (i == n) {
            step.sink = true;
        } else {
            step.p = i + 1;
            step.q = q_here;
        }
        q_prev = q_here;
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

// Explicit 2-state table for w = a: the letter a collapses everything to
// state 0, b swaps the two states. (w = b arrives letter-swapped.)
inline Dfa unit_word_table() { return Dfa({{0, 1}, {0, 0}}); }

// Explicit table for w = a^n (n >= 2); the inductive step reproduces it, but
// the case is kept on its own path because the dichotomy argument below
// assumes w contains b.
inline Dfa power_of_a_table(int n) {
    std::vector<std::array<int, 2>> delta(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        int a_target;
        if (i == 0)
            a_target = 2;
        else if (i == 1 || i == n)
            a_target = 1;
        else
            a_target = i + 1;
        const int b_target = (i == 1) ? 0 : 1;
        delta[static_cast<std::size_t>(i)] = {a_target, b_target};
    }
    return Dfa(std::move(delta));
}

// The inductive construction proper, for a-initial words of length >= 2.
// Invariant: after handling prefix length i, the pair automaton of the
// partial table contains a copy of the minimal ideal automaton restricted to
// prefixes 0..i, with prefix i sitting on the pair (p[i], q[i]).
inline Dfa construct_inductive(const Word& w) {
    const int n = w.size();
    const Dfa minimal = minimal_ideal_dfa(w);
    std::vector<std::array<int, 2>> delta(static_cast<std::size_t>(n) + 1, {-1, -1});
    std::vector<int> p(static_cast<std::size_t>(n), -1), q(static_cast<std::size_t>(n), -1);

    // First step: wire states 0 and 1 so that {0,1} is fixed by b and maps
    // to {1,2} under a.
    delta[0] = {2, 1};
    delta[1] = {1, 0};
    p[0] = 0;
    q[0] = 1;
    p[1] = 2;
    q[1] = 1; // q_1 = q_0 . w[1], and w[1] = a fixes state 1

    const auto step_target = [&](int i, Letter c) {
        // The pair (i, q_{i-1}) must map under c onto the pair associated
        // with the prefix j = (i-1) . c of the minimal automaton.
        const int j = minimal.next(i - 1, c);
        const int t = delta[static_cast<std::size_t>(q[static_cast<std::size_t>(i - 1)])]
                           [index_of(c)];
        if (t == q[static_cast<std::size_t>(j)]) return p[static_cast<std::size_t>(j)];
        if (t == p[static_cast<std::size_t>(j)]) return q[static_cast<std::size_t>(j)];
        std::string pairs;
        for (int at = 0; at < i; ++at)
            pairs += " (" + std::to_string(p[static_cast<std::size_t>(at)]) + "," +
                     std::to_string(q[static_cast<std::size_t>(at)]) + ")";
        throw std::logic_error(
            "pair dichotomy violated at step " + std::to_string(i) + " of word " + w.str() +
            ": q_{i-1}." + to_char(c) + " = " + std::to_string(t) + " matches neither side of (" +
            std::to_string(p[static_cast<std::size_t>(j)]) + "," +
            std::to_string(q[static_cast<std::size_t>(j)]) + ")\npairs so far:" + pairs +
            "\npartial table:\n" + dump_partial_table(delta));
    };

    for (int i = 2; i < n; ++i) {
        const Letter advance = w[i - 1];
        delta[static_cast<std::size_t>(i)][index_of(advance)] = i + 1;
        p[static_cast<std::size_t>(i)] = i + 1;
        q[static_cast<std::size_t>(i)] =
            delta[static_cast<std::size_t>(q[static_cast<std::size_t>(i - 1)])]
                 [index_of(advance)];
        delta[static_cast<std::size_t>(i)][index_of(complement(advance))] =
            step_target(i, complement(advance));
    }

    // Last step: send state n to q_{n-1} . w[n] so the pair for the full
    // word collapses into the sink.
    const Letter last = w[n - 1];
    delta[static_cast<std::size_t>(n)][index_of(last)] =
        delta[static_cast<std::size_t>(q[static_cast<std::size_t>(n - 1)])][index_of(last)];
    delta[static_cast<std::size_t>(n)][index_of(complement(last))] =
        step_target(n, complement(last));

    return Dfa(std::move(delta));
}

} // namespace detail

/// Builds a strongly connected synchronizing automaton with |w|+1 states
/// whose synchronizing language is exactly the ideal generated by w.
/// Words starting with b are handled by constructing for the complemented
/// word and swapping the letters back.
inline ConstructionResult construct_sc(const Word& w) {
    if (w[0] == Letter::b) {
        ConstructionResult result = construct_sc(w.swapped());
        Dfa swapped_back = result.automaton.letter_swapped();
        ConstructionTrace trace = std::move(result.trace);
        trace.swapped = true;
        for (auto& step : trace.steps)
            for (auto& fix : step.fixed) fix.letter = complement(fix.letter);
        return {std::move(swapped_back), std::move(trace)};
    }

    const int n = w.size();
    if (n == 1) {
        Dfa d = detail::unit_word_table();
        return {d, detail::replay_trace(d, w, 0)};
    }
    const bool all_a = std::all_of(w.letters().begin(), w.letters().end(),
                                   [](Letter x) { return x == Letter::a; });
    Dfa d = all_a ? detail::power_of_a_table(n) : detail::construct_inductive(w);
    return {d, detail::replay_trace(d, w, 1)};
}

/// The first of the two explicit (n+1)-state families with synchronizing
/// language generated by a^{n-1}b: a cycles 1..n with loops at 0 and n,
/// b sends the cycle interior to 0 and swaps 0 with 1.
inline Dfa family_a(int n) {
    if (n < 2) throw std::invalid_argument("family A needs n >= 2");
    std::vector<std::array<int, 2>> delta(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const int a_target = (i == 0) ? 0 : (i == n ? n : i + 1);
        const int b_target = (i == 0 || i == n) ? 1 : 0;
        delta[static_cast<std::size_t>(i)] = {a_target, b_target};
    }
    return Dfa(std::move(delta));
}

/// The second family, not isomorphic to family_a(n) for any valid n; its
/// shape depends on the parity of n.
inline Dfa family_b(int n) {
    if (n < 3) throw std::invalid_argument("family B needs n >= 3");
    std::vector<std::array<int, 2>> delta(static_cast<std::size_t>(n) + 1);
    if (n % 2 == 1) {
        for (int i = 0; i <= n; ++i) {
            const int a_target = (i == n) ? n - 1 : i + 1;
            const int b_target = (i % 2 == 1 && i != n) ? 0 : 1;
            delta[static_cast<std::size_t>(i)] = {a_target, b_target};
        }
    } else {
        for (int i = 0; i <= n; ++i) {
            const int a_target = (i == 1 || i == n) ? 0 : i + 1;
            const int b_target = (i <= 1) ? 2 : 0;
            delta[static_cast<std::size_t>(i)] = {a_target, b_target};
        }
    }
    return Dfa(std::move(delta));
}

} // namespace synkit
