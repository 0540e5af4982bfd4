#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/errors.hpp"
#include "synkit/ideal.hpp"
#include "synkit/subset.hpp"
#include "synkit/word.hpp"

namespace synkit {

inline constexpr int kDefaultEnumerationCap = 4;

struct SearchOptions {
    bool strongly_connected_only = false;
    int jobs = 1;
    std::size_t subset_limit = kDefaultSubsetLimit;
    /// Largest state count the exhaustive enumeration will accept; the
    /// candidate count is k^{2k}, so this is deliberately small.
    int enumeration_cap = kDefaultEnumerationCap;
};

namespace detail {

inline std::uint64_t dfa_count(int k) {
    std::uint64_t count = 1;
    for (int digit = 0; digit < 2 * k; ++digit) count *= static_cast<std::uint64_t>(k);
    return count;
}

inline void require_enumerable(int k, int cap) {
    if (k < 1) throw std::invalid_argument("state budget must be at least 1");
    if (k > cap)
        throw LimitError("refusing to enumerate " + std::to_string(k) + "-state DFAs: " +
                             std::to_string(dfa_count(k)) +
                             " delta tables exceed the enumeration cap of " +
                             std::to_string(cap) + " states",
                         static_cast<std::size_t>(cap));
}

} // namespace detail

struct EnumerationFilter {
    bool synchronizing_only = false;
    bool strongly_connected_only = false;
};

/// Streams every complete binary DFA on k states exactly once, in
/// lexicographic order of the flattened delta table (row 0 letter a is the
/// most significant digit). Filters are applied after counting a candidate
/// as examined.
class DfaEnumerator {
public:
    explicit DfaEnumerator(int k, EnumerationFilter filter = {},
                           int cap = kDefaultEnumerationCap)
        : k_(k), filter_(filter), digits_(static_cast<std::size_t>(2 * k), 0) {
        detail::require_enumerable(k, cap);
    }

    /// Restricts the stream to tables whose first row is (first_a, first_b);
    /// used to partition work across threads.
    void fix_first_row(int first_a, int first_b) {
        digits_[0] = first_a;
        digits_[1] = first_b;
        fixed_prefix_ = 2;
    }

    std::optional<Dfa> next() {
        while (!done_) {
            Dfa candidate = materialize();
            advance();
            ++examined_;
            if (filter_.strongly_connected_only && !is_strongly_connected(candidate)) continue;
            if (filter_.synchronizing_only && !is_synchronizing(candidate)) continue;
            return candidate;
        }
        return std::nullopt;
    }

    std::uint64_t examined() const noexcept { return examined_; }

private:
    Dfa materialize() const {
        std::vector<std::array<int, 2>> delta(static_cast<std::size_t>(k_));
        for (int q = 0; q < k_; ++q)
            delta[static_cast<std::size_t>(q)] = {digits_[static_cast<std::size_t>(2 * q)],
                                                  digits_[static_cast<std::size_t>(2 * q + 1)]};
        return Dfa(std::move(delta));
    }

    void advance() {
        for (int at = static_cast<int>(digits_.size()) - 1; at >= fixed_prefix_; --at) {
            if (++digits_[static_cast<std::size_t>(at)] < k_) return;
            digits_[static_cast<std::size_t>(at)] = 0;
        }
        done_ = true;
    }

    int k_;
    EnumerationFilter filter_;
    std::vector<int> digits_;
    int fixed_prefix_ = 0;
    bool done_ = false;
    std::uint64_t examined_ = 0;
};

/// Outcome of an exhaustive sweep for synchronizing automata presenting the
/// ideal of w.
struct SearchReport {
    std::string word;
    int max_states = 0;
    bool strongly_connected_only = false;
    std::uint64_t candidates_examined = 0;
    std::uint64_t limit_errors = 0;
    /// Pairwise non-isomorphic presenters at the smallest successful state
    /// count, in enumeration order (so each class is represented by its
    /// lexicographically least table).
    std::vector<Dfa> presenters;
    std::optional<int> rc_established;
};

namespace detail {

struct ChunkResult {
    std::uint64_t examined = 0;
    std::uint64_t limit_errors = 0;
    std::vector<Dfa> presenters;
};

// Tests candidates with the first delta row fixed. Filters run cheapest
// first: strong connectivity, then the pairwise collapse test, then full
// language equality against the minimal acceptor.
inline ChunkResult search_chunk(int k, int first_a, int first_b, const Dfa& minimal,
                                const SearchOptions& options) {
    ChunkResult result;
    DfaEnumerator stream(k, {}, options.enumeration_cap);
    stream.fix_first_row(first_a, first_b);
    while (auto candidate = stream.next()) {
        if (options.strongly_connected_only && !is_strongly_connected(*candidate)) continue;
        if (!is_synchronizing(*candidate)) continue;
        try {
            if (languages_equal(syn_acceptor(*candidate, options.subset_limit), minimal).equal)
                result.presenters.push_back(std::move(*candidate));
        } catch (const LimitError&) {
            ++result.limit_errors;
        }
    }
    result.examined = stream.examined();
    return result;
}

inline std::vector<Dfa> dedup_isomorphic(std::vector<Dfa> presenters) {
    std::vector<Dfa> kept;
    for (auto& candidate : presenters) {
        bool fresh = true;
        for (const auto& repr : kept)
            if (are_isomorphic(repr, candidate)) {
                fresh = false;
                break;
            }
        if (fresh) kept.push_back(std::move(candidate));
    }
    return kept;
}

// All presenters among the k-state candidates, up to isomorphism. Chunks
// share nothing mutable; results merge in first-row order, which keeps the
// outcome identical to a sequential sweep.
inline ChunkResult search_at(const Word& w, int k, const SearchOptions& options) {
    const Dfa minimal = minimal_ideal_dfa(w);
    std::vector<std::pair<int, int>> rows;
    for (int first_a = 0; first_a < k; ++first_a)
        for (int first_b = 0; first_b < k; ++first_b) rows.emplace_back(first_a, first_b);

    std::vector<ChunkResult> chunks(rows.size());
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t at = 0; at < rows.size(); ++at)
            chunks[at] = search_chunk(k, rows[at].first, rows[at].second, minimal, options);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int worker = 0; worker < jobs; ++worker)
            workers.emplace_back([&, worker] {
                for (std::size_t at = static_cast<std::size_t>(worker); at < rows.size();
                     at += static_cast<std::size_t>(jobs))
                    chunks[at] =
                        search_chunk(k, rows[at].first, rows[at].second, minimal, options);
            });
        for (auto& worker : workers) worker.join();
    }

    ChunkResult merged;
    for (auto& chunk : chunks) {
        merged.examined += chunk.examined;
        merged.limit_errors += chunk.limit_errors;
        for (auto& presenter : chunk.presenters)
            merged.presenters.push_back(std::move(presenter));
    }
    merged.presenters = dedup_isomorphic(std::move(merged.presenters));
    return merged;
}

} // namespace detail

/// All k-state presenters of the ideal of w, deduplicated up to isomorphism.
inline std::vector<Dfa> find_msas(const Word& w, int k, const SearchOptions& options = {}) {
    detail::require_enumerable(k, options.enumeration_cap);
    return detail::search_at(w, k, options).presenters;
}

/// Sweeps state budgets 1..k_max and reports the smallest budget admitting a
/// presenter, together with all presenters at that budget.
inline SearchReport reset_complexity(const Word& w, int k_max,
                                     const SearchOptions& options = {}) {
    detail::require_enumerable(k_max, options.enumeration_cap);
    SearchReport report;
    report.word = w.str();
    report.max_states = k_max;
    report.strongly_connected_only = options.strongly_connected_only;
    for (int k = 1; k <= k_max; ++k) {
        detail::ChunkResult found = detail::search_at(w, k, options);
        report.candidates_examined += found.examined;
        report.limit_errors += found.limit_errors;
        if (!found.presenters.empty()) {
            report.presenters = std::move(found.presenters);
            report.rc_established = k;
            break;
        }
    }
    return report;
}

} // namespace synkit
