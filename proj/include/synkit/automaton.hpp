#pragma once

#include <algorithm>
#include <array>
#include <cstring>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "synkit/word.hpp"

namespace synkit {

/// A complete deterministic automaton over {a, b}. States are 0..m-1.
/// Initial/final decorations are optional; they matter only when the
/// automaton is used as an acceptor.
class Dfa {
public:
    explicit Dfa(std::vector<std::array<int, 2>> delta,
                 std::optional<int> initial = std::nullopt,
                 std::optional<std::vector<int>> finals = std::nullopt)
        : delta_(std::move(delta)), initial_(initial), finals_(std::move(finals)) {
        const int m = state_count();
        if (m == 0) throw std::invalid_argument("automaton needs at least one state");
        for (const auto& row : delta_)
            for (int target : row)
                if (target < 0 || target >= m)
                    throw std::invalid_argument("transition target " + std::to_string(target) +
                                                " out of range for " + std::to_string(m) +
                                                " states");
        if (initial_ && (*initial_ < 0 || *initial_ >= m))
            throw std::invalid_argument("initial state out of range");
        if (finals_) {
            for (int q : *finals_)
                if (q < 0 || q >= m)
                    throw std::invalid_argument("final state out of range");
            std::sort(finals_->begin(), finals_->end());
            finals_->erase(std::unique(finals_->begin(), finals_->end()), finals_->end());
        }
    }

    int state_count() const noexcept { return static_cast<int>(delta_.size()); }

    int next(int q, Letter x) const { return delta_[static_cast<std::size_t>(q)][index_of(x)]; }

    const std::vector<std::array<int, 2>>& delta() const noexcept { return delta_; }

    const std::optional<int>& initial() const noexcept { return initial_; }
    const std::optional<std::vector<int>>& finals() const noexcept { return finals_; }

    bool is_final(int q) const {
        return finals_ && std::binary_search(finals_->begin(), finals_->end(), q);
    }

    bool is_acceptor() const noexcept { return initial_.has_value() && finals_.has_value(); }

    /// Same automaton with the roles of the letters exchanged.
    Dfa letter_swapped() const {
        auto rows = delta_;
        for (auto& row : rows) std::swap(row[0], row[1]);
        return Dfa(std::move(rows), initial_, finals_);
    }

    bool operator==(const Dfa&) const = default;

private:
    std::vector<std::array<int, 2>> delta_;
    std::optional<int> initial_;
    std::optional<std::vector<int>> finals_;
};

/// Runs the automaton from state q over a letter sequence.
inline int apply_letters(const Dfa& d, int q, std::span<const Letter> u) {
    if (q < 0 || q >= d.state_count())
        throw std::out_of_range("state " + std::to_string(q) + " out of range");
    for (Letter x : u) q = d.next(q, x);
    return q;
}

inline int apply_word(const Dfa& d, int q, const Word& w) {
    return apply_letters(d, q, w.letters());
}

/// True iff the acceptor accepts the letter sequence.
inline bool accepts(const Dfa& d, std::span<const Letter> u) {
    if (!d.is_acceptor())
        throw std::invalid_argument("automaton carries no initial/final decoration");
    return d.is_final(apply_letters(d, *d.initial(), u));
}

/// A total self-map of the state set; element of a transition semigroup.
struct Transformation {
    std::vector<int> image;

    int degree() const noexcept { return static_cast<int>(image.size()); }

    int apply(int q) const { return image[static_cast<std::size_t>(q)]; }

    bool operator==(const Transformation&) const = default;

    /// Canonical byte encoding of the image array, for set membership.
    std::string key() const {
        std::string out(image.size() * sizeof(int), '\0');
        std::memcpy(out.data(), image.data(), out.size());
        return out;
    }
};

/// f followed by g: (f * g)(q) = g(f(q)). Matches word concatenation,
/// so transformation_of(d, uv) == compose(transformation_of(d, u),
/// transformation_of(d, v)).
inline Transformation compose(const Transformation& f, const Transformation& g) {
    Transformation out;
    out.image.reserve(f.image.size());
    for (int q : f.image) out.image.push_back(g.apply(q));
    return out;
}

inline Transformation letter_transformation(const Dfa& d, Letter x) {
    Transformation t;
    t.image.reserve(static_cast<std::size_t>(d.state_count()));
    for (int q = 0; q < d.state_count(); ++q) t.image.push_back(d.next(q, x));
    return t;
}

inline Transformation transformation_of(const Dfa& d, const Word& w) {
    Transformation t;
    t.image.reserve(static_cast<std::size_t>(d.state_count()));
    for (int q = 0; q < d.state_count(); ++q) t.image.push_back(apply_word(d, q, w));
    return t;
}

/// Tarjan decomposition of the transition digraph. Returns one component id
/// per state; ids are assigned in completion order.
inline std::vector<int> strongly_connected_components(const Dfa& d) {
    const int m = d.state_count();
    std::vector<int> comp(m, -1), low(m, 0), num(m, -1);
    std::vector<int> scc_stack;
    std::vector<char> on_stack(m, 0);
    std::vector<std::pair<int, int>> call; // (state, next edge index)
    int counter = 0;
    int comp_count = 0;

    for (int root = 0; root < m; ++root) {
        if (num[root] != -1) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            const int v = call.back().first;
            const int edge = call.back().second;
            if (edge == 0) {
                num[v] = low[v] = counter++;
                scc_stack.push_back(v);
                on_stack[v] = 1;
            }
            if (edge < 2) {
                ++call.back().second;
                const int u = d.next(v, edge == 0 ? Letter::a : Letter::b);
                if (num[u] == -1) {
                    call.emplace_back(u, 0);
                } else if (on_stack[u]) {
                    low[v] = std::min(low[v], num[u]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        const int u = scc_stack.back();
                        scc_stack.pop_back();
                        on_stack[u] = 0;
                        comp[u] = comp_count;
                        if (u == v) break;
                    }
                    ++comp_count;
                }
                call.pop_back();
                if (!call.empty()) {
                    const int parent = call.back().first;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    return comp;
}

inline bool is_strongly_connected(const Dfa& d) {
    const auto comp = strongly_connected_components(d);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

namespace detail {

// Propagates phi along letter actions from the given seed states. Every
// successor of a mapped state must be consistently mapped; fails on a clash.
inline bool propagate_iso(const Dfa& d1, const Dfa& d2, std::vector<int>& phi,
                          std::vector<char>& used, std::vector<int> worklist) {
    while (!worklist.empty()) {
        const int p = worklist.back();
        worklist.pop_back();
        for (Letter x : {Letter::a, Letter::b}) {
            const int p2 = d1.next(p, x);
            const int q2 = d2.next(phi[p], x);
            if (phi[p2] == -1) {
                if (used[q2]) return false;
                phi[p2] = q2;
                used[q2] = 1;
                worklist.push_back(p2);
            } else if (phi[p2] != q2) {
                return false;
            }
        }
    }
    return true;
}

inline bool extend_iso(const Dfa& d1, const Dfa& d2, std::vector<int>& phi,
                       std::vector<char>& used) {
    const int m = d1.state_count();
    int unmapped = -1;
    for (int p = 0; p < m; ++p)
        if (phi[p] == -1) {
            unmapped = p;
            break;
        }
    if (unmapped == -1) return true;
    for (int q = 0; q < m; ++q) {
        if (used[q]) continue;
        auto phi_try = phi;
        auto used_try = used;
        phi_try[unmapped] = q;
        used_try[q] = 1;
        if (propagate_iso(d1, d2, phi_try, used_try, {unmapped}) &&
            extend_iso(d1, d2, phi_try, used_try)) {
            phi = std::move(phi_try);
            used = std::move(used_try);
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Searches for a state bijection commuting with both letter actions.
/// Initial/final decorations are ignored. Candidates for the image of
/// state 0 are tried in ascending order and propagated through the letter
/// actions; states unreachable from 0 fall back to backtracking.
inline std::optional<std::vector<int>> are_isomorphic(const Dfa& d1, const Dfa& d2) {
    const int m = d1.state_count();
    if (m != d2.state_count()) return std::nullopt;
    for (int c = 0; c < m; ++c) {
        std::vector<int> phi(m, -1);
        std::vector<char> used(m, 0);
        phi[0] = c;
        used[c] = 1;
        if (detail::propagate_iso(d1, d2, phi, used, {0}) &&
            detail::extend_iso(d1, d2, phi, used))
            return phi;
    }
    return std::nullopt;
}

} // namespace synkit
