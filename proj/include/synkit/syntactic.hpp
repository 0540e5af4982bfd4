#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "synkit/automaton.hpp"
#include "synkit/errors.hpp"
#include "synkit/ideal.hpp"
#include "synkit/subset.hpp"
#include "synkit/word.hpp"

namespace synkit {

inline constexpr std::size_t kDefaultClosureLimit = 2'000'000;

struct SemigroupElement {
    Transformation map;
    Letters witness; // shortest by breadth-first order, ties resolved a < b
};

/// The set of transformations induced by nonempty words, closed under
/// right-composition with the two letter generators.
struct SemigroupClosure {
    std::vector<SemigroupElement> elements; // in breadth-first discovery order
    int generator_count = 2;

    std::size_t size() const noexcept { return elements.size(); }
};

/// Breadth-first closure of the two letter transformations under
/// composition, deduplicated by image array.
inline SemigroupClosure transition_semigroup(const Dfa& d,
                                             std::size_t closure_limit = kDefaultClosureLimit) {
    const std::array<Transformation, 2> generators = {
        letter_transformation(d, Letter::a), letter_transformation(d, Letter::b)};

    SemigroupClosure closure;
    std::unordered_set<std::string> seen;
    std::deque<std::size_t> queue;

    const auto intern = [&](Transformation t, Letters witness) {
        if (!seen.insert(t.key()).second) return;
        if (closure.elements.size() >= closure_limit)
            throw LimitError("transition semigroup exceeded the closure cap of " +
                                 std::to_string(closure_limit) + " elements",
                             closure_limit);
        queue.push_back(closure.elements.size());
        closure.elements.push_back({std::move(t), std::move(witness)});
    };

    for (Letter x : {Letter::a, Letter::b}) intern(generators[index_of(x)], Letters{x});
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        for (Letter x : {Letter::a, Letter::b}) {
            Letters witness = closure.elements[at].witness;
            witness.push_back(x);
            intern(compose(closure.elements[at].map, generators[index_of(x)]),
                   std::move(witness));
        }
    }
    return closure;
}

/// Cardinality of the syntactic semigroup of the ideal generated by w,
/// computed as the transition-semigroup size of the minimal acceptor.
inline std::size_t syntactic_complexity(const Word& w,
                                        std::size_t closure_limit = kDefaultClosureLimit) {
    return transition_semigroup(minimal_ideal_dfa(w), closure_limit).size();
}

namespace detail {

// Suffix automaton over {a, b}; counts distinct nonempty substrings as the
// sum of len(v) - len(link(v)) over all non-root states.
class SuffixAutomaton {
public:
    explicit SuffixAutomaton(std::span<const Letter> text) {
        nodes_.push_back({0, -1, {-1, -1}});
        int last = 0;
        for (Letter x : text) last = extend(last, index_of(x));
    }

    long long distinct_substrings() const {
        long long total = 0;
        for (std::size_t v = 1; v < nodes_.size(); ++v)
            total += nodes_[v].len - nodes_[static_cast<std::size_t>(nodes_[v].link)].len;
        return total;
    }

private:
    struct Node {
        int len;
        int link;
        std::array<int, 2> next;
    };

    int extend(int last, int c) {
        const int cur = static_cast<int>(nodes_.size());
        nodes_.push_back({nodes_[static_cast<std::size_t>(last)].len + 1, -1, {-1, -1}});
        int p = last;
        while (p != -1 && nodes_[static_cast<std::size_t>(p)].next[c] == -1) {
            nodes_[static_cast<std::size_t>(p)].next[c] = cur;
            p = nodes_[static_cast<std::size_t>(p)].link;
        }
        if (p == -1) {
            nodes_[static_cast<std::size_t>(cur)].link = 0;
        } else {
            const int q = nodes_[static_cast<std::size_t>(p)].next[c];
            if (nodes_[static_cast<std::size_t>(p)].len + 1 ==
                nodes_[static_cast<std::size_t>(q)].len) {
                nodes_[static_cast<std::size_t>(cur)].link = q;
            } else {
                const int clone = static_cast<int>(nodes_.size());
                Node copy = nodes_[static_cast<std::size_t>(q)];
                copy.len = nodes_[static_cast<std::size_t>(p)].len + 1;
                nodes_.push_back(copy);
                while (p != -1 && nodes_[static_cast<std::size_t>(p)].next[c] == q) {
                    nodes_[static_cast<std::size_t>(p)].next[c] = clone;
                    p = nodes_[static_cast<std::size_t>(p)].link;
                }
                nodes_[static_cast<std::size_t>(q)].link = clone;
                nodes_[static_cast<std::size_t>(cur)].link = clone;
            }
        }
        return cur;
    }

    std::vector<Node> nodes_;
};

inline std::span<const Letter> trimmed(const Word& w) {
    if (w.size() <= 2) return {};
    return std::span<const Letter>(w.letters()).subspan(1, static_cast<std::size_t>(w.size() - 2));
}

} // namespace detail

/// Number of distinct factors of w occurring with nonempty context on both
/// sides; equivalently, distinct nonempty substrings of w with the first and
/// last letter removed. Suffix-automaton fast path.
inline long long inner_factor_count(const Word& w) {
    const auto inner = detail::trimmed(w);
    if (inner.empty()) return 0;
    return detail::SuffixAutomaton(inner).distinct_substrings();
}

/// Set-based brute enumeration of the same quantity; the independent oracle
/// for the fast path.
inline long long inner_factor_count_brute(const Word& w) {
    const auto inner = detail::trimmed(w);
    std::unordered_set<std::string> seen;
    for (std::size_t start = 0; start < inner.size(); ++start) {
        std::string factor;
        for (std::size_t end = start; end < inner.size(); ++end) {
            factor.push_back(to_char(inner[end]));
            seen.insert(factor);
        }
    }
    return static_cast<long long>(seen.size());
}

/// True for the four shapes a^{n-1}b, ab^{n-1}, ba^{n-1}, b^{n-1}a whose
/// syntactic complexity degenerates to n^2.
inline bool is_exceptional_shape(const Word& w) {
    const int n = w.size();
    if (n < 2) return false;
    const auto block_then_one = [&](Letter block) {
        for (int i = 0; i < n - 1; ++i)
            if (w[i] != block) return false;
        return w[n - 1] == complement(block);
    };
    const auto one_then_block = [&](Letter block) {
        for (int i = 1; i < n; ++i)
            if (w[i] != block) return false;
        return w[0] == complement(block);
    };
    return block_then_one(Letter::a) || block_then_one(Letter::b) ||
           one_then_block(Letter::a) || one_then_block(Letter::b);
}

/// Closed-form syntactic complexity: n^2 on the four exceptional shapes,
/// n^2 + 1 + N(w) otherwise. Defined for |w| >= 2 only; the formula's
/// exceptional set degenerates at length 1.
inline long long predicted_sigma(const Word& w) {
    const long long n = w.size();
    if (n < 2)
        throw std::invalid_argument("predicted_sigma needs |w| >= 2; "
                                    "the formula does not cover one-letter words");
    if (is_exceptional_shape(w)) return n * n;
    return n * n + 1 + inner_factor_count(w);
}

/// Verifies that mapping each transformation of the presenter onto the
/// transformation the same word induces on the minimal acceptor is
/// well-defined (and hence a semigroup homomorphism). The presenter must
/// have the ideal of w as its synchronizing language.
inline bool homomorphism_check(const Dfa& presenter, const Word& w,
                               std::size_t subset_limit = kDefaultSubsetLimit,
                               std::size_t closure_limit = kDefaultClosureLimit) {
    const Dfa minimal = minimal_ideal_dfa(w);
    if (!languages_equal(syn_acceptor(presenter, subset_limit), minimal).equal)
        throw std::invalid_argument("not a synchronizing presenter of this ideal");

    const std::array<Transformation, 2> gen_b = {letter_transformation(presenter, Letter::a),
                                                 letter_transformation(presenter, Letter::b)};
    const std::array<Transformation, 2> gen_a = {letter_transformation(minimal, Letter::a),
                                                 letter_transformation(minimal, Letter::b)};

    // Closure over simultaneously composed pairs; the map presenter -> minimal
    // is well-defined iff no presenter transformation shows up with two
    // different partners.
    std::unordered_map<std::string, std::string> image;
    std::unordered_set<std::string> seen_pairs;
    std::deque<std::pair<Transformation, Transformation>> queue;

    const auto visit = [&](Transformation tb, Transformation ta) {
        const std::string kb = tb.key();
        const std::string ka = ta.key();
        if (auto it = image.find(kb); it != image.end() && it->second != ka) return false;
        image.emplace(kb, ka);
        if (seen_pairs.insert(kb + '|' + ka).second) {
            if (seen_pairs.size() > closure_limit)
                throw LimitError("homomorphism check exceeded the closure cap of " +
                                     std::to_string(closure_limit) + " elements",
                                 closure_limit);
            queue.emplace_back(std::move(tb), std::move(ta));
        }
        return true;
    };

    for (int x = 0; x < 2; ++x)
        if (!visit(gen_b[static_cast<std::size_t>(x)], gen_a[static_cast<std::size_t>(x)]))
            return false;
    while (!queue.empty()) {
        const auto [tb, ta] = queue.front();
        queue.pop_front();
        for (int x = 0; x < 2; ++x)
            if (!visit(compose(tb, gen_b[static_cast<std::size_t>(x)]),
                       compose(ta, gen_a[static_cast<std::size_t>(x)])))
                return false;
    }
    return true;
}

/// The word a b^2 a^3 b^4 ... a^{k-1} b^k, of length k(k+1)/2.
inline Word staircase_word(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("staircase word needs an even k >= 4");
    Letters letters;
    letters.reserve(static_cast<std::size_t>(k) * (static_cast<std::size_t>(k) + 1) / 2);
    for (int block = 1; block <= k; ++block) {
        const Letter x = (block % 2 == 1) ? Letter::a : Letter::b;
        for (int r = 0; r < block; ++r) letters.push_back(x);
    }
    return Word(std::move(letters));
}

/// Closed form for the syntactic complexity of the staircase word:
/// 3/2 n^2 + 5/2 n - kn - 3k + 5 with n = k(k+1)/2.
inline long long staircase_sigma_formula(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("staircase formula needs an even k >= 4");
    const long long n = static_cast<long long>(k) * (k + 1) / 2;
    return (3 * n * n + 5 * n) / 2 - static_cast<long long>(k) * n - 3 * k + 5;
}

/// Staircase word padded to an arbitrary length n >= 21: the longest even-k
/// staircase that fits, completed with a final block of a's, or a full
/// a^{k+1} block plus a tail of b's. No closed sigma formula applies; use
/// the brute closure.
inline Word staircase_padded_word(int n) {
    if (n < 21) throw std::invalid_argument("padded staircase word needs n >= 21");
    const auto triangle = [](int k) { return k * (k + 1) / 2; };
    int k = 4;
    while (triangle(k + 2) < n) k += 2;
    if (triangle(k) == n) return staircase_word(k);

    Letters letters = staircase_word(k).letters();
    const int after_k = n - triangle(k);
    if (n <= triangle(k + 1)) {
        for (int r = 0; r < after_k; ++r) letters.push_back(Letter::a);
    } else {
        for (int r = 0; r < k + 1; ++r) letters.push_back(Letter::a);
        const int tail = n - triangle(k + 1);
        for (int r = 0; r < tail; ++r) letters.push_back(Letter::b);
    }
    return Word(std::move(letters));
}

/// Comparison of the closed-form prediction against the brute transition
/// semigroup, for one word.
struct SigmaReport {
    std::string word;
    int n = 0;
    long long inner_factors = 0;
    long long sigma_predicted = 0;
    long long sigma_computed = 0;
    bool exceptional = false;

    bool match() const noexcept { return sigma_predicted == sigma_computed; }
};

inline SigmaReport make_sigma_report(const Word& w,
                                     std::size_t closure_limit = kDefaultClosureLimit) {
    SigmaReport report;
    report.word = w.str();
    report.n = w.size();
    report.inner_factors = inner_factor_count(w);
    report.exceptional = is_exceptional_shape(w);
    report.sigma_predicted = predicted_sigma(w);
    report.sigma_computed = static_cast<long long>(syntactic_complexity(w, closure_limit));
    return report;
}

} // namespace synkit
