#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "synkit/automaton.hpp"
#include "synkit/construct.hpp"
#include "synkit/ideal.hpp"
#include "synkit/word.hpp"

#include "helpers.hpp"

using namespace synkit;
using synkit::testing::random_dfa;
using synkit::testing::random_word;

TEST_CASE("letters encode a=0, b=1 and complement is involutive") {
    REQUIRE(index_of(Letter::a) == 0);
    REQUIRE(index_of(Letter::b) == 1);
    REQUIRE(complement(Letter::a) == Letter::b);
    REQUIRE(complement(complement(Letter::a)) == Letter::a);
    REQUIRE(complement(complement(Letter::b)) == Letter::b);
}

TEST_CASE("words reject empty and foreign characters") {
    REQUIRE_THROWS_AS(Word(""), std::invalid_argument);
    REQUIRE_THROWS_AS(Word("abc"), std::invalid_argument);
    REQUIRE(Word("aabab").str() == "aabab");
    REQUIRE(Word("ab").swapped() == Word("ba"));
}

TEST_CASE("apply_word on the worked minimal automaton") {
    const Dfa d = minimal_ideal_dfa(Word("aabab"));
    REQUIRE(apply_word(d, 0, Word("aabab")) == 5);

    // single letter is a one-step fold
    std::mt19937 rng(7);
    for (int round = 0; round < 50; ++round) {
        const Dfa r = random_dfa(rng, 1 + static_cast<int>(rng() % 6));
        const int q = static_cast<int>(rng() % static_cast<unsigned>(r.state_count()));
        for (Letter x : {Letter::a, Letter::b})
            REQUIRE(apply_word(r, q, Word(Letters{x})) == r.next(q, x));
    }

    REQUIRE(apply_word(family_a(5), 5, Word("b")) == 1);
    REQUIRE_THROWS_AS(apply_word(d, 17, Word("a")), std::out_of_range);
}

TEST_CASE("apply_word composes over concatenation") {
    std::mt19937 rng(11);
    for (int round = 0; round < 200; ++round) {
        const Dfa d = random_dfa(rng, 2 + static_cast<int>(rng() % 5));
        const Word u = random_word(rng, 6);
        const Word v = random_word(rng, 6);
        Letters uv = u.letters();
        uv.insert(uv.end(), v.letters().begin(), v.letters().end());
        for (int q = 0; q < d.state_count(); ++q)
            REQUIRE(apply_letters(d, q, uv) == apply_word(d, apply_word(d, q, u), v));
    }
}

TEST_CASE("transformation_of matches the worked tables") {
    const Dfa d = minimal_ideal_dfa(Word("aabab"));
    REQUIRE(transformation_of(d, Word("a")).image == std::vector<int>{1, 2, 2, 4, 2, 5});
    REQUIRE(transformation_of(d, Word("aabab")).image == std::vector<int>{5, 5, 5, 5, 5, 5});
    REQUIRE(transformation_of(minimal_ideal_dfa(Word("ab")), Word("ba")).image ==
            std::vector<int>{1, 2, 2});
}

TEST_CASE("transformation_of is multiplicative") {
    std::mt19937 rng(13);
    for (int round = 0; round < 200; ++round) {
        const Dfa d = random_dfa(rng, 2 + static_cast<int>(rng() % 5));
        const Word u = random_word(rng, 6);
        const Word v = random_word(rng, 6);
        Letters uv = u.letters();
        uv.insert(uv.end(), v.letters().begin(), v.letters().end());
        REQUIRE(transformation_of(d, Word(uv)) ==
                compose(transformation_of(d, u), transformation_of(d, v)));
    }
}

TEST_CASE("strong connectivity") {
    REQUIRE(is_strongly_connected(family_a(5)));
    REQUIRE_FALSE(is_strongly_connected(minimal_ideal_dfa(Word("aabab"))));
    REQUIRE(is_strongly_connected(construct_sc(Word("aabab")).automaton));
    REQUIRE(is_strongly_connected(Dfa({{0, 0}})));
    // two states fixed by both letters: two components
    REQUIRE_FALSE(is_strongly_connected(Dfa({{0, 0}, {1, 1}})));
}

TEST_CASE("isomorphism on the explicit families") {
    const auto identity = are_isomorphic(family_a(5), family_a(5));
    REQUIRE(identity.has_value());
    REQUIRE(*identity == std::vector<int>{0, 1, 2, 3, 4, 5});

    REQUIRE_FALSE(are_isomorphic(family_a(5), family_b(5)).has_value());
    REQUIRE_FALSE(are_isomorphic(family_a(4), family_b(4)).has_value());
    REQUIRE_FALSE(are_isomorphic(family_a(2), minimal_ideal_dfa(Word("ab"))).has_value());
    // state-count mismatch is an immediate absence, not an error
    REQUIRE_FALSE(are_isomorphic(family_a(2), family_a(3)).has_value());
}

TEST_CASE("isomorphism is reflexive, symmetric, and commutes with the actions") {
    std::mt19937 rng(17);
    for (int round = 0; round < 120; ++round) {
        const int m = 1 + static_cast<int>(rng() % 5);
        const Dfa d1 = random_dfa(rng, m);
        REQUIRE(are_isomorphic(d1, d1).has_value());

        const Dfa d2 = random_dfa(rng, m);
        const auto forward = are_isomorphic(d1, d2);
        const auto backward = are_isomorphic(d2, d1);
        REQUIRE(forward.has_value() == backward.has_value());
        if (forward) {
            const auto& phi = *forward;
            for (int q = 0; q < m; ++q)
                for (Letter x : {Letter::a, Letter::b})
                    REQUIRE(phi[static_cast<std::size_t>(d1.next(q, x))] ==
                            d2.next(phi[static_cast<std::size_t>(q)], x));
        }
    }
}

TEST_CASE("isomorphism found through a random relabeling") {
    std::mt19937 rng(19);
    for (int round = 0; round < 80; ++round) {
        const int m = 2 + static_cast<int>(rng() % 5);
        const Dfa d = random_dfa(rng, m);
        std::vector<int> relabel(static_cast<std::size_t>(m));
        for (int q = 0; q < m; ++q) relabel[static_cast<std::size_t>(q)] = q;
        std::shuffle(relabel.begin(), relabel.end(), rng);
        std::vector<std::array<int, 2>> delta(static_cast<std::size_t>(m));
        for (int q = 0; q < m; ++q)
            for (Letter x : {Letter::a, Letter::b})
                delta[static_cast<std::size_t>(relabel[static_cast<std::size_t>(q)])]
                     [index_of(x)] = relabel[static_cast<std::size_t>(d.next(q, x))];
        REQUIRE(are_isomorphic(d, Dfa(std::move(delta))).has_value());
    }
}

TEST_CASE("dfa construction validates its table") {
    REQUIRE_THROWS_AS(Dfa({{0, 2}, {1, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Dfa({{0, 0}}, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(Dfa({{0, 0}}, 0, std::vector<int>{5}), std::invalid_argument);
    REQUIRE_THROWS_AS(Dfa(std::vector<std::array<int, 2>>{}), std::invalid_argument);
}
