#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "weakinv/permutation.hpp"

using namespace weakinv;

namespace {

Permutation P(std::vector<int> word) { return Permutation(std::move(word)); }

std::set<std::vector<int>> letter_sets(const std::vector<ReducedWord>& words)
{
    std::set<std::vector<int>> out;
    for (const auto& w : words) {
        out.insert(w.letters);
    }
    return out;
}

Permutation random_permutation(int n, std::mt19937& rng)
{
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) {
        word[i] = i + 1;
    }
    std::shuffle(word.begin(), word.end(), rng);
    return P(word);
}

}  // namespace

TEST_CASE("identity")
{
    CHECK(identity(1).word() == std::vector<int>{1});
    CHECK(identity(4).word() == std::vector<int>{1, 2, 3, 4});
    CHECK(identity(3).word() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(identity(0), std::invalid_argument);
}

TEST_CASE("constructor rejects non-bijections")
{
    CHECK_THROWS_AS(P({}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({1, 2, 4}), std::invalid_argument);
}

TEST_CASE("compose")
{
    CHECK(compose(P({2, 1, 3}), P({1, 3, 2})) == P({2, 3, 1}));
    CHECK(compose(identity(3), P({3, 1, 2})) == P({3, 1, 2}));
    CHECK(compose(P({2, 1, 3, 4}), P({2, 1, 3, 4})) == identity(4));
    CHECK_THROWS_AS(compose(identity(3), identity(4)), std::invalid_argument);
}

TEST_CASE("length")
{
    CHECK(length(P({1, 2, 3, 4})) == 0);
    CHECK(length(P({3, 2, 4, 1})) == 4);
    CHECK(length(P({4, 3, 2, 1})) == 6);
    CHECK(length(longest_element(5)) == 10);
}

TEST_CASE("left_descents")
{
    CHECK(left_descents(P({1, 2, 3})).empty());
    CHECK(left_descents(P({2, 3, 1})) == std::vector<int>{1});
    CHECK(left_descents(P({2, 3, 4, 1})) == std::vector<int>{1});
    CHECK(left_descents(P({4, 3, 2, 1})) == std::vector<int>{1, 2, 3});
}

TEST_CASE("reduced_words")
{
    const auto id_words = reduced_words(identity(3));
    REQUIRE(id_words.size() == 1);
    CHECK(id_words[0].letters.empty());

    CHECK(letter_sets(reduced_words(P({3, 2, 1}))) ==
          std::set<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});

    const auto words = reduced_words(P({3, 2, 4, 1}));
    CHECK(words.size() == 3);
    CHECK(letter_sets(words) == oracle::reduced_words({3, 2, 4, 1}));
    CHECK(reduced_word_count(P({3, 2, 4, 1})) == 3);
    CHECK(reduced_word_count(longest_element(4)) == 16);
}

TEST_CASE("apply_simple_left")
{
    CHECK(apply_simple_left(1, P({1, 2, 3})) == P({2, 1, 3}));
    CHECK(apply_simple_left(2, P({2, 1, 3})) == P({3, 1, 2}));
    CHECK(apply_simple_left(1, P({2, 1, 3})) == P({1, 2, 3}));
    CHECK_THROWS_AS(apply_simple_left(0, identity(3)), std::out_of_range);
    CHECK_THROWS_AS(apply_simple_left(3, identity(3)), std::out_of_range);
}

TEST_CASE("apply_simple_right swaps positions")
{
    CHECK(apply_simple_right(1, P({3, 1, 2})) == P({1, 3, 2}));
    CHECK(apply_simple_right(2, P({3, 1, 2})) == P({3, 2, 1}));
}

TEST_CASE("evaluate multiplies left to right")
{
    CHECK(evaluate(ReducedWord{{2, 1}}, 3) == P({3, 1, 2}));
    CHECK(evaluate(ReducedWord{{1, 2}}, 3) == P({2, 3, 1}));
    CHECK(evaluate(ReducedWord{{}}, 2) == identity(2));
    CHECK_THROWS_AS(evaluate(ReducedWord{{3}}, 3), std::out_of_range);
}

TEST_CASE("text forms")
{
    CHECK(to_string(P({3, 2, 4, 1})) == "[3,2,4,1]");
    CHECK(to_compact_string(P({3, 2, 4, 1})) == "3241");
    CHECK(parse_permutation("[3,2,4,1]") == P({3, 2, 4, 1}));
    CHECK(parse_permutation("3241") == P({3, 2, 4, 1}));
    CHECK(parse_permutation(" [ 2, 1 ] ") == P({2, 1}));
    CHECK_THROWS_AS(parse_permutation("3341"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("[1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation(""), std::invalid_argument);

    std::vector<int> big(10);
    for (int i = 0; i < 10; ++i) {
        big[i] = 10 - i;
    }
    CHECK_THROWS(to_compact_string(P(big)));
    CHECK(parse_permutation(to_string(P(big))) == P(big));
}

TEST_CASE("all_permutations is sorted and complete")
{
    const auto perms = all_permutations(4);
    CHECK(perms.size() == 24);
    CHECK(std::is_sorted(perms.begin(), perms.end()));
    CHECK(perms.front() == identity(4));
    CHECK(perms.back() == longest_element(4));
}

TEST_CASE("property: u composed with its inverse has length zero")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Permutation u = random_permutation(n, rng);
        CHECK(length(compose(u, u.inverse())) == 0);
        CHECK(length(compose(u.inverse(), u)) == 0);
    }
}

TEST_CASE("property: reduced words have length(u) letters and evaluate to u")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Permutation u = random_permutation(n, rng);
        for (const auto& word : reduced_words(u)) {
            CHECK(static_cast<int>(word.size()) == length(u));
            CHECK(evaluate(word, n) == u);
        }
        CHECK(evaluate(first_reduced_word(u), n) == u);
    }
}

TEST_CASE("property: reduced words agree with brute force on S_4 and S_5")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& u : all_permutations(n)) {
            if (n == 5 && length(u) > 6) {
                continue;
            }
            CHECK(letter_sets(reduced_words(u)) == oracle::reduced_words(u.word()));
        }
    }
}

TEST_CASE("property: no left descents exactly at the identity")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& u : all_permutations(n)) {
            CHECK(left_descents(u).empty() == (u == identity(n)));
        }
    }
}

TEST_CASE("property: left descents lower length")
{
    for (const auto& u : all_permutations(5)) {
        const auto descents = left_descents(u);
        for (int i = 1; i < 5; ++i) {
            const bool is_descent = std::find(descents.begin(), descents.end(), i) != descents.end();
            CHECK(length(apply_simple_left(i, u)) == length(u) + (is_descent ? -1 : 1));
        }
    }
}

TEST_CASE("property: a simple step changes length by one")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Permutation u = random_permutation(n, rng);
        const int i = 1 + static_cast<int>(rng() % (n - 1));
        CHECK(std::abs(length(apply_simple_left(i, u)) - length(u)) == 1);
        CHECK(std::abs(length(apply_simple_right(i, u)) - length(u)) == 1);
    }
}

TEST_CASE("property: text round trip")
{
    for (const auto& u : all_permutations(5)) {
        CHECK(parse_permutation(to_string(u)) == u);
        CHECK(parse_permutation(to_compact_string(u)) == u);
    }
}
