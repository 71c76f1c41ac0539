#pragma once

// One-line permutations of [n] and the type-A Coxeter basics: length,
// left descents, simple transpositions and reduced words.
//
// Positions and values are 1-indexed throughout the public interface.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weakinv {

class Permutation {
public:
    /// Takes the one-line word [w(1), ..., w(n)]; throws std::invalid_argument
    /// unless it is a bijection on [n] with n >= 1.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(word_.size()); }

    /// w(i)
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

    /// w^{-1}(value), i.e. the position at which `value` occurs.
    int position_of(int value) const;

    const std::vector<int>& word() const noexcept { return word_; }

    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> word_;
};

/// Generator indices i_1, ..., i_k naming the product s_{i_1} s_{i_2} ... s_{i_k}.
struct ReducedWord {
    std::vector<int> letters;

    std::size_t size() const noexcept { return letters.size(); }

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
    friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;
};

Permutation identity(int n);

/// [n, n-1, ..., 1]
Permutation longest_element(int n);

/// (u v)(i) = u(v(i)); throws on mismatched sizes.
Permutation compose(const Permutation& u, const Permutation& v);

/// Number of inversions of the one-line word.
int length(const Permutation& u);

/// All j in [1, n-1] such that j+1 occurs before j, ascending.
std::vector<int> left_descents(const Permutation& u);

/// s_i u: swaps the values i and i+1 wherever they sit in the word.
Permutation apply_simple_left(int i, const Permutation& u);

/// u s_i: swaps the entries at positions i and i+1.
Permutation apply_simple_right(int i, const Permutation& u);

/// The product s_{i_1} ... s_{i_k} in S_n (not necessarily reduced).
Permutation evaluate(const ReducedWord& word, int n);

/// Every reduced word of u, in lexicographic order of letters.
std::vector<ReducedWord> reduced_words(const Permutation& u);

/// |reduced_words(u)| by a memoized descent recursion, without materializing words.
std::uint64_t reduced_word_count(const Permutation& u);

/// The lexicographically least reduced word (greedy on the smallest left descent).
ReducedWord first_reduced_word(const Permutation& u);

/// Every permutation of [n] in lexicographic order; intended for n <= 9.
std::vector<Permutation> all_permutations(int n);

/// "[3,2,4,1]"
std::string to_string(const Permutation& u);

/// "3241"; throws std::invalid_argument when n > 9.
std::string to_compact_string(const Permutation& u);

/// Accepts "[3,2,4,1]" (whitespace ignored) or, for n <= 9, "3241".
Permutation parse_permutation(std::string_view text);

}  // namespace weakinv
