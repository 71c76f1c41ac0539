#include "weakinv/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace weakinv {

namespace {

void check_generator(int i, int n)
{
    if (i < 1 || i > n - 1) {
        throw std::out_of_range("generator index s_" + std::to_string(i) +
                                " out of range for S_" + std::to_string(n));
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word))
{
    const int n = size();
    if (n < 1) {
        throw std::invalid_argument("permutation must have n >= 1");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : word_) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation value " + std::to_string(v) +
                                        " outside [1," + std::to_string(n) + "]");
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation value " + std::to_string(v) + " repeated");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    if (n < 1) {
        throw std::invalid_argument("identity requires n >= 1");
    }
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    return Permutation(std::move(word));
}

int Permutation::position_of(int value) const
{
    auto it = std::find(word_.begin(), word_.end(), value);
    if (it == word_.end()) {
        throw std::out_of_range("value " + std::to_string(value) + " not in permutation");
    }
    return static_cast<int>(it - word_.begin()) + 1;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) {
        inv[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(inv));
}

Permutation identity(int n) { return Permutation::identity(n); }

Permutation longest_element(int n)
{
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        word[static_cast<std::size_t>(i)] = n - i;
    }
    return Permutation(std::move(word));
}

Permutation compose(const Permutation& u, const Permutation& v)
{
    if (u.size() != v.size()) {
        throw std::invalid_argument("compose: S_" + std::to_string(u.size()) + " and S_" +
                                    std::to_string(v.size()) + " differ");
    }
    std::vector<int> word(static_cast<std::size_t>(u.size()));
    for (int i = 1; i <= u.size(); ++i) {
        word[static_cast<std::size_t>(i - 1)] = u(v(i));
    }
    return Permutation(std::move(word));
}

int length(const Permutation& u)
{
    const auto& w = u.word();
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] > w[j]) {
                ++inversions;
            }
        }
    }
    return inversions;
}

std::vector<int> left_descents(const Permutation& u)
{
    const int n = u.size();
    std::vector<int> position(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        position[static_cast<std::size_t>(u(i))] = i;
    }
    std::vector<int> descents;
    for (int j = 1; j < n; ++j) {
        if (position[static_cast<std::size_t>(j + 1)] < position[static_cast<std::size_t>(j)]) {
            descents.push_back(j);
        }
    }
    return descents;
}

Permutation apply_simple_left(int i, const Permutation& u)
{
    check_generator(i, u.size());
    std::vector<int> word = u.word();
    for (int& v : word) {
        if (v == i) {
            v = i + 1;
        } else if (v == i + 1) {
            v = i;
        }
    }
    return Permutation(std::move(word));
}

Permutation apply_simple_right(int i, const Permutation& u)
{
    check_generator(i, u.size());
    std::vector<int> word = u.word();
    std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
    return Permutation(std::move(word));
}

Permutation evaluate(const ReducedWord& word, int n)
{
    Permutation result = Permutation::identity(n);
    // s_{i_1} ... s_{i_k}: multiply on the right, letter by letter.
    for (int letter : word.letters) {
        result = apply_simple_right(letter, result);
    }
    return result;
}

namespace {

const std::vector<ReducedWord>& reduced_words_memo(
    const Permutation& u, std::map<Permutation, std::vector<ReducedWord>>& memo)
{
    if (auto it = memo.find(u); it != memo.end()) {
        return it->second;
    }
    std::vector<ReducedWord> words;
    const auto descents = left_descents(u);
    if (descents.empty()) {
        words.push_back(ReducedWord{});
    }
    for (int j : descents) {
        // u = s_j (s_j u) with s_j u one shorter.
        for (const ReducedWord& tail : reduced_words_memo(apply_simple_left(j, u), memo)) {
            ReducedWord word;
            word.letters.reserve(tail.size() + 1);
            word.letters.push_back(j);
            word.letters.insert(word.letters.end(), tail.letters.begin(), tail.letters.end());
            words.push_back(std::move(word));
        }
    }
    return memo.emplace(u, std::move(words)).first->second;
}

std::uint64_t reduced_word_count_memo(const Permutation& u,
                                      std::map<Permutation, std::uint64_t>& memo)
{
    if (auto it = memo.find(u); it != memo.end()) {
        return it->second;
    }
    const auto descents = left_descents(u);
    std::uint64_t count = descents.empty() ? 1 : 0;
    for (int j : descents) {
        count += reduced_word_count_memo(apply_simple_left(j, u), memo);
    }
    memo.emplace(u, count);
    return count;
}

}  // namespace

std::vector<ReducedWord> reduced_words(const Permutation& u)
{
    std::map<Permutation, std::vector<ReducedWord>> memo;
    // Descents are visited in increasing order, so the words come out sorted.
    return reduced_words_memo(u, memo);
}

std::uint64_t reduced_word_count(const Permutation& u)
{
    std::map<Permutation, std::uint64_t> memo;
    return reduced_word_count_memo(u, memo);
}

ReducedWord first_reduced_word(const Permutation& u)
{
    ReducedWord word;
    Permutation rest = u;
    for (auto descents = left_descents(rest); !descents.empty(); descents = left_descents(rest)) {
        word.letters.push_back(descents.front());
        rest = apply_simple_left(descents.front(), rest);
    }
    return word;
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> result;
    do {
        result.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return result;
}

std::string to_string(const Permutation& u)
{
    std::string text = "[";
    for (int i = 1; i <= u.size(); ++i) {
        if (i > 1) {
            text += ',';
        }
        text += std::to_string(u(i));
    }
    text += ']';
    return text;
}

std::string to_compact_string(const Permutation& u)
{
    if (u.size() > 9) {
        throw std::invalid_argument("compact digit form needs n <= 9, got n = " +
                                    std::to_string(u.size()));
    }
    std::string text;
    for (int v : u.word()) {
        text += static_cast<char>('0' + v);
    }
    return text;
}

Permutation parse_permutation(std::string_view text)
{
    std::string compact;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            compact += c;
        }
    }
    if (compact.empty()) {
        throw std::invalid_argument("empty permutation");
    }
    std::vector<int> word;
    if (compact.front() == '[') {
        if (compact.back() != ']') {
            throw std::invalid_argument("permutation '" + compact + "' is missing ']'");
        }
        std::string_view body(compact);
        body = body.substr(1, body.size() - 2);
        while (!body.empty()) {
            const auto comma = body.find(',');
            const auto token = body.substr(0, comma);
            if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                })) {
                throw std::invalid_argument("bad entry '" + std::string(token) +
                                            "' in permutation '" + compact + "'");
            }
            word.push_back(std::stoi(std::string(token)));
            if (comma == std::string_view::npos) {
                break;
            }
            body.remove_prefix(comma + 1);
            if (body.empty()) {
                throw std::invalid_argument("trailing ',' in permutation '" + compact + "'");
            }
        }
    } else {
        if (compact.size() > 9) {
            throw std::invalid_argument("digit form '" + compact + "' only allowed for n <= 9");
        }
        for (char c : compact) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("bad digit '" + std::string(1, c) +
                                            "' in permutation '" + compact + "'");
            }
            word.push_back(c - '0');
        }
    }
    return Permutation(std::move(word));
}

}  // namespace weakinv
