#include "weakinv/wset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

namespace weakinv {

namespace {

void check_sizes(const Permutation& w, int n)
{
    if (w.size() != n) {
        throw std::invalid_argument("permutation in S_" + std::to_string(w.size()) +
                                    " checked against an element on " + std::to_string(n) +
                                    " vertices");
    }
}

// pos[v] = position of value v in w.
std::vector<int> positions(const Permutation& w)
{
    std::vector<int> pos(static_cast<std::size_t>(w.size()) + 1);
    for (int i = 1; i <= w.size(); ++i) {
        pos[static_cast<std::size_t>(w(i))] = i;
    }
    return pos;
}

WSet make_wset(std::string target, int rank, std::set<Permutation> members)
{
    return WSet{std::move(target), rank, {members.begin(), members.end()}};
}

// Chain products for every element marked in `keep`; indices are in
// rank order, so a single forward sweep suffices.
template <class Element>
std::vector<std::set<Permutation>> products_sweep(const WeakOrderPoset<Element>& poset,
                                                  const std::vector<bool>& keep)
{
    std::vector<std::set<Permutation>> products(poset.size());
    products[poset.bottom()].insert(Permutation::identity(poset.params().n));
    for (std::size_t v = 0; v < poset.size(); ++v) {
        if (!keep[v]) {
            continue;
        }
        for (std::size_t e : poset.edges_into(v)) {
            const auto& edge = poset.edge(e);
            for (int label : edge.labels) {
                for (const Permutation& w : products[edge.lower]) {
                    products[v].insert(apply_simple_left(label, w));
                }
            }
        }
    }
    return products;
}

}  // namespace

bool WSet::contains(const Permutation& w) const
{
    return std::binary_search(members.begin(), members.end(), w);
}

// --- conditions -----------------------------------------------------------

bool check_conditions_involution(const Permutation& w, const Involution& pi)
{
    check_sizes(w, pi.size());
    const auto pos = positions(w);
    auto at = [&](int v) { return pos[static_cast<std::size_t>(v)]; };
    const auto cycles = pi.cycles();
    const auto fixed = pi.fixed_points();

    for (const auto& [a, b] : cycles) {
        if (at(b) > at(a)) {
            return false;
        }
        for (int x = a + 1; x < b; ++x) {
            if (at(b) < at(x) && at(x) < at(a)) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (cycles[i].b < cycles[j].b && at(cycles[i].a) > at(cycles[j].b)) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i + 1 < fixed.size(); ++i) {
        if (at(fixed[i]) > at(fixed[i + 1])) {
            return false;
        }
    }
    for (const auto& [a, b] : cycles) {
        for (int c : fixed) {
            if (c < a && at(c) > at(b)) {
                return false;
            }
            if (b < c && at(a) > at(c)) {
                return false;
            }
        }
    }
    return true;
}

bool check_conditions_matching(const Permutation& w, const Matching& m)
{
    check_sizes(w, m.size());
    const auto pos = positions(w);
    auto before = [&](int u, int v) {
        return pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(v)];
    };
    const auto strands = m.strands();
    const auto isolated = m.isolated();

    for (const auto& [i, j] : strands) {
        if (!before(j, i)) {
            return false;
        }
        for (int k = i + 1; k < j; ++k) {
            if (before(j, k) && before(k, i)) {
                return false;
            }
        }
    }
    for (const auto& [i, j] : strands) {
        for (const auto& [k, l] : strands) {
            if (i < k && j < l && !before(i, l)) {
                return false;
            }
        }
    }
    for (int i : isolated) {
        for (int j : isolated) {
            if (i < j && !before(i, j)) {
                return false;
            }
        }
    }
    for (const auto& [i, j] : strands) {
        for (int k : isolated) {
            if (k < i && !before(k, j)) {
                return false;
            }
            if (j < k && !before(i, k)) {
                return false;
            }
        }
    }
    return true;
}

bool check_conditions_fpf(const Permutation& w, const FpfInvolution& pi)
{
    check_sizes(w, pi.size());
    const auto pos = positions(w);
    auto at = [&](int v) { return pos[static_cast<std::size_t>(v)]; };
    const auto cycles = pi.cycles();
    for (const auto& [a, b] : cycles) {
        if (at(b) != at(a) + 1) {
            return false;
        }
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (cycles[i].b < cycles[j].b && at(cycles[i].b) > at(cycles[j].a)) {
                return false;
            }
        }
    }
    return true;
}

// --- direct constructions -------------------------------------------------

WSet wset_involution(const Involution& pi)
{
    const int n = pi.size();
    const auto cycles = pi.cycles();
    const auto fixed = pi.fixed_points();
    const int target_length = rank_involution(pi);

    std::vector<int> slot(static_cast<std::size_t>(n) + 1, 0);  // slot[position] = value
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);   // pos[value] = position
    std::set<Permutation> found;

    auto place = [&](int value, int position) {
        slot[static_cast<std::size_t>(position)] = value;
        pos[static_cast<std::size_t>(value)] = position;
    };
    auto unplace = [&](int value) {
        slot[static_cast<std::size_t>(pos[static_cast<std::size_t>(value)])] = 0;
        pos[static_cast<std::size_t>(value)] = 0;
    };

    // Conditions (1) and (2) restricted to the pairs placed so far, given
    // that pair `i` was just placed.
    auto consistent = [&](std::size_t i) {
        const auto [a, b] = cycles[i];
        const int left = pos[static_cast<std::size_t>(b)];
        const int right = pos[static_cast<std::size_t>(a)];
        for (int p = left + 1; p < right; ++p) {
            const int x = slot[static_cast<std::size_t>(p)];
            if (a < x && x < b) {
                return false;
            }
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (cycles[j].b < b && pos[static_cast<std::size_t>(cycles[j].a)] > left) {
                return false;
            }
        }
        return true;
    };

    std::function<void(std::size_t)> place_pairs = [&](std::size_t i) {
        if (i == cycles.size()) {
            std::vector<int> word(slot.begin() + 1, slot.end());
            auto next_fixed = fixed.begin();
            for (int& v : word) {
                if (v == 0) {
                    v = *next_fixed++;
                }
            }
            Permutation w(std::move(word));
            if (length(w) == target_length && check_conditions_involution(w, pi)) {
                found.insert(std::move(w));
            }
            return;
        }
        std::vector<int> free;
        for (int p = 1; p <= n; ++p) {
            if (slot[static_cast<std::size_t>(p)] == 0) {
                free.push_back(p);
            }
        }
        const auto [a, b] = cycles[i];
        for (std::size_t t = 0; t + 1 < free.size(); ++t) {
            place(b, free[t]);
            place(a, free[t + 1]);
            if (consistent(i)) {
                place_pairs(i + 1);
            }
            unplace(a);
            unplace(b);
        }
    };
    place_pairs(0);
    return make_wset(to_string(pi), target_length, std::move(found));
}

WSet wset_fpf(const FpfInvolution& pi)
{
    const auto cycles = pi.cycles();
    const std::size_t k = cycles.size();

    // Block x must stay left of block y when x < y and b_x < b_y.
    auto pinned = [&](std::size_t x, std::size_t y) { return x < y && cycles[x].b < cycles[y].b; };

    std::vector<std::size_t> start(k);
    for (std::size_t i = 0; i < k; ++i) {
        start[i] = i;
    }
    std::set<std::vector<std::size_t>> seen{start};
    std::vector<std::vector<std::size_t>> frontier{start};
    while (!frontier.empty()) {
        auto order = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t t = 0; t + 1 < k; ++t) {
            if (pinned(order[t], order[t + 1])) {
                continue;
            }
            auto swapped = order;
            std::swap(swapped[t], swapped[t + 1]);
            if (seen.insert(swapped).second) {
                frontier.push_back(std::move(swapped));
            }
        }
    }

    std::set<Permutation> members;
    for (const auto& order : seen) {
        std::vector<int> word;
        for (std::size_t block : order) {
            word.push_back(cycles[block].a);
            word.push_back(cycles[block].b);
        }
        members.emplace(std::move(word));
    }
    return make_wset(to_string(pi), rank_fpf(pi), std::move(members));
}

Permutation wstar(int n)
{
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("wstar needs even n >= 2, got n = " + std::to_string(n));
    }
    std::vector<int> word;
    for (int a = 1; a < n; a += 2) {
        word.push_back(a + 1);
        word.push_back(a);
    }
    return Permutation(std::move(word));
}

WSet wset_clan(const Clan& pi)
{
    const int n = pi.size();
    if (n > 31) {
        throw std::invalid_argument("wset_clan supports n <= 31");
    }
    const Involution& base = pi.base();
    using Mask = std::uint32_t;
    auto has = [](Mask set, int v) { return (set >> (v - 1)) & 1U; };
    auto without = [](Mask set, int u, int v) { return set & ~(1U << (u - 1)) & ~(1U << (v - 1)); };

    // The middle word filled in from the vertices still in `available`
    // depends only on that set.
    std::map<Mask, std::vector<std::vector<int>>> memo;
    std::function<const std::vector<std::vector<int>>&(Mask)> fill = [&](Mask available)
        -> const std::vector<std::vector<int>>& {
        if (auto it = memo.find(available); it != memo.end()) {
            return it->second;
        }
        std::vector<int> members;
        for (int v = 1; v <= n; ++v) {
            if (has(available, v)) {
                members.push_back(v);
            }
        }
        auto nested = [&](int lo, int hi) {
            for (int c : members) {
                const int d = base.partner(c);
                if (d > c && has(available, d) && c < lo && hi < d) {
                    return true;
                }
            }
            return false;
        };
        const bool all_same_sign = std::all_of(members.begin(), members.end(), [&](int v) {
            return base.is_fixed(v) && pi.sign(v) == pi.sign(members.front());
        });

        std::set<std::vector<int>> words;
        auto wrap = [&](int left, int right, Mask rest) {
            for (const auto& inner : fill(rest)) {
                std::vector<int> word{left};
                word.insert(word.end(), inner.begin(), inner.end());
                word.push_back(right);
                words.insert(std::move(word));
            }
        };
        if (members.empty() || all_same_sign) {
            words.insert(members);
        } else {
            for (int a : members) {
                const int b = base.partner(a);
                if (b > a && has(available, b) && !nested(a, b)) {
                    wrap(a, b, without(available, a, b));
                }
            }
            for (std::size_t t = 0; t + 1 < members.size(); ++t) {
                const int a = members[t];
                const int b = members[t + 1];
                if (base.is_fixed(a) && base.is_fixed(b) && pi.sign(a) != pi.sign(b) &&
                    !nested(a, b)) {
                    wrap(b, a, without(available, a, b));
                }
            }
        }
        return memo.emplace(available, std::vector<std::vector<int>>(words.begin(), words.end()))
            .first->second;
    };

    const Mask everything = (Mask{1} << n) - 1;
    std::set<Permutation> found;
    for (const auto& word : fill(everything)) {
        found.emplace(word);
    }
    return make_wset(to_string(pi), rank_clan(pi), std::move(found));
}

WSet direct_wset(const Involution& pi) { return wset_involution(pi); }
WSet direct_wset(const FpfInvolution& pi) { return wset_fpf(pi); }
WSet direct_wset(const Clan& pi) { return wset_clan(pi); }

// --- oracle ---------------------------------------------------------------

template <class Element>
std::set<Permutation> chain_products(const WeakOrderPoset<Element>& poset, std::size_t x)
{
    if (x >= poset.size()) {
        throw std::out_of_range("chain_products: unknown element");
    }
    std::vector<bool> keep(poset.size(), false);
    keep[x] = true;
    for (std::size_t v = x + 1; v-- > 0;) {
        if (!keep[v]) {
            continue;
        }
        for (std::size_t e : poset.edges_into(v)) {
            keep[poset.edge(e).lower] = true;
        }
    }
    return std::move(products_sweep(poset, keep)[x]);
}

template <class Element>
WSet wset_oracle(const WeakOrderPoset<Element>& poset, std::size_t x)
{
    std::set<Permutation> members;
    for (const auto& w : chain_products(poset, x)) {
        if (length(w) == poset.rank(x)) {
            members.insert(w);
        }
    }
    return make_wset(to_string(poset.element(x)), poset.rank(x), std::move(members));
}

template <class Element>
std::vector<WSet> wset_oracle_all(const WeakOrderPoset<Element>& poset)
{
    auto products = products_sweep(poset, std::vector<bool>(poset.size(), true));
    std::vector<WSet> result;
    result.reserve(poset.size());
    for (std::size_t v = 0; v < poset.size(); ++v) {
        std::set<Permutation> members;
        for (const auto& w : products[v]) {
            if (length(w) == poset.rank(v)) {
                members.insert(w);
            }
        }
        result.push_back(make_wset(to_string(poset.element(v)), poset.rank(v), std::move(members)));
    }
    return result;
}

template <class Element>
ChainCountIdentity chain_count_identity(const WeakOrderPoset<Element>& poset, std::size_t x)
{
    ChainCountIdentity result;
    result.chains = count_maximal_chains(poset, x);
    for (const auto& w : direct_wset(poset.element(x)).members) {
        result.reduced_words += reduced_words(w).size();
    }
    return result;
}

#define WEAKINV_INSTANTIATE_WSET(E)                                                           \
    template std::set<Permutation> chain_products(const WeakOrderPoset<E>&, std::size_t);     \
    template WSet wset_oracle(const WeakOrderPoset<E>&, std::size_t);                         \
    template std::vector<WSet> wset_oracle_all(const WeakOrderPoset<E>&);                     \
    template ChainCountIdentity chain_count_identity(const WeakOrderPoset<E>&, std::size_t);

WEAKINV_INSTANTIATE_WSET(Involution)
WEAKINV_INSTANTIATE_WSET(FpfInvolution)
WEAKINV_INSTANTIATE_WSET(Clan)

#undef WEAKINV_INSTANTIATE_WSET

}  // namespace weakinv
