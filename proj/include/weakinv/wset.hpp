#pragma once

// W-sets: the permutations s_{j_l} ... s_{j_1} read off labeled maximal
// chains from the bottom element. Direct constructions for each family,
// and a chain-product oracle that works on any materialized poset.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "weakinv/involution.hpp"
#include "weakinv/matching.hpp"
#include "weakinv/permutation.hpp"
#include "weakinv/poset.hpp"

namespace weakinv {

struct WSet {
    std::string target;                // canonical text of the element
    int rank = 0;
    std::vector<Permutation> members;  // lexicographic by one-line word

    std::size_t size() const noexcept { return members.size(); }
    bool contains(const Permutation& w) const;

    friend bool operator==(const WSet&, const WSet&) = default;
};

/// The five positional conditions on w relative to pi's standard form.
/// Length is not checked here.
bool check_conditions_involution(const Permutation& w, const Involution& pi);

/// The same conditions phrased on strands and isolated vertices of m.
bool check_conditions_matching(const Permutation& w, const Matching& m);

/// a_i immediately followed by b_i, and block i before block j whenever
/// i < j and b_i < b_j.
bool check_conditions_fpf(const Permutation& w, const FpfInvolution& pi);

/// Places the (b_i, a_i) pairs in increasing i into adjacent free slots,
/// pruning on the first two conditions, then fills fixed points in order
/// and keeps words of length L(pi) meeting all five conditions.
WSet wset_involution(const Involution& pi);

/// Orderings of the blocks a_i b_i reachable from [a_1, b_1, ..., a_k, b_k]
/// by admissible swaps of adjacent blocks.
WSet wset_fpf(const FpfInvolution& pi);

/// [2,1,4,3,...,n,n-1]; n must be even.
Permutation wstar(int n);

/// Every outcome of the outside-in placement: repeatedly take a strand, or an
/// adjacent opposite-sign pair, not nested in any strand still available,
/// then fill the middle with the leftover same-sign vertices in order.
WSet wset_clan(const Clan& pi);

WSet direct_wset(const Involution& pi);
WSet direct_wset(const FpfInvolution& pi);
WSet direct_wset(const Clan& pi);

/// Distinct products s_{j_l} ... s_{j_1} over all labeled chains from the
/// bottom to x, before any length filter.
template <class Element>
std::set<Permutation> chain_products(const WeakOrderPoset<Element>& poset, std::size_t x);

/// chain_products restricted to length rank(x).
template <class Element>
WSet wset_oracle(const WeakOrderPoset<Element>& poset, std::size_t x);

/// wset_oracle for every element in one pass, indexed like the poset.
template <class Element>
std::vector<WSet> wset_oracle_all(const WeakOrderPoset<Element>& poset);

struct ChainCountIdentity {
    std::uint64_t chains = 0;
    std::uint64_t reduced_words = 0;

    bool equal() const noexcept { return chains == reduced_words; }
};

/// Chain count by DAG dynamic programming against the total number of
/// reduced words over the direct W-set of x.
template <class Element>
ChainCountIdentity chain_count_identity(const WeakOrderPoset<Element>& poset, std::size_t x);

}  // namespace weakinv
