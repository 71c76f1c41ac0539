#pragma once

// Involutions, fixed-point-free involutions and clans (involutions whose
// fixed points carry a sign), their rank functions, and the
// Richardson-Springer monoid action m(s_i) on involutions.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakinv/permutation.hpp"

namespace weakinv {

/// A 2-cycle (a, b); stored with a < b.
struct TwoCycle {
    int a;
    int b;

    friend bool operator==(const TwoCycle&, const TwoCycle&) = default;
    friend auto operator<=>(const TwoCycle&, const TwoCycle&) = default;
};

class Involution {
public:
    /// Cycles may be given in any order and orientation; they are brought
    /// into standard form. Throws std::invalid_argument on a repeated or
    /// out-of-range vertex or a degenerate cycle (a, a).
    Involution(int n, std::vector<TwoCycle> cycles);

    static Involution identity(int n);

    int size() const noexcept { return static_cast<int>(partner_.size()); }

    /// pi(v); equals v for a fixed point.
    int partner(int v) const { return partner_[static_cast<std::size_t>(v - 1)]; }
    bool is_fixed(int v) const { return partner(v) == v; }

    /// Standard form: a_i < b_i and a_1 < a_2 < ... < a_k.
    std::vector<TwoCycle> cycles() const;
    std::vector<int> fixed_points() const;
    int cycle_count() const;

    Permutation to_permutation() const;

    friend bool operator==(const Involution&, const Involution&) = default;
    friend auto operator<=>(const Involution&, const Involution&) = default;

private:
    explicit Involution(std::vector<int> partner) : partner_(std::move(partner)) {}
    friend Involution standard_form(const Permutation& u);

    std::vector<int> partner_;
};

class FpfInvolution {
public:
    /// Throws std::invalid_argument if `base` has a fixed point.
    explicit FpfInvolution(Involution base);
    FpfInvolution(int n, std::vector<TwoCycle> cycles);

    const Involution& base() const noexcept { return base_; }
    int size() const noexcept { return base_.size(); }
    std::vector<TwoCycle> cycles() const { return base_.cycles(); }

    friend bool operator==(const FpfInvolution&, const FpfInvolution&) = default;
    friend auto operator<=>(const FpfInvolution&, const FpfInvolution&) = default;

private:
    Involution base_;
};

enum class Sign : std::int8_t { minus = -1, plus = 1 };

struct SignedPoint {
    int vertex;
    Sign sign;
};

class Clan {
public:
    /// Every vertex of [n] must appear exactly once, either in a cycle or as
    /// a signed point; p and q must both be positive.
    Clan(int n, std::vector<TwoCycle> cycles, std::vector<SignedPoint> signed_points);

    /// `signs` lists the signs of base's fixed points in increasing order.
    Clan(Involution base, const std::vector<Sign>& signs);

    const Involution& base() const noexcept { return base_; }
    int size() const noexcept { return base_.size(); }

    /// Sign of a fixed point, nullopt for a matched vertex.
    std::optional<Sign> sign(int v) const;
    std::vector<SignedPoint> signed_points() const;

    int plus_count() const;
    int minus_count() const;
    int p() const { return plus_count() + base_.cycle_count(); }
    int q() const { return minus_count() + base_.cycle_count(); }
    int charge() const { return plus_count() - minus_count(); }

    friend bool operator==(const Clan&, const Clan&) = default;
    friend auto operator<=>(const Clan&, const Clan&) = default;

private:
    void validate() const;

    Involution base_;
    std::vector<std::int8_t> signs_;  // per vertex; 0 when matched
};

/// Standard form of u; throws std::invalid_argument naming an index i with
/// u(u(i)) != i when u is not an involution.
Involution standard_form(const Permutation& u);

/// L(pi) = (l(pi) + k) / 2.
int rank_involution(const Involution& pi);

/// Inversions of the flattened word (a_1, b_1, ..., a_k, b_k); equals L(pi) - k.
int rank_fpf(const FpfInvolution& pi);

/// pq - L of the underlying involution.
int rank_clan(const Clan& pi);

/// m(s_i) . pi on the set of all involutions.
Involution rs_step_involution(int i, const Involution& pi);

/// m(s_i) . pi restricted to fixed-point-free involutions (conjugation only).
FpfInvolution rs_step_fpf(int i, const FpfInvolution& pi);

/// m(w) . pi using the letters of `word`, rightmost letter acting first.
Involution rs_word_action(const ReducedWord& word, const Involution& pi);

/// m(w) . pi through one reduced word of w.
Involution rs_word_action(const Permutation& w, const Involution& pi);

Involution bottom_involution(int n);

/// (1,2)(3,4)...(n-1,n); n must be even and positive.
FpfInvolution bottom_fpf(int n);

/// (1,n)(2,n-1)...(m,n+1-m), m = min(p,q), middle vertices carrying the majority sign.
Clan bottom_clan(int p, int q);

/// The C(p+q, p) sign assignments of the identity, sorted.
std::vector<Clan> maximal_clans(int p, int q);

/// Exhaustive enumerations, sorted; used as independent element-count oracles.
std::vector<Involution> all_involutions(int n);
std::vector<FpfInvolution> all_fpf_involutions(int n);
std::vector<Clan> all_clans(int p, int q);

/// "(1,4)(2,3)"; the identity is written "id".
std::string to_string(const Involution& pi);
std::string to_string(const FpfInvolution& pi);

/// "(1,6)(2,3)(4+)(5-)(7+)": cycles and signed points ordered by least vertex.
std::string to_string(const Clan& pi);

char sign_char(Sign s);

}  // namespace weakinv
