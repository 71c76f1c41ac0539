#pragma once

// Matchings and signed matchings on [n]: crossing and nesting statistics,
// and the upward covers of the three weak orders, each classified by the
// local picture at vertices i, i+1.

#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "weakinv/involution.hpp"

namespace weakinv {

enum class CoverType { IA1, IA2, IB, IC1, IC2, II };

std::string_view to_string(CoverType type);
std::optional<CoverType> parse_cover_type(std::string_view text);

/// A strand {low < high}.
using Strand = TwoCycle;

class Matching {
public:
    Matching(int n, std::vector<Strand> strands);

    int size() const noexcept { return static_cast<int>(partner_.size()); }

    /// The vertex matched with v, or v itself if v is isolated.
    int partner(int v) const { return partner_[static_cast<std::size_t>(v - 1)]; }
    bool is_isolated(int v) const { return partner(v) == v; }

    /// Sorted by low endpoint.
    std::vector<Strand> strands() const;
    std::vector<int> isolated() const;

    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;

private:
    std::vector<int> partner_;
};

class SignedMatching {
public:
    SignedMatching(Matching matching, std::vector<SignedPoint> isolated_signed);

    const Matching& matching() const noexcept { return matching_; }
    int size() const noexcept { return matching_.size(); }
    int partner(int v) const { return matching_.partner(v); }
    bool is_isolated(int v) const { return matching_.is_isolated(v); }

    /// Sign of an isolated vertex; throws std::logic_error for a matched one.
    Sign sign(int v) const;
    std::vector<SignedPoint> isolated_signed() const;

    friend bool operator==(const SignedMatching&, const SignedMatching&) = default;
    friend auto operator<=>(const SignedMatching&, const SignedMatching&) = default;

private:
    Matching matching_;
    std::vector<Sign> signs_;  // per vertex, meaningful only when isolated
};

Matching matching_of(const Involution& pi);
Involution involution_of(const Matching& m);
SignedMatching signed_matching_of(const Clan& pi);
Clan clan_of(const SignedMatching& m);

/// Strand pairs i < k < j < l.
int crossings(const Matching& m);
/// Strand pairs i < k < l < j.
int nestings(const Matching& m);
/// Sum of strand lengths minus the number of crossings.
int matching_length(const Matching& m);

struct MatchingCover {
    int label;
    Matching target;
    CoverType type;
};

struct SignedMatchingCover {
    int label;
    SignedMatching target;
    CoverType type;
};

/// Type of the involution cover lower <_i m(s_i).lower read off the local
/// configuration at i, i+1 of `lower`; nullopt when m(s_i) fixes lower.
std::optional<CoverType> classify_involution_cover(const Matching& lower, int i);

/// Upward covers in weak order on all involutions, ordered by label.
std::vector<MatchingCover> upward_covers_involution(const Matching& m);

/// Upward covers in weak order on fixed-point-free involutions; throws
/// std::invalid_argument if m has an isolated vertex.
std::vector<MatchingCover> upward_covers_fpf(const Matching& m);

/// Upward covers in weak order on clans, ordered by label; a strand {i,i+1}
/// yields two covers, signs (+,-) before (-,+).
std::vector<SignedMatchingCover> upward_covers_clan(const SignedMatching& m);

}  // namespace weakinv
