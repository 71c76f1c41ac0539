#include "weakinv/matching.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace weakinv {

namespace {

constexpr std::array<std::pair<CoverType, std::string_view>, 6> cover_type_names{{
    {CoverType::IA1, "IA1"},
    {CoverType::IA2, "IA2"},
    {CoverType::IB, "IB"},
    {CoverType::IC1, "IC1"},
    {CoverType::IC2, "IC2"},
    {CoverType::II, "II"},
}};

// Swaps the roles of vertices i and i+1 in a partner array (conjugation by s_i).
std::vector<int> conjugate_partners(const Matching& m, int i)
{
    auto swap_vertex = [i](int v) { return v == i ? i + 1 : v == i + 1 ? i : v; };
    std::vector<int> partner(static_cast<std::size_t>(m.size()));
    for (int v = 1; v <= m.size(); ++v) {
        partner[static_cast<std::size_t>(swap_vertex(v) - 1)] = swap_vertex(m.partner(v));
    }
    return partner;
}

std::vector<Strand> strands_of(const std::vector<int>& partner)
{
    std::vector<Strand> strands;
    for (int v = 1; v <= static_cast<int>(partner.size()); ++v) {
        const int w = partner[static_cast<std::size_t>(v - 1)];
        if (w > v) {
            strands.push_back({v, w});
        }
    }
    return strands;
}

}  // namespace

std::string_view to_string(CoverType type)
{
    for (const auto& [t, name] : cover_type_names) {
        if (t == type) {
            return name;
        }
    }
    return "?";
}

std::optional<CoverType> parse_cover_type(std::string_view text)
{
    for (const auto& [t, name] : cover_type_names) {
        if (name == text) {
            return t;
        }
    }
    return std::nullopt;
}

// --- Matching -------------------------------------------------------------

Matching::Matching(int n, std::vector<Strand> strands)
{
    // Same partition rules as an involution.
    const Involution pi(n, std::move(strands));
    partner_ = pi.to_permutation().word();
}

std::vector<Strand> Matching::strands() const { return strands_of(partner_); }

std::vector<int> Matching::isolated() const
{
    std::vector<int> result;
    for (int v = 1; v <= size(); ++v) {
        if (is_isolated(v)) {
            result.push_back(v);
        }
    }
    return result;
}

SignedMatching::SignedMatching(Matching matching, std::vector<SignedPoint> isolated_signed)
    : matching_(std::move(matching)), signs_(static_cast<std::size_t>(matching_.size()), Sign::plus)
{
    std::vector<bool> seen(static_cast<std::size_t>(matching_.size()), false);
    for (const auto& [v, s] : isolated_signed) {
        if (v < 1 || v > matching_.size() || !matching_.is_isolated(v) ||
            seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("sign on vertex " + std::to_string(v) +
                                        " which is not a free isolated vertex");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
        signs_[static_cast<std::size_t>(v - 1)] = s;
    }
    for (int v : matching_.isolated()) {
        if (!seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("isolated vertex " + std::to_string(v) + " has no sign");
        }
    }
}

Sign SignedMatching::sign(int v) const
{
    if (!is_isolated(v)) {
        throw std::logic_error("vertex " + std::to_string(v) + " is matched and carries no sign");
    }
    return signs_[static_cast<std::size_t>(v - 1)];
}

std::vector<SignedPoint> SignedMatching::isolated_signed() const
{
    std::vector<SignedPoint> result;
    for (int v : matching_.isolated()) {
        result.push_back({v, sign(v)});
    }
    return result;
}

Matching matching_of(const Involution& pi) { return Matching(pi.size(), pi.cycles()); }

Involution involution_of(const Matching& m) { return Involution(m.size(), m.strands()); }

SignedMatching signed_matching_of(const Clan& pi)
{
    return SignedMatching(matching_of(pi.base()), pi.signed_points());
}

Clan clan_of(const SignedMatching& m)
{
    return Clan(m.size(), m.matching().strands(), m.isolated_signed());
}

// --- statistics -----------------------------------------------------------

int crossings(const Matching& m)
{
    const auto strands = m.strands();
    int count = 0;
    for (std::size_t x = 0; x < strands.size(); ++x) {
        for (std::size_t y = x + 1; y < strands.size(); ++y) {
            // strands are sorted by low endpoint, so strands[x].a < strands[y].a
            const auto [i, j] = strands[x];
            const auto [k, l] = strands[y];
            if (i < k && k < j && j < l) {
                ++count;
            }
        }
    }
    return count;
}

int nestings(const Matching& m)
{
    const auto strands = m.strands();
    int count = 0;
    for (std::size_t x = 0; x < strands.size(); ++x) {
        for (std::size_t y = x + 1; y < strands.size(); ++y) {
            const auto [i, j] = strands[x];
            const auto [k, l] = strands[y];
            if (i < k && l < j) {
                ++count;
            }
        }
    }
    return count;
}

int matching_length(const Matching& m)
{
    int total = 0;
    for (const auto& [a, b] : m.strands()) {
        total += b - a;
    }
    return total - crossings(m);
}

// --- covers ---------------------------------------------------------------

std::optional<CoverType> classify_involution_cover(const Matching& lower, int i)
{
    const int x = i;
    const int y = i + 1;
    const int px = lower.partner(x);
    const int py = lower.partner(y);
    const bool x_free = px == x;
    const bool y_free = py == y;

    if (x_free && y_free) {
        return CoverType::II;
    }
    if (px == y) {
        return std::nullopt;
    }
    if (y_free) {
        // strand {j, i} stretches to {j, i+1}
        return px < x ? std::optional{CoverType::IA1} : std::nullopt;
    }
    if (x_free) {
        // strand {i+1, j} stretches to {i, j}
        return py > y ? std::optional{CoverType::IA2} : std::nullopt;
    }
    if (px < x && py > y) {
        return CoverType::IB;
    }
    if (px > y && py > y) {
        // {i, px} and {i+1, py} crossing at their left ends
        return px < py ? std::optional{CoverType::IC1} : std::nullopt;
    }
    if (px < x && py < x) {
        // {px, i} and {py, i+1} crossing at their right ends
        return px < py ? std::optional{CoverType::IC2} : std::nullopt;
    }
    return std::nullopt;
}

std::vector<MatchingCover> upward_covers_involution(const Matching& m)
{
    std::vector<MatchingCover> covers;
    const Involution pi = involution_of(m);
    for (int i = 1; i < m.size(); ++i) {
        const Involution next = rs_step_involution(i, pi);
        if (next == pi) {
            continue;
        }
        const auto type = classify_involution_cover(m, i);
        if (!type) {
            throw std::logic_error("monoid step s_" + std::to_string(i) + " on " + to_string(pi) +
                                   " matches no cover pattern");
        }
        covers.push_back({i, matching_of(next), *type});
    }
    return covers;
}

std::vector<MatchingCover> upward_covers_fpf(const Matching& m)
{
    if (!m.isolated().empty()) {
        throw std::invalid_argument("fixed-point-free covers need a perfect matching");
    }
    std::vector<MatchingCover> covers;
    const FpfInvolution pi(involution_of(m));
    for (int i = 1; i < m.size(); ++i) {
        const FpfInvolution next = rs_step_fpf(i, pi);
        if (next == pi) {
            continue;
        }
        const auto type = classify_involution_cover(m, i);
        if (!type || *type == CoverType::IA1 || *type == CoverType::IA2 || *type == CoverType::II) {
            throw std::logic_error("fixed-point-free cover of unexpected type");
        }
        covers.push_back({i, matching_of(next.base()), *type});
    }
    return covers;
}

std::vector<SignedMatchingCover> upward_covers_clan(const SignedMatching& m)
{
    std::vector<SignedMatchingCover> covers;
    const Matching& base = m.matching();
    const int n = m.size();

    // Moves that shorten strands: swap the roles of i and i+1, carrying any
    // sign along with its vertex.
    auto swapped = [&](int i, CoverType type) {
        const auto partner = conjugate_partners(base, i);
        std::vector<SignedPoint> points;
        for (const auto& [v, s] : m.isolated_signed()) {
            points.push_back({v == i ? i + 1 : v == i + 1 ? i : v, s});
        }
        covers.push_back({i, SignedMatching(Matching(n, strands_of(partner)), std::move(points)), type});
    };

    for (int i = 1; i < n; ++i) {
        const int x = i;
        const int y = i + 1;
        const int px = base.partner(x);
        const int py = base.partner(y);
        const bool x_free = px == x;
        const bool y_free = py == y;

        if (x_free && y_free) {
            continue;
        }
        if (px == y) {
            // strand {i, i+1} becomes a pair of opposite signs
            std::vector<Strand> strands;
            for (const auto& s : base.strands()) {
                if (s.a != x) {
                    strands.push_back(s);
                }
            }
            for (const auto& [left, right] : {std::pair{Sign::plus, Sign::minus},
                                              std::pair{Sign::minus, Sign::plus}}) {
                auto points = m.isolated_signed();
                points.push_back({x, left});
                points.push_back({y, right});
                covers.push_back({i, SignedMatching(Matching(n, strands), std::move(points)),
                                  CoverType::II});
            }
            continue;
        }
        if (x_free) {
            if (py < x) {
                swapped(i, CoverType::IA1);  // {j, i+1} shrinks to {j, i}
            }
            continue;
        }
        if (y_free) {
            if (px > y) {
                swapped(i, CoverType::IA2);  // {i, j} shrinks to {i+1, j}
            }
            continue;
        }
        if (px > y && py < x) {
            swapped(i, CoverType::IB);  // crossing {k, i+1}, {i, l} comes apart
        } else if (px > y && py > y && py < px) {
            swapped(i, CoverType::IC1);  // {i, l} nests around {i+1, j}
        } else if (px < x && py < x && py < px) {
            swapped(i, CoverType::IC2);  // {k, i+1} nests around {j, i}
        }
    }
    return covers;
}

}  // namespace weakinv
