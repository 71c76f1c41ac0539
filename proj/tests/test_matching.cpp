#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "weakinv/involution.hpp"
#include "weakinv/matching.hpp"
#include "weakinv/notation.hpp"

using namespace weakinv;

namespace {

Matching M(std::string_view text, int n) { return matching_of(parse_involution(text, n)); }
SignedMatching SM(std::string_view text) { return signed_matching_of(parse_clan(text)); }

std::vector<int> strand_lengths(const Matching& m)
{
    std::vector<int> out;
    for (const auto& s : m.strands()) {
        out.push_back(s.b - s.a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int total_length(const Matching& m)
{
    int sum = 0;
    for (int d : strand_lengths(m)) {
        sum += d;
    }
    return sum;
}

std::vector<int> labels_of(const auto& covers)
{
    std::vector<int> out;
    for (const auto& c : covers) {
        out.push_back(c.label);
    }
    return out;
}

Clan flip_signs(const Clan& c)
{
    std::vector<SignedPoint> points;
    for (auto point : c.signed_points()) {
        point.sign = point.sign == Sign::plus ? Sign::minus : Sign::plus;
        points.push_back(point);
    }
    return Clan(c.size(), c.base().cycles(), points);
}

// Multiset difference summary: lengths only in `after`, lengths only in `before`.
std::pair<std::vector<int>, std::vector<int>> length_change(const Matching& before,
                                                            const Matching& after)
{
    std::vector<int> a = strand_lengths(before);
    std::vector<int> b = strand_lengths(after);
    std::vector<int> gained;
    std::vector<int> lost;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(gained));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(lost));
    return {gained, lost};
}

}  // namespace

TEST_CASE("matching_of")
{
    const Matching a = M("(1,3)(2,5)", 5);
    CHECK(a.strands() == std::vector<Strand>{{1, 3}, {2, 5}});
    CHECK(a.isolated() == std::vector<int>{4});

    const Matching b = M("id", 3);
    CHECK(b.strands().empty());
    CHECK(b.isolated() == std::vector<int>{1, 2, 3});

    CHECK(M("(1,2)(3,4)", 4).strands() == std::vector<Strand>{{1, 2}, {3, 4}});
    CHECK_THROWS_AS(Matching(4, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("signed matchings carry signs on isolated vertices only")
{
    const SignedMatching m = SM("(1,6)(2,3)(4+)(5-)(7+)");
    CHECK(m.sign(4) == Sign::plus);
    CHECK(m.sign(5) == Sign::minus);
    CHECK_THROWS_AS(m.sign(1), std::logic_error);
    CHECK(clan_of(m) == parse_clan("(1,6)(2,3)(4+)(5-)(7+)"));
}

TEST_CASE("crossings and nestings")
{
    CHECK(crossings(M("(1,3)(2,4)", 4)) == 1);
    CHECK(nestings(M("(1,3)(2,4)", 4)) == 0);
    CHECK(crossings(M("(1,4)(2,3)", 4)) == 0);
    CHECK(nestings(M("(1,4)(2,3)", 4)) == 1);
    CHECK(crossings(M("(1,6)(2,5)(3,4)", 6)) == 0);
    CHECK(nestings(M("(1,6)(2,5)(3,4)", 6)) == 3);
}

TEST_CASE("matching_length")
{
    CHECK(matching_length(M("id", 4)) == 0);
    CHECK(matching_length(M("(1,3)(2,4)", 4)) == 3);
    CHECK(matching_length(M("(1,3)(2,4)", 4)) == rank_involution(parse_involution("(1,3)(2,4)", 4)));
    CHECK(matching_length(M("(1,4)(2,3)", 4)) == 4);
}

TEST_CASE("upward_covers_involution")
{
    const auto a = upward_covers_involution(M("(1,2)", 4));
    REQUIRE(a.size() == 2);
    CHECK(a[0].label == 2);
    CHECK(a[0].target == M("(1,3)", 4));
    CHECK(a[0].type == CoverType::IA1);
    CHECK(a[1].label == 3);
    CHECK(a[1].target == M("(1,2)(3,4)", 4));
    CHECK(a[1].type == CoverType::II);

    const auto b = upward_covers_involution(M("id", 2));
    REQUIRE(b.size() == 1);
    CHECK(b[0].label == 1);
    CHECK(b[0].target == M("(1,2)", 2));
    CHECK(b[0].type == CoverType::II);

    const auto c = upward_covers_involution(M("(1,3)(2,4)", 4));
    REQUIRE(c.size() == 2);
    CHECK(labels_of(c) == std::vector<int>{1, 3});
    CHECK(c[0].target == M("(1,4)(2,3)", 4));
    CHECK(c[1].target == M("(1,4)(2,3)", 4));
    CHECK(c[0].type == CoverType::IC1);
    CHECK(c[1].type == CoverType::IC2);

    CHECK(upward_covers_involution(M("(1,4)(2,3)", 4)).empty());
}

TEST_CASE("upward_covers_fpf")
{
    const auto a = upward_covers_fpf(M("(1,2)(3,4)(5,6)", 6));
    CHECK(labels_of(a) == std::vector<int>{2, 4});

    CHECK(upward_covers_fpf(M("(1,6)(2,5)(3,4)", 6)).empty());

    const auto c = upward_covers_fpf(M("(1,3)(2,4)", 4));
    CHECK(labels_of(c) == std::vector<int>{1, 3});
    for (const auto& cover : c) {
        CHECK(cover.target == M("(1,4)(2,3)", 4));
    }

    CHECK_THROWS_AS(upward_covers_fpf(M("(1,2)", 3)), std::invalid_argument);
}

TEST_CASE("upward_covers_clan")
{
    const auto a = upward_covers_clan(SM("(1,4)(2,3)"));
    REQUIRE(a.size() == 4);
    CHECK(a[0].label == 1);
    CHECK(a[0].target == SM("(1,3)(2,4)"));
    CHECK(a[0].type == CoverType::IC1);
    CHECK(a[1].label == 2);
    CHECK(a[1].target == SM("(1,4)(2+)(3-)"));
    CHECK(a[1].type == CoverType::II);
    CHECK(a[2].label == 2);
    CHECK(a[2].target == SM("(1,4)(2-)(3+)"));
    CHECK(a[2].type == CoverType::II);
    CHECK(a[3].label == 3);
    CHECK(a[3].target == SM("(1,3)(2,4)"));
    CHECK(a[3].type == CoverType::IC2);

    for (const auto& top : maximal_clans(2, 2)) {
        CHECK(upward_covers_clan(signed_matching_of(top)).empty());
    }

    const auto c = upward_covers_clan(SM("(1,4)(2+)(3-)"));
    CHECK(labels_of(c) == std::vector<int>{1, 3});
    REQUIRE(c.size() == 2);
    CHECK(c[0].target == SM("(1+)(2,4)(3-)"));
    CHECK(c[1].target == SM("(1,3)(2+)(4-)"));
}

TEST_CASE("cover type names round trip")
{
    for (CoverType t : {CoverType::IA1, CoverType::IA2, CoverType::IB, CoverType::IC1,
                        CoverType::IC2, CoverType::II}) {
        CHECK(parse_cover_type(to_string(t)) == t);
    }
    CHECK_FALSE(parse_cover_type("IZ").has_value());
}

TEST_CASE("property: matching length equals involution rank")
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto& pi : all_involutions(n)) {
            CHECK(matching_length(matching_of(pi)) == rank_involution(pi));
            CHECK(involution_of(matching_of(pi)) == pi);
        }
    }
}

TEST_CASE("property: involution covers raise length by one with the typed local effect")
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto& pi : all_involutions(n)) {
            const Matching m = matching_of(pi);
            for (const auto& cover : upward_covers_involution(m)) {
                const Matching& t = cover.target;
                CHECK(matching_length(t) == matching_length(m) + 1);
                const auto [gained, lost] = length_change(m, t);
                const int dcross = crossings(t) - crossings(m);
                switch (cover.type) {
                case CoverType::II:
                    CHECK(t.strands().size() == m.strands().size() + 1);
                    CHECK(gained == std::vector<int>{1});
                    CHECK(lost.empty());
                    CHECK(dcross == 0);
                    break;
                case CoverType::IA1:
                case CoverType::IA2:
                    CHECK(t.strands().size() == m.strands().size());
                    REQUIRE(gained.size() == 1);
                    REQUIRE(lost.size() == 1);
                    CHECK(gained[0] == lost[0] + 1);
                    CHECK(dcross == 0);
                    break;
                case CoverType::IB:
                    CHECK(t.strands().size() == m.strands().size());
                    CHECK(dcross == 1);
                    CHECK(total_length(t) == total_length(m) + 2);
                    break;
                case CoverType::IC1:
                case CoverType::IC2:
                    CHECK(t.strands().size() == m.strands().size());
                    CHECK(dcross == -1);
                    CHECK(nestings(t) == nestings(m) + 1);
                    CHECK(total_length(t) == total_length(m));
                    break;
                }
            }
        }
    }
}

TEST_CASE("property: involution covers agree with rs steps")
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto& pi : all_involutions(n)) {
            const Matching m = matching_of(pi);
            std::set<std::pair<int, Involution>> from_covers;
            for (const auto& cover : upward_covers_involution(m)) {
                from_covers.emplace(cover.label, involution_of(cover.target));
            }
            std::set<std::pair<int, Involution>> from_steps;
            for (int i = 1; i < n; ++i) {
                const Involution next = rs_step_involution(i, pi);
                CHECK(classify_involution_cover(m, i).has_value() == (next != pi));
                if (next != pi) {
                    from_steps.emplace(i, next);
                }
            }
            CHECK(from_covers == from_steps);
        }
    }
}

TEST_CASE("property: fpf covers are of type IB or IC and match rs steps")
{
    for (int n = 2; n <= 8; n += 2) {
        for (const auto& pi : all_fpf_involutions(n)) {
            const auto covers = upward_covers_fpf(matching_of(pi.base()));
            std::set<std::pair<int, Involution>> from_covers;
            for (const auto& cover : covers) {
                CHECK(cover.type != CoverType::II);
                CHECK(cover.type != CoverType::IA1);
                CHECK(cover.type != CoverType::IA2);
                from_covers.emplace(cover.label, involution_of(cover.target));
                CHECK(rank_fpf(FpfInvolution(involution_of(cover.target))) == rank_fpf(pi) + 1);
            }
            std::set<std::pair<int, Involution>> from_steps;
            for (int i = 1; i < n; ++i) {
                const FpfInvolution next = rs_step_fpf(i, pi);
                if (next != pi) {
                    from_steps.emplace(i, next.base());
                }
            }
            CHECK(from_covers == from_steps);
        }
    }
}

TEST_CASE("property: clan covers raise rank by one and preserve p and q")
{
    for (int total = 2; total <= 7; ++total) {
        for (int p = 1; p < total; ++p) {
            for (const auto& c : all_clans(p, total - p)) {
                for (const auto& cover : upward_covers_clan(signed_matching_of(c))) {
                    const Clan t = clan_of(cover.target);
                    CHECK(rank_clan(t) == rank_clan(c) + 1);
                    CHECK(t.p() == c.p());
                    CHECK(t.q() == c.q());
                    CHECK(t.charge() == c.charge());
                }
            }
        }
    }
}

TEST_CASE("property: clan covers reverse involution covers with the upper type")
{
    for (int total = 2; total <= 6; ++total) {
        for (int p = 1; p < total; ++p) {
            for (const auto& c : all_clans(p, total - p)) {
                const Matching lower = matching_of(c.base());
                for (const auto& cover : upward_covers_clan(signed_matching_of(c))) {
                    const Clan t = clan_of(cover.target);
                    const Involution upper = t.base();
                    CHECK(rs_step_involution(cover.label, upper) == c.base());
                    CHECK(upper != c.base());
                    CHECK(classify_involution_cover(matching_of(upper), cover.label) == cover.type);
                    for (int v = 1; v <= c.size(); ++v) {
                        if (v != cover.label && v != cover.label + 1 && c.base().is_fixed(v)) {
                            CHECK(t.sign(v) == c.sign(v));
                        }
                    }
                    CHECK(lower.size() == c.size());
                }
            }
        }
    }
}

TEST_CASE("property: sign swap is an isomorphism of clan cover graphs")
{
    for (int total = 2; total <= 6; ++total) {
        for (int p = 1; p < total; ++p) {
            for (const auto& c : all_clans(p, total - p)) {
                std::multiset<std::tuple<int, Clan, CoverType>> mapped;
                for (const auto& cover : upward_covers_clan(signed_matching_of(c))) {
                    mapped.emplace(cover.label, flip_signs(clan_of(cover.target)), cover.type);
                }
                std::multiset<std::tuple<int, Clan, CoverType>> direct;
                for (const auto& cover : upward_covers_clan(signed_matching_of(flip_signs(c)))) {
                    direct.emplace(cover.label, clan_of(cover.target), cover.type);
                }
                CHECK(mapped == direct);
            }
        }
    }
}
