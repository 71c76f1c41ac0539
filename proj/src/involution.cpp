#include "weakinv/involution.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace weakinv {

namespace {

std::string vertex_message(const char* what, int v, int n)
{
    return std::string(what) + " " + std::to_string(v) + " (n = " + std::to_string(n) + ")";
}

void check_generator(int i, int n)
{
    if (i < 1 || i > n - 1) {
        throw std::out_of_range("generator index s_" + std::to_string(i) +
                                " out of range for n = " + std::to_string(n));
    }
}

std::vector<int> partner_array(int n, const std::vector<TwoCycle>& cycles)
{
    if (n < 1) {
        throw std::invalid_argument("involution requires n >= 1");
    }
    std::vector<int> partner(static_cast<std::size_t>(n), 0);
    auto claim = [&](int v, int other) {
        if (v < 1 || v > n) {
            throw std::invalid_argument(vertex_message("vertex out of range:", v, n));
        }
        if (partner[static_cast<std::size_t>(v - 1)] != 0) {
            throw std::invalid_argument(vertex_message("vertex reused:", v, n));
        }
        partner[static_cast<std::size_t>(v - 1)] = other;
    };
    for (const auto& [a, b] : cycles) {
        if (a == b) {
            throw std::invalid_argument("degenerate cycle (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        }
        claim(a, b);
        claim(b, a);
    }
    for (int v = 1; v <= n; ++v) {
        if (partner[static_cast<std::size_t>(v - 1)] == 0) {
            partner[static_cast<std::size_t>(v - 1)] = v;
        }
    }
    return partner;
}

// Fixed points in increasing order paired with every sign pattern having
// `plus` plus signs.
void for_each_sign_pattern(int fixed_count, int plus, const std::function<void(const std::vector<Sign>&)>& emit)
{
    std::vector<Sign> signs;
    std::function<void(int, int)> rec = [&](int remaining, int plus_left) {
        if (remaining == 0) {
            if (plus_left == 0) {
                emit(signs);
            }
            return;
        }
        if (plus_left > remaining || plus_left < 0) {
            return;
        }
        signs.push_back(Sign::plus);
        rec(remaining - 1, plus_left - 1);
        signs.back() = Sign::minus;
        rec(remaining - 1, plus_left);
        signs.pop_back();
    };
    rec(fixed_count, plus);
}

}  // namespace

// --- Involution -----------------------------------------------------------

Involution::Involution(int n, std::vector<TwoCycle> cycles) : partner_(partner_array(n, cycles)) {}

Involution Involution::identity(int n) { return Involution(n, {}); }

std::vector<TwoCycle> Involution::cycles() const
{
    std::vector<TwoCycle> result;
    for (int v = 1; v <= size(); ++v) {
        if (partner(v) > v) {
            result.push_back({v, partner(v)});
        }
    }
    return result;
}

std::vector<int> Involution::fixed_points() const
{
    std::vector<int> result;
    for (int v = 1; v <= size(); ++v) {
        if (is_fixed(v)) {
            result.push_back(v);
        }
    }
    return result;
}

int Involution::cycle_count() const
{
    int k = 0;
    for (int v = 1; v <= size(); ++v) {
        k += partner(v) > v ? 1 : 0;
    }
    return k;
}

Permutation Involution::to_permutation() const { return Permutation(partner_); }

Involution standard_form(const Permutation& u)
{
    for (int i = 1; i <= u.size(); ++i) {
        if (u(u(i)) != i) {
            throw std::invalid_argument("not an involution: w(w(" + std::to_string(i) +
                                        ")) = " + std::to_string(u(u(i))));
        }
    }
    return Involution(u.word());
}

// --- FpfInvolution --------------------------------------------------------

FpfInvolution::FpfInvolution(Involution base) : base_(std::move(base))
{
    for (int v = 1; v <= base_.size(); ++v) {
        if (base_.is_fixed(v)) {
            throw std::invalid_argument("fixed-point-free involution has fixed point " +
                                        std::to_string(v));
        }
    }
}

FpfInvolution::FpfInvolution(int n, std::vector<TwoCycle> cycles)
    : FpfInvolution(Involution(n, std::move(cycles)))
{
}

// --- Clan -----------------------------------------------------------------

Clan::Clan(int n, std::vector<TwoCycle> cycles, std::vector<SignedPoint> signed_points)
    : base_(n, std::move(cycles)), signs_(static_cast<std::size_t>(n), 0)
{
    for (const auto& [v, s] : signed_points) {
        if (v < 1 || v > n) {
            throw std::invalid_argument(vertex_message("vertex out of range:", v, n));
        }
        if (!base_.is_fixed(v) || signs_[static_cast<std::size_t>(v - 1)] != 0) {
            throw std::invalid_argument(vertex_message("vertex reused:", v, n));
        }
        signs_[static_cast<std::size_t>(v - 1)] = static_cast<std::int8_t>(s);
    }
    for (int v = 1; v <= n; ++v) {
        if (base_.is_fixed(v) && signs_[static_cast<std::size_t>(v - 1)] == 0) {
            throw std::invalid_argument(vertex_message("clan vertex missing:", v, n));
        }
    }
    validate();
}

Clan::Clan(Involution base, const std::vector<Sign>& signs)
    : base_(std::move(base)), signs_(static_cast<std::size_t>(base_.size()), 0)
{
    const auto fixed = base_.fixed_points();
    if (fixed.size() != signs.size()) {
        throw std::invalid_argument("clan needs " + std::to_string(fixed.size()) +
                                    " signs, got " + std::to_string(signs.size()));
    }
    for (std::size_t j = 0; j < fixed.size(); ++j) {
        signs_[static_cast<std::size_t>(fixed[j] - 1)] = static_cast<std::int8_t>(signs[j]);
    }
    validate();
}

void Clan::validate() const
{
    if (p() < 1 || q() < 1) {
        throw std::invalid_argument("clan must have p >= 1 and q >= 1, got p = " +
                                    std::to_string(p()) + ", q = " + std::to_string(q()));
    }
}

std::optional<Sign> Clan::sign(int v) const
{
    const auto s = signs_[static_cast<std::size_t>(v - 1)];
    if (s == 0) {
        return std::nullopt;
    }
    return static_cast<Sign>(s);
}

std::vector<SignedPoint> Clan::signed_points() const
{
    std::vector<SignedPoint> result;
    for (int v = 1; v <= size(); ++v) {
        if (auto s = sign(v)) {
            result.push_back({v, *s});
        }
    }
    return result;
}

int Clan::plus_count() const
{
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), std::int8_t{1}));
}

int Clan::minus_count() const
{
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), std::int8_t{-1}));
}

// --- ranks ----------------------------------------------------------------

int rank_involution(const Involution& pi)
{
    return (length(pi.to_permutation()) + pi.cycle_count()) / 2;
}

int rank_fpf(const FpfInvolution& pi)
{
    std::vector<int> flat;
    for (const auto& [a, b] : pi.cycles()) {
        flat.push_back(a);
        flat.push_back(b);
    }
    return length(Permutation(std::move(flat)));
}

int rank_clan(const Clan& pi) { return pi.p() * pi.q() - rank_involution(pi.base()); }

// --- monoid action --------------------------------------------------------

Involution rs_step_involution(int i, const Involution& pi)
{
    check_generator(i, pi.size());
    const Permutation u = pi.to_permutation();
    const Permutation conjugate = apply_simple_left(i, apply_simple_right(i, u));
    if (length(conjugate) == length(u) + 2) {
        return standard_form(conjugate);
    }
    if (pi.is_fixed(i) && pi.is_fixed(i + 1)) {
        return standard_form(apply_simple_left(i, u));
    }
    return pi;
}

FpfInvolution rs_step_fpf(int i, const FpfInvolution& pi)
{
    check_generator(i, pi.size());
    const Permutation u = pi.base().to_permutation();
    const Permutation conjugate = apply_simple_left(i, apply_simple_right(i, u));
    if (length(conjugate) == length(u) + 2) {
        return FpfInvolution(standard_form(conjugate));
    }
    return pi;
}

Involution rs_word_action(const ReducedWord& word, const Involution& pi)
{
    Involution result = pi;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
        result = rs_step_involution(*it, result);
    }
    return result;
}

Involution rs_word_action(const Permutation& w, const Involution& pi)
{
    if (w.size() != pi.size()) {
        throw std::invalid_argument("rs_word_action: size mismatch");
    }
    return rs_word_action(first_reduced_word(w), pi);
}

// --- distinguished elements -----------------------------------------------

Involution bottom_involution(int n) { return Involution::identity(n); }

FpfInvolution bottom_fpf(int n)
{
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("fixed-point-free involutions need even n >= 2, got n = " +
                                    std::to_string(n));
    }
    std::vector<TwoCycle> cycles;
    for (int a = 1; a < n; a += 2) {
        cycles.push_back({a, a + 1});
    }
    return FpfInvolution(n, std::move(cycles));
}

Clan bottom_clan(int p, int q)
{
    if (p < 1 || q < 1) {
        throw std::invalid_argument("clans need p >= 1 and q >= 1, got p = " +
                                    std::to_string(p) + ", q = " + std::to_string(q));
    }
    const int n = p + q;
    const int m = std::min(p, q);
    std::vector<TwoCycle> cycles;
    for (int a = 1; a <= m; ++a) {
        cycles.push_back({a, n + 1 - a});
    }
    const Sign majority = p >= q ? Sign::plus : Sign::minus;
    std::vector<SignedPoint> points;
    for (int v = m + 1; v <= n - m; ++v) {
        points.push_back({v, majority});
    }
    return Clan(n, std::move(cycles), std::move(points));
}

std::vector<Clan> maximal_clans(int p, int q)
{
    if (p < 1 || q < 1) {
        throw std::invalid_argument("clans need p >= 1 and q >= 1");
    }
    std::vector<Clan> result;
    const Involution id = Involution::identity(p + q);
    for_each_sign_pattern(p + q, p, [&](const std::vector<Sign>& signs) {
        result.emplace_back(id, signs);
    });
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Involution> all_involutions(int n)
{
    std::vector<Involution> result;
    std::vector<TwoCycle> cycles;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::function<void(int)> rec = [&](int v) {
        while (v <= n && used[static_cast<std::size_t>(v)]) {
            ++v;
        }
        if (v > n) {
            result.emplace_back(n, cycles);
            return;
        }
        used[static_cast<std::size_t>(v)] = true;
        rec(v + 1);
        for (int w = v + 1; w <= n; ++w) {
            if (!used[static_cast<std::size_t>(w)]) {
                used[static_cast<std::size_t>(w)] = true;
                cycles.push_back({v, w});
                rec(v + 1);
                cycles.pop_back();
                used[static_cast<std::size_t>(w)] = false;
            }
        }
        used[static_cast<std::size_t>(v)] = false;
    };
    rec(1);
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<FpfInvolution> all_fpf_involutions(int n)
{
    std::vector<FpfInvolution> result;
    for (const Involution& pi : all_involutions(n)) {
        if (pi.fixed_points().empty()) {
            result.emplace_back(pi);
        }
    }
    return result;
}

std::vector<Clan> all_clans(int p, int q)
{
    if (p < 1 || q < 1) {
        throw std::invalid_argument("clans need p >= 1 and q >= 1");
    }
    std::vector<Clan> result;
    for (const Involution& pi : all_involutions(p + q)) {
        const int k = pi.cycle_count();
        if (k > std::min(p, q)) {
            continue;
        }
        for_each_sign_pattern(p + q - 2 * k, p - k, [&](const std::vector<Sign>& signs) {
            result.emplace_back(pi, signs);
        });
    }
    std::sort(result.begin(), result.end());
    return result;
}

// --- text -----------------------------------------------------------------

char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

std::string to_string(const Involution& pi)
{
    const auto cycles = pi.cycles();
    if (cycles.empty()) {
        return "id";
    }
    std::string text;
    for (const auto& [a, b] : cycles) {
        text += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return text;
}

std::string to_string(const FpfInvolution& pi) { return to_string(pi.base()); }

std::string to_string(const Clan& pi)
{
    std::string text;
    for (int v = 1; v <= pi.size(); ++v) {
        const int w = pi.base().partner(v);
        if (w > v) {
            text += "(" + std::to_string(v) + "," + std::to_string(w) + ")";
        } else if (w == v) {
            text += "(" + std::to_string(v) + sign_char(*pi.sign(v)) + ")";
        }
    }
    return text;
}

}  // namespace weakinv
