#include "weakinv/notation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <vector>

namespace weakinv {

namespace {

struct ParsedCycles {
    std::vector<TwoCycle> cycles;
    std::vector<SignedPoint> points;
};

class Scanner {
public:
    explicit Scanner(std::string_view text)
    {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                text_ += c;
            }
        }
    }

    const std::string& text() const { return text_; }
    bool done() const { return pos_ == text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void expect(char c)
    {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    int integer()
    {
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a vertex number");
        }
        if (pos_ - start > 6) {
            fail("vertex number too large");
        }
        return std::stoi(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in '" +
                                    text_ + "'");
    }

    void advance() { ++pos_; }

private:
    std::string text_;
    std::size_t pos_ = 0;
};

ParsedCycles parse_cycles(std::string_view raw)
{
    Scanner in(raw);
    ParsedCycles parsed;
    if (in.text() == "id") {
        return parsed;
    }
    while (!in.done()) {
        in.expect('(');
        const int a = in.integer();
        if (in.peek() == ',') {
            in.advance();
            const int b = in.integer();
            parsed.cycles.push_back({a, b});
        } else if (in.peek() == '+' || in.peek() == '-') {
            parsed.points.push_back({a, in.peek() == '+' ? Sign::plus : Sign::minus});
            in.advance();
        } else {
            in.fail("expected ',' or a sign");
        }
        in.expect(')');
    }
    return parsed;
}

int max_vertex(const ParsedCycles& parsed)
{
    int n = 0;
    for (const auto& [a, b] : parsed.cycles) {
        n = std::max({n, a, b});
    }
    for (const auto& point : parsed.points) {
        n = std::max(n, point.vertex);
    }
    return n;
}

}  // namespace

Involution parse_involution(std::string_view text, int n)
{
    auto parsed = parse_cycles(text);
    if (!parsed.points.empty()) {
        throw std::invalid_argument("signed fixed point (" + std::to_string(parsed.points[0].vertex) +
                                    sign_char(parsed.points[0].sign) +
                                    ") is only allowed for clans");
    }
    return Involution(n, std::move(parsed.cycles));
}

FpfInvolution parse_fpf(std::string_view text, int n)
{
    if (n % 2 != 0) {
        throw std::invalid_argument("fixed-point-free involutions need even n, got n = " +
                                    std::to_string(n));
    }
    return FpfInvolution(parse_involution(text, n));
}

Clan parse_clan(std::string_view text, int n)
{
    auto parsed = parse_cycles(text);
    const int inferred = max_vertex(parsed);
    if (inferred == 0) {
        throw std::invalid_argument("clan text '" + std::string(text) + "' lists no vertices");
    }
    if (n > 0 && inferred > n) {
        throw std::invalid_argument("vertex " + std::to_string(inferred) + " out of range for n = " +
                                    std::to_string(n));
    }
    return Clan(n > 0 ? n : inferred, std::move(parsed.cycles), std::move(parsed.points));
}

std::string ElementSpec::canonical() const
{
    return std::visit([](const auto& x) { return to_string(x); }, element);
}

ElementSpec parse_element(std::string_view text, Family family, int n)
{
    switch (family) {
    case Family::involution:
        return {family, std::string(text), parse_involution(text, n)};
    case Family::fpf:
        return {family, std::string(text), parse_fpf(text, n)};
    case Family::clan:
        return {family, std::string(text), parse_clan(text, n)};
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace weakinv
