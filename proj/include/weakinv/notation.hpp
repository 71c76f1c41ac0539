#pragma once

// Text forms of elements.
//
//   element := "id" | cycle*
//   cycle   := "(" int "," int ")" | "(" int sign ")"
//   sign    := "+" | "-"
//
// Whitespace is ignored. Involutions take n explicitly (fixed points are
// implicit); clans infer n from the vertices and must list every vertex.

#include <string>
#include <string_view>
#include <variant>

#include "weakinv/involution.hpp"
#include "weakinv/poset.hpp"

namespace weakinv {

Involution parse_involution(std::string_view text, int n);
FpfInvolution parse_fpf(std::string_view text, int n);

/// n = 0 infers the size from the text.
Clan parse_clan(std::string_view text, int n = 0);

using AnyElement = std::variant<Involution, FpfInvolution, Clan>;

struct ElementSpec {
    Family family;
    std::string text;  // as given
    AnyElement element;

    /// Canonical text of the resolved element.
    std::string canonical() const;
};

/// Dispatches on family; n is ignored for clans unless positive.
ElementSpec parse_element(std::string_view text, Family family, int n);

}  // namespace weakinv
