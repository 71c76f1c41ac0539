#pragma once

// Graphviz and JSON renderings of a weak-order poset. Output order follows
// the poset's canonical element order (rank, then text), so identical
// posets render byte-identically.

#include <string>

#include <json.hpp>

#include "weakinv/poset.hpp"
#include "weakinv/wset.hpp"

namespace weakinv {

/// One node per element, bottom drawn lowest. Multi-label edges carry the
/// comma-joined label set; type II edges are drawn as double lines.
template <class Element>
std::string export_dot(const WeakOrderPoset<Element>& poset);

/// { family, params, elements: [{id, text, rank}], edges: [{lo, hi, labels, types}] }
template <class Element>
nlohmann::ordered_json export_json(const WeakOrderPoset<Element>& poset);

/// { target, rank, members: [[...], ...] }
nlohmann::ordered_json wset_json(const WSet& wset);

}  // namespace weakinv
