#include "weakinv/export.hpp"

#include <algorithm>
#include <sstream>

namespace weakinv {

namespace {

std::string join_labels(const std::vector<int>& labels)
{
    std::string text;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k > 0) {
            text += ',';
        }
        text += std::to_string(labels[k]);
    }
    return text;
}

std::string title(Family family, const PosetParams& params)
{
    std::string text = "weak order " + std::string(to_string(family));
    if (family == Family::clan) {
        return text + " p=" + std::to_string(params.p) + " q=" + std::to_string(params.q);
    }
    return text + " n=" + std::to_string(params.n);
}

}  // namespace

template <class Element>
std::string export_dot(const WeakOrderPoset<Element>& poset)
{
    std::ostringstream dot;
    dot << "digraph \"" << title(poset.family(), poset.params()) << "\" {\n";
    dot << "  rankdir=BT;\n";
    dot << "  node [shape=plaintext];\n";
    for (std::size_t v = 0; v < poset.size(); ++v) {
        dot << "  n" << v << " [label=\"" << to_string(poset.element(v)) << "\"];\n";
    }
    for (const auto& edge : poset.edges()) {
        dot << "  n" << edge.lower << " -> n" << edge.upper << " [label=\""
            << join_labels(edge.labels) << "\"";
        if (std::find(edge.types.begin(), edge.types.end(), CoverType::II) != edge.types.end()) {
            dot << ", color=\"black:invis:black\"";
        }
        dot << "];\n";
    }
    dot << "}\n";
    return dot.str();
}

template <class Element>
nlohmann::ordered_json export_json(const WeakOrderPoset<Element>& poset)
{
    nlohmann::ordered_json doc;
    doc["family"] = std::string(to_string(poset.family()));
    nlohmann::ordered_json params;
    params["n"] = poset.params().n;
    if (poset.family() == Family::clan) {
        params["p"] = poset.params().p;
        params["q"] = poset.params().q;
    }
    doc["params"] = std::move(params);
    doc["elements"] = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < poset.size(); ++v) {
        nlohmann::ordered_json element;
        element["id"] = v;
        element["text"] = to_string(poset.element(v));
        element["rank"] = poset.rank(v);
        doc["elements"].push_back(std::move(element));
    }
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& edge : poset.edges()) {
        nlohmann::ordered_json item;
        item["lo"] = edge.lower;
        item["hi"] = edge.upper;
        item["labels"] = edge.labels;
        item["types"] = nlohmann::ordered_json::array();
        for (CoverType type : edge.types) {
            item["types"].push_back(std::string(to_string(type)));
        }
        doc["edges"].push_back(std::move(item));
    }
    return doc;
}

nlohmann::ordered_json wset_json(const WSet& wset)
{
    nlohmann::ordered_json doc;
    doc["target"] = wset.target;
    doc["rank"] = wset.rank;
    doc["members"] = nlohmann::ordered_json::array();
    for (const auto& w : wset.members) {
        doc["members"].push_back(w.word());
    }
    return doc;
}

template std::string export_dot(const WeakOrderPoset<Involution>&);
template std::string export_dot(const WeakOrderPoset<FpfInvolution>&);
template std::string export_dot(const WeakOrderPoset<Clan>&);
template nlohmann::ordered_json export_json(const WeakOrderPoset<Involution>&);
template nlohmann::ordered_json export_json(const WeakOrderPoset<FpfInvolution>&);
template nlohmann::ordered_json export_json(const WeakOrderPoset<Clan>&);

}  // namespace weakinv
