#include "weakinv/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace weakinv {

namespace {

template <class Element>
struct Cover {
    int label;
    Element target;
    CoverType type;
};

std::vector<Cover<Involution>> covers_of(const Involution& x)
{
    std::vector<Cover<Involution>> result;
    for (auto& c : upward_covers_involution(matching_of(x))) {
        result.push_back({c.label, involution_of(c.target), c.type});
    }
    return result;
}

std::vector<Cover<FpfInvolution>> covers_of(const FpfInvolution& x)
{
    std::vector<Cover<FpfInvolution>> result;
    for (auto& c : upward_covers_fpf(matching_of(x.base()))) {
        result.push_back({c.label, FpfInvolution(involution_of(c.target)), c.type});
    }
    return result;
}

std::vector<Cover<Clan>> covers_of(const Clan& x)
{
    std::vector<Cover<Clan>> result;
    for (auto& c : upward_covers_clan(signed_matching_of(x))) {
        result.push_back({c.label, clan_of(c.target), c.type});
    }
    return result;
}

// Breadth-first closure under upward covers; BFS depth is recorded as rank.
template <class Element>
WeakOrderPoset<Element> build_closure(Family family, PosetParams params, Element bottom)
{
    std::map<Element, std::size_t> index;
    std::vector<Element> elements;
    std::vector<int> depth;
    std::map<std::pair<std::size_t, std::size_t>, HasseEdge> edges;

    index.emplace(bottom, 0);
    elements.push_back(bottom);
    depth.push_back(0);
    for (std::size_t cur = 0; cur < elements.size(); ++cur) {
        const Element current = elements[cur];
        for (auto& [label, target, type] : covers_of(current)) {
            auto [it, inserted] = index.emplace(target, elements.size());
            if (inserted) {
                elements.push_back(target);
                depth.push_back(depth[cur] + 1);
            }
            auto& edge = edges[{cur, it->second}];
            edge.lower = cur;
            edge.upper = it->second;
            edge.labels.push_back(label);
            edge.types.push_back(type);
        }
    }

    std::vector<HasseEdge> edge_list;
    edge_list.reserve(edges.size());
    for (auto& [key, edge] : edges) {
        edge_list.push_back(std::move(edge));
    }
    return WeakOrderPoset<Element>(family, params, std::move(elements), std::move(depth),
                                   std::move(edge_list));
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

std::uint64_t double_factorial_odd(int m)  // (m)!! for odd m, 1 for m <= 0
{
    std::uint64_t result = 1;
    for (int v = m; v > 1; v -= 2) {
        result *= static_cast<std::uint64_t>(v);
    }
    return result;
}

}  // namespace

std::vector<int> LabeledChain::labels() const
{
    std::vector<int> result;
    result.reserve(steps.size());
    for (const auto& step : steps) {
        result.push_back(step.label);
    }
    return result;
}

std::string_view to_string(Family family)
{
    switch (family) {
    case Family::involution:
        return "involution";
    case Family::fpf:
        return "fpf";
    case Family::clan:
        return "clan";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view text)
{
    if (text == "inv" || text == "involution") {
        return Family::involution;
    }
    if (text == "fpf") {
        return Family::fpf;
    }
    if (text == "clan") {
        return Family::clan;
    }
    return std::nullopt;
}

int family_rank(const Involution& x) { return rank_involution(x); }
int family_rank(const FpfInvolution& x) { return rank_fpf(x); }
int family_rank(const Clan& x) { return rank_clan(x); }

// --- WeakOrderPoset -------------------------------------------------------

template <class Element>
WeakOrderPoset<Element>::WeakOrderPoset(Family family, PosetParams params,
                                        std::vector<Element> elements, std::vector<int> ranks,
                                        std::vector<HasseEdge> edges)
    : family_(family), params_(params)
{
    if (elements.size() != ranks.size()) {
        throw std::invalid_argument("poset needs one rank per element");
    }
    std::vector<std::string> text;
    text.reserve(elements.size());
    for (const auto& e : elements) {
        text.push_back(to_string(e));
    }
    std::vector<std::size_t> order(elements.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(ranks[x], text[x]) < std::tie(ranks[y], text[y]);
    });
    std::vector<std::size_t> new_index(elements.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        new_index[order[pos]] = pos;
        elements_.push_back(elements[order[pos]]);
        ranks_.push_back(ranks[order[pos]]);
    }
    for (auto& edge : edges) {
        if (edge.lower >= elements.size() || edge.upper >= elements.size()) {
            throw std::out_of_range("edge endpoint outside poset");
        }
        if (edge.labels.size() != edge.types.size() || edge.labels.empty()) {
            throw std::invalid_argument("edge needs one type per label");
        }
        edge.lower = new_index[edge.lower];
        edge.upper = new_index[edge.upper];
        std::vector<std::pair<int, CoverType>> tagged;
        for (std::size_t k = 0; k < edge.labels.size(); ++k) {
            tagged.emplace_back(edge.labels[k], edge.types[k]);
        }
        std::sort(tagged.begin(), tagged.end());
        for (std::size_t k = 0; k < tagged.size(); ++k) {
            edge.labels[k] = tagged[k].first;
            edge.types[k] = tagged[k].second;
        }
    }
    std::sort(edges.begin(), edges.end(), [](const HasseEdge& x, const HasseEdge& y) {
        return std::tie(x.lower, x.upper) < std::tie(y.lower, y.upper);
    });
    edges_ = std::move(edges);

    in_.assign(elements_.size(), {});
    out_.assign(elements_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        out_[edges_[e].lower].push_back(e);
        in_[edges_[e].upper].push_back(e);
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!index_.emplace(elements_[i], i).second) {
            throw std::invalid_argument("duplicate poset element " + to_string(elements_[i]));
        }
    }
}

template <class Element>
std::optional<std::size_t> WeakOrderPoset<Element>::find(const Element& x) const
{
    if (auto it = index_.find(x); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

template <class Element>
std::size_t WeakOrderPoset<Element>::index_of(const Element& x) const
{
    if (auto found = find(x)) {
        return *found;
    }
    throw std::out_of_range("element " + to_string(x) + " is not in the poset");
}

template <class Element>
std::vector<std::size_t> WeakOrderPoset<Element>::maximal_elements() const
{
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < size(); ++i) {
        if (out_[i].empty()) {
            result.push_back(i);
        }
    }
    return result;
}

// --- builders -------------------------------------------------------------

InvolutionPoset build_involution_poset(int n)
{
    return build_closure(Family::involution, PosetParams{n, 0, 0}, bottom_involution(n));
}

FpfPoset build_fpf_poset(int n)
{
    return build_closure(Family::fpf, PosetParams{n, 0, 0}, bottom_fpf(n));
}

ClanPoset build_clan_poset(int p, int q)
{
    return build_closure(Family::clan, PosetParams{p + q, p, q}, bottom_clan(p, q));
}

std::uint64_t closed_form_size(Family family, const PosetParams& params)
{
    const int n = params.n;
    std::uint64_t total = 0;
    switch (family) {
    case Family::involution:
        for (int k = 0; 2 * k <= n; ++k) {
            total += binomial(n, 2 * k) * double_factorial_odd(2 * k - 1);
        }
        return total;
    case Family::fpf:
        return n % 2 == 0 ? double_factorial_odd(n - 1) : 0;
    case Family::clan:
        for (int k = 0; 2 * k <= n; ++k) {
            total += binomial(n, 2 * k) * double_factorial_odd(2 * k - 1) *
                     binomial(n - 2 * k, params.p - k);
        }
        return total;
    }
    return 0;
}

// --- queries --------------------------------------------------------------

template <class Element>
WeakOrderPoset<Element> lower_interval(const WeakOrderPoset<Element>& poset, std::size_t x)
{
    if (x >= poset.size()) {
        throw std::out_of_range("lower_interval: unknown element");
    }
    std::vector<bool> below(poset.size(), false);
    std::vector<std::size_t> stack{x};
    below[x] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : poset.edges_into(v)) {
            const std::size_t u = poset.edge(e).lower;
            if (!below[u]) {
                below[u] = true;
                stack.push_back(u);
            }
        }
    }
    std::vector<std::size_t> remap(poset.size(), 0);
    std::vector<Element> elements;
    std::vector<int> ranks;
    for (std::size_t v = 0; v < poset.size(); ++v) {
        if (below[v]) {
            remap[v] = elements.size();
            elements.push_back(poset.element(v));
            ranks.push_back(poset.rank(v));
        }
    }
    std::vector<HasseEdge> edges;
    for (const auto& edge : poset.edges()) {
        if (below[edge.lower] && below[edge.upper]) {
            HasseEdge copy = edge;
            copy.lower = remap[edge.lower];
            copy.upper = remap[edge.upper];
            edges.push_back(std::move(copy));
        }
    }
    return WeakOrderPoset<Element>(poset.family(), poset.params(), std::move(elements),
                                   std::move(ranks), std::move(edges));
}

template <class Element>
WeakOrderPoset<Element> without_cover_types(const WeakOrderPoset<Element>& poset,
                                            std::span<const CoverType> dropped)
{
    std::vector<HasseEdge> edges;
    for (const auto& edge : poset.edges()) {
        HasseEdge kept{edge.lower, edge.upper, {}, {}};
        for (std::size_t k = 0; k < edge.labels.size(); ++k) {
            if (std::find(dropped.begin(), dropped.end(), edge.types[k]) == dropped.end()) {
                kept.labels.push_back(edge.labels[k]);
                kept.types.push_back(edge.types[k]);
            }
        }
        if (!kept.labels.empty()) {
            edges.push_back(std::move(kept));
        }
    }
    std::vector<int> ranks;
    for (std::size_t v = 0; v < poset.size(); ++v) {
        ranks.push_back(poset.rank(v));
    }
    return WeakOrderPoset<Element>(poset.family(), poset.params(), poset.elements(),
                                   std::move(ranks), std::move(edges));
}

template <class Element>
void for_each_maximal_chain(const WeakOrderPoset<Element>& poset, std::size_t x,
                            const std::function<void(const LabeledChain&)>& visit)
{
    if (x >= poset.size()) {
        throw std::out_of_range("maximal_chains: unknown element");
    }
    struct Frame {
        std::size_t element;
        std::size_t edge_pos = 0;
        std::size_t label_pos = 0;
    };
    // Walk down from x; path[d] is the step entering stack[d].element.
    std::vector<Frame> stack{{x}};
    std::vector<ChainStep> path;
    LabeledChain chain;
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto into = poset.edges_into(top.element);
        if (top.element == poset.bottom() || top.edge_pos == into.size()) {
            if (top.element == poset.bottom()) {
                chain.steps.assign(path.rbegin(), path.rend());
                visit(chain);
            }
            stack.pop_back();
            if (!path.empty()) {
                path.pop_back();
            }
            continue;
        }
        const HasseEdge& edge = poset.edge(into[top.edge_pos]);
        const int label = edge.labels[top.label_pos];
        if (++top.label_pos == edge.labels.size()) {
            top.label_pos = 0;
            ++top.edge_pos;
        }
        path.push_back({top.element, label});
        stack.push_back({edge.lower});
    }
}

template <class Element>
std::vector<LabeledChain> maximal_chains(const WeakOrderPoset<Element>& poset, std::size_t x)
{
    std::vector<LabeledChain> chains;
    for_each_maximal_chain<Element>(poset, x,
                                    [&](const LabeledChain& c) { chains.push_back(c); });
    std::sort(chains.begin(), chains.end(), [](const LabeledChain& a, const LabeledChain& b) {
        const auto la = a.labels();
        const auto lb = b.labels();
        if (la != lb) {
            return la < lb;
        }
        return std::lexicographical_compare(
            a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
            [](const ChainStep& s, const ChainStep& t) { return s.element < t.element; });
    });
    return chains;
}

template <class Element>
std::uint64_t count_maximal_chains(const WeakOrderPoset<Element>& poset, std::size_t x)
{
    if (x >= poset.size()) {
        throw std::out_of_range("count_maximal_chains: unknown element");
    }
    // Indices are sorted by rank, hence topologically.
    std::vector<std::uint64_t> count(x + 1, 0);
    count[poset.bottom()] = 1;
    for (std::size_t v = 1; v <= x; ++v) {
        for (std::size_t e : poset.edges_into(v)) {
            const auto& edge = poset.edge(e);
            count[v] += edge.labels.size() * count[edge.lower];
        }
    }
    return count[x];
}

template <class Element>
std::vector<std::size_t> follow_labels(const WeakOrderPoset<Element>& poset,
                                       std::span<const int> labels)
{
    std::set<std::size_t> current{poset.bottom()};
    for (int label : labels) {
        std::set<std::size_t> next;
        for (std::size_t v : current) {
            for (std::size_t e : poset.edges_out_of(v)) {
                const auto& edge = poset.edge(e);
                if (std::find(edge.labels.begin(), edge.labels.end(), label) != edge.labels.end()) {
                    next.insert(edge.upper);
                }
            }
        }
        current = std::move(next);
    }
    return {current.begin(), current.end()};
}

template <class Element>
GradedReport verify_graded(const WeakOrderPoset<Element>& poset)
{
    GradedReport report;
    for (const auto& edge : poset.edges()) {
        if (poset.rank(edge.upper) != poset.rank(edge.lower) + 1) {
            report.violations.push_back("edge " + to_string(poset.element(edge.lower)) + " -> " +
                                        to_string(poset.element(edge.upper)) + " changes rank by " +
                                        std::to_string(poset.rank(edge.upper) -
                                                       poset.rank(edge.lower)));
        }
    }
    for (std::size_t v = 0; v < poset.size(); ++v) {
        const int expected = family_rank(poset.element(v));
        if (poset.rank(v) != expected) {
            report.violations.push_back("element " + to_string(poset.element(v)) + " has rank " +
                                        std::to_string(poset.rank(v)) + ", rank function gives " +
                                        std::to_string(expected));
        }
        if (v != poset.bottom() && poset.edges_into(v).empty()) {
            report.violations.push_back("element " + to_string(poset.element(v)) +
                                        " is minimal but not the bottom");
        }
    }
    if (poset.size() > 0 && poset.rank(poset.bottom()) != 0) {
        report.violations.push_back("bottom element has nonzero rank");
    }
    return report;
}

#define WEAKINV_INSTANTIATE_POSET(E)                                                          \
    template class WeakOrderPoset<E>;                                                         \
    template WeakOrderPoset<E> lower_interval(const WeakOrderPoset<E>&, std::size_t);         \
    template WeakOrderPoset<E> without_cover_types(const WeakOrderPoset<E>&,                  \
                                                   std::span<const CoverType>);               \
    template void for_each_maximal_chain(const WeakOrderPoset<E>&, std::size_t,               \
                                         const std::function<void(const LabeledChain&)>&);    \
    template std::vector<LabeledChain> maximal_chains(const WeakOrderPoset<E>&, std::size_t); \
    template std::uint64_t count_maximal_chains(const WeakOrderPoset<E>&, std::size_t);       \
    template std::vector<std::size_t> follow_labels(const WeakOrderPoset<E>&,                 \
                                                    std::span<const int>);                    \
    template GradedReport verify_graded(const WeakOrderPoset<E>&);

WEAKINV_INSTANTIATE_POSET(Involution)
WEAKINV_INSTANTIATE_POSET(FpfInvolution)
WEAKINV_INSTANTIATE_POSET(Clan)

#undef WEAKINV_INSTANTIATE_POSET

}  // namespace weakinv
