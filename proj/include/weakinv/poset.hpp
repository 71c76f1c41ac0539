#pragma once

// Explicit weak-order posets on involutions, fixed-point-free involutions
// and clans: labeled Hasse diagrams built by closure from the bottom
// element, with interval, gradedness and maximal-chain queries.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weakinv/involution.hpp"
#include "weakinv/matching.hpp"

namespace weakinv {

enum class Family { involution, fpf, clan };

std::string_view to_string(Family family);

/// Accepts "inv", "involution", "fpf" and "clan".
std::optional<Family> parse_family(std::string_view text);

struct PosetParams {
    int n = 0;
    int p = 0;  // clans only
    int q = 0;  // clans only

    friend bool operator==(const PosetParams&, const PosetParams&) = default;
};

/// A Hasse edge with every label that realizes it. types[k] is the cover
/// type under labels[k]; labels are ascending.
struct HasseEdge {
    std::size_t lower;
    std::size_t upper;
    std::vector<int> labels;
    std::vector<CoverType> types;
};

struct ChainStep {
    std::size_t element;  // element reached by this step
    int label;
};

/// Steps from the bottom element upward.
struct LabeledChain {
    std::vector<ChainStep> steps;

    std::vector<int> labels() const;
};

struct GradedReport {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

template <class Element>
class WeakOrderPoset {
public:
    using element_type = Element;

    /// Elements are reordered by (rank, canonical text) and edge endpoints
    /// remapped accordingly; edges referring to missing indices throw.
    WeakOrderPoset(Family family, PosetParams params, std::vector<Element> elements,
                   std::vector<int> ranks, std::vector<HasseEdge> edges);

    Family family() const noexcept { return family_; }
    const PosetParams& params() const noexcept { return params_; }

    std::size_t size() const noexcept { return elements_.size(); }
    const Element& element(std::size_t index) const { return elements_.at(index); }
    const std::vector<Element>& elements() const noexcept { return elements_; }
    int rank(std::size_t index) const { return ranks_.at(index); }

    /// Index 0 after canonical ordering.
    std::size_t bottom() const noexcept { return 0; }

    std::optional<std::size_t> find(const Element& x) const;

    /// Throws std::out_of_range for an element not in the poset.
    std::size_t index_of(const Element& x) const;

    const std::vector<HasseEdge>& edges() const noexcept { return edges_; }
    const HasseEdge& edge(std::size_t e) const { return edges_.at(e); }

    /// Edge indices into / out of an element.
    std::span<const std::size_t> edges_into(std::size_t index) const { return in_.at(index); }
    std::span<const std::size_t> edges_out_of(std::size_t index) const { return out_.at(index); }

    std::vector<std::size_t> maximal_elements() const;

private:
    Family family_;
    PosetParams params_;
    std::vector<Element> elements_;
    std::vector<int> ranks_;
    std::vector<HasseEdge> edges_;
    std::vector<std::vector<std::size_t>> in_;
    std::vector<std::vector<std::size_t>> out_;
    std::map<Element, std::size_t> index_;
};

using InvolutionPoset = WeakOrderPoset<Involution>;
using FpfPoset = WeakOrderPoset<FpfInvolution>;
using ClanPoset = WeakOrderPoset<Clan>;

/// Family-specific rank and covers.
int family_rank(const Involution& x);
int family_rank(const FpfInvolution& x);
int family_rank(const Clan& x);

InvolutionPoset build_involution_poset(int n);
FpfPoset build_fpf_poset(int n);
ClanPoset build_clan_poset(int p, int q);

/// Closed-form element counts: sum_k C(n,2k)(2k-1)!! for involutions,
/// (n-1)!! for fpf, and sum_k C(n,2k)(2k-1)!! C(n-2k, p-k) for clans.
std::uint64_t closed_form_size(Family family, const PosetParams& params);

/// Induced subposet on everything below `x`.
template <class Element>
WeakOrderPoset<Element> lower_interval(const WeakOrderPoset<Element>& poset, std::size_t x);

/// Copy of the poset with covers of the given types dropped; edges left
/// with no label disappear.
template <class Element>
WeakOrderPoset<Element> without_cover_types(const WeakOrderPoset<Element>& poset,
                                            std::span<const CoverType> dropped);

/// Depth-first enumeration of every label-resolved chain from the bottom to x.
template <class Element>
void for_each_maximal_chain(const WeakOrderPoset<Element>& poset, std::size_t x,
                            const std::function<void(const LabeledChain&)>& visit);

/// All chains to x, sorted by label word.
template <class Element>
std::vector<LabeledChain> maximal_chains(const WeakOrderPoset<Element>& poset, std::size_t x);

/// Number of label-resolved chains to x, by dynamic programming over the DAG.
template <class Element>
std::uint64_t count_maximal_chains(const WeakOrderPoset<Element>& poset, std::size_t x);

/// Elements reachable from the bottom along edges carrying labels[0],
/// labels[1], ... in turn; sorted indices.
template <class Element>
std::vector<std::size_t> follow_labels(const WeakOrderPoset<Element>& poset,
                                       std::span<const int> labels);

/// Every edge must raise rank by one, stored ranks must agree with the
/// family rank function, and the bottom must be the only minimal element.
template <class Element>
GradedReport verify_graded(const WeakOrderPoset<Element>& poset);

}  // namespace weakinv
