#include "weakinv/cli.hpp"

#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "weakinv/export.hpp"
#include "weakinv/notation.hpp"
#include "weakinv/poset.hpp"
#include "weakinv/wset.hpp"

namespace weakinv {

namespace {

struct Options {
    std::string family;
    int n = 0;
    int p = 0;
    int q = 0;
    std::string element;
    std::string method = "direct";
    std::string format = "dot";
    std::string below;
    bool json = false;
    bool compact = false;
    bool count = false;
};

Family require_family(const Options& opt)
{
    if (auto family = parse_family(opt.family)) {
        return *family;
    }
    throw std::invalid_argument("unknown family '" + opt.family + "' (use inv, fpf or clan)");
}

ElementSpec require_element(const Options& opt)
{
    const Family family = require_family(opt);
    if (family != Family::clan && opt.n <= 0) {
        throw std::invalid_argument("--n is required for family " + opt.family);
    }
    ElementSpec spec = parse_element(opt.element, family, opt.n);
    if (const auto* clan = std::get_if<Clan>(&spec.element)) {
        if ((opt.p > 0 && opt.p != clan->p()) || (opt.q > 0 && opt.q != clan->q())) {
            throw std::invalid_argument("clan " + to_string(*clan) + " lies in (p,q) = (" +
                                        std::to_string(clan->p()) + "," +
                                        std::to_string(clan->q()) + "), not the given --p/--q");
        }
    }
    return spec;
}

InvolutionPoset poset_for(const Involution& x) { return build_involution_poset(x.size()); }
FpfPoset poset_for(const FpfInvolution& x) { return build_fpf_poset(x.size()); }
ClanPoset poset_for(const Clan& x) { return build_clan_poset(x.p(), x.q()); }

std::string format_permutation(const Permutation& w, bool compact)
{
    return compact && w.size() <= 9 ? to_compact_string(w) : to_string(w);
}

int cmd_wset(const Options& opt, std::ostream& out)
{
    const ElementSpec spec = require_element(opt);
    if (opt.method != "direct" && opt.method != "oracle") {
        throw std::invalid_argument("--method must be direct or oracle");
    }
    const WSet wset = std::visit(
        [&](const auto& x) {
            if (opt.method == "oracle") {
                const auto poset = poset_for(x);
                return wset_oracle(poset, poset.index_of(x));
            }
            return direct_wset(x);
        },
        spec.element);
    if (opt.json) {
        out << wset_json(wset).dump(2) << "\n";
        return 0;
    }
    for (const auto& w : wset.members) {
        out << format_permutation(w, opt.compact) << "\n";
    }
    return 0;
}

int cmd_chains(const Options& opt, std::ostream& out)
{
    const ElementSpec spec = require_element(opt);
    std::visit(
        [&](const auto& x) {
            const auto poset = poset_for(x);
            const std::size_t target = poset.index_of(x);
            if (opt.count) {
                out << count_maximal_chains(poset, target) << "\n";
                return;
            }
            const auto chains = maximal_chains(poset, target);
            if (opt.json) {
                auto doc = nlohmann::ordered_json::array();
                for (const auto& chain : chains) {
                    nlohmann::ordered_json item;
                    item["labels"] = chain.labels();
                    item["elements"] = nlohmann::ordered_json::array();
                    item["elements"].push_back(to_string(poset.element(poset.bottom())));
                    for (const auto& step : chain.steps) {
                        item["elements"].push_back(to_string(poset.element(step.element)));
                    }
                    doc.push_back(std::move(item));
                }
                out << doc.dump(2) << "\n";
                return;
            }
            for (const auto& chain : chains) {
                std::string labels;
                std::string path = to_string(poset.element(poset.bottom()));
                for (const auto& step : chain.steps) {
                    labels += (labels.empty() ? "" : ",") + std::to_string(step.label);
                    path += " -" + std::to_string(step.label) + "-> " +
                            to_string(poset.element(step.element));
                }
                out << (labels.empty() ? "-" : labels) << "\t" << path << "\n";
            }
        },
        spec.element);
    return 0;
}

template <class Element>
void print_poset(const WeakOrderPoset<Element>& full, const Options& opt, std::ostream& out)
{
    auto render = [&](const WeakOrderPoset<Element>& poset) {
        if (opt.format == "json") {
            out << export_json(poset).dump(2) << "\n";
        } else {
            out << export_dot(poset);
        }
    };
    if (opt.below.empty()) {
        render(full);
        return;
    }
    const ElementSpec spec = parse_element(opt.below, full.family(), full.params().n);
    render(lower_interval(full, full.index_of(std::get<Element>(spec.element))));
}

int cmd_hasse(const Options& opt, std::ostream& out)
{
    if (opt.format != "dot" && opt.format != "json") {
        throw std::invalid_argument("--format must be dot or json");
    }
    switch (require_family(opt)) {
    case Family::involution:
        if (opt.n <= 0) {
            throw std::invalid_argument("--n is required for family inv");
        }
        print_poset(build_involution_poset(opt.n), opt, out);
        break;
    case Family::fpf:
        if (opt.n <= 0) {
            throw std::invalid_argument("--n is required for family fpf");
        }
        print_poset(build_fpf_poset(opt.n), opt, out);
        break;
    case Family::clan:
        if (opt.p <= 0 || opt.q <= 0) {
            throw std::invalid_argument("--p and --q are required for family clan");
        }
        print_poset(build_clan_poset(opt.p, opt.q), opt, out);
        break;
    }
    return 0;
}

// Closed-form size, gradedness, direct W-set = chain oracle and the
// chain-count identity for every element. Returns true when all hold.
template <class Element>
bool verify_poset(const WeakOrderPoset<Element>& poset, std::ostream& out)
{
    const auto& params = poset.params();
    out << to_string(poset.family());
    if (poset.family() == Family::clan) {
        out << " p=" << params.p << " q=" << params.q;
    } else {
        out << " n=" << params.n;
    }

    bool ok = true;
    const std::uint64_t expected = closed_form_size(poset.family(), params);
    out << ": " << poset.size() << " elements";
    if (poset.size() != expected) {
        out << " (closed form " << expected << ")";
        ok = false;
    }

    const GradedReport graded = verify_graded(poset);
    out << ", graded " << (graded.ok() ? "ok" : "FAIL");
    ok = ok && graded.ok();

    const auto oracle = wset_oracle_all(poset);
    std::size_t agree = 0;
    std::size_t identity = 0;
    for (std::size_t v = 0; v < poset.size(); ++v) {
        if (direct_wset(poset.element(v)) == oracle[v]) {
            ++agree;
        }
        if (chain_count_identity(poset, v).equal()) {
            ++identity;
        }
    }
    out << ", W-sets " << agree << "/" << poset.size();
    out << ", chain counts " << identity << "/" << poset.size() << "\n";
    ok = ok && agree == poset.size() && identity == poset.size();

    for (const auto& violation : graded.violations) {
        out << "  " << violation << "\n";
    }
    return ok;
}

int cmd_verify(const Options& opt, std::ostream& out)
{
    bool ok = true;
    switch (require_family(opt)) {
    case Family::involution:
        for (int n = 1; n <= (opt.n > 0 ? opt.n : 6); ++n) {
            ok = verify_poset(build_involution_poset(n), out) && ok;
        }
        break;
    case Family::fpf:
        for (int n = 2; n <= (opt.n > 0 ? opt.n : 8); n += 2) {
            ok = verify_poset(build_fpf_poset(n), out) && ok;
        }
        break;
    case Family::clan:
        if (opt.p > 0 || opt.q > 0) {
            ok = verify_poset(build_clan_poset(opt.p, opt.q), out);
            break;
        }
        for (int total = 2; total <= (opt.n > 0 ? opt.n : 6); ++total) {
            for (int p = 1; p < total; ++p) {
                ok = verify_poset(build_clan_poset(p, total - p), out) && ok;
            }
        }
        break;
    }
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_rank(const Options& opt, std::ostream& out)
{
    const ElementSpec spec = require_element(opt);
    out << std::visit([](const auto& x) { return family_rank(x); }, spec.element) << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"W-sets and weak order on involutions, fixed-point-free involutions and clans",
                 "weakinv"};
    app.require_subcommand(1);
    Options opt;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", opt.family, "inv, fpf or clan")->required();
        cmd->add_option("--n", opt.n, "number of vertices");
        cmd->add_option("--p", opt.p, "clans: p");
        cmd->add_option("--q", opt.q, "clans: q");
    };

    auto* wset = app.add_subcommand("wset", "print the W-set of an element");
    add_family(wset);
    wset->add_option("--element", opt.element, "cycle notation, e.g. \"(1,4)(2,3)\"")->required();
    wset->add_option("--method", opt.method, "direct (default) or oracle");
    wset->add_flag("--json", opt.json, "JSON output");
    wset->add_flag("--compact", opt.compact, "digit form for n <= 9");

    auto* chains = app.add_subcommand("chains", "enumerate or count maximal chains below an element");
    add_family(chains);
    chains->add_option("--element", opt.element, "cycle notation")->required();
    chains->add_flag("--count", opt.count, "print only the number of chains");
    chains->add_flag("--json", opt.json, "JSON output");

    auto* hasse = app.add_subcommand("hasse", "print the Hasse diagram");
    add_family(hasse);
    hasse->add_option("--format", opt.format, "dot (default) or json");
    hasse->add_option("--below", opt.below, "restrict to the lower interval of this element");

    auto* verify = app.add_subcommand("verify", "check W-sets against the chain oracle");
    add_family(verify);

    auto* rank = app.add_subcommand("rank", "print the rank of an element");
    add_family(rank);
    rank->add_option("--element", opt.element, "cycle notation")->required();

    std::vector<const char*> argv{"weakinv"};
    for (const auto& arg : args) {
        argv.push_back(arg.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (wset->parsed()) {
            return cmd_wset(opt, out);
        }
        if (chains->parsed()) {
            return cmd_chains(opt, out);
        }
        if (hasse->parsed()) {
            return cmd_hasse(opt, out);
        }
        if (verify->parsed()) {
            return cmd_verify(opt, out);
        }
        return cmd_rank(opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace weakinv
