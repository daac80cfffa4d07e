#include "nzc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "json.hpp"
#include "nzc/ffield.hpp"
#include "nzc/invariants.hpp"
#include "nzc/morphisms.hpp"
#include "nzc/nzcgraph.hpp"
#include "nzc/rng.hpp"
#include "nzc/vspace.hpp"

namespace nzc {

namespace {

constexpr int kBasisSuiteSize = 20; // random bases per basis-iso run

struct Options {
    int q = 0;
    int n = 1;
    int q2 = 0;
    int n2 = 0;
    std::string basis_path;
    std::string basis2_path;
    std::string format = "dot";
    std::string selector;
    std::uint64_t seed = 0;
    std::uint64_t cap_explicit = Caps{}.explicit_cap;
    int cap_aut = Caps{}.aut_cap;
    int cap_domination = Caps{}.domination_cap;

    Caps caps() const { return Caps{cap_explicit, cap_aut, cap_domination}; }
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--q", o.q, "field order (prime power)")->required();
    sub->add_option("--n", o.n, "dimension");
    sub->add_option("--basis", o.basis_path, "basis file: n lines of comma-separated elements");
    sub->add_option("--seed", o.seed, "seed for randomized basis suites");
    sub->add_option("--cap-explicit", o.cap_explicit, "max vertices for explicit graphs");
    sub->add_option("--cap-aut", o.cap_aut, "max vertices for automorphism search");
    sub->add_option("--cap-domination", o.cap_domination, "max vertices for dominating-set scans");
}

struct VerifyOutcome {
    bool pass = false;
    bool applicable = true;
    std::string message;
};

ExplicitGraph build_graph(const FiniteField& f, const Options& o) {
    if (o.basis_path.empty()) return explicit_graph(f, o.n, o.caps());
    const Basis b = read_basis_file(f, o.n, o.basis_path);
    return explicit_graph(f, o.n, o.caps(), b);
}

VerifyOutcome verify_degrees(const FiniteField& f, const Options& o) {
    const std::uint64_t vcount = space_size(f.q(), o.n) - 1;
    if (vcount <= o.cap_explicit) {
        const ExplicitGraph g = build_graph(f, o);
        for (std::uint64_t v = 0; v < g.vcount; ++v) {
            const int k = support_size(support(g.coords[v]));
            const std::uint64_t expect = degree_formula(g.q, g.n, k);
            if (g.degree(v) != expect)
                return {false, true,
                        "vertex " + std::to_string(v) + " has degree " +
                            std::to_string(g.degree(v)) + ", formula gives " +
                            std::to_string(expect)};
        }
        return {true, true, std::to_string(vcount) + " vertices match the degree formula"};
    }
    const ClassGraph cg = class_graph(f, o.n);
    const std::vector<std::uint64_t> deg = class_degrees(cg);
    for (size_t i = 0; i < cg.entries.size(); ++i) {
        const int k = support_size(cg.entries[i].mask);
        const std::uint64_t expect = degree_formula(cg.q, cg.n, k);
        if (deg[i] != expect)
            return {false, true,
                    "class mask " + std::to_string(cg.entries[i].mask) + " has degree " +
                        std::to_string(deg[i]) + ", formula gives " + std::to_string(expect)};
    }
    return {true, true, std::to_string(cg.entries.size()) + " support classes match the degree formula"};
}

VerifyOutcome verify_diameter(const FiniteField& f, const Options& o) {
    const std::uint64_t vcount = space_size(f.q(), o.n) - 1;
    const Diameter d = vcount <= o.cap_explicit ? diameter(build_graph(f, o))
                                                : diameter(class_graph(f, o.n));
    const std::string shown = d.infinite ? "infinite" : std::to_string(d.value);
    if (o.n < 2) return {true, false, "one-dimensional space, diameter " + shown};
    if (!d.infinite && d.value == 2) return {true, true, "diameter is 2"};
    return {false, true, "diameter is " + shown + ", expected 2"};
}

VerifyOutcome verify_complete(const FiniteField& f, const Options& o) {
    const std::uint64_t vcount = space_size(f.q(), o.n) - 1;
    const bool complete = vcount <= o.cap_explicit ? is_complete(build_graph(f, o))
                                                   : is_complete(class_graph(f, o.n));
    if (complete == (o.n == 1))
        return {true, true,
                complete ? "complete, as a one-dimensional space must be"
                         : "not complete, as no higher-dimensional space is"};
    return {false, true,
            complete ? "complete although n > 1" : "not complete although n = 1"};
}

VerifyOutcome verify_domination(const FiniteField& f, const Options& o) {
    const std::uint64_t vcount = space_size(f.q(), o.n) - 1;
    DominationResult dom;
    if (vcount <= o.cap_explicit)
        dom = domination_number(build_graph(f, o));
    else
        dom = domination_number(class_graph(f, o.n));
    if (dom.ok)
        return {true, true,
                "vertex " + std::to_string(dom.witness) + " dominates all " +
                    std::to_string(vcount) + " vertices, so the domination number is 1"};
    return {false, true, "witness misses " + std::to_string(dom.failed_at)};
}

VerifyOutcome verify_minimal_dominating(const FiniteField& f, const Options& o) {
    const ExplicitGraph g = build_graph(f, o);
    const MinimalDominatingResult md = max_minimal_dominating_size(g, o.cap_domination);
    std::string witness = "{";
    for (size_t i = 0; i < md.witness.size(); ++i) {
        if (i) witness += ",";
        witness += std::to_string(md.witness[i]);
    }
    witness += "}";
    if (md.max_size == o.n)
        return {true, true,
                "maximum minimal dominating set has size " + std::to_string(md.max_size) +
                    ", witness " + witness};
    return {false, true,
            "maximum minimal dominating size " + std::to_string(md.max_size) + " != n, witness " +
                witness};
}

VerifyOutcome verify_independence(const FiniteField& f, const Options& o) {
    const ExplicitGraph g = build_graph(f, o);
    const int alpha = independence_number(g);
    const int by_classes = independence_number_classes(class_graph(f, o.n));
    if (alpha == o.n && by_classes == alpha)
        return {true, true,
                "independence number " + std::to_string(alpha) + " equals n on both routes"};
    return {false, true,
            "search found " + std::to_string(alpha) + ", class route " +
                std::to_string(by_classes) + ", n is " + std::to_string(o.n)};
}

VerifyOutcome verify_lin_ind(const FiniteField& f, const Options& o) {
    const ExplicitGraph g = build_graph(f, o);
    const LinIndResult li = verify_independence_implies_linear(f, g);
    if (!li.pass) {
        std::string witness = "{";
        for (size_t i = 0; i < li.witness.size(); ++i) {
            if (i) witness += ",";
            witness += std::to_string(li.witness[i]);
        }
        witness += "}";
        return {false, true, "graph-independent set " + witness + " is rank deficient"};
    }
    if (o.n >= 2) {
        // the converse must keep failing: a linearly independent pair that is
        // still adjacent (first coordinate shared)
        Vec a(o.n, 0), b(o.n, 0);
        a[0] = 1;
        a[1] = 1;
        b[1] = 1;
        const bool lin = rank(f, {a, b}) == 2;
        const bool adj = adjacent(a, b);
        if (!(lin && adj))
            return {false, true, "converse witness misbehaved: rank-2 pair expected adjacent"};
        return {true, true,
                "every graph-independent set has full rank; the rank-2 converse witness stays adjacent"};
    }
    return {true, true, "every graph-independent set has full rank"};
}

VerifyOutcome verify_basis_iso(const FiniteField& f, const Options& o) {
    if (!o.basis_path.empty()) {
        const Basis b = read_basis_file(f, o.n, o.basis_path);
        const BasisIsoResult r = basis_change_iso_check(f, o.n, b, o.caps());
        if (r.pass) return {true, true, "the induced map is an isomorphism"};
        return {false, true,
                "map breaks adjacency at pair (" + std::to_string(r.witness_u) + "," +
                    std::to_string(r.witness_v) + ")"};
    }
    Lcg rng(o.seed);
    for (int i = 0; i < kBasisSuiteSize; ++i) {
        const Basis b = random_invertible_basis(f, o.n, rng);
        const BasisIsoResult r = basis_change_iso_check(f, o.n, b, o.caps());
        if (!r.pass)
            return {false, true,
                    "basis " + std::to_string(i) + " of the seeded suite breaks adjacency at (" +
                        std::to_string(r.witness_u) + "," + std::to_string(r.witness_v) + ")"};
    }
    return {true, true,
            std::to_string(kBasisSuiteSize) + " seeded random bases all induce isomorphisms"};
}

VerifyOutcome verify_iso_dim(const FiniteField& f, const Options& o) {
    const std::vector<int> dims = o.n2 > 0 ? std::vector<int>{o.n2}
                                           : std::vector<int>{1, 2, 3, 4};
    const ExplicitGraph g1 = explicit_graph(f, o.n, o.caps());
    for (int m : dims) {
        const ExplicitGraph g2 = explicit_graph(f, m, o.caps());
        const IsoResult r = are_isomorphic(g1, g2, static_cast<int>(std::min<std::uint64_t>(
                                                       o.cap_explicit, 4096)));
        if (r.isomorphic != (o.n == m))
            return {false, true, "dimension criterion wrong against n2=" + std::to_string(m)};
        if (r.searched && r.search_found != r.isomorphic)
            return {false, true,
                    "witness search disagrees with the dimension criterion at n2=" +
                        std::to_string(m)};
    }
    return {true, true,
            "isomorphic exactly when dimensions match, search concurring where it ran"};
}

VerifyOutcome verify_aut_form(const FiniteField& f, const Options& o) {
    const ExplicitGraph g = explicit_graph(f, o.n, o.caps());
    const std::vector<AutomorphismRecord> auts = automorphisms(f, g, o.cap_aut);
    for (size_t i = 0; i < auts.size(); ++i) {
        const FormCheckResult form = check_automorphism_form(g, auts[i].mapping);
        if (!form.ok)
            return {false, true,
                    "automorphism " + std::to_string(i) + " breaks the support form at vertex " +
                        std::to_string(form.witness)};
    }
    return {true, true, std::to_string(auts.size()) + " automorphisms checked"};
}

VerifyOutcome verify_transitivity(const FiniteField& f, const Options& o) {
    const TransitivityResult t = vertex_transitivity(f, o.n, o.caps());
    const bool expect = o.n == 1;
    if (t.transitive == expect) return {true, true, t.reason};
    return {false, true, t.reason};
}

int cmd_verify(const FiniteField& f, const Options& o, std::ostream& out) {
    using Handler = std::function<VerifyOutcome(const FiniteField&, const Options&)>;
    static const std::map<std::string, Handler> handlers = {
        {"degrees", verify_degrees},
        {"diameter", verify_diameter},
        {"complete", verify_complete},
        {"domination", verify_domination},
        {"minimal-dominating", verify_minimal_dominating},
        {"independence", verify_independence},
        {"lin-ind", verify_lin_ind},
        {"basis-iso", verify_basis_iso},
        {"iso-dim", verify_iso_dim},
        {"aut-form", verify_aut_form},
        {"vertex-transitivity", verify_transitivity},
    };
    const VerifyOutcome r = handlers.at(o.selector)(f, o);
    const char* tag = r.pass ? (r.applicable ? "pass" : "not applicable") : "fail";
    out << "verify " << o.selector << " q=" << o.q << " n=" << o.n << ": " << tag << " (" << r.message
        << ")\n";
    return r.pass ? 0 : 1;
}

int cmd_stats(const FiniteField& f, const Options& o, std::ostream& out) {
    InvariantReport rep;
    if (o.basis_path.empty()) {
        rep = analyze(f, o.n, o.caps());
    } else {
        const Basis b = read_basis_file(f, o.n, o.basis_path);
        rep = analyze(f, o.n, o.caps(), &b);
    }
    out << report_json(rep).dump(2) << "\n";
    return rep.any_failure() ? 1 : 0;
}

int cmd_export(const FiniteField& f, const Options& o, std::ostream& out) {
    const ExplicitGraph g = build_graph(f, o);
    if (o.format == "dot") {
        out << to_dot(g);
        return 0;
    }
    nlohmann::ordered_json j;
    j["q"] = g.q;
    j["n"] = g.n;
    j["vertexCount"] = g.vcount;
    j["edgeCount"] = g.edges;
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (std::uint64_t v = 0; v < g.vcount; ++v)
        verts.push_back(nlohmann::ordered_json{{"id", v}, {"label", g.labels[v]}});
    j["vertices"] = std::move(verts);
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (std::uint64_t u = 0; u < g.vcount; ++u)
        for (std::uint64_t v = u + 1; v < g.vcount; ++v)
            if (g.adjacent(u, v)) edges.push_back(nlohmann::ordered_json::array({u, v}));
    j["edges"] = std::move(edges);
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_iso(const FiniteField& f, const Options& o, std::ostream& out) {
    const FiniteField f2(o.q2 > 0 ? o.q2 : o.q);
    const int n2 = o.n2 > 0 ? o.n2 : o.n;
    ExplicitGraph g1;
    if (o.basis_path.empty()) {
        g1 = explicit_graph(f, o.n, o.caps());
    } else {
        const Basis b = read_basis_file(f, o.n, o.basis_path);
        g1 = explicit_graph(f, o.n, o.caps(), b);
    }
    ExplicitGraph g2;
    if (o.basis2_path.empty()) {
        g2 = explicit_graph(f2, n2, o.caps());
    } else {
        const Basis b2 = read_basis_file(f2, n2, o.basis2_path);
        g2 = explicit_graph(f2, n2, o.caps(), b2);
    }
    const IsoResult r = are_isomorphic(g1, g2,
                                       static_cast<int>(std::min<std::uint64_t>(o.cap_explicit, 4096)));
    nlohmann::ordered_json j;
    j["isomorphic"] = r.isomorphic;
    j["searched"] = r.searched;
    if (r.searched) {
        j["searchFound"] = r.search_found;
        if (r.search_found)
            j["witness"] = r.witness;
        else
            j["witness"] = nullptr;
    } else {
        j["searchFound"] = nullptr;
        j["witness"] = nullptr;
    }
    out << j.dump(2) << "\n";
    if (r.searched && r.search_found != r.isomorphic) return 1; // routes disagree
    return 0;
}

int cmd_aut(const FiniteField& f, const Options& o, std::ostream& out) {
    const ExplicitGraph g = explicit_graph(f, o.n, o.caps());
    out << automorphisms_json(automorphisms(f, g, o.cap_aut)).dump(2) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"non-zero component graphs of finite vector spaces"};
    app.name("nzc");
    app.require_subcommand(1);

    Options o;
    CLI::App* stats = app.add_subcommand("stats", "invariant report as JSON");
    add_common(stats, o);

    CLI::App* verify = app.add_subcommand("verify", "check one proved claim");
    verify->add_option("selector", o.selector, "claim to check")
        ->required()
        ->check(CLI::IsMember({"degrees", "diameter", "complete", "domination",
                               "minimal-dominating", "independence", "lin-ind", "basis-iso",
                               "iso-dim", "aut-form", "vertex-transitivity"}));
    add_common(verify, o);
    verify->add_option("--n2", o.n2, "second dimension for iso-dim");

    CLI::App* exportc = app.add_subcommand("export", "emit the explicit graph");
    add_common(exportc, o);
    exportc->add_option("--format", o.format, "dot or json")
        ->check(CLI::IsMember({"dot", "json"}));

    CLI::App* iso = app.add_subcommand("iso", "compare two graphs");
    add_common(iso, o);
    iso->add_option("--q2", o.q2, "field order of the second graph");
    iso->add_option("--n2", o.n2, "dimension of the second graph");
    iso->add_option("--basis2", o.basis2_path, "basis file for the second graph");

    CLI::App* aut = app.add_subcommand("aut", "enumerate automorphisms as JSON");
    add_common(aut, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (o.n < 1) throw Error("dimension must be at least 1");
        const FiniteField f(o.q);
        if (app.got_subcommand(stats)) return cmd_stats(f, o, out);
        if (app.got_subcommand(verify)) return cmd_verify(f, o, out);
        if (app.got_subcommand(exportc)) return cmd_export(f, o, out);
        if (app.got_subcommand(iso)) return cmd_iso(f, o, out);
        if (app.got_subcommand(aut)) return cmd_aut(f, o, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // no subcommand matched; require_subcommand should prevent this
}

} // namespace nzc
