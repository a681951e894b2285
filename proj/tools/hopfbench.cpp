// hopfbench: command line front end for the presentation, catalog and verification tools.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include "hopfbench/harness.hpp"

using namespace hb;

namespace {

Field parse_field(const std::string& s) {
    auto comma = s.find(',');
    int p = std::stoi(s.substr(0, comma));
    int k = comma == std::string::npos ? 1 : std::stoi(s.substr(comma + 1));
    return Field::make(p, k);
}

// a JSON file, or catalog:<id>[:<params>] instantiated over `field`
HopfPresentation load(const std::string& arg, const std::string& field) {
    if (arg.rfind("catalog:", 0) != 0) return load_presentation(arg);
    std::string rest = arg.substr(8);
    auto colon = rest.find(':');
    std::string id = rest.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : rest.substr(colon + 1);
    Field F = parse_field(field);
    const auto& f = find_family(id);
    return instantiate(f, parse_params(f, params, F), F);
}

BuildResult build_or_report(const HopfPresentation& P) {
    auto B = build_hopf(P);
    if (!B.ok()) fmt::print("collapse: {} ({})\n", to_string(B.collapse->kind), B.collapse->detail);
    return B;
}

std::string format_vecs(const HopfAlgebra& H, const std::vector<Vec>& vs) {
    std::string s;
    for (auto& v : vs) s += "  " + H.algebra().format(v) + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional pointed Hopf algebras: presentations, catalog and verification campaigns"};
    app.require_subcommand(1);
    std::string field = "2,1";
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    int rc = 0;

    auto* fi = app.add_subcommand("field-info", "describe GF(p^k)");
    int fp = 2, fk = 1;
    fi->add_option("p", fp)->required();
    fi->add_option("k", fk)->required();
    fi->callback([&] {
        Field F = Field::make(fp, fk);
        std::string mod;
        for (int i = static_cast<int>(F.modulus().size()) - 1; i >= 0; --i) mod += std::to_string(F.modulus()[i]) + " ";
        fmt::print("{}: q = {}, modulus coefficients (high to low) {}\nprimitive element {}\n", F.name(), F.q(), mod,
                   F.format(F.primitive()));
        if (F.q() <= 32) {
            for (Elem e : F.elements()) fmt::print("  {} = {}\n", e, F.format(e));
        }
    });

    std::string pres_arg, poly_arg;
    auto* nf = app.add_subcommand("nf", "normal form of a polynomial in the completed presentation");
    nf->add_option("presentation", pres_arg, "JSON file or catalog:<id>[:<params>]")->required();
    nf->add_option("poly", poly_arg)->required();
    nf->add_option("--field", field, "p,k for catalog presentations");
    nf->callback([&] {
        auto P = load(pres_arg, field);
        auto c = complete(RewriteSystem::from_relations(P.alphabet, P.field, P.relations),
                          default_degree_cap(P.relations));
        if (c.status != CompletionStatus::confluent) {
            fmt::print("completion {}\n", to_string(c.status));
            rc = 1;
            return;
        }
        fmt::print("{}\n", format(c.system.normal_form(parse_poly(poly_arg, P.alphabet, P.field)), P.alphabet));
    });

    auto* dim = app.add_subcommand("dim", "dimension of the completed presentation");
    dim->add_option("presentation", pres_arg)->required();
    dim->add_option("--field", field);
    dim->callback([&] {
        auto P = load(pres_arg, field);
        auto d = completed_dimension(P);
        if (d)
            fmt::print("{}\n", *d);
        else {
            fmt::print("unknown (completion or basis enumeration did not finish)\n");
            rc = 1;
        }
    });

    auto* hc = app.add_subcommand("hopf-check", "build the Hopf algebra and run the axiom checks");
    hc->add_option("presentation", pres_arg)->required();
    hc->add_option("--field", field);
    hc->callback([&] {
        auto B = build_or_report(load(pres_arg, field));
        if (!B.ok()) {
            rc = 1;
            return;
        }
        auto R = check_axioms(*B.hopf);
        fmt::print("dim {}\n", B.dim);
        for (auto& c : R.checks) fmt::print("  {:<22} {}{}\n", c.name, c.pass ? "ok" : "FAIL ", c.witness);
        rc = R.all_pass() ? 0 : 1;
    });

    std::string g_arg, h_arg;
    auto* sp = app.add_subcommand("skewprim", "basis of P_{g,h}");
    sp->add_option("presentation", pres_arg)->required();
    sp->add_option("left", g_arg, "group-like g as a polynomial")->required();
    sp->add_option("right", h_arg, "group-like h as a polynomial")->required();
    sp->add_option("--field", field);
    sp->callback([&] {
        auto B = build_or_report(load(pres_arg, field));
        if (!B.ok()) {
            rc = 1;
            return;
        }
        const auto& H = *B.hopf;
        auto basis = skew_primitive_space(H, H.element(g_arg), H.element(h_arg));
        fmt::print("dim P_{{{},{}}} = {}\n{}", g_arg, h_arg, basis.size(), format_vecs(H, basis));
    });

    bool enumerate = false;
    auto* gl = app.add_subcommand("grouplikes", "group-like elements");
    gl->add_option("presentation", pres_arg)->required();
    gl->add_flag("--enumerate", enumerate, "exhaustive scan (GF(2) and small dimension only)");
    gl->add_option("--field", field);
    gl->callback([&] {
        auto B = build_or_report(load(pres_arg, field));
        if (!B.ok()) {
            rc = 1;
            return;
        }
        const auto& H = *B.hopf;
        auto G = enumerate ? grouplikes_enumerate(H) : group_closure(H);
        fmt::print("{} group-likes{}\n{}", G.size(), enumerate ? "" : " (closure of the generators)", format_vecs(H, G));
    });

    std::string spec;
    int nmax = 0;
    auto* ni = app.add_subcommand("nichols", "graded dimensions of a Nichols algebra");
    ni->add_option("spec", spec, "diagonal:.. | jordan:s,m | trivial:m | yd-cyclic:i,r,n[;..] | bashev:k,l,lambda")
        ->required();
    ni->add_option("--nmax", nmax);
    ni->add_option("--field", field);
    ni->callback([&] {
        Field F = parse_field(field);
        auto V = parse_braided(spec, F);
        if (!check_braid_equation(V)) {
            fmt::print("not a braiding\n");
            rc = 1;
            return;
        }
        auto d = nichols_dims(V, nmax);
        std::string g;
        for (int x : d.graded) g += std::to_string(x) + " ";
        fmt::print("graded {}\ntotal {}{}\n", g, d.total, d.closed ? "" : " (lower bound)");
    });

    auto* cat = app.add_subcommand("catalog", "list, show or export catalog families");
    cat->require_subcommand(1);
    std::string scope = "all", id;
    auto* cl = cat->add_subcommand("list");
    cl->add_option("--scope", scope, "T4.2, T3.7, lemmas or all");
    cl->callback([&] {
        std::map<std::string, int> count;
        for (auto& i : list_families(scope)) {
            const auto& f = find_family(i);
            ++count[f.scope()];
            fmt::print("{:<12} {:<8} {}\n", i, f.group, f.name);
        }
        for (auto& [s, n] : count) fmt::print("{}: {} families\n", s, n);
    });
    auto* cs = cat->add_subcommand("show");
    cs->add_option("id", id)->required();
    cs->callback([&] { fmt::print("{}", format_record(find_family(id))); });
    auto* ce = cat->add_subcommand("export");
    std::string params;
    ce->add_option("id", id)->required();
    ce->add_option("--params", params, "e.g. l=t+1,mu=2");
    ce->add_option("--field", field);
    ce->callback([&] {
        Field F = parse_field(field);
        const auto& f = find_family(id);
        fmt::print("{}\n", presentation_to_json(instantiate(f, parse_params(f, params, F), F)));
    });

    int sample = 0;
    std::uint64_t seed = kDefaultSeed;
    bool timing = false, full = false;
    std::string jsonl;
    auto* ve = app.add_subcommand("verify", "dimension and axiom campaign over a scope or a family id");
    ve->add_option("scope", scope, "T4.2, T3.7, lemmas, all, or a family id")->required();
    ve->add_option("--field", field);
    ve->add_option("--sample", sample, "sample n assignments per family");
    ve->add_option("--seed", seed);
    ve->add_flag("--full", full, "full sweep regardless of parameter count");
    ve->add_option("--threads", threads);
    ve->add_flag("--timing", timing, "add elapsed_ms to the records");
    ve->add_option("--jsonl", jsonl, "write records here instead of stdout");
    ve->callback([&] {
        Field F = parse_field(field);
        Sampling s = sample > 0 ? Sampling::sample(sample, seed) : full ? Sampling::all() : Sampling::policy();
        s.seed = seed;
        RunOptions opt{threads};
        bool is_scope = scope == "T4.2" || scope == "T3.7" || scope == "lemmas" || scope == "all";
        auto reps = is_scope ? verify_scope(scope, F, s, opt) : verify_family(scope, F, s, opt);
        std::ofstream file;
        if (!jsonl.empty()) file.open(jsonl);
        std::ostream& os = jsonl.empty() ? std::cout : file;
        for (auto& r : reps) os << to_json_line(r, timing) << "\n";
        fmt::print("{}", summary_table(reps));
        rc = std::all_of(reps.begin(), reps.end(), [](auto& r) { return r.pass(); }) ? 0 : 1;
    });

    std::string file1, file2;
    auto* is = app.add_subcommand("iso", "search for Hopf isomorphisms between two presentations");
    is->add_option("first", file1)->required();
    is->add_option("second", file2)->required();
    is->add_option("--field", field);
    is->callback([&] {
        auto B1 = build_or_report(load(file1, field));
        auto B2 = build_or_report(load(file2, field));
        if (!B1.ok() || !B2.ok()) {
            rc = 1;
            return;
        }
        auto r = iso_search(*B1.hopf, *B2.hopf);
        fmt::print("{} isomorphisms ({} candidates{})\n", r.isomorphisms.size(), r.candidates,
                   r.budget_exceeded ? ", budget exceeded" : "");
        const auto& P = B1.hopf->pres;
        for (auto& m : r.isomorphisms) {
            std::string s;
            for (size_t i = 0; i < m.images.size(); ++i)
                s += fmt::format("{}{} -> {}", i ? ", " : "", P.alphabet.declared()[i], B2.hopf->algebra().format(m.images[i]));
            fmt::print("  {}\n", s);
        }
        rc = r.isomorphisms.empty() ? 1 : 0;
    });

    auto* ic = app.add_subcommand("iso-criteria", "compare the brute-force oracle with a family's criterion");
    ic->add_option("id", id)->required();
    ic->add_option("--field", field);
    ic->add_option("--threads", threads);
    ic->callback([&] {
        auto r = verify_iso_criteria(id, parse_field(field), {threads});
        fmt::print("{}\n", to_json(r));
        fmt::print("{} over {}: {} ordered pairs, {}\n", r.family, r.field, r.pairs.size(),
                   r.agreement() ? "agreement" : "DISAGREEMENT");
        rc = r.agreement() ? 0 : 1;
    });

    std::string suite;
    int trials = 100;
    auto* id_cmd = app.add_subcommand("identities", "randomized identity suites");
    id_cmd->add_option("suite", suite, "jacobson, lemma210 or lemma211")->required();
    id_cmd->add_option("--field", field);
    id_cmd->add_option("--trials", trials);
    id_cmd->add_option("--seed", seed);
    id_cmd->callback([&] {
        auto r = verify_identity_suite(suite, parse_field(field), trials, seed);
        fmt::print("{} over {}: {} trials, {} failures\n", r.suite, r.field, r.trials, r.failures);
        for (auto& w : r.witnesses) fmt::print("  {}\n", w);
        rc = r.pass() ? 0 : 1;
    });

    int amb_n = 50;
    auto* am = app.add_subcommand("ambiguity", "completed dimension versus a declared ambiguity condition");
    am->add_option("id", id)->required();
    am->add_option("--field", field);
    am->add_option("--sample", amb_n, "tuples per discrete assignment");
    am->add_option("--seed", seed);
    am->add_option("--threads", threads);
    am->callback([&] {
        auto r = verify_ambiguity(id, parse_field(field), amb_n, seed, {threads});
        for (auto& row : r.rows)
            if (!row.agree) fmt::print("  [{}] condition {} dim {}\n", row.params, row.condition, row.dim);
        fmt::print("{} over {}: {} points, {} exceptions\n", r.family, r.field, r.rows.size(), r.exceptions());
        rc = r.exceptions() == 0 ? 0 : 1;
    });

    auto* nc = app.add_subcommand("controls", "fault-injected negative controls, one family per coradical class");
    nc->add_option("--scope", scope);
    nc->add_option("--field", field);
    nc->callback([&] {
        Field F = parse_field(field);
        auto reps = negative_controls(control_families(scope, F), F, {threads});
        for (auto& r : reps)
            fmt::print("{:<12} {:<8} {:<6} {}\n", r.family, find_family(r.family).group, r.fault, r.outcome);
        rc = std::all_of(reps.begin(), reps.end(), [](auto& r) { return r.collapsed; }) ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return 2;
    }
    return rc;
}
