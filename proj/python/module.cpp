#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfbench/harness.hpp"

namespace py = pybind11;
using namespace hb;

namespace {

py::object loads(const std::string& s) { return py::module_::import("json").attr("loads")(s); }

// JSON text, a file path, or catalog:<id>[:<params>]
HopfPresentation presentation(const std::string& arg, int p, int k) {
    if (!arg.empty() && arg.front() == '{') return parse_presentation(arg);
    if (arg.rfind("catalog:", 0) != 0) return load_presentation(arg);
    std::string rest = arg.substr(8);
    auto colon = rest.find(':');
    Field F = Field::make(p, k);
    const auto& f = find_family(rest.substr(0, colon));
    return instantiate(f, parse_params(f, colon == std::string::npos ? "" : rest.substr(colon + 1), F), F);
}

HopfAlgebra built(const HopfPresentation& P) {
    auto B = build_hopf(P);
    if (!B.ok()) throw std::runtime_error("collapse: " + to_string(B.collapse->kind) + " (" + B.collapse->detail + ")");
    return *B.hopf;
}

py::dict build(const std::string& arg, int p, int k) {
    auto P = presentation(arg, p, k);
    auto B = build_hopf(P);
    py::dict d;
    d["ok"] = B.ok();
    d["dim"] = B.dim;
    d["collapse"] = B.collapse ? py::cast(to_string(B.collapse->kind)) : py::none();
    d["detail"] = B.collapse ? B.collapse->detail : "";
    py::dict ax;
    if (B.ok())
        for (auto& c : check_axioms(*B.hopf).checks) ax[py::str(c.name)] = c.pass;
    d["axioms"] = ax;
    return d;
}

std::string normal_form(const std::string& arg, const std::string& poly, int p, int k) {
    auto P = presentation(arg, p, k);
    auto c = complete(RewriteSystem::from_relations(P.alphabet, P.field, P.relations), default_degree_cap(P.relations));
    if (c.status != CompletionStatus::confluent) throw std::runtime_error("completion " + to_string(c.status));
    return format(c.system.normal_form(parse_poly(poly, P.alphabet, P.field)), P.alphabet);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite-dimensional pointed Hopf algebras over small finite fields.";

    m.def("field_info", [](int p, int k) {
        Field F = Field::make(p, k);
        py::dict d;
        d["name"] = F.name();
        d["q"] = F.q();
        d["modulus"] = F.modulus();
        d["primitive"] = F.format(F.primitive());
        return d;
    }, py::arg("p"), py::arg("k") = 1);

    m.def("catalog_list", &list_families, py::arg("scope") = "all");
    m.def("catalog_show", [](const std::string& id) { return format_record(find_family(id)); }, py::arg("id"));
    m.def("instantiate", [](const std::string& id, const std::string& params, int p, int k) {
        Field F = Field::make(p, k);
        const auto& f = find_family(id);
        return presentation_to_json(instantiate(f, parse_params(f, params, F), F));
    }, py::arg("id"), py::arg("params") = "", py::arg("p") = 2, py::arg("k") = 1);

    m.def("normal_form", &normal_form, py::arg("presentation"), py::arg("poly"), py::arg("p") = 2, py::arg("k") = 1);
    m.def("dimension", [](const std::string& arg, int p, int k) { return completed_dimension(presentation(arg, p, k)); },
          py::arg("presentation"), py::arg("p") = 2, py::arg("k") = 1);
    m.def("build", &build, py::arg("presentation"), py::arg("p") = 2, py::arg("k") = 1,
          "Build and check the axioms; collapses are reported, not raised.");
    m.def("skew_primitive_dim", [](const std::string& arg, const std::string& g, const std::string& h, int p, int k) {
        HopfAlgebra H = built(presentation(arg, p, k));
        return skew_primitive_space(H, H.element(g), H.element(h)).size();
    }, py::arg("presentation"), py::arg("g"), py::arg("h"), py::arg("p") = 2, py::arg("k") = 1);
    m.def("grouplikes", [](const std::string& arg, bool enumerate, int p, int k) {
        HopfAlgebra H = built(presentation(arg, p, k));
        std::vector<std::string> out;
        for (auto& v : enumerate ? grouplikes_enumerate(H) : group_closure(H)) out.push_back(H.algebra().format(v));
        return out;
    }, py::arg("presentation"), py::arg("enumerate") = false, py::arg("p") = 2, py::arg("k") = 1);
    m.def("iso", [](const std::string& a, const std::string& b, int p, int k) {
        auto r = iso_search(built(presentation(a, p, k)), built(presentation(b, p, k)), true);
        if (r.budget_exceeded) throw std::runtime_error("iso search budget exceeded");
        return !r.isomorphisms.empty();
    }, py::arg("a"), py::arg("b"), py::arg("p") = 2, py::arg("k") = 1);

    m.def("nichols", [](const std::string& spec, int p, int k, int nmax) {
        auto d = nichols_dims(parse_braided(spec, Field::make(p, k)), nmax);
        py::dict out;
        out["graded"] = d.graded;
        out["total"] = d.total;
        out["closed"] = d.closed;
        return out;
    }, py::arg("spec"), py::arg("p") = 2, py::arg("k") = 1, py::arg("nmax") = 0);

    m.def("verify", [](const std::string& target, int p, int k, int sample, std::uint64_t seed, int threads) {
        Field F = Field::make(p, k);
        Sampling s = sample > 0 ? Sampling::sample(sample, seed) : Sampling::policy();
        RunOptions opt{threads, 0};
        std::vector<VerificationReport> reps;
        {
            py::gil_scoped_release release;
            bool scope = target == "all" || target == "T4.2" || target == "T3.7" || target == "lemmas";
            reps = scope ? verify_scope(target, F, s, opt) : verify_family(target, F, s, opt);
        }
        py::list out;
        for (auto& r : reps) out.append(loads(to_json_line(r)));
        return out;
    }, py::arg("target"), py::arg("p") = 2, py::arg("k") = 1, py::arg("sample") = 0, py::arg("seed") = kDefaultSeed,
       py::arg("threads") = 1);
    m.def("iso_criteria", [](const std::string& id, int p, int k) {
        return loads(to_json(verify_iso_criteria(id, Field::make(p, k))));
    }, py::arg("id"), py::arg("p") = 2, py::arg("k") = 1);
    m.def("identity_suite", [](const std::string& suite, int p, int k, int trials, std::uint64_t seed) {
        auto r = verify_identity_suite(suite, Field::make(p, k), trials, seed);
        py::dict d;
        d["suite"] = r.suite;
        d["field"] = r.field;
        d["trials"] = r.trials;
        d["failures"] = r.failures;
        d["witnesses"] = r.witnesses;
        return d;
    }, py::arg("suite"), py::arg("p") = 2, py::arg("k") = 1, py::arg("trials") = 100, py::arg("seed") = kDefaultSeed);
    m.def("ambiguity", [](const std::string& id, int p, int k, int n, std::uint64_t seed) {
        auto r = verify_ambiguity(id, Field::make(p, k), n, seed);
        py::list rows;
        for (auto& row : r.rows) {
            py::dict d;
            d["params"] = row.params;
            d["condition"] = row.condition;
            d["dim"] = row.dim;
            d["agree"] = row.agree;
            rows.append(d);
        }
        return rows;
    }, py::arg("id"), py::arg("p") = 2, py::arg("k") = 1, py::arg("n") = 50, py::arg("seed") = kDefaultSeed);
}
