#pragma once

#include <string>
#include <vector>

#include "hopfbench/catalog.hpp"
#include "hopfbench/expr.hpp"
#include "hopfbench/hopf.hpp"

namespace hbtest {

using namespace hb;

inline HopfPresentation group_presentation(const std::string& group, const Field& F) {
    GroupMacro G = group_macro(group);
    HopfPresentation P;
    P.name = "k" + group;
    P.field = F;
    P.alphabet = Alphabet(G.gens);
    for (size_t i = 0; i < G.gens.size(); ++i) P.tags.push_back({TagKind::grouplike, {}});
    for (auto& r : G.relations) {
        P.relations.push_back(parse_poly(r, P.alphabet, F, {{"p", ParamValue::integer(F.p())}}));
        P.relation_text.push_back(r);
    }
    // abelian macros leave commutation implicit
    if (G.abelian)
        for (size_t i = 0; i < G.gens.size(); ++i)
            for (size_t j = i + 1; j < G.gens.size(); ++j) {
                std::string r = "[" + G.gens[i] + "," + G.gens[j] + "]";
                P.relations.push_back(parse_poly(r, P.alphabet, F));
                P.relation_text.push_back(r);
            }
    return P;
}

inline HopfAlgebra build(const HopfPresentation& P) {
    BuildResult r = build_hopf(P);
    if (!r.ok()) throw std::runtime_error(P.name + ": " + to_string(r.collapse->kind) + " " + r.collapse->detail);
    return *r.hopf;
}

inline HopfAlgebra build(const std::string& id, const std::string& params, const Field& F) {
    return build(instantiate(id, parse_params(find_family(id), params, F), F));
}

inline FinAlgebra group_algebra(const std::string& group, const Field& F) {
    return build(group_presentation(group, F)).algebra();
}

inline Vec tensor(const Field& F, const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = F.mul(a[i], b[j]);
    return out;
}

}  // namespace hbtest
