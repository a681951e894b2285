#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfbench/expr.hpp"
#include "hopfbench/hopf.hpp"

namespace hb {

enum class DomainKind { field, prime_field, ints };

struct ParamSpec {
    std::string name;
    DomainKind kind = DomainKind::field;
    std::vector<long long> ints;
    bool up_to_p = false;  // {1..p-1}
};

struct GenSpec {
    std::string name;
    std::string over;  // "1" for primitives; may contain $params
};

struct FamilySpec {
    std::string id;
    int item = 0;
    std::string name;
    std::string group;
    int characteristic = 0;  // 0 = any
    std::vector<GenSpec> gens;
    std::vector<ParamSpec> params;
    std::vector<std::string> relations;
    std::string condition;
    int condition_char = 0;
    std::string iso;
    std::vector<std::string> notes;

    std::string scope() const;  // T4.2, T3.7 or lemmas
    int claimed_dim(int p) const;
    const ParamSpec& param(const std::string& name) const;
};

using Params = ParamEnv;

std::vector<FamilySpec> parse_catalog(const std::string& text);
// the catalog compiled into the library
const std::vector<FamilySpec>& catalog();
const FamilySpec& find_family(const std::string& id);
// scope: T4.2, T3.7, lemmas or all; ordered by item number
std::vector<std::string> list_families(const std::string& scope);
std::string format_record(const FamilySpec& f);

// Coradical presentation; generators of a nonabelian group are exempt from implicit commutation.
struct GroupMacro {
    std::vector<std::string> gens;
    std::vector<std::string> relations;
    bool abelian = true;
};
GroupMacro group_macro(const std::string& name);

std::vector<ParamValue> domain_values(const ParamSpec& s, const Field& F);
double parameter_space_size(const FamilySpec& f, const Field& F);
// lexicographic in the declared parameter order
std::vector<Params> parameter_sweep(const FamilySpec& f, const Field& F);
std::vector<Params> parameter_sample(const FamilySpec& f, const Field& F, int n, std::uint64_t seed);
std::string format_params(const FamilySpec& f, const Params& P, const Field& F);
// "l=t+1,mu=2"
Params parse_params(const FamilySpec& f, const std::string& s, const Field& F);

// throws on out-of-domain parameters or a characteristic mismatch
HopfPresentation instantiate(const FamilySpec& f, const Params& P, const Field& F);
HopfPresentation instantiate(const std::string& id, const Params& P, const Field& F);

bool ambiguity_condition(const FamilySpec& f, const Params& P, const Field& F);
bool iso_predicate(const FamilySpec& f, const Params& a, const Params& b, const Field& F);

// Boolean predicate over named integer/field values:
//   pred := conj {'or' conj};  conj := neg {'and' neg}
//   neg  := 'not' neg | 'exists' v{,v} 'in' dom ':' pred | '(' pred ')' | sum ('=='|'!=') sum
//   dom  := '{' int{,int} '}' | Fp | Fp* | F | F*
// Arithmetic uses + - * ^ %; int op int stays an integer, anything else is computed in F.
bool eval_predicate(const std::string& pred, const Field& F, const ParamEnv& vars);

}  // namespace hb
