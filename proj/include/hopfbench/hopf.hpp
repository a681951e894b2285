#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfbench/findim.hpp"

namespace hb {

enum class TagKind { grouplike, skewprim };

// skewprim over w: Delta(x) = x (x) 1 + w (x) x, w a word in grouplike generators
struct GenTag {
    TagKind kind = TagKind::grouplike;
    Word over;
};

struct HopfPresentation {
    std::string name;
    Field field;
    Alphabet alphabet;
    std::vector<GenTag> tags;  // by declared generator index
    std::vector<NcPoly> relations;
    std::vector<std::string> relation_text;

    const GenTag& tag(Letter l) const { return tags.at(alphabet.declared_index(l)); }
    // throws unless every skewprim tag is a product of grouplike generators
    void validate() const;
    std::string describe_tag(int declared_index) const;
};

HopfPresentation parse_presentation(const std::string& json_text);
HopfPresentation load_presentation(const std::string& path);
std::string presentation_to_json(const HopfPresentation& P);

enum class CollapseKind { zero_ring, cap_exceeded, infinite_basis, dimension_drop, non_coideal, antipode_failure };
std::string to_string(CollapseKind k);

struct CollapseReport {
    CollapseKind kind;
    std::string detail;
    int dim = -1;
};

class HopfAlgebra {
public:
    HopfPresentation pres;
    std::shared_ptr<const FinAlgebra> A;
    Matrix delta;     // dim x dim^2, row k holds Delta(e_k), column a*dim+b is e_a (x) e_b
    Vec counit;
    Matrix antipode;  // column k holds S(e_k)

    int dim() const { return A->dim(); }
    const FinAlgebra& algebra() const { return *A; }
    const Field& field() const { return A->field(); }
    Vec generator(int declared_index) const { return A->generator(pres.alphabet.letter(declared_index)); }
    Vec element(const std::string& poly) const;

    SparseVec coproduct(const Vec& v) const;  // sparse over dim^2
    Elem epsilon(const Vec& v) const;
    Vec S(const Vec& v) const;
};

struct BuildResult {
    std::optional<HopfAlgebra> hopf;
    std::optional<CollapseReport> collapse;
    int dim = -1;  // completed dimension, 0 for the zero ring, -1 if unknown
    CompletionStatus completion = CompletionStatus::confluent;
    int rules = 0;
    bool ok() const { return hopf.has_value(); }
};

// degree_cap <= 0 selects the default; expected_dim > 0 turns a mismatch into dimension_drop.
BuildResult build_hopf(const HopfPresentation& P, int degree_cap = 0, int expected_dim = -1);

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const;
    std::string summary() const;
};

AxiomReport check_axioms(const HopfAlgebra& H);

// Convolution inverse of the identity by a dim^2-unknown linear solve.
std::optional<Matrix> antipode_by_solve(const FinAlgebra& A, const Matrix& delta, const Vec& counit);
// S on generators from S(g)g = 1 and S(x) = -S(w)x, extended anti-multiplicatively.
std::optional<Matrix> antipode_from_generators(const HopfAlgebra& H);
// Solve for dim <= 32, generator construction beyond; result satisfies m(S (x) id)Delta = u eps.
std::optional<Matrix> compute_antipode(const HopfAlgebra& H);

bool is_grouplike(const HopfAlgebra& H, const Vec& v);
std::vector<Vec> skew_primitive_space(const HopfAlgebra& H, const Vec& g, const Vec& h);
std::vector<Vec> grouplikes_verify(const HopfAlgebra& H, const std::vector<Vec>& candidates);
// exhaustive scan; requires q^dim <= budget
std::vector<Vec> grouplikes_enumerate(const HopfAlgebra& H, double budget = 1 << 20);
// closure of the grouplike generators under multiplication
std::vector<Vec> group_closure(const HopfAlgebra& H);

HopfPresentation bosonize(const FinAlgebra& group, const std::vector<Matrix>& action, const std::vector<Word>& coaction,
                          const std::vector<std::string>& v_names, const std::vector<std::string>& nichols_relations);

struct HopfMorphism {
    std::vector<Vec> images;  // by declared generator index of the source
};

struct IsoSearchResult {
    std::vector<HopfMorphism> isomorphisms;
    long long candidates = 0;
    bool budget_exceeded = false;
};

IsoSearchResult iso_search(const HopfAlgebra& H1, const HopfAlgebra& H2, bool first_only = false,
                           long long budget = 20'000'000);

// matrix of the algebra map determined by generator images, column k = phi(e_k)
Matrix morphism_matrix(const HopfAlgebra& H1, const HopfAlgebra& H2, const HopfMorphism& m);

}  // namespace hb
