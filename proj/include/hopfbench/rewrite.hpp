#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfbench/freealg.hpp"

namespace hb {

struct Rule {
    Word lead;
    NcPoly tail;  // every word strictly below lead
};

class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(Alphabet A, Field F) : A_(std::move(A)), F_(std::move(F)) {}

    // Orients each relation (largest word leads, made monic) and inter-reduces.
    // A relation reducing to a nonzero scalar marks the system inconsistent.
    static RewriteSystem from_relations(const Alphabet& A, const Field& F, const std::vector<NcPoly>& rels);

    const Alphabet& alphabet() const { return A_; }
    const Field& field() const { return F_; }
    const std::vector<Rule>& rules() const { return rules_; }
    bool inconsistent() const { return inconsistent_; }
    int max_degree() const;

    NcPoly normal_form(const NcPoly& f) const;
    NcPoly normal_form(const Word& w) const { return normal_form(NcPoly::monomial(w)); }
    bool reducible(const Word& w) const { return find_lead(w).first >= 0; }
    // (rule index, position) of the leftmost occurrence of any lead, or (-1, 0)
    std::pair<int, size_t> find_lead(const Word& w) const;

    // Adds f as a rule after reducing it; returns false if f reduces to zero.
    bool add_relation(const NcPoly& f);

private:
    void index();
    void interreduce_tails();

    Alphabet A_;
    Field F_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> by_first_;
    bool inconsistent_ = false;
};

// Normal forms with a per-word memo; not thread-safe.
class Reducer {
public:
    explicit Reducer(std::shared_ptr<const RewriteSystem> sys) : sys_(std::move(sys)) {}
    const NcPoly& word(const Word& w);
    NcPoly poly(const NcPoly& f);
    const RewriteSystem& system() const { return *sys_; }

private:
    std::shared_ptr<const RewriteSystem> sys_;
    std::unordered_map<Word, NcPoly, WordHash> memo_;
};

struct Ambiguity {
    enum class Kind { overlap, inclusion };
    Kind kind;
    int first, second;  // rule indices
    Word superword;
    // overlap: lead(first) is a prefix of superword and lead(second) a suffix.
    // inclusion: lead(second) sits inside lead(first) at `offset`.
    size_t offset = 0;
};

std::vector<Ambiguity> find_ambiguities(const RewriteSystem& sys);
NcPoly resolve_ambiguity(const Ambiguity& a, const RewriteSystem& sys);

enum class CompletionStatus { confluent, cap_exceeded, inconsistent };
std::string to_string(CompletionStatus s);

struct CompletionResult {
    RewriteSystem system;
    CompletionStatus status = CompletionStatus::confluent;
    int rules_added = 0;
    int ambiguities_checked = 0;
};

int default_degree_cap(const std::vector<NcPoly>& rels);
CompletionResult complete(RewriteSystem sys, int degree_cap);

struct BasisResult {
    std::vector<Word> words;  // deglex ascending
    bool finite = false;
};
BasisResult enumerate_basis(const RewriteSystem& sys, size_t cap);

}  // namespace hb
