#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hopfbench/catalog.hpp"
#include "hopfbench/nichols.hpp"

namespace hb {

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Sampling {
    enum class Mode { full, sample, policy };
    Mode mode = Mode::policy;
    int n = 0;
    std::uint64_t seed = kDefaultSeed;

    static Sampling all() { return {Mode::full, 0, kDefaultSeed}; }
    static Sampling sample(int n, std::uint64_t seed) { return {Mode::sample, n, seed}; }
    // full over GF(p); full over larger fields for <= 2 parameters; else 16 seeded samples
    static Sampling policy() { return {}; }
};

struct RunOptions {
    int threads = 1;
    int degree_cap = 0;
};

// assignments a campaign visits, in sweep order
std::vector<Params> campaign_points(const FamilySpec& f, const Field& F, const Sampling& s);

enum class Outcome { ok, collapse, budget_exceeded };
std::string to_string(Outcome o);

struct VerificationReport {
    std::string family;
    std::string field;
    std::string params;
    Outcome outcome = Outcome::ok;
    int dim = -1;
    int claimed = 0;
    std::string axioms;  // names of failing checks, empty when all pass
    std::string reason;
    std::optional<bool> condition;  // declared ambiguity condition, if any
    double elapsed_ms = 0;

    // families with a condition must collapse exactly when it fails
    bool expected_ok() const { return condition.value_or(true); }
    bool pass() const { return (outcome == Outcome::ok) == expected_ok() && outcome != Outcome::budget_exceeded; }
};

// one JSON object per line; timing is omitted unless asked for so reruns are byte-identical
std::string to_json_line(const VerificationReport& r, bool timing = false);

VerificationReport verify_point(const FamilySpec& f, const Params& P, const Field& F, const RunOptions& opt = {});
std::vector<VerificationReport> verify_family(const std::string& id, const Field& F, const Sampling& s = {},
                                              const RunOptions& opt = {});
// families whose characteristic excludes F are skipped
std::vector<VerificationReport> verify_scope(const std::string& scope, const Field& F, const Sampling& s = {},
                                             const RunOptions& opt = {});
std::string summary_table(const std::vector<VerificationReport>& reports);

// Completed dimension only (no coalgebra); nullopt if completion or enumeration does not finish.
std::optional<int> completed_dimension(const HopfPresentation& P, int degree_cap = 0);

struct IsoPair {
    int a = 0, b = 0;
    bool oracle = false;
    bool predicate = false;
    bool budget_exceeded = false;
    bool agree() const { return oracle == predicate && !budget_exceeded; }
};

struct IsoComparisonReport {
    std::string family;
    std::string field;
    std::vector<std::string> points;
    std::vector<int> dims;  // dimension each presentation builds to, -1 if it does not build
    int claimed = 0;
    std::vector<IsoPair> pairs;  // all ordered pairs, row-major
    bool oracle_symmetric = true;
    std::vector<std::vector<int>> oracle_classes;

    bool agreement() const;
    std::vector<int> off_claim_points() const;
};

IsoComparisonReport verify_iso_criteria(const std::string& id, const Field& F, const RunOptions& opt = {});
std::string to_json(const IsoComparisonReport& r);

struct SuiteResult {
    std::string suite;
    std::string field;
    int trials = 0;
    int failures = 0;
    std::vector<std::string> witnesses;  // first few failures
    bool pass() const { return trials > 0 && failures == 0; }
};

// suite: jacobson, lemma210 or lemma211
SuiteResult verify_identity_suite(const std::string& suite, const Field& F, int trials, std::uint64_t seed);

struct NicholsCase {
    std::string label;
    std::string spec;
    long expected = 0;
    bool lower_bound = false;  // pass when the computed total exceeds `expected`
};

struct NicholsCaseResult {
    NicholsCase c;
    NicholsDims dims;
    bool pass = false;
};

std::vector<NicholsCase> nichols_targets(int p);
std::vector<NicholsCaseResult> verify_nichols_suite(const Field& F);

struct AmbiguityRow {
    std::string params;
    bool condition = false;
    int dim = -1;  // -1 if completion did not finish
    bool agree = false;
};

struct AmbiguityReport {
    std::string family;
    std::string field;
    int claimed = 0;
    std::vector<AmbiguityRow> rows;
    int exceptions() const;
};

// Integer-domain parameters are swept in full; field parameters take n tuples, half uniform and
// half drawn with zeros favoured until the condition holds.
std::vector<Params> ambiguity_points(const FamilySpec& f, const Field& F, int n, std::uint64_t seed);
AmbiguityReport verify_ambiguity(const std::string& id, const Field& F, int n, std::uint64_t seed,
                                 const RunOptions& opt = {});

// Fault kinds: "unit" adds 1 to a power relation of a skew-primitive generator; "shift" adds a
// skew-primitive generator to its commutation relation with a group-like generator.
std::vector<std::string> fault_kinds();
std::optional<HopfPresentation> inject_fault(const HopfPresentation& P, const std::string& kind);

struct FaultReport {
    std::string family;
    std::string field;
    std::string params;
    std::string fault;
    std::string outcome;  // "ok" or the collapse kind
    bool collapsed = false;
};

// per coradical class in the scope, the first family whose unperturbed first point verifies over F
// and admits a fault
std::vector<std::string> control_families(const std::string& scope, const Field& F);
std::vector<FaultReport> negative_controls(const std::vector<std::string>& ids, const Field& F,
                                           const RunOptions& opt = {});

// Runs f(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& f);

}  // namespace hb
