#include <doctest.h>

#include <algorithm>
#include <set>

#include "hopfbench/harness.hpp"
#include "test_support.hpp"

using namespace hb;
using namespace hbtest;

namespace {

Params params_of(const std::string& id, const std::string& text, const Field& F) {
    return parse_params(find_family(id), text, F);
}

}  // namespace

TEST_SUITE("harness") {
    TEST_CASE("family verification") {
        Field F4 = Field::make(2, 2);
        auto reps = verify_family("T4.2-5", F4, Sampling::all());
        REQUIRE(reps.size() == 4);
        for (auto& r : reps) {
            CHECK(r.outcome == Outcome::ok);
            CHECK(r.dim == 16);
            CHECK(r.axioms.empty());
            CHECK(r.pass());
        }
        auto s = verify_family("T3.7-8", Field::make(3, 1), Sampling::sample(10, 5));
        CHECK(s.size() <= 10);
        for (auto& r : s) {
            CHECK(r.dim == 81);
            CHECK(r.pass());
        }
    }

    TEST_CASE("reports are deterministic") {
        Field F4 = Field::make(2, 2);
        auto run = [&](int threads) {
            std::string out;
            for (auto& r : verify_scope("T4.2", F4, Sampling::sample(2, 9), {threads, 0})) out += to_json_line(r) + "\n";
            return out;
        };
        std::string a = run(1);
        CHECK(a == run(1));
        CHECK(a == run(3));
        CHECK(a.find("elapsed") == std::string::npos);
    }

    TEST_CASE("sampling policy") {
        Field F2 = Field::make(2, 1), F4 = Field::make(2, 2);
        const FamilySpec& f = find_family("L3.5");
        CHECK(campaign_points(f, F2, Sampling::policy()).size() == parameter_sweep(f, F2).size());
        CHECK(campaign_points(f, F4, Sampling::policy()).size() == 16);
        CHECK(campaign_points(find_family("T4.2-18"), F4, Sampling::policy()).size() == 8);
    }

    TEST_CASE("an inconsistent family collapses with a dimension drop") {
        Field F2 = Field::make(2, 1);
        auto reps = verify_family("T4.2-17", F2, Sampling::all());
        bool dropped = std::any_of(reps.begin(), reps.end(), [](auto& r) { return r.reason.find("dimension_drop") != std::string::npos; });
        CHECK(dropped);
    }

    TEST_CASE("isomorphism criteria agree with the search oracle") {
        Field F2 = Field::make(2, 1), F4 = Field::make(2, 2);
        auto r5 = verify_iso_criteria("T4.2-5", F4);
        CHECK(r5.agreement());
        CHECK(r5.oracle_symmetric);
        CHECK(r5.oracle_classes.size() == 2);
        for (auto& c : r5.oracle_classes) CHECK(c.size() == 2);
        auto r46 = verify_iso_criteria("T4.2-46", F4);
        CHECK(r46.agreement());
        CHECK(r46.oracle_classes.size() == 4);
        auto r1 = verify_iso_criteria("T3.7-1", F2);
        CHECK(r1.agreement());
        CHECK(r1.off_claim_points().empty());
    }

    TEST_CASE("identity suites") {
        for (auto [suite, p, k] : {std::tuple{"jacobson", 2, 1}, {"jacobson", 2, 2}, {"lemma210", 2, 1}, {"lemma210", 3, 1},
                                  {"lemma211", 2, 1}, {"lemma211", 3, 1}}) {
            auto r = verify_identity_suite(suite, Field::make(p, k), 20, 1);
            CAPTURE(suite);
            CHECK(r.trials == 20);
            CHECK(r.pass());
        }
        CHECK_THROWS(verify_identity_suite("nope", Field::make(2, 1), 1, 1));
    }

    TEST_CASE("Nichols targets") {
        for (auto& r : verify_nichols_suite(Field::make(2, 1))) {
            CAPTURE(r.c.label);
            CHECK(r.pass);
        }
        for (auto& r : verify_nichols_suite(Field::make(3, 1))) CHECK(r.pass);
    }

    TEST_CASE("the two-generator condition over CpxCp matches a corrected obstruction") {
        // the overlap of [x,y] with the power relations leaves (m l1 l4 - l2 l3)(1 - g^(m+1))
        Field F3 = Field::make(3, 1);
        const std::string corrected = "(m + 1) % 3 == 0 or m*l1*l4 == l2*l3";
        auto rep = verify_ambiguity("L3.10-munz", F3, 20, 4);
        REQUIRE_FALSE(rep.rows.empty());
        const FamilySpec& f = find_family("L3.10-munz");
        for (auto& row : rep.rows) {
            Params P = params_of("L3.10-munz", row.params, F3);
            CAPTURE(row.params);
            CHECK((row.dim == 81) == eval_predicate(corrected, F3, P));
            CHECK(row.condition == ambiguity_condition(f, P, F3));
        }
        // a point where the printed condition fails yet nothing collapses
        Params P = params_of("L3.10-munz", "m=1,l1=1,l2=1,l3=1,l4=1,l5=0", F3);
        CHECK_FALSE(ambiguity_condition(f, P, F3));
        CHECK(completed_dimension(instantiate(f, P, F3)) == 81);
    }

    TEST_CASE("the three-generator condition is exact once the factor 2 survives") {
        Field F5 = Field::make(5, 1);
        const FamilySpec& f = find_family("L3.5");
        for (auto& P : parameter_sample(f, F5, 12, 7)) {
            CAPTURE(format_params(f, P, F5));
            auto d = completed_dimension(instantiate(f, P, F5), 40);
            REQUIRE(d);
            CHECK((*d == 625) == ambiguity_condition(f, P, F5));
        }
    }

    TEST_CASE("fault injection collapses every control") {
        Field F2 = Field::make(2, 1);
        auto ids = control_families("T4.2", F2);
        std::set<std::string> groups;
        for (auto& id : list_families("T4.2")) groups.insert(find_family(id).group);
        CHECK(ids.size() == groups.size());
        auto reps = negative_controls(ids, F2);
        CHECK_FALSE(reps.empty());
        for (auto& r : reps) {
            CAPTURE(r.family);
            CHECK(r.collapsed);
            CHECK(r.outcome != "ok");
        }
        HopfPresentation P = instantiate("T4.2-5", params_of("T4.2-5", "l=1", F2), F2);
        auto bad = inject_fault(P, "unit");
        REQUIRE(bad);
        CHECK_FALSE(build_hopf(*bad).ok());
    }

    TEST_CASE("parallel_for visits every index once") {
        std::vector<int> hits(257, 0);
        parallel_for(257, 4, [&](int i) { hits[i]++; });
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
}
