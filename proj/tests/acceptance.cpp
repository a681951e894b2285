#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <fmt/core.h>

#include "hopfbench/harness.hpp"

using namespace hb;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string join(const std::vector<std::string>& v, size_t limit = 12) {
    std::string out;
    for (size_t i = 0; i < v.size() && i < limit; ++i) out += (i ? ", " : "") + v[i];
    if (v.size() > limit) out += fmt::format(" (+{} more)", v.size() - limit);
    return out;
}

Verdict catalog_counts() {
    size_t a = list_families("T4.2").size(), b = list_families("T3.7").size();
    return {a == 197 && b == 35, fmt::format("T4.2={} T3.7={}", a, b)};
}

Verdict sweep(const std::string& scope, const std::vector<std::pair<Field, bool>>& fields) {
    Verdict v;
    std::vector<std::string> parts;
    for (auto& [F, restrict] : fields) {
        std::vector<VerificationReport> reps;
        for (auto& id : list_families(scope)) {
            const FamilySpec& f = find_family(id);
            if (f.characteristic && f.characteristic != F.p()) continue;
            if (restrict && f.params.size() > 2) continue;
            auto r = verify_family(id, F, Sampling::all(), {threads(), 0});
            reps.insert(reps.end(), r.begin(), r.end());
        }
        std::set<std::string> bad;
        int failing = 0;
        for (auto& r : reps)
            if (!r.pass()) {
                ++failing;
                bad.insert(r.family);
            }
        v.pass = v.pass && failing == 0 && !reps.empty();
        std::vector<std::string> ids(bad.begin(), bad.end());
        std::sort(ids.begin(), ids.end(), [](auto& x, auto& y) { return find_family(x).item < find_family(y).item; });
        parts.push_back(fmt::format("{}: {}/{} points ok{}", F.name(), reps.size() - failing, reps.size(),
                                    ids.empty() ? "" : fmt::format(", failing families [{}]", join(ids, 40))));
    }
    v.detail = join(parts);
    return v;
}

Verdict ambiguity() {
    Field F4 = Field::make(2, 2);
    Verdict v;
    std::vector<std::string> parts;
    for (auto id : {"L3.5", "L3.9", "L3.10-mu0", "L3.10-munz", "L3.11"}) {
        auto rep = verify_ambiguity(id, F4, 50, kDefaultSeed, {threads(), 0});
        int ex = rep.exceptions();
        v.pass = v.pass && ex == 0 && !rep.rows.empty();
        parts.push_back(fmt::format("{} {}/{} exceptions", id, ex, rep.rows.size()));
    }
    v.detail = fmt::format("{}: {}", F4.name(), join(parts));
    return v;
}

Verdict nichols() {
    Verdict v;
    std::vector<std::string> parts;
    for (int p : {2, 3})
        for (auto& r : verify_nichols_suite(Field::make(p, 1))) {
            v.pass = v.pass && r.pass;
            parts.push_back(fmt::format("p={} {}={}{}", p, r.c.label, r.dims.total, r.pass ? "" : "(!)"));
        }
    v.detail = join(parts);
    return v;
}

Verdict iso() {
    Verdict v;
    std::vector<std::string> parts;
    std::vector<std::pair<std::string, Field>> jobs;
    for (auto id : {"T4.2-5", "T4.2-9", "T4.2-18", "T4.2-46", "T4.2-88", "T4.2-89", "T4.2-90", "T4.2-91"})
        jobs.emplace_back(id, Field::make(2, 2));
    jobs.emplace_back("T3.7-1", Field::make(2, 1));
    jobs.emplace_back("T3.7-1", Field::make(3, 1));
    for (auto& [id, F] : jobs) {
        auto r = verify_iso_criteria(id, F, {threads(), 0});
        int dis = 0;
        for (auto& p : r.pairs) dis += !p.agree();
        v.pass = v.pass && r.agreement();
        parts.push_back(fmt::format("{}/{} {}/{}", id, F.name(), r.pairs.size() - dis, r.pairs.size()));
    }
    v.detail = "agreeing pairs " + join(parts);
    return v;
}

Verdict identities() {
    Verdict v;
    std::vector<std::string> parts;
    for (auto [suite, p] : {std::pair{"jacobson", 2}, {"lemma210", 2}, {"lemma210", 3}, {"lemma211", 2}, {"lemma211", 3}}) {
        auto r = verify_identity_suite(suite, Field::make(p, 1), 100, kDefaultSeed);
        v.pass = v.pass && r.pass() && r.trials == 100;
        parts.push_back(fmt::format("{}/p={} {}/{}", suite, p, r.trials - r.failures, r.trials));
    }
    v.detail = join(parts);
    return v;
}

Verdict skew_structure() {
    Field F2 = Field::make(2, 1);
    Verdict v;
    std::vector<std::string> parts;
    const FamilySpec& f = find_family("T4.2-5");
    for (auto& P : parameter_sweep(f, F2)) {
        auto B = build_hopf(instantiate(f, P, F2));
        if (!B.ok()) return {false, "T4.2-5 did not build"};
        const HopfAlgebra& H = *B.hopf;
        const FinAlgebra& A = H.algebra();
        auto G = grouplikes_enumerate(H);
        std::set<Vec> set(G.begin(), G.end());
        // D4: closed, nonabelian, five involutions
        bool closed = true, abelian = true;
        int involutions = 0;
        for (auto& a : G) {
            if (A.mul(a, a) == A.unit() && a != A.unit()) ++involutions;
            for (auto& b : G) {
                closed = closed && set.count(A.mul(a, b));
                abelian = abelian && A.mul(a, b) == A.mul(b, a);
            }
        }
        bool d4 = G.size() == 8 && closed && !abelian && involutions == 5;
        Vec g2 = A.pow(H.generator(0), 2);
        int twos = 0, wrong = 0;
        for (auto& a : G)
            for (auto& b : G) {
                int d = static_cast<int>(skew_primitive_space(H, a, b).size());
                // P_{a,b} translates to P_{1,a^-1 b}
                int want = a == b ? 0 : (A.mul(a, g2) == b ? 2 : 1);
                twos += d == 2;
                wrong += d != want;
            }
        int p1g2 = static_cast<int>(skew_primitive_space(H, A.unit(), g2).size());
        v.pass = v.pass && d4 && wrong == 0 && p1g2 == 2;
        parts.push_back(fmt::format("{}: grouplikes={} D4={} dimP(1,g^2)={} dim-2 spaces={} (translates of P(1,g^2)) mismatches={}",
                                    format_params(f, P, F2), G.size(), d4 ? "yes" : "no", p1g2, twos, wrong));
    }
    v.detail = join(parts);
    return v;
}

Verdict controls() {
    Verdict v;
    std::vector<std::string> parts;
    for (auto [scope, p] : {std::pair{"T4.2", 2}, {"T3.7", 3}}) {
        Field F = Field::make(p, 1);
        auto ids = control_families(scope, F);
        std::set<std::string> groups, covered;
        for (auto& id : list_families(scope)) groups.insert(find_family(id).group);
        std::map<std::string, int> kinds;
        for (auto& r : negative_controls(ids, F, {threads(), 0})) {
            v.pass = v.pass && r.collapsed;
            if (r.collapsed) covered.insert(find_family(r.family).group);
            kinds[r.outcome]++;
        }
        v.pass = v.pass && covered == groups;
        std::vector<std::string> k;
        for (auto& [a, b] : kinds) k.push_back(fmt::format("{}={}", a, b));
        parts.push_back(fmt::format("{}: classes {}/{} [{}]", scope, covered.size(), groups.size(), join(k)));
    }
    v.detail = join(parts);
    return v;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    std::vector<std::pair<std::string, Verdict (*)()>> criteria{
        {"catalog cardinality", catalog_counts},
        {"dimension-16 sweep", [] { return sweep("T4.2", {{Field::make(2, 1), false}, {Field::make(2, 2), true}}); }},
        {"p^4 sweep", [] { return sweep("T3.7", {{Field::make(2, 1), false}, {Field::make(3, 1), false}}); }},
        {"ambiguity-condition equivalence", ambiguity},
        {"Nichols dimensions", nichols},
        {"isomorphism criteria", iso},
        {"identity suites", identities},
        {"skew-primitive and group-like structure", skew_structure},
        {"negative controls", controls},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = Clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        failed += !v.pass;
        std::printf("criterion %zu %s: %s (%.1fs) %s\n", i + 1, criteria[i].first.c_str(), v.pass ? "PASS" : "FAIL", s,
                    v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed ? 1 : 0;
}
