#include "hopfbench/harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace hb {

using json = nlohmann::ordered_json;

void parallel_for(int n, int threads, const std::function<void(int)>& f) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next++) < n;) f(i);
        });
    for (auto& th : pool) th.join();
}

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::ok: return "ok";
        case Outcome::collapse: return "collapse";
        case Outcome::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

std::vector<Params> campaign_points(const FamilySpec& f, const Field& F, const Sampling& s) {
    const double size = parameter_space_size(f, F);
    switch (s.mode) {
        case Sampling::Mode::full:
            if (size > 4096) throw std::invalid_argument(fmt::format("{}: {} points is too many for a full sweep", f.id, size));
            return parameter_sweep(f, F);
        case Sampling::Mode::sample: return parameter_sample(f, F, s.n, s.seed);
        case Sampling::Mode::policy: break;
    }
    if ((F.k() == 1 || f.params.size() <= 2) && size <= 4096) return parameter_sweep(f, F);
    return parameter_sample(f, F, 16, s.seed);
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// a too-small default cap is retried once with a wider one
BuildResult build_with_retry(const HopfPresentation& P, int cap, int expected) {
    auto B = build_hopf(P, cap, expected);
    if (!B.ok() && B.collapse->kind == CollapseKind::cap_exceeded && cap <= 0)
        B = build_hopf(P, 3 * default_degree_cap(P.relations), expected);
    return B;
}

std::string failing_checks(const AxiomReport& R) {
    std::string s;
    for (auto& c : R.checks)
        if (!c.pass) s += (s.empty() ? "" : ",") + c.name;
    return s;
}

}  // namespace

VerificationReport verify_point(const FamilySpec& f, const Params& P, const Field& F, const RunOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.family = f.id;
    r.field = F.name();
    r.params = format_params(f, P, F);
    r.claimed = f.claimed_dim(F.p());
    if (!f.condition.empty() && (f.condition_char == 0 || f.condition_char == F.p()))
        r.condition = ambiguity_condition(f, P, F);
    try {
        auto B = build_with_retry(instantiate(f, P, F), opt.degree_cap, r.claimed);
        r.dim = B.dim;
        if (!B.ok()) {
            r.outcome = B.collapse->kind == CollapseKind::cap_exceeded ? Outcome::budget_exceeded : Outcome::collapse;
            r.reason = to_string(B.collapse->kind) + ": " + B.collapse->detail;
        } else {
            auto R = check_axioms(*B.hopf);
            r.axioms = failing_checks(R);
            if (!R.all_pass()) {
                r.outcome = Outcome::collapse;
                r.reason = "axioms: " + R.summary();
            }
        }
    } catch (const std::runtime_error& e) {
        r.outcome = Outcome::budget_exceeded;
        r.reason = e.what();
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

std::string to_json_line(const VerificationReport& r, bool timing) {
    json j;
    j["family"] = r.family;
    j["field"] = r.field;
    j["params"] = r.params;
    j["outcome"] = to_string(r.outcome);
    j["dim"] = r.dim;
    j["claimed"] = r.claimed;
    if (r.outcome == Outcome::ok) j["axioms"] = "all";
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.condition) j["condition"] = *r.condition;
    j["pass"] = r.pass();
    if (timing) j["elapsed_ms"] = std::round(r.elapsed_ms * 10) / 10;
    return j.dump();
}

std::vector<VerificationReport> verify_family(const std::string& id, const Field& F, const Sampling& s,
                                              const RunOptions& opt) {
    const auto& f = find_family(id);
    auto pts = campaign_points(f, F, s);
    std::vector<VerificationReport> out(pts.size());
    parallel_for(static_cast<int>(pts.size()), opt.threads, [&](int i) { out[i] = verify_point(f, pts[i], F, opt); });
    return out;
}

std::vector<VerificationReport> verify_scope(const std::string& scope, const Field& F, const Sampling& s,
                                             const RunOptions& opt) {
    std::vector<std::pair<const FamilySpec*, Params>> tasks;
    for (auto& id : list_families(scope)) {
        const auto& f = find_family(id);
        if (f.characteristic && f.characteristic != F.p()) continue;
        for (auto& P : campaign_points(f, F, s)) tasks.emplace_back(&f, P);
    }
    std::vector<VerificationReport> out(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), opt.threads,
                 [&](int i) { out[i] = verify_point(*tasks[i].first, tasks[i].second, F, opt); });
    return out;
}

std::string summary_table(const std::vector<VerificationReport>& reports) {
    struct Row {
        int total = 0, pass = 0;
        std::string first_failure;
    };
    std::vector<std::string> order;
    std::map<std::string, Row> rows;
    for (auto& r : reports) {
        auto key = r.family + " " + r.field;
        if (!rows.count(key)) order.push_back(key);
        auto& row = rows[key];
        ++row.total;
        if (r.pass())
            ++row.pass;
        else if (row.first_failure.empty())
            row.first_failure = "[" + r.params + "] " + (r.reason.empty() ? "ok despite failed condition" : r.reason);
    }
    std::string out = fmt::format("{:<16} {:<8} {:>7} {:>7}  {}\n", "family", "field", "points", "pass", "first failure");
    int total = 0, pass = 0, bad = 0;
    for (auto& key : order) {
        auto& row = rows[key];
        auto sp = key.find(' ');
        out += fmt::format("{:<16} {:<8} {:>7} {:>7}  {}\n", key.substr(0, sp), key.substr(sp + 1), row.total, row.pass,
                           row.first_failure);
        total += row.total;
        pass += row.pass;
        bad += row.pass != row.total;
    }
    out += fmt::format("{} families, {} points, {} passing, {} families with failures\n", order.size(), total, pass, bad);
    return out;
}

std::optional<int> completed_dimension(const HopfPresentation& P, int degree_cap) {
    int cap = degree_cap > 0 ? degree_cap : default_degree_cap(P.relations);
    for (int attempt = 0; attempt < 2; ++attempt, cap *= 3) {
        CompletionResult c;
        try {
            c = complete(RewriteSystem::from_relations(P.alphabet, P.field, P.relations), cap);
        } catch (const std::runtime_error&) {
            return std::nullopt;
        }
        if (c.status == CompletionStatus::inconsistent) return 0;
        if (c.status == CompletionStatus::cap_exceeded) continue;
        auto B = enumerate_basis(c.system, 1 << 16);
        if (!B.finite) return std::nullopt;
        return static_cast<int>(B.words.size());
    }
    return std::nullopt;
}

// ---- isomorphism criteria

bool IsoComparisonReport::agreement() const {
    return !pairs.empty() && std::all_of(pairs.begin(), pairs.end(), [](const IsoPair& p) { return p.agree(); });
}

std::vector<int> IsoComparisonReport::off_claim_points() const {
    std::vector<int> out;
    for (size_t i = 0; i < dims.size(); ++i)
        if (dims[i] != claimed) out.push_back(static_cast<int>(i));
    return out;
}

IsoComparisonReport verify_iso_criteria(const std::string& id, const Field& F, const RunOptions& opt) {
    const auto& f = find_family(id);
    if (f.iso.empty()) throw std::invalid_argument(id + " has no isomorphism criterion");
    auto pts = parameter_sweep(f, F);
    if (pts.size() > 64) throw std::invalid_argument(fmt::format("{}: {} parameter points over {}", id, pts.size(), F.name()));
    const int n = static_cast<int>(pts.size());
    IsoComparisonReport rep;
    rep.family = id;
    rep.field = F.name();
    rep.claimed = f.claimed_dim(F.p());
    std::vector<std::optional<HopfAlgebra>> H(n);
    rep.dims.assign(n, -1);
    for (auto& P : pts) rep.points.push_back(format_params(f, P, F));
    parallel_for(n, opt.threads, [&](int i) {
        auto B = build_with_retry(instantiate(f, pts[i], F), opt.degree_cap, -1);
        if (B.ok()) {
            rep.dims[i] = B.dim;
            H[i] = std::move(B.hopf);
        }
    });
    rep.pairs.resize(static_cast<size_t>(n) * n);
    parallel_for(n * n, opt.threads, [&](int k) {
        int i = k / n, j = k % n;
        IsoPair& pr = rep.pairs[k];
        pr.a = i;
        pr.b = j;
        pr.predicate = iso_predicate(f, pts[i], pts[j], F);
        if (H[i] && H[j]) {
            auto r = iso_search(*H[i], *H[j], true);
            pr.oracle = !r.isomorphisms.empty();
            pr.budget_exceeded = r.budget_exceeded && !pr.oracle;
        }
    });
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto& pr : rep.pairs) {
        if (pr.oracle != rep.pairs[static_cast<size_t>(pr.b) * n + pr.a].oracle) rep.oracle_symmetric = false;
        if (pr.oracle) parent[find(pr.a)] = find(pr.b);
    }
    std::map<int, std::vector<int>> cls;
    for (int i = 0; i < n; ++i) cls[find(i)].push_back(i);
    for (auto& [r, v] : cls) rep.oracle_classes.push_back(v);
    std::sort(rep.oracle_classes.begin(), rep.oracle_classes.end());
    return rep;
}

std::string to_json(const IsoComparisonReport& r) {
    json j;
    j["family"] = r.family;
    j["field"] = r.field;
    j["points"] = r.points;
    j["dims"] = r.dims;
    json classes = json::array();
    for (auto& c : r.oracle_classes) {
        json cj = json::array();
        for (int i : c) cj.push_back(r.points[i]);
        classes.push_back(cj);
    }
    j["oracle_classes"] = classes;
    json dis = json::array();
    for (auto& p : r.pairs)
        if (!p.agree())
            dis.push_back({{"a", r.points[p.a]}, {"b", r.points[p.b]}, {"oracle", p.oracle}, {"predicate", p.predicate},
                           {"budget_exceeded", p.budget_exceeded}});
    j["pairs"] = r.pairs.size();
    j["disagreements"] = dis;
    j["oracle_symmetric"] = r.oracle_symmetric;
    j["agreement"] = r.agreement();
    return j.dump();
}

// ---- identity suites

namespace {

using Rng = std::mt19937_64;

Vec random_vec(const Field& F, int n, Rng& rng) {
    Vec v(n);
    for (auto& e : v) e = static_cast<Elem>(rng() % F.q());
    return v;
}

struct Identity {
    const char* name;
    Vec lhs, rhs;
};

std::vector<Identity> jacobson_identities(const FinAlgebra& A, const Vec& a, const Vec& b) {
    const Field& F = A.field();
    const int p = F.p(), n = A.dim();
    auto adl = [&](const Vec& x, Vec y, int k) {
        for (int i = 0; i < k; ++i) y = A.commutator(x, y);
        return y;
    };
    auto adr = [&](Vec x, const Vec& y, int k) {
        for (int i = 0; i < k; ++i) x = A.commutator(x, y);
        return x;
    };
    std::vector<Identity> out;
    Vec ap = A.pow(a, p), bp = A.pow(b, p);
    out.push_back({"(ad_L a)^p(b) = [a^p, b]", adl(a, b, p), A.commutator(ap, b)});
    out.push_back({"(a)(ad_R b)^p = [a, b^p]", adr(a, b, p), A.commutator(a, bp)});
    Vec sl(n, 0), sr(n, 0);
    for (int i = 0; i < p; ++i) {
        sl = vadd(F, sl, A.mul(A.mul(A.pow(a, i), b), A.pow(a, p - 1 - i)));
        sr = vadd(F, sr, A.mul(A.mul(A.pow(b, p - 1 - i), a), A.pow(b, i)));
    }
    out.push_back({"(ad_L a)^(p-1)(b) = sum a^i b a^(p-1-i)", adl(a, b, p - 1), sl});
    out.push_back({"(a)(ad_R b)^(p-1) = sum b^(p-1-i) a b^i", adr(a, b, p - 1), sr});
    // (a)(ad_R (la + b))^(p-1) as a polynomial in l; the coefficient of l^(i-1) is i s_i
    std::vector<Vec> poly{a};
    for (int step = 0; step < p - 1; ++step) {
        std::vector<Vec> next(poly.size() + 1, Vec(n, 0));
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d] = vadd(F, next[d], A.commutator(poly[d], b));
            next[d + 1] = vadd(F, next[d + 1], A.commutator(poly[d], a));
        }
        poly = std::move(next);
    }
    Vec rhs = vadd(F, ap, bp);
    for (int i = 1; i < p; ++i) rhs = vadd(F, rhs, vscale(F, F.inv(F.from_int(i)), poly[i - 1]));
    out.push_back({"(a+b)^p = a^p + b^p + sum s_i(a,b)", A.pow(vadd(F, a, b), p), rhs});
    return out;
}

SuiteResult jacobson_suite(const Field& F, int trials, std::uint64_t seed) {
    SuiteResult res{"jacobson", F.name()};
    const std::string scope = F.p() == 2 ? "T4.2" : "T3.7";
    auto ids = list_families(scope);
    Rng rng(seed);
    std::map<std::string, std::shared_ptr<const FinAlgebra>> cache;
    int attempts = 0;
    while (res.trials < trials && attempts++ < 20 * trials) {
        const auto& f = find_family(ids[rng() % ids.size()]);
        auto pts = parameter_sweep(f, F);
        if (pts.empty() || pts.size() > 4096) continue;
        const auto& P = pts[rng() % pts.size()];
        auto key = f.id + "|" + format_params(f, P, F);
        auto it = cache.find(key);
        if (it == cache.end()) {
            auto B = build_hopf(instantiate(f, P, F), 0, f.claimed_dim(F.p()));
            it = cache.emplace(key, B.ok() ? B.hopf->A : nullptr).first;
        }
        if (!it->second) continue;
        const FinAlgebra& A = *it->second;
        Vec a = random_vec(F, A.dim(), rng), b = random_vec(F, A.dim(), rng);
        ++res.trials;
        for (auto& id : jacobson_identities(A, a, b)) {
            if (id.lhs == id.rhs) continue;
            ++res.failures;
            if (res.witnesses.size() < 5) res.witnesses.push_back(fmt::format("{} in {}: {}", id.name, key, A.format(vsub(F, id.lhs, id.rhs))));
            break;
        }
    }
    return res;
}

// random combination of words of length <= 2
NcPoly random_probe(const Alphabet& A, const Field& F, Rng& rng) {
    NcPoly r;
    std::vector<Word> words{{}};
    for (int a = 0; a < A.size(); ++a) {
        words.push_back({static_cast<Letter>(a)});
        for (int b = 0; b < A.size(); ++b) words.push_back({static_cast<Letter>(a), static_cast<Letter>(b)});
    }
    for (auto& w : words)
        if (rng() % 3 == 0) r.add_term(F, w, static_cast<Elem>(1 + rng() % (F.q() - 1)));
    if (r.is_zero()) r = NcPoly::constant(1);
    return r;
}

NcPoly adl_poly(const Field& F, const NcPoly& x, NcPoly y, int k) {
    for (int i = 0; i < k; ++i) y = commutator(F, x, y);
    return y;
}

NcPoly adr_poly(const Field& F, NcPoly x, const NcPoly& y, int k) {
    for (int i = 0; i < k; ++i) x = commutator(F, x, y);
    return x;
}

struct PolyIdentity {
    std::string name;
    NcPoly lhs, rhs;
};

// checks r*lhs*s == r*rhs*s in the quotient for a random probe pair
void check_poly_identities(SuiteResult& res, const RewriteSystem& sys, const std::vector<PolyIdentity>& ids, Rng& rng,
                           const std::string& where) {
    const Field& F = sys.field();
    NcPoly r = random_probe(sys.alphabet(), F, rng), s = random_probe(sys.alphabet(), F, rng);
    ++res.trials;
    for (auto& id : ids) {
        NcPoly d = sys.normal_form(mul(F, mul(F, r, sub(F, id.lhs, id.rhs)), s));
        if (d.is_zero()) continue;
        ++res.failures;
        if (res.witnesses.size() < 5)
            res.witnesses.push_back(fmt::format("{} {}: residue {}", where, id.name, format(d, sys.alphabet())));
        break;
    }
}

SuiteResult lemma210_suite(const Field& F, int trials, std::uint64_t seed) {
    SuiteResult res{"lemma210", F.name()};
    const int p = F.p();
    Alphabet A({"x", "g"});
    Rng rng(seed);
    std::map<int, std::shared_ptr<RewriteSystem>> systems;
    for (int t = 0; t < trials; ++t) {
        int n = p * static_cast<int>(1 + rng() % 3);
        auto& sys = systems[n];
        if (!sys) {
            ParamEnv env{{"n", ParamValue::integer(n)}};
            std::vector<NcPoly> rels{parse_poly("g^$n - 1", A, F, env), parse_poly("g*x - x*g - g*(1 - g)", A, F)};
            auto c = complete(RewriteSystem::from_relations(A, F, rels), 4 * n);
            if (c.status != CompletionStatus::confluent) {
                ++res.trials;
                ++res.failures;
                res.witnesses.push_back(fmt::format("n={}: completion {}", n, to_string(c.status)));
                continue;
            }
            sys = std::make_shared<RewriteSystem>(std::move(c.system));
        }
        int i = static_cast<int>(rng() % (n + 1));
        ParamEnv env{{"i", ParamValue::integer(i)}};
        NcPoly g = parse_poly("g", A, F), x = parse_poly("x", A, F);
        NcPoly gp = pow(F, g, p), xp = pow(F, x, p);
        std::vector<PolyIdentity> ids{
            {"g^i x = x g^i + i g^i - i g^(i+1)", parse_poly("g^$i*x", A, F, env),
             parse_poly("x*g^$i + $i*g^$i - $i*g^($i + 1)", A, F, env)},
            {"g^p x = x g^p", mul(F, gp, x), mul(F, x, gp)},
            {"(g)(ad_R x)^(p-1) = g - g^p", adr_poly(F, g, x, p - 1), sub(F, g, gp)},
            {"(g)(ad_R x)^p = [g, x]", adr_poly(F, g, x, p), commutator(F, g, x)},
            {"(ad_L x)^(p-1)(g) = g - g^p", adl_poly(F, x, g, p - 1), sub(F, g, gp)},
            {"(ad_L x)^p(g) = [x, g]", adl_poly(F, x, g, p), commutator(F, x, g)},
            {"[x^p, g] = [x, g]", commutator(F, xp, g), commutator(F, x, g)},
        };
        check_poly_identities(res, *sys, ids, rng, fmt::format("n={} i={}", n, i));
    }
    return res;
}

SuiteResult lemma211_suite(const Field& F, int trials, std::uint64_t seed) {
    SuiteResult res{"lemma211", F.name()};
    const int p = F.p();
    Alphabet A({"y", "x", "g"});
    Rng rng(seed);
    auto elems = F.elements();
    for (int t = 0; t < trials; ++t) {
        int mu = 1 + static_cast<int>(rng() % (p - 1));
        int l1 = static_cast<int>(rng() % 2), l2 = static_cast<int>(rng() % 2);
        Elem l3 = elems[rng() % elems.size()];
        int n = 1 + static_cast<int>(rng() % (2 * p));
        ParamEnv env{{"mu", ParamValue::integer(mu)},   {"l1", ParamValue::integer(l1)},
                     {"l2", ParamValue::integer(l2)},   {"l3", ParamValue::element(l3)},
                     {"p", ParamValue::integer(p)}};
        std::vector<NcPoly> rels;
        for (const char* r : {"g^$p - 1", "g*x - x*g - $l1*(g - g^2)", "g*y - y*g - $l2*(g - g^($mu + 1))",
                              "x^$p - $l1*x", "y^$p - $l2*y", "x*y - y*x + $mu*$l1*y - $l2*x - $l3*(1 - g^($mu + 1))"})
            rels.push_back(parse_poly(r, A, F, env));
        auto c = complete(RewriteSystem::from_relations(A, F, rels), 6 * p);
        std::string where = fmt::format("mu={} l1={} l2={} l3={} n={}", mu, l1, l2, F.format(l3), n);
        if (c.status != CompletionStatus::confluent) {
            ++res.trials;
            ++res.failures;
            res.witnesses.push_back(where + ": completion " + to_string(c.status));
            continue;
        }
        NcPoly x = parse_poly("x", A, F), y = parse_poly("y", A, F);
        NcPoly gm = parse_poly("g^($mu + 1)", A, F, env);
        Elem lam2 = F.from_int(l2), nu = F.neg(F.from_int(static_cast<long long>(mu) * l1));
        NcPoly rhs1 = scale(F, F.pow(lam2, n - 1), adr_poly(F, x, y, 1));
        NcPoly rhs2 = scale(F, F.pow(nu, n - 1), adl_poly(F, x, y, 1));
        for (int i = 0; i <= n - 2; ++i) {
            rhs1 = sub(F, rhs1, scale(F, F.mul(l3, F.pow(lam2, i)), adr_poly(F, gm, y, n - 1 - i)));
            rhs2 = sub(F, rhs2, scale(F, F.mul(l3, F.pow(nu, i)), adl_poly(F, x, gm, n - 1 - i)));
        }
        std::vector<PolyIdentity> ids{{"(x)(ad_R y)^n", adr_poly(F, x, y, n), rhs1},
                                      {"(ad_L x)^n(y)", adl_poly(F, x, y, n), rhs2},
                                      {"(x)(ad_R y)^p = l2^(p-1)(x)(ad_R y)", adr_poly(F, x, y, p),
                                       scale(F, F.pow(lam2, p - 1), adr_poly(F, x, y, 1))},
                                      {"(ad_L x)^p(y) = (-mu l1)^(p-1)(ad_L x)(y)", adl_poly(F, x, y, p),
                                       scale(F, F.pow(nu, p - 1), adl_poly(F, x, y, 1))}};
        check_poly_identities(res, c.system, ids, rng, where);
    }
    return res;
}

}  // namespace

SuiteResult verify_identity_suite(const std::string& suite, const Field& F, int trials, std::uint64_t seed) {
    if (suite == "jacobson") return jacobson_suite(F, trials, seed);
    if (suite == "lemma210") return lemma210_suite(F, trials, seed);
    if (suite == "lemma211") return lemma211_suite(F, trials, seed);
    throw std::invalid_argument("unknown identity suite " + suite);
}

// ---- Nichols

std::vector<NicholsCase> nichols_targets(int p) {
    if (p == 2)
        return {{"trivial rank 1", "trivial:1", 2},
                {"trivial rank 2", "trivial:2", 4},
                {"trivial rank 3", "trivial:3", 8},
                {"Jordan V(1,2)", "jordan:1,2", 16},
                {"M(1,2) + M(0,1) over C2", "yd-cyclic:1,2,2;0,1,2", 8, true}};
    if (p == 3)
        return {{"trivial rank 1", "trivial:1", 3}, {"trivial rank 2", "trivial:2", 9}, {"Jordan V(1,2)", "jordan:1,2", 9}};
    return {};
}

std::vector<NicholsCaseResult> verify_nichols_suite(const Field& F) {
    std::vector<NicholsCaseResult> out;
    for (auto& c : nichols_targets(F.p())) {
        NicholsCaseResult r{c};
        r.dims = nichols_dims(parse_braided(c.spec, F));
        r.pass = c.lower_bound ? r.dims.total > c.expected : (r.dims.closed && r.dims.total == c.expected);
        out.push_back(std::move(r));
    }
    return out;
}

// ---- ambiguity conditions

int AmbiguityReport::exceptions() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const AmbiguityRow& r) { return !r.agree; }));
}

std::vector<Params> ambiguity_points(const FamilySpec& f, const Field& F, int n, std::uint64_t seed) {
    FamilySpec discrete = f, free = f;
    discrete.params.clear();
    free.params.clear();
    for (auto& s : f.params) (s.kind == DomainKind::field ? free : discrete).params.push_back(s);
    auto heads = parameter_sweep(discrete, F);
    Rng rng(seed);
    auto elems = F.elements();
    std::vector<Params> out;
    for (auto& head : heads) {
        for (int t = 0; t < n; ++t) {
            const bool biased = t >= n / 2;
            Params P;
            for (int attempt = 0; attempt < 1000; ++attempt) {
                P = head;
                for (auto& s : free.params)
                    P[s.name] = ParamValue::element(biased && rng() % 2 ? 0 : elems[rng() % elems.size()]);
                if (!biased || f.condition.empty() || ambiguity_condition(f, P, F)) break;
            }
            out.push_back(std::move(P));
        }
    }
    return out;
}

AmbiguityReport verify_ambiguity(const std::string& id, const Field& F, int n, std::uint64_t seed,
                                 const RunOptions& opt) {
    const auto& f = find_family(id);
    AmbiguityReport rep;
    rep.family = id;
    rep.field = F.name();
    rep.claimed = f.claimed_dim(F.p());
    auto pts = ambiguity_points(f, F, n, seed);
    rep.rows.resize(pts.size());
    parallel_for(static_cast<int>(pts.size()), opt.threads, [&](int i) {
        auto& row = rep.rows[i];
        row.params = format_params(f, pts[i], F);
        row.condition = ambiguity_condition(f, pts[i], F);
        row.dim = completed_dimension(instantiate(f, pts[i], F), opt.degree_cap).value_or(-1);
        row.agree = row.dim >= 0 && (row.dim == rep.claimed) == row.condition;
    });
    return rep;
}

// ---- negative controls

std::vector<std::string> fault_kinds() { return {"unit", "shift"}; }

std::optional<HopfPresentation> inject_fault(const HopfPresentation& P, const std::string& kind) {
    const Field& F = P.field;
    const int n = P.alphabet.size();
    auto is_skew = [&](Letter l) { return P.tag(l).kind == TagKind::skewprim; };
    HopfPresentation Q = P;
    auto mark = [&](size_t r, const std::string& what) {
        if (r < Q.relation_text.size()) Q.relation_text[r] += " " + what;
    };
    if (kind == "unit") {
        for (size_t r = 0; r < P.relations.size(); ++r) {
            const Word& w = P.relations[r].lead();
            if (w.size() < 2 || !is_skew(w[0]) || std::any_of(w.begin(), w.end(), [&](Letter l) { return l != w[0]; }))
                continue;
            Q.relations[r].add_term(F, {}, 1);
            mark(r, "+ 1");
            return Q;
        }
        return std::nullopt;
    }
    if (kind == "shift") {
        for (int xi = 0; xi < n; ++xi) {
            Letter x = static_cast<Letter>(xi);
            if (!is_skew(x)) continue;
            for (int gi = 0; gi < n; ++gi) {
                Letter g = static_cast<Letter>(gi);
                if (is_skew(g)) continue;
                for (size_t r = 0; r < P.relations.size(); ++r) {
                    const auto& R = P.relations[r];
                    if (!R.coeff({g, x}) || !R.coeff({x, g})) continue;
                    Q.relations[r].add_term(F, {x}, 1);
                    mark(r, "+ " + P.alphabet.name(x));
                    return Q;
                }
            }
        }
        return std::nullopt;
    }
    throw std::invalid_argument("unknown fault kind " + kind);
}

std::vector<std::string> control_families(const std::string& scope, const Field& F) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (auto& id : list_families(scope)) {
        const auto& f = find_family(id);
        auto key = f.scope() + "/" + f.group;
        if (seen.count(key) || (f.characteristic && f.characteristic != F.p())) continue;
        auto pts = parameter_sweep(f, F);
        if (pts.empty()) continue;
        auto P = instantiate(f, pts[0], F);
        bool faultable = false;
        for (auto& k : fault_kinds()) faultable = faultable || inject_fault(P, k).has_value();
        if (!faultable || !verify_point(f, pts[0], F).pass()) continue;
        seen.insert(key);
        out.push_back(id);
    }
    return out;
}

std::vector<FaultReport> negative_controls(const std::vector<std::string>& ids, const Field& F, const RunOptions& opt) {
    std::vector<std::pair<std::string, std::string>> tasks;
    for (auto& id : ids)
        for (auto& k : fault_kinds()) tasks.emplace_back(id, k);
    std::vector<std::optional<FaultReport>> out(tasks.size());
    parallel_for(static_cast<int>(tasks.size()), opt.threads, [&](int i) {
        const auto& f = find_family(tasks[i].first);
        auto pts = parameter_sweep(f, F);
        if (pts.empty()) return;
        auto Q = inject_fault(instantiate(f, pts[0], F), tasks[i].second);
        if (!Q) return;
        FaultReport r{f.id, F.name(), format_params(f, pts[0], F), tasks[i].second};
        try {
            auto B = build_with_retry(*Q, opt.degree_cap, f.claimed_dim(F.p()));
            if (!B.ok())
                r.outcome = to_string(B.collapse->kind);
            else
                r.outcome = check_axioms(*B.hopf).all_pass() ? "ok" : "axiom_failure";
        } catch (const std::runtime_error&) {
            r.outcome = "budget_exceeded";
        }
        r.collapsed = r.outcome != "ok" && r.outcome != "budget_exceeded";
        out[i] = std::move(r);
    });
    std::vector<FaultReport> res;
    for (auto& r : out)
        if (r) res.push_back(std::move(*r));
    return res;
}

}  // namespace hb
