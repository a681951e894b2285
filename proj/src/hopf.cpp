#include "hopfbench/hopf.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "hopfbench/expr.hpp"

namespace hb {

using json = nlohmann::json;

// ------------------------------------------------------------ presentations

void HopfPresentation::validate() const {
    if (tags.size() != static_cast<size_t>(alphabet.size())) throw std::invalid_argument("tag count mismatch");
    for (size_t i = 0; i < tags.size(); ++i) {
        if (tags[i].kind != TagKind::skewprim) continue;
        for (Letter l : tags[i].over)
            if (tag(l).kind != TagKind::grouplike)
                throw std::invalid_argument(fmt::format("generator {}: skew-primitive tag must be a word in grouplikes",
                                                        alphabet.declared()[i]));
    }
}

std::string HopfPresentation::describe_tag(int i) const {
    const GenTag& t = tags.at(i);
    if (t.kind == TagKind::grouplike) return "grouplike";
    return "skewprim over " + alphabet.format(t.over);
}

HopfPresentation parse_presentation(const std::string& text) {
    json j = json::parse(text);
    HopfPresentation P;
    P.name = j.value("name", std::string{});
    P.field = Field::make(j.at("field").at("p").get<int>(), j.at("field").value("k", 1));
    std::vector<std::string> names, overs, kinds;
    for (auto& g : j.at("generators")) {
        names.push_back(g.at("name").get<std::string>());
        std::string tag = g.value("tag", std::string{"grouplike"});
        std::string over = g.value("over", std::string{});
        if (tag.rfind("skewprim", 0) == 0) {
            if (over.empty() && tag.size() > 8) {
                std::istringstream is(tag.substr(8));
                std::string kw;
                is >> kw >> over;
                if (kw != "over") throw std::invalid_argument("bad tag " + tag);
            }
            if (over.empty()) throw std::invalid_argument("skewprim tag needs 'over'");
            tag = "skewprim";
        } else if (tag != "grouplike") {
            throw std::invalid_argument("unknown tag " + tag);
        }
        kinds.push_back(tag);
        overs.push_back(over);
    }
    std::vector<std::string> asc;
    if (j.contains("precedence")) asc = j.at("precedence").get<std::vector<std::string>>();
    P.alphabet = Alphabet(names, asc);
    for (size_t i = 0; i < names.size(); ++i) {
        GenTag t;
        if (kinds[i] == "skewprim") {
            t.kind = TagKind::skewprim;
            t.over = P.alphabet.parse_word(overs[i]);
        }
        P.tags.push_back(t);
    }
    for (auto& r : j.at("relations")) {
        std::string s = r.get<std::string>();
        P.relation_text.push_back(s);
        P.relations.push_back(parse_poly(s, P.alphabet, P.field));
    }
    P.validate();
    return P;
}

HopfPresentation load_presentation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
}

std::string presentation_to_json(const HopfPresentation& P) {
    json j;
    if (!P.name.empty()) j["name"] = P.name;
    j["field"] = {{"p", P.field.p()}, {"k", P.field.k()}};
    j["generators"] = json::array();
    for (int i = 0; i < P.alphabet.size(); ++i) {
        json g{{"name", P.alphabet.declared()[i]}};
        if (P.tags[i].kind == TagKind::grouplike) {
            g["tag"] = "grouplike";
        } else {
            g["tag"] = "skewprim";
            g["over"] = P.alphabet.format(P.tags[i].over);
        }
        j["generators"].push_back(g);
    }
    j["precedence"] = P.alphabet.ascending();
    j["relations"] = json::array();
    for (auto& r : P.relations) j["relations"].push_back(format(r, P.alphabet));
    return j.dump(2);
}

std::string to_string(CollapseKind k) {
    switch (k) {
        case CollapseKind::zero_ring: return "zero_ring";
        case CollapseKind::cap_exceeded: return "cap_exceeded";
        case CollapseKind::infinite_basis: return "infinite_basis";
        case CollapseKind::dimension_drop: return "dimension_drop";
        case CollapseKind::non_coideal: return "non_coideal";
        case CollapseKind::antipode_failure: return "antipode_failure";
    }
    return "?";
}

// ------------------------------------------------------------ tensor helpers

namespace {

class Acc {
public:
    Acc(const Field& F, size_t n) : F_(F), v_(n, 0), mark_(n, 0) {}
    void add(size_t i, Elem c) {
        if (!c) return;
        if (!mark_[i]) {
            mark_[i] = 1;
            touched_.push_back(i);
        }
        v_[i] = F_.add(v_[i], c);
    }
    SparseVec take() {
        std::sort(touched_.begin(), touched_.end());
        SparseVec out;
        for (size_t i : touched_) {
            if (v_[i]) out.emplace_back(static_cast<int>(i), v_[i]);
            v_[i] = 0;
            mark_[i] = 0;
        }
        touched_.clear();
        return out;
    }

private:
    const Field& F_;
    Vec v_;
    std::vector<char> mark_;
    std::vector<size_t> touched_;
};

SparseVec pure_tensor(const FinAlgebra& A, const Vec& u, const Vec& v) {
    const Field& F = A.field();
    const int n = A.dim();
    SparseVec out;
    for (int a = 0; a < n; ++a) {
        if (!u[a]) continue;
        for (int b = 0; b < n; ++b)
            if (v[b]) out.emplace_back(a * n + b, F.mul(u[a], v[b]));
    }
    return out;
}

SparseVec sparse_add(const Field& F, const SparseVec& x, const SparseVec& y) {
    SparseVec out;
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.push_back(y[j++]);
        } else {
            Elem c = F.add(x[i].second, y[j].second);
            if (c) out.emplace_back(x[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(const Field& F, Elem c, const SparseVec& x) {
    SparseVec out;
    if (!c) return out;
    for (auto& [i, d] : x) out.emplace_back(i, F.mul(c, d));
    return out;
}

// product in A (x) A
SparseVec tensor_mul(const FinAlgebra& A, const SparseVec& x, const SparseVec& y, Acc& acc) {
    const Field& F = A.field();
    const int n = A.dim();
    for (auto& [p, c] : x) {
        int a = p / n, b = p % n;
        for (auto& [q, d] : y) {
            int c2 = q / n, d2 = q % n;
            Elem cd = F.mul(c, d);
            const SparseVec& left = A.product(a, c2);
            const SparseVec& right = A.product(b, d2);
            for (auto& [k, e] : left) {
                Elem ce = F.mul(cd, e);
                for (auto& [l, f] : right) acc.add(static_cast<size_t>(k) * n + l, F.mul(ce, f));
            }
        }
    }
    return acc.take();
}

std::vector<SparseVec> delta_rows(const HopfAlgebra& H) {
    std::vector<SparseVec> D(H.dim());
    const int N = H.delta.cols();
    for (int k = 0; k < H.dim(); ++k) {
        const Elem* r = H.delta.row(k);
        for (int c = 0; c < N; ++c)
            if (r[c]) D[k].emplace_back(c, r[c]);
    }
    return D;
}

std::vector<SparseVec> antipode_cols(const HopfAlgebra& H) {
    std::vector<SparseVec> S(H.dim());
    for (int i = 0; i < H.dim(); ++i)
        for (int l = 0; l < H.dim(); ++l)
            if (H.antipode(l, i)) S[i].emplace_back(l, H.antipode(l, i));
    return S;
}

// Delta and epsilon of generator letters (by letter code)
struct GenCoalgebra {
    std::vector<SparseVec> delta;
    std::vector<Elem> eps;
};

GenCoalgebra generator_coalgebra(const HopfPresentation& P, const FinAlgebra& A) {
    GenCoalgebra g;
    const int n = P.alphabet.size();
    g.delta.resize(n);
    g.eps.resize(n);
    const Field& F = A.field();
    for (int l = 0; l < n; ++l) {
        const GenTag& t = P.tag(static_cast<Letter>(l));
        Vec v = A.generator(static_cast<Letter>(l));
        if (t.kind == TagKind::grouplike) {
            g.delta[l] = pure_tensor(A, v, v);
            g.eps[l] = 1;
        } else {
            Vec w = A.coords(NcPoly::monomial(t.over));
            g.delta[l] = sparse_add(F, pure_tensor(A, v, A.unit()), pure_tensor(A, w, v));
            g.eps[l] = 0;
        }
    }
    return g;
}

SparseVec delta_of_word(const FinAlgebra& A, const GenCoalgebra& g, const Word& w, Acc& acc) {
    SparseVec d = pure_tensor(A, A.unit(), A.unit());
    for (Letter l : w) d = tensor_mul(A, d, g.delta[l], acc);
    return d;
}

}  // namespace

// ------------------------------------------------------------ HopfAlgebra

Vec HopfAlgebra::element(const std::string& poly) const { return A->coords(parse_poly(poly, pres.alphabet, field())); }

SparseVec HopfAlgebra::coproduct(const Vec& v) const {
    const Field& F = field();
    const int N = delta.cols();
    Acc acc(F, N);
    for (int k = 0; k < dim(); ++k) {
        if (!v[k]) continue;
        const Elem* r = delta.row(k);
        for (int c = 0; c < N; ++c)
            if (r[c]) acc.add(c, F.mul(v[k], r[c]));
    }
    return acc.take();
}

Elem HopfAlgebra::epsilon(const Vec& v) const {
    const Field& F = field();
    Elem s = 0;
    for (int k = 0; k < dim(); ++k)
        if (v[k] && counit[k]) s = F.add(s, F.mul(v[k], counit[k]));
    return s;
}

Vec HopfAlgebra::S(const Vec& v) const { return matvec(field(), antipode, v); }

// ------------------------------------------------------------ build

BuildResult build_hopf(const HopfPresentation& P, int degree_cap, int expected_dim) {
    P.validate();
    BuildResult res;
    int cap = degree_cap > 0 ? degree_cap : default_degree_cap(P.relations);
    auto comp = complete(RewriteSystem::from_relations(P.alphabet, P.field, P.relations), cap);
    res.completion = comp.status;
    res.rules = static_cast<int>(comp.system.rules().size());
    if (comp.status == CompletionStatus::inconsistent) {
        res.dim = 0;
        res.collapse = CollapseReport{CollapseKind::zero_ring, "completion derived 1 = 0", 0};
        return res;
    }
    if (comp.status == CompletionStatus::cap_exceeded) {
        res.collapse = CollapseReport{CollapseKind::cap_exceeded, fmt::format("degree cap {} exceeded", cap), -1};
        return res;
    }
    size_t basis_cap = expected_dim > 0 ? static_cast<size_t>(4 * expected_dim) : 4096;
    auto basis = enumerate_basis(comp.system, basis_cap);
    if (!basis.finite) {
        res.collapse = CollapseReport{CollapseKind::infinite_basis,
                                      fmt::format("more than {} irreducible words", basis_cap), -1};
        return res;
    }
    res.dim = static_cast<int>(basis.words.size());
    if (expected_dim > 0 && res.dim != expected_dim) {
        res.collapse = CollapseReport{CollapseKind::dimension_drop,
                                      fmt::format("dimension {} instead of {}", res.dim, expected_dim), res.dim};
        return res;
    }
    auto A = std::make_shared<FinAlgebra>(FinAlgebra::from_confluent(comp.system, basis_cap));
    const Field& F = P.field;
    const int n = A->dim();
    GenCoalgebra gc = generator_coalgebra(P, *A);
    Acc acc(F, static_cast<size_t>(n) * n);

    for (size_t r = 0; r < P.relations.size(); ++r) {
        SparseVec d;
        Elem e = 0;
        for (auto& [w, c] : P.relations[r].terms()) {
            d = sparse_add(F, d, sparse_scale(F, c, delta_of_word(*A, gc, w, acc)));
            Elem ew = 1;
            for (Letter l : w) ew = F.mul(ew, gc.eps[l]);
            e = F.add(e, F.mul(c, ew));
        }
        std::string text = r < P.relation_text.size() ? P.relation_text[r] : format(P.relations[r], P.alphabet);
        if (!d.empty()) {
            res.collapse = CollapseReport{CollapseKind::non_coideal,
                                          "Delta is not an algebra map on relation " + text, res.dim};
            return res;
        }
        if (e) {
            res.collapse = CollapseReport{CollapseKind::non_coideal, "epsilon(r) != 0 for relation " + text, res.dim};
            return res;
        }
    }

    HopfAlgebra H;
    H.pres = P;
    H.A = A;
    H.delta = Matrix(n, n * n);
    H.counit.assign(n, 0);
    std::vector<SparseVec> D(n);
    const auto& words = A->basis();
    for (int k = 0; k < n; ++k) {
        const Word& w = words[k];
        if (w.empty()) {
            D[k] = pure_tensor(*A, A->unit(), A->unit());
            H.counit[k] = 1;
        } else {
            Word pre(w.begin(), w.end() - 1);
            int pk = A->index_of(pre);
            D[k] = tensor_mul(*A, D[pk], gc.delta[w.back()], acc);
            H.counit[k] = F.mul(H.counit[pk], gc.eps[w.back()]);
        }
        for (auto& [c, v] : D[k]) H.delta(k, c) = v;
    }
    auto S = compute_antipode(H);
    if (!S) {
        res.collapse = CollapseReport{CollapseKind::antipode_failure, "identity is not convolution invertible", res.dim};
        return res;
    }
    H.antipode = std::move(*S);
    res.hopf = std::move(H);
    return res;
}

// ------------------------------------------------------------ antipode

std::optional<Matrix> antipode_by_solve(const FinAlgebra& A, const Matrix& delta, const Vec& counit) {
    const Field& F = A.field();
    const int n = A.dim();
    const int N = n * n;
    Matrix M(N, N);
    Vec b(N, 0);
    for (int k = 0; k < n; ++k) {
        const Elem* row = delta.row(k);
        for (int p = 0; p < N; ++p) {
            Elem c = row[p];
            if (!c) continue;
            int i = p / n, j = p % n;
            for (int l = 0; l < n; ++l)
                for (auto& [m, e] : A.product(l, j)) {
                    Elem& cell = M(k * n + m, i * n + l);
                    cell = F.add(cell, F.mul(c, e));
                }
        }
        for (int m = 0; m < n; ++m) b[k * n + m] = F.mul(counit[k], A.unit()[m]);
    }
    auto x = solve(F, M, b);
    if (!x) return std::nullopt;
    Matrix S(n, n);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) S(l, i) = (*x)[i * n + l];
    return S;
}

std::optional<Matrix> antipode_from_generators(const HopfAlgebra& H) {
    const FinAlgebra& A = H.algebra();
    const Field& F = A.field();
    const int n = A.dim();
    const auto& P = H.pres;
    const int g = P.alphabet.size();
    std::vector<Vec> Sgen(g);
    // grouplikes: S(v) v = 1
    for (int l = 0; l < g; ++l) {
        if (P.tag(static_cast<Letter>(l)).kind != TagKind::grouplike) continue;
        Vec v = A.generator(static_cast<Letter>(l));
        Matrix R(n, n);
        for (int m = 0; m < n; ++m) R.set_column(m, A.mul(A.basis_vector(m), v));
        auto s = solve(F, R, A.unit());
        if (!s) return std::nullopt;
        Sgen[l] = *s;
    }
    auto S_of_word = [&](const Word& w) {
        Vec r = A.unit();
        for (Letter l : w) r = A.mul(Sgen[l], r);
        return r;
    };
    for (int l = 0; l < g; ++l) {
        const GenTag& t = P.tag(static_cast<Letter>(l));
        if (t.kind != TagKind::skewprim) continue;
        Vec x = A.generator(static_cast<Letter>(l));
        Sgen[l] = vscale(F, F.neg(1), A.mul(S_of_word(t.over), x));
    }
    Matrix S(n, n);
    std::vector<Vec> cols(n);
    for (int k = 0; k < n; ++k) {
        const Word& w = A.basis()[k];
        if (w.empty()) {
            cols[k] = A.unit();
        } else {
            Word pre(w.begin(), w.end() - 1);
            cols[k] = A.mul(Sgen[w.back()], cols[A.index_of(pre)]);
        }
        S.set_column(k, cols[k]);
    }
    return S;
}

namespace {

// m(S (x) id)Delta(e_k) - eps(e_k)1 (left) or m(id (x) S)Delta(e_k) - eps(e_k)1 (right)
Vec antipode_defect(const FinAlgebra& A, const std::vector<SparseVec>& D, const std::vector<SparseVec>& S,
                    const Vec& counit, int k, bool left) {
    const Field& F = A.field();
    const int n = A.dim();
    Vec r(n, 0);
    for (auto& [p, c] : D[k]) {
        int i = p / n, j = p % n;
        if (left) {
            for (auto& [l, s] : S[i])
                for (auto& [m, e] : A.product(l, j)) r[m] = F.add(r[m], F.mul(F.mul(c, s), e));
        } else {
            for (auto& [l, s] : S[j])
                for (auto& [m, e] : A.product(i, l)) r[m] = F.add(r[m], F.mul(F.mul(c, s), e));
        }
    }
    axpy(F, F.neg(counit[k]), A.unit(), r);
    return r;
}

}  // namespace

std::optional<Matrix> compute_antipode(const HopfAlgebra& H) {
    std::optional<Matrix> S;
    if (H.dim() <= 32)
        S = antipode_by_solve(H.algebra(), H.delta, H.counit);
    else
        S = antipode_from_generators(H);
    if (!S) return std::nullopt;
    HopfAlgebra tmp;
    tmp.A = H.A;
    tmp.antipode = *S;
    auto D = delta_rows(H);
    auto cols = antipode_cols(tmp);
    for (int k = 0; k < H.dim(); ++k)
        if (!is_zero(antipode_defect(H.algebra(), D, cols, H.counit, k, true))) return std::nullopt;
    return S;
}

// ------------------------------------------------------------ axioms

bool AxiomReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::summary() const {
    std::string s;
    for (auto& c : checks) {
        if (!s.empty()) s += " ";
        s += c.name + (c.pass ? "=ok" : "=FAIL(" + c.witness + ")");
    }
    return s;
}

AxiomReport check_axioms(const HopfAlgebra& H) {
    const FinAlgebra& A = H.algebra();
    const Field& F = A.field();
    const int n = A.dim();
    const size_t n2 = static_cast<size_t>(n) * n;
    auto D = delta_rows(H);
    auto S = antipode_cols(H);
    const auto& lab = A.labels();
    AxiomReport rep;

    {
        AxiomCheck c{"coassociativity"};
        Acc acc(F, n2 * n);
        for (int k = 0; k < n && c.pass; ++k) {
            for (auto& [p, v] : D[k]) {
                int i = p / n, j = p % n;
                for (auto& [q, u] : D[i]) acc.add(static_cast<size_t>(q) * n + j, F.mul(v, u));
                for (auto& [q, u] : D[j]) acc.add(static_cast<size_t>(i) * n2 + q, F.neg(F.mul(v, u)));
            }
            if (!acc.take().empty()) {
                c.pass = false;
                c.witness = lab[k];
            }
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"counit"};
        for (int k = 0; k < n && c.pass; ++k) {
            Vec l(n, 0), r(n, 0);
            for (auto& [p, v] : D[k]) {
                int i = p / n, j = p % n;
                l[j] = F.add(l[j], F.mul(v, H.counit[i]));
                r[i] = F.add(r[i], F.mul(v, H.counit[j]));
            }
            Vec e = A.basis_vector(k);
            if (l != e || r != e) {
                c.pass = false;
                c.witness = lab[k];
            }
        }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"delta_multiplicative"};
        Acc acc(F, n2);
        SparseVec one = pure_tensor(A, A.unit(), A.unit());
        Vec d1(n2, 0);
        SparseVec du = H.coproduct(A.unit());
        if (du != one) {
            c.pass = false;
            c.witness = "Delta(1)";
        }
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j) {
                SparseVec rhs = tensor_mul(A, D[i], D[j], acc);
                for (auto& [m, e] : A.product(i, j))
                    for (auto& [p, v] : D[m]) acc.add(p, F.mul(e, v));
                SparseVec lhs = acc.take();
                if (lhs != rhs) {
                    c.pass = false;
                    c.witness = lab[i] + "*" + lab[j];
                }
            }
        rep.checks.push_back(c);
    }
    {
        AxiomCheck c{"counit_multiplicative"};
        if (H.epsilon(A.unit()) != 1) {
            c.pass = false;
            c.witness = "eps(1)";
        }
        for (int i = 0; i < n && c.pass; ++i)
            for (int j = 0; j < n && c.pass; ++j) {
                Elem l = 0;
                for (auto& [m, e] : A.product(i, j)) l = F.add(l, F.mul(e, H.counit[m]));
                if (l != F.mul(H.counit[i], H.counit[j])) {
                    c.pass = false;
                    c.witness = lab[i] + "*" + lab[j];
                }
            }
        rep.checks.push_back(c);
    }
    for (bool left : {true, false}) {
        AxiomCheck c{left ? "antipode_left" : "antipode_right"};
        for (int k = 0; k < n && c.pass; ++k)
            if (!is_zero(antipode_defect(A, D, S, H.counit, k, left))) {
                c.pass = false;
                c.witness = lab[k];
            }
        rep.checks.push_back(c);
    }
    return rep;
}

// ------------------------------------------------------------ group-likes, skew-primitives

bool is_grouplike(const HopfAlgebra& H, const Vec& v) {
    if (H.epsilon(v) != 1) return false;
    return H.coproduct(v) == pure_tensor(H.algebra(), v, v);
}

std::vector<Vec> skew_primitive_space(const HopfAlgebra& H, const Vec& g, const Vec& h) {
    if (!is_grouplike(H, g) || !is_grouplike(H, h)) throw std::invalid_argument("skew_primitive_space: not group-like");
    const Field& F = H.field();
    const int n = H.dim();
    Matrix M(n * n, n);
    for (int k = 0; k < n; ++k) {
        const Elem* r = H.delta.row(k);
        for (int p = 0; p < n * n; ++p)
            if (r[p]) M(p, k) = r[p];
        for (int b = 0; b < n; ++b)
            if (g[b]) M(k * n + b, k) = F.sub(M(k * n + b, k), g[b]);
        for (int a = 0; a < n; ++a)
            if (h[a]) M(a * n + k, k) = F.sub(M(a * n + k, k), h[a]);
    }
    return rank_nullspace(F, std::move(M)).nullspace;
}

std::vector<Vec> grouplikes_verify(const HopfAlgebra& H, const std::vector<Vec>& candidates) {
    std::vector<Vec> out;
    for (auto& v : candidates)
        if (is_grouplike(H, v)) out.push_back(v);
    return out;
}

std::vector<Vec> grouplikes_enumerate(const HopfAlgebra& H, double budget) {
    const Field& F = H.field();
    const int n = H.dim();
    double total = 1;
    for (int i = 0; i < n; ++i) total *= F.q();
    if (total > budget) throw std::runtime_error("grouplike enumeration budget exceeded");
    std::vector<Vec> out;
    Vec v(n, 0);
    const int q = F.q();
    for (;;) {
        if (H.epsilon(v) == 1 && is_grouplike(H, v)) out.push_back(v);
        int i = 0;
        while (i < n && ++v[i] == q) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

std::vector<Vec> group_closure(const HopfAlgebra& H) {
    const FinAlgebra& A = H.algebra();
    std::vector<Vec> gens;
    for (int i = 0; i < H.pres.alphabet.size(); ++i)
        if (H.pres.tags[i].kind == TagKind::grouplike) gens.push_back(H.generator(i));
    std::set<Vec> seen{A.unit()};
    std::vector<Vec> order{A.unit()}, frontier{A.unit()};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (auto& v : frontier)
            for (auto& g : gens) {
                Vec w = A.mul(v, g);
                if (seen.insert(w).second) {
                    order.push_back(w);
                    next.push_back(w);
                    if (order.size() > 10000) throw std::runtime_error("group closure too large");
                }
            }
        frontier = std::move(next);
    }
    return order;
}

// ------------------------------------------------------------ bosonization

HopfPresentation bosonize(const FinAlgebra& group, const std::vector<Matrix>& action, const std::vector<Word>& coaction,
                          const std::vector<std::string>& v_names, const std::vector<std::string>& nichols_relations) {
    if (!group.has_words()) throw std::invalid_argument("bosonize: group algebra needs a presentation");
    const RewriteSystem& gs = group.system();
    const Alphabet& ga = gs.alphabet();
    const Field& F = group.field();
    const int m = static_cast<int>(v_names.size());
    if (static_cast<int>(action.size()) != ga.size()) throw std::invalid_argument("bosonize: one action matrix per group generator");
    if (static_cast<int>(coaction.size()) != m) throw std::invalid_argument("bosonize: one coaction tag per basis vector");

    // action of a group word, generators applied right to left
    auto act = [&](const Word& w) {
        Matrix M = Matrix::identity(m);
        for (Letter l : w) M = matmul(F, M, action.at(ga.declared_index(l)));
        return M;
    };
    for (auto& r : gs.rules()) {
        Matrix lhs = act(r.lead), rhs(m, m);
        for (auto& [w, c] : r.tail.terms()) {
            Matrix t = act(w);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) rhs(i, j) = F.add(rhs(i, j), F.mul(c, t(i, j)));
        }
        if (!(lhs == rhs)) throw std::invalid_argument("bosonize: action violates group relation " + ga.format(r.lead));
    }
    // YD compatibility for homogeneous basis vectors: deg(s.v) = s deg(v) s^-1
    for (int s = 0; s < ga.size(); ++s) {
        Word sw{ga.letter(s)};
        for (int j = 0; j < m; ++j)
            for (int u = 0; u < m; ++u) {
                if (!action[s](u, j)) continue;
                Vec lhs = group.coords(NcPoly::monomial(concat(coaction[u], sw)));
                Vec rhs = group.coords(NcPoly::monomial(concat(sw, coaction[j])));
                if (lhs != rhs)
                    throw std::invalid_argument(fmt::format("bosonize: Yetter-Drinfeld compatibility fails for {} acting on {}",
                                                            ga.declared()[s], v_names[j]));
            }
    }

    HopfPresentation P;
    P.field = F;
    std::vector<std::string> names = ga.declared();
    names.insert(names.end(), v_names.begin(), v_names.end());
    std::vector<std::string> asc = v_names;
    for (auto& n : ga.ascending()) asc.push_back(n);
    P.alphabet = Alphabet(names, asc);
    auto map_word = [&](const Word& w) {
        Word out;
        for (Letter l : w) out.push_back(*P.alphabet.find(ga.name(l)));
        return out;
    };
    for (int i = 0; i < ga.size(); ++i) P.tags.push_back({TagKind::grouplike, {}});
    for (int j = 0; j < m; ++j) P.tags.push_back({TagKind::skewprim, map_word(coaction[j])});
    for (auto& r : gs.rules()) {
        NcPoly f = NcPoly::monomial(map_word(r.lead));
        for (auto& [w, c] : r.tail.terms()) f.add_term(F, map_word(w), F.neg(c));
        P.relations.push_back(f);
    }
    for (int s = 0; s < ga.size(); ++s) {
        Letter sl = *P.alphabet.find(ga.declared()[s]);
        for (int j = 0; j < m; ++j) {
            Letter vj = *P.alphabet.find(v_names[j]);
            NcPoly f = NcPoly::monomial(Word{sl, vj});
            for (int u = 0; u < m; ++u) {
                Elem c = action[s](u, j);
                if (c) f.add_term(F, Word{*P.alphabet.find(v_names[u]), sl}, F.neg(c));
            }
            P.relations.push_back(f);
        }
    }
    for (auto& s : nichols_relations) P.relations.push_back(parse_poly(s, P.alphabet, F));
    for (auto& r : P.relations) P.relation_text.push_back(format(r, P.alphabet));
    P.validate();
    return P;
}

// ------------------------------------------------------------ isomorphisms

Matrix morphism_matrix(const HopfAlgebra& H1, const HopfAlgebra& H2, const HopfMorphism& m) {
    const FinAlgebra& A1 = H1.algebra();
    const FinAlgebra& A2 = H2.algebra();
    Matrix M(A2.dim(), A1.dim());
    std::vector<Vec> img(A1.dim());
    for (int k = 0; k < A1.dim(); ++k) {
        const Word& w = A1.basis()[k];
        if (w.empty()) {
            img[k] = A2.unit();
        } else {
            Word pre(w.begin(), w.end() - 1);
            img[k] = A2.mul(img[A1.index_of(pre)], m.images[H1.pres.alphabet.declared_index(w.back())]);
        }
        M.set_column(k, img[k]);
    }
    return M;
}

namespace {

// span of C_1: group-likes and every a.P_{1,b}
std::vector<Vec> c1_basis(const HopfAlgebra& H, const std::vector<Vec>& G) {
    Span S(H.field(), H.dim());
    for (auto& g : G) S.insert(g);
    for (auto& b : G)
        for (auto& x : skew_primitive_space(H, H.algebra().unit(), b))
            for (auto& a : G) S.insert(H.algebra().mul(a, x));
    return S.basis();
}

}  // namespace

IsoSearchResult iso_search(const HopfAlgebra& H1, const HopfAlgebra& H2, bool first_only, long long budget) {
    IsoSearchResult out;
    if (H1.field() != H2.field()) throw std::invalid_argument("iso_search: different fields");
    if (H1.field().q() > 4) throw std::invalid_argument("iso_search: field too large for enumeration");
    if (H1.dim() != H2.dim()) return out;
    const Field& F = H1.field();
    const FinAlgebra& A2 = H2.algebra();
    const auto& P1 = H1.pres;
    const int g = P1.alphabet.size();

    std::vector<Vec> G2 = group_closure(H2);
    std::vector<int> order;
    for (int i = 0; i < g; ++i)
        if (P1.tags[i].kind == TagKind::grouplike) order.push_back(i);
    for (int i = 0; i < g; ++i)
        if (P1.tags[i].kind == TagKind::skewprim) order.push_back(i);
    std::vector<int> pos(g);
    for (int i = 0; i < g; ++i) pos[order[i]] = i;

    // each relation is checked once its last generator is assigned
    std::vector<std::vector<const NcPoly*>> due(g);
    for (auto& r : P1.relations) {
        int last = 0;
        for (auto& [w, c] : r.terms())
            for (Letter l : w) last = std::max(last, pos[P1.alphabet.declared_index(l)]);
        due[last].push_back(&r);
    }

    std::vector<Vec> images(g);
    auto eval = [&](const NcPoly& r) {
        Vec acc(A2.dim(), 0);
        for (auto& [w, c] : r.terms()) {
            Vec t = A2.unit();
            for (Letter l : w) t = A2.mul(t, images[P1.alphabet.declared_index(l)]);
            axpy(F, c, t, acc);
        }
        return acc;
    };

    std::map<Vec, std::vector<Vec>> pspace;
    std::optional<std::vector<Vec>> c1;
    auto accept = [&]() {
        HopfMorphism m{images};
        Matrix M = morphism_matrix(H1, H2, m);
        if (rank(F, M) != H1.dim()) return;
        if (!c1) c1 = c1_basis(H1, group_closure(H1));
        Span img(F, H2.dim());
        for (auto& v : *c1) img.insert(matvec(F, M, v));
        if (img.dim() != static_cast<int>(c1->size())) return;
        if (generated_subspace_dim(images, A2) != A2.dim()) return;
        out.isomorphisms.push_back(std::move(m));
    };

    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == g) {
            accept();
            return first_only && !out.isomorphisms.empty();
        }
        int gen = order[idx];
        std::vector<Vec> cands;
        const GenTag& tag = P1.tags[gen];
        if (tag.kind == TagKind::grouplike) {
            cands = G2;
        } else {
            Vec w = A2.unit();
            for (Letter l : tag.over) w = A2.mul(w, images[P1.alphabet.declared_index(l)]);
            auto it = pspace.find(w);
            if (it == pspace.end()) it = pspace.emplace(w, skew_primitive_space(H2, A2.unit(), w)).first;
            const auto& B = it->second;
            Vec coeff(B.size(), 0);
            for (;;) {
                Vec v(A2.dim(), 0);
                for (size_t i = 0; i < B.size(); ++i) axpy(F, coeff[i], B[i], v);
                cands.push_back(std::move(v));
                size_t i = 0;
                while (i < coeff.size() && ++coeff[i] == F.q()) coeff[i++] = 0;
                if (i == coeff.size()) break;
            }
        }
        for (auto& c : cands) {
            if (++out.candidates > budget) {
                out.budget_exceeded = true;
                return true;
            }
            images[gen] = c;
            bool ok = true;
            for (auto* r : due[idx])
                if (!is_zero(eval(*r))) {
                    ok = false;
                    break;
                }
            if (ok && rec(idx + 1)) return true;
        }
        return false;
    };
    rec(0);
    return out;
}

}  // namespace hb
