#include "hopfbench/findim.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace hb {

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) s.emplace_back(static_cast<int>(i), v[i]);
    return s;
}

FinAlgebra FinAlgebra::from_confluent(const RewriteSystem& sys, size_t cap) {
    if (sys.inconsistent()) throw std::invalid_argument("from_confluent: zero ring");
    auto basis = enumerate_basis(sys, cap);
    if (!basis.finite) throw std::invalid_argument("from_confluent: infinite basis");
    FinAlgebra A;
    A.F_ = sys.field();
    A.sys_ = std::make_shared<RewriteSystem>(sys);
    A.words_ = std::move(basis.words);
    A.dim_ = static_cast<int>(A.words_.size());
    for (int i = 0; i < A.dim_; ++i) {
        A.index_[A.words_[i]] = i;
        A.labels_.push_back(sys.alphabet().format(A.words_[i]));
    }
    A.unit_ = A.basis_vector(A.index_of({}));
    Reducer red(A.sys_);
    A.mult_.resize(static_cast<size_t>(A.dim_) * A.dim_);
    for (int i = 0; i < A.dim_; ++i)
        for (int j = 0; j < A.dim_; ++j) {
            const NcPoly& nf = red.word(concat(A.words_[i], A.words_[j]));
            SparseVec& out = A.mult_[static_cast<size_t>(i) * A.dim_ + j];
            for (auto& [w, c] : nf.terms()) out.emplace_back(A.index_of(w), c);
        }
    return A;
}

FinAlgebra FinAlgebra::from_table(Field F, std::vector<std::string> labels, std::vector<SparseVec> table, Vec unit) {
    FinAlgebra A;
    A.F_ = std::move(F);
    A.dim_ = static_cast<int>(labels.size());
    if (table.size() != static_cast<size_t>(A.dim_) * A.dim_ || unit.size() != static_cast<size_t>(A.dim_))
        throw std::invalid_argument("from_table: size mismatch");
    A.labels_ = std::move(labels);
    A.mult_ = std::move(table);
    A.unit_ = std::move(unit);
    return A;
}

int FinAlgebra::index_of(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) throw std::out_of_range("word is not a basis element");
    return it->second;
}

Vec FinAlgebra::basis_vector(int i) const {
    Vec v(dim_, 0);
    v[i] = 1;
    return v;
}

Vec FinAlgebra::coords(const NcPoly& f) const {
    if (!sys_) throw std::logic_error("coords: algebra has no presentation");
    NcPoly nf = sys_->normal_form(f);
    Vec v(dim_, 0);
    for (auto& [w, c] : nf.terms()) v[index_of(w)] = c;
    return v;
}

NcPoly FinAlgebra::to_poly(const Vec& v) const {
    NcPoly f;
    for (int i = 0; i < dim_; ++i)
        if (v[i]) f.add_term(F_, words_.at(i), v[i]);
    return f;
}

std::string FinAlgebra::format(const Vec& v) const {
    std::string out;
    for (int i = dim_ - 1; i >= 0; --i) {
        if (!v[i]) continue;
        if (!out.empty()) out += " + ";
        if (v[i] == 1)
            out += labels_[i];
        else
            out += fmt::format("{}*{}", v[i], labels_[i]);
    }
    return out.empty() ? "0" : out;
}

Vec FinAlgebra::mul(const Vec& a, const Vec& b) const {
    if (a.size() != static_cast<size_t>(dim_) || b.size() != static_cast<size_t>(dim_))
        throw std::invalid_argument("mult_element: dimension mismatch");
    Vec r(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!b[j]) continue;
            Elem c = F_.mul(a[i], b[j]);
            for (auto& [k, d] : product(i, j)) r[k] = F_.add(r[k], F_.mul(c, d));
        }
    }
    return r;
}

Vec FinAlgebra::pow(const Vec& a, int n) const {
    Vec r = unit_;
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
}

Vec FinAlgebra::commutator(const Vec& a, const Vec& b) const { return vsub(F_, mul(a, b), mul(b, a)); }

bool FinAlgebra::associative(std::string* witness) const {
    Vec l(dim_), r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                std::fill(l.begin(), l.end(), 0);
                std::fill(r.begin(), r.end(), 0);
                for (auto& [m, c] : product(i, j))
                    for (auto& [n, d] : product(m, k)) l[n] = F_.add(l[n], F_.mul(c, d));
                for (auto& [m, c] : product(j, k))
                    for (auto& [n, d] : product(i, m)) r[n] = F_.add(r[n], F_.mul(c, d));
                if (l != r) {
                    if (witness) *witness = fmt::format("({}*{})*{}", labels_[i], labels_[j], labels_[k]);
                    return false;
                }
            }
    return true;
}

Vec mult_element(const Vec& a, const Vec& b, const FinAlgebra& A) { return A.mul(a, b); }

FinAlgebra tensor_square(const FinAlgebra& A) {
    const int n = A.dim();
    const int N = n * n;
    const Field& F = A.field();
    std::vector<std::string> labels;
    labels.reserve(N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) labels.push_back(A.labels()[i] + "|" + A.labels()[j]);
    std::vector<SparseVec> table(static_cast<size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            SparseVec& out = table[static_cast<size_t>(a) * N + b];
            for (auto& [k, c] : A.product(a / n, b / n))
                for (auto& [l, d] : A.product(a % n, b % n)) out.emplace_back(k * n + l, F.mul(c, d));
        }
    Vec unit(N, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) unit[i * n + j] = F.mul(A.unit()[i], A.unit()[j]);
    return FinAlgebra::from_table(F, std::move(labels), std::move(table), std::move(unit));
}

int generated_subspace_dim(const std::vector<Vec>& gens, const FinAlgebra& A) {
    Span S(A.field(), A.dim());
    std::vector<Vec> frontier{A.unit()};
    S.insert(A.unit());
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (auto& v : frontier)
            for (auto& g : gens) {
                Vec w = A.mul(v, g);
                if (S.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return S.dim();
}

}  // namespace hb
