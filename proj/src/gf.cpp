#include "hopfbench/gf.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>

#include <fmt/format.h>

namespace hb {

namespace {

// Conway polynomials, low degree first, monic.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> t = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
        {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{5, 5}, {3, 4, 0, 0, 0, 1}},
    };
    return t;
}

}  // namespace

struct Field::Impl {
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus;
    std::vector<Elem> neg;
    std::vector<Elem> exp;  // exp[i] = prim^i, length 2(q-1)
    std::vector<int> log;   // log[0] unused
    std::vector<Elem> addt; // full tables when q <= 256
    std::vector<Elem> mult;
    Elem prim = 0;
    Elem t = 0;

    std::vector<int> digits(Elem a) const {
        std::vector<int> d(k);
        for (int i = 0; i < k; ++i) { d[i] = a % p; a /= p; }
        return d;
    }
    Elem encode(const std::vector<int>& d) const {
        int v = 0;
        for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
        return static_cast<Elem>(v);
    }
    Elem slow_add(Elem a, Elem b) const {
        if (p == 2) return a ^ b;
        int v = 0, w = 1;
        while (a || b) {
            v += ((a % p + b % p) % p) * w;
            a /= p; b /= p; w *= p;
        }
        return static_cast<Elem>(v);
    }
    Elem slow_mul(Elem a, Elem b) const {
        auto x = digits(a), y = digits(b);
        std::vector<int> r(2 * k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
        for (int d = 2 * k - 1; d >= k; --d) {
            int c = r[d];
            if (!c) continue;
            for (int i = 0; i <= k; ++i)
                r[d - k + i] = ((r[d - k + i] - c * modulus[i]) % p + p) % p;
        }
        r.resize(k);
        return encode(r);
    }
};

Field Field::make(int p, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, Field> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({p, k}); it != cache.end()) return it->second;
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument(fmt::format("unsupported characteristic {}", p));
    if (k < 1 || k > 8) throw std::invalid_argument(fmt::format("unsupported degree {}", k));
    auto mt = modulus_table().find({p, k});
    if (mt == modulus_table().end()) throw std::invalid_argument(fmt::format("no modulus for GF({}^{})", p, k));

    auto im = std::make_shared<Impl>();
    im->p = p;
    im->k = k;
    im->q = 1;
    for (int i = 0; i < k; ++i) im->q *= p;
    if (im->q > 6561) throw std::invalid_argument("field too large");
    im->modulus = mt->second;
    const int q = im->q;

    im->neg.resize(q);
    for (int a = 0; a < q; ++a) {
        auto d = im->digits(static_cast<Elem>(a));
        for (auto& c : d) c = (p - c) % p;
        im->neg[a] = im->encode(d);
    }
    im->t = (k == 1) ? static_cast<Elem>((p - im->modulus[0]) % p) : static_cast<Elem>(p);

    // smallest element of order q-1; its existence also certifies irreducibility
    for (int c = 1; c < q && !im->prim; ++c) {
        Elem x = 1;
        int ord = 0;
        do {
            x = im->slow_mul(x, static_cast<Elem>(c));
            ++ord;
        } while (x != 1 && x != 0 && ord < q);
        if (x == 1 && ord == q - 1) im->prim = static_cast<Elem>(c);
    }
    if (q == 2) im->prim = 1;
    if (!im->prim) throw std::logic_error(fmt::format("modulus for GF({}^{}) is not irreducible", p, k));

    im->exp.resize(2 * (q - 1));
    im->log.assign(q, 0);
    Elem x = 1;
    for (int i = 0; i < q - 1; ++i) {
        im->exp[i] = im->exp[i + q - 1] = x;
        im->log[x] = i;
        x = im->slow_mul(x, im->prim);
    }
    if (q <= 256) {
        im->addt.resize(q * q);
        im->mult.resize(q * q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                im->addt[a * q + b] = im->slow_add(a, b);
                im->mult[a * q + b] = (a && b) ? im->exp[im->log[a] + im->log[b]] : 0;
            }
    }
    Field f;
    f.impl_ = im;
    cache[{p, k}] = f;
    return f;
}

int Field::p() const { return impl_->p; }
int Field::k() const { return impl_->k; }
int Field::q() const { return impl_->q; }
const std::vector<int>& Field::modulus() const { return impl_->modulus; }
Elem Field::t() const { return impl_->t; }
Elem Field::primitive() const { return impl_->prim; }

Elem Field::add(Elem a, Elem b) const {
    const Impl& f = *impl_;
    if (f.p == 2) return a ^ b;
    if (!f.addt.empty()) return f.addt[a * f.q + b];
    return f.slow_add(a, b);
}

Elem Field::neg(Elem a) const { return impl_->neg[a]; }
Elem Field::sub(Elem a, Elem b) const { return add(a, impl_->neg[b]); }

Elem Field::mul(Elem a, Elem b) const {
    const Impl& f = *impl_;
    if (!f.mult.empty()) return f.mult[a * f.q + b];
    if (!a || !b) return 0;
    return f.exp[f.log[a] + f.log[b]];
}

Elem Field::inv(Elem a) const {
    if (!a) throw std::domain_error("division by zero");
    const Impl& f = *impl_;
    return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
}

Elem Field::pow(Elem a, long long e) const {
    const Impl& f = *impl_;
    if (e == 0) return 1;
    if (!a) {
        if (e < 0) throw std::domain_error("division by zero");
        return 0;
    }
    long long m = f.q - 1;
    long long r = (static_cast<long long>(f.log[a]) * (e % m)) % m;
    if (r < 0) r += m;
    return f.exp[r];
}

Elem Field::from_int(long long n) const {
    long long r = n % impl_->p;
    if (r < 0) r += impl_->p;
    return static_cast<Elem>(r);
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> v(q());
    for (int i = 0; i < q(); ++i) v[i] = static_cast<Elem>(i);
    return v;
}

std::vector<Elem> Field::prime_subfield() const {
    std::vector<Elem> v(p());
    for (int i = 0; i < p(); ++i) v[i] = static_cast<Elem>(i);
    return v;
}

std::string Field::name() const {
    return k() == 1 ? fmt::format("GF({})", p()) : fmt::format("GF({}^{})", p(), k());
}

std::string Field::format(Elem a) const {
    if (a == 0) return "0";
    std::string out;
    int n = a;
    std::vector<int> d;
    while (n) {
        d.push_back(n % p());
        n /= p();
    }
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
        if (!d[i]) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]);
        out += 't';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

Elem Field::parse(const std::string& s0) const {
    std::string s;
    for (char ch : s0)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty field element");
    if (s.find('t') == std::string::npos) {
        size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size() || !contains(v)) throw std::invalid_argument("bad field element '" + s0 + "'");
        return static_cast<Elem>(v);
    }
    std::vector<int> d(k(), 0);
    size_t i = 0;
    while (i < s.size()) {
        size_t j = s.find('+', i);
        if (j == std::string::npos) j = s.size();
        std::string term = s.substr(i, j - i);
        int c = 1, e = 0;
        size_t tp = term.find('t');
        if (tp == std::string::npos) {
            c = std::stoi(term);
        } else {
            if (tp > 0) c = std::stoi(term.substr(0, tp));
            e = 1;
            if (tp + 1 < term.size()) {
                if (term[tp + 1] != '^') throw std::invalid_argument("bad field element '" + s0 + "'");
                e = std::stoi(term.substr(tp + 2));
            }
        }
        if (e >= k()) throw std::invalid_argument("degree too large in '" + s0 + "'");
        d[e] = (d[e] + c) % p();
        i = j + 1;
    }
    int v = 0;
    for (int m = k() - 1; m >= 0; --m) v = v * p() + d[m];
    return static_cast<Elem>(v);
}

// ---------------------------------------------------------------- matrices

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::column(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(int c, const Vec& v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

bool Matrix::is_zero() const {
    for (Elem e : a_)
        if (e) return false;
    return true;
}

Matrix matmul(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    Matrix C(A.rows(), B.cols());
    for (int i = 0; i < A.rows(); ++i) {
        Elem* out = C.row(i);
        for (int l = 0; l < A.cols(); ++l) {
            Elem a = A(i, l);
            if (!a) continue;
            const Elem* b = B.row(l);
            for (int j = 0; j < B.cols(); ++j)
                if (b[j]) out[j] = F.add(out[j], F.mul(a, b[j]));
        }
    }
    return C;
}

Vec matvec(const Field& F, const Matrix& A, const Vec& v) {
    if (A.cols() != static_cast<int>(v.size())) throw std::invalid_argument("matvec: dimension mismatch");
    Vec r(A.rows(), 0);
    for (int i = 0; i < A.rows(); ++i) {
        const Elem* a = A.row(i);
        Elem s = 0;
        for (int j = 0; j < A.cols(); ++j)
            if (a[j] && v[j]) s = F.add(s, F.mul(a[j], v[j]));
        r[i] = s;
    }
    return r;
}

Matrix kron(const Field& F, const Matrix& A, const Matrix& B) {
    Matrix C(A.rows() * B.rows(), A.cols() * B.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) {
            Elem a = A(i, j);
            if (!a) continue;
            for (int k = 0; k < B.rows(); ++k)
                for (int l = 0; l < B.cols(); ++l)
                    C(i * B.rows() + k, j * B.cols() + l) = F.mul(a, B(k, l));
        }
    return C;
}

Matrix add(const Field& F, const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) throw std::invalid_argument("add: dimension mismatch");
    Matrix C(A.rows(), A.cols());
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j) C(i, j) = F.add(A(i, j), B(i, j));
    return C;
}

std::vector<int> rref(const Field& F, Matrix& M) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
        int s = -1;
        for (int i = r; i < M.rows(); ++i)
            if (M(i, c)) { s = i; break; }
        if (s < 0) continue;
        if (s != r)
            for (int j = 0; j < M.cols(); ++j) std::swap(M(s, j), M(r, j));
        Elem iv = F.inv(M(r, c));
        Elem* pr = M.row(r);
        for (int j = c; j < M.cols(); ++j) pr[j] = F.mul(pr[j], iv);
        for (int i = 0; i < M.rows(); ++i) {
            if (i == r) continue;
            Elem f = M(i, c);
            if (!f) continue;
            Elem nf = F.neg(f);
            Elem* pi = M.row(i);
            for (int j = c; j < M.cols(); ++j)
                if (pr[j]) pi[j] = F.add(pi[j], F.mul(nf, pr[j]));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

RankNullspace rank_nullspace(const Field& F, Matrix M) {
    auto piv = rref(F, M);
    RankNullspace out;
    out.rank = static_cast<int>(piv.size());
    std::vector<int> is_piv(M.cols(), -1);
    for (size_t i = 0; i < piv.size(); ++i) is_piv[piv[i]] = static_cast<int>(i);
    for (int c = 0; c < M.cols(); ++c) {
        if (is_piv[c] >= 0) continue;
        Vec v(M.cols(), 0);
        v[c] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(M(static_cast<int>(i), c));
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

int rank(const Field& F, Matrix M) { return static_cast<int>(rref(F, M).size()); }

std::optional<Vec> solve(const Field& F, const Matrix& A, const Vec& b) {
    Matrix aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    auto piv = rref(F, aug);
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
    Vec x(A.cols(), 0);
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(static_cast<int>(i), A.cols());
    return x;
}

void Span::reduce(Vec& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        Elem c = v[piv_[i]];
        if (c) axpy(F_, F_.neg(c), rows_[i], v);
    }
}

bool Span::insert(Vec v) {
    reduce(v);
    int p = -1;
    for (int i = 0; i < n_; ++i)
        if (v[i]) { p = i; break; }
    if (p < 0) return false;
    v = vscale(F_, F_.inv(v[p]), v);
    for (auto& r : rows_) {
        Elem c = r[p];
        if (c) axpy(F_, F_.neg(c), v, r);
    }
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
}

bool Span::contains(Vec v) const {
    reduce(v);
    return is_zero(v);
}

std::vector<Elem> roots_univariate(const Field& F, const std::vector<Elem>& coeffs) {
    int deg = -1;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i]) { deg = i; break; }
    if (deg < 1) throw std::invalid_argument("roots_univariate: degree must be >= 1");
    std::vector<Elem> out;
    for (Elem x : F.elements()) {
        Elem s = 0;
        for (int i = deg; i >= 0; --i) s = F.add(F.mul(s, x), coeffs[i]);
        if (!s) out.push_back(x);
    }
    return out;
}

bool is_zero(const Vec& v) {
    for (Elem e : v)
        if (e) return false;
    return true;
}

Vec vadd(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

Vec vsub(const Field& F, const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

Vec vscale(const Field& F, Elem c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
    return r;
}

void axpy(const Field& F, Elem c, const Vec& x, Vec& y) {
    if (!c) return;
    for (size_t i = 0; i < x.size(); ++i)
        if (x[i]) y[i] = F.add(y[i], F.mul(c, x[i]));
}

}  // namespace hb
