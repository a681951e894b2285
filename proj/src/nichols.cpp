#include "hopfbench/nichols.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace hb {

namespace {

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Matrix mat_pow(const Field& F, const Matrix& A, int e) {
    Matrix R = Matrix::identity(A.rows());
    for (int i = 0; i < e; ++i) R = matmul(F, R, A);
    return R;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

std::vector<long> parse_ints(const std::string& s) {
    std::vector<long> out;
    for (auto& t : split(s, ',')) out.push_back(std::stol(t));
    return out;
}

}  // namespace

void AbelianYD::validate() const {
    const size_t ng = orders.size();
    if (action.size() != ng || degree.size() != static_cast<size_t>(m))
        throw std::invalid_argument("yd: shape mismatch");
    for (size_t s = 0; s < ng; ++s) {
        if (action[s].rows() != m || action[s].cols() != m) throw std::invalid_argument("yd: action size");
        if (!(mat_pow(F, action[s], orders[s]) == Matrix::identity(m)))
            throw std::invalid_argument(fmt::format("yd: generator {} acts with wrong order", s));
        for (size_t t = s + 1; t < ng; ++t)
            if (!(matmul(F, action[s], action[t]) == matmul(F, action[t], action[s])))
                throw std::invalid_argument("yd: actions do not commute");
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v)
                if (action[s](u, v) && degree[u] != degree[v])
                    throw std::invalid_argument("yd: action does not preserve degrees");
    }
    for (auto& d : degree) {
        if (d.size() != ng) throw std::invalid_argument("yd: degree length");
        for (size_t s = 0; s < ng; ++s)
            if (d[s] < 0 || d[s] >= orders[s]) throw std::invalid_argument("yd: degree exponent out of range");
    }
}

AbelianYD yd_cyclic(const Field& F, const std::vector<CyclicBlock>& blocks, int n) {
    AbelianYD M;
    M.F = F;
    M.orders = {n};
    for (auto& b : blocks) {
        if (b.r < 1 || b.r > n || b.i < 0 || b.i >= n) throw std::invalid_argument("yd_cyclic: bad block");
        M.m += b.r;
    }
    Matrix A(M.m, M.m);
    int off = 0;
    for (auto& b : blocks) {
        for (int k = 0; k < b.r; ++k) {
            A(off + k, off + k) = 1;
            if (k > 0) A(off + k - 1, off + k) = 1;
            M.degree.push_back({b.i});
        }
        off += b.r;
    }
    M.action = {A};
    M.validate();
    return M;
}

AbelianYD yd_onedim(const Field& F, const std::vector<int>& degs, int n) {
    std::vector<CyclicBlock> b;
    for (int d : degs) b.push_back({d, 1});
    return yd_cyclic(F, b, n);
}

AbelianYD yd_bashev(const Field& F, int k, int l, Elem lambda) {
    if (F.p() != 2) throw std::invalid_argument("yd_bashev: characteristic 2 only");
    AbelianYD M;
    M.F = F;
    M.m = 2;
    M.orders = {2, 2};
    Matrix G = Matrix::identity(2), H = Matrix::identity(2);
    G(0, 1) = 1;
    H(0, 1) = lambda;
    M.action = {G, H};
    M.degree = {{k, l}, {k, l}};
    M.validate();
    return M;
}

AbelianYD yd_sum(const AbelianYD& a, const AbelianYD& b) {
    if (a.orders != b.orders || a.F != b.F) throw std::invalid_argument("yd_sum: different groups");
    AbelianYD M;
    M.F = a.F;
    M.m = a.m + b.m;
    M.orders = a.orders;
    for (size_t s = 0; s < a.orders.size(); ++s) {
        Matrix A(M.m, M.m);
        for (int i = 0; i < a.m; ++i)
            for (int j = 0; j < a.m; ++j) A(i, j) = a.action[s](i, j);
        for (int i = 0; i < b.m; ++i)
            for (int j = 0; j < b.m; ++j) A(a.m + i, a.m + j) = b.action[s](i, j);
        M.action.push_back(A);
    }
    M.degree = a.degree;
    M.degree.insert(M.degree.end(), b.degree.begin(), b.degree.end());
    M.validate();
    return M;
}

// c(e_a (x) e_b) = deg(e_a) . e_b (x) e_a
BraidedSpace from_yd(const AbelianYD& M) {
    M.validate();
    const Field& F = M.F;
    const int m = M.m;
    BraidedSpace V{F, m, Matrix(m * m, m * m)};
    for (int a = 0; a < m; ++a) {
        Matrix D = Matrix::identity(m);
        for (size_t s = 0; s < M.orders.size(); ++s) D = matmul(F, D, mat_pow(F, M.action[s], M.degree[a][s]));
        for (int b = 0; b < m; ++b)
            for (int u = 0; u < m; ++u)
                if (D(u, b)) V.c(u * m + a, a * m + b) = D(u, b);
    }
    if (!check_braid_equation(V)) throw std::invalid_argument("from_yd: braid equation fails");
    return V;
}

BraidedSpace diagonal(const Field& F, const Matrix& q) {
    const int m = q.rows();
    if (q.cols() != m) throw std::invalid_argument("diagonal: q must be square");
    BraidedSpace V{F, m, Matrix(m * m, m * m)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!q(i, j)) throw std::invalid_argument("diagonal: q entries must be nonzero");
            V.c(j * m + i, i * m + j) = q(i, j);
        }
    return V;
}

BraidedSpace trivial_braiding(const Field& F, int m) {
    Matrix q(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) q(i, j) = 1;
    return diagonal(F, q);
}

BraidedSpace jordan(const Field& F, Elem s, int m) {
    if (!s) throw std::invalid_argument("jordan: s must be nonzero");
    if (m < 2) throw std::invalid_argument("jordan: rank must be > 1");
    BraidedSpace V{F, m, Matrix(m * m, m * m)};
    for (int i = 0; i < m; ++i) {
        V.c(0 * m + i, i * m + 0) = s;
        for (int j = 1; j < m; ++j) {
            V.c(j * m + i, i * m + j) = s;
            V.c((j - 1) * m + i, i * m + j) = 1;
        }
    }
    if (!check_braid_equation(V)) throw std::invalid_argument("jordan: braid equation fails");
    return V;
}

BraidedSpace parse_braided(const std::string& spec, const Field& F) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("braided spec needs kind:args");
    std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
    auto elem = [&](long v) {
        if (!F.contains(v)) throw std::invalid_argument(fmt::format("{} is not an element of {}", v, F.name()));
        return static_cast<Elem>(v);
    };
    if (kind == "diagonal") {
        auto rows = split(args, ';');
        int m = static_cast<int>(rows.size());
        Matrix q(m, m);
        for (int i = 0; i < m; ++i) {
            auto r = parse_ints(rows[i]);
            if (static_cast<int>(r.size()) != m) throw std::invalid_argument("diagonal: q must be square");
            for (int j = 0; j < m; ++j) q(i, j) = elem(r[j]);
        }
        return diagonal(F, q);
    }
    if (kind == "trivial") return trivial_braiding(F, static_cast<int>(std::stol(args)));
    if (kind == "jordan") {
        auto a = parse_ints(args);
        if (a.size() != 2) throw std::invalid_argument("jordan:s,m");
        return jordan(F, elem(a[0]), static_cast<int>(a[1]));
    }
    if (kind == "yd-cyclic") {
        std::vector<CyclicBlock> blocks;
        int n = -1;
        for (auto& part : split(args, ';')) {
            auto a = parse_ints(part);
            if (a.size() != 3) throw std::invalid_argument("yd-cyclic:i,r,n");
            if (n >= 0 && n != a[2]) throw std::invalid_argument("yd-cyclic: blocks over different groups");
            n = static_cast<int>(a[2]);
            blocks.push_back({static_cast<int>(a[0]), static_cast<int>(a[1])});
        }
        return from_yd(yd_cyclic(F, blocks, n));
    }
    if (kind == "bashev") {
        auto a = parse_ints(args);
        if (a.size() != 3) throw std::invalid_argument("bashev:k,l,lambda");
        return from_yd(yd_bashev(F, static_cast<int>(a[0]), static_cast<int>(a[1]), elem(a[2])));
    }
    throw std::invalid_argument("unknown braided space kind " + kind);
}

Vec apply_ci(const BraidedSpace& V, int n, int i, const Vec& v) {
    const Field& F = V.F;
    const int m = V.m;
    const long lo = ipow(m, n - i - 1);
    const long mid = static_cast<long>(m) * m;
    const long hi = ipow(m, i - 1);
    Vec out(v.size(), 0);
    for (long h = 0; h < hi; ++h)
        for (long ab = 0; ab < mid; ++ab)
            for (long l = 0; l < lo; ++l) {
                Elem x = v[(h * mid + ab) * lo + l];
                if (!x) continue;
                for (long cd = 0; cd < mid; ++cd) {
                    Elem e = V.c(static_cast<int>(cd), static_cast<int>(ab));
                    if (e) {
                        Elem& o = out[(h * mid + cd) * lo + l];
                        o = F.add(o, F.mul(e, x));
                    }
                }
            }
    return out;
}

Matrix braid_generator(const BraidedSpace& V, int n, int i) {
    const int N = static_cast<int>(ipow(V.m, n));
    Matrix M(N, N);
    for (int k = 0; k < N; ++k) {
        Vec e(N, 0);
        e[k] = 1;
        M.set_column(k, apply_ci(V, n, i, e));
    }
    return M;
}

bool check_braid_equation(const BraidedSpace& V) {
    Matrix c1 = braid_generator(V, 3, 1), c2 = braid_generator(V, 3, 2);
    const Field& F = V.F;
    return matmul(F, matmul(F, c1, c2), c1) == matmul(F, matmul(F, c2, c1), c2);
}

// Words use 1-based generator indices; the lift of s_{i1}...s_{ik} is c_{i1}...c_{ik}.
std::vector<int> reduced_word(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    // Lehmer code: code[i] = #{j > i : perm[j] < perm[i]}
    std::vector<int> code(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++code[i];
    // insertion sort: moving entry i right by code[i] places
    std::vector<int> word;
    for (int i = n - 1; i >= 0; --i)
        for (int k = 0; k < code[i]; ++k) word.push_back(i + k + 1);
    return word;
}

std::vector<int> reduced_word_alt(const std::vector<int>& perm) {
    std::vector<int> a = perm, swaps;
    const int n = static_cast<int>(a.size());
    bool moved = true;
    while (moved) {
        moved = false;
        for (int j = n - 2; j >= 0; --j)
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                swaps.push_back(j + 1);
                moved = true;
            }
    }
    // a = s_{w_k} ... s_{w_1} perm is sorted, so perm = s_{w_1} ... s_{w_k}
    return swaps;
}

Matrix braid_lift(const BraidedSpace& V, int n, const std::vector<int>& word) {
    const int N = static_cast<int>(ipow(V.m, n));
    Matrix M(N, N);
    for (int k = 0; k < N; ++k) {
        Vec e(N, 0);
        e[k] = 1;
        for (auto it = word.rbegin(); it != word.rend(); ++it) e = apply_ci(V, n, *it, e);
        M.set_column(k, e);
    }
    return M;
}

namespace {

void check_budget(const BraidedSpace& V, int n, long budget) {
    if (n < 1) throw std::invalid_argument("symmetrizer degree must be >= 1");
    double size = 1;
    for (int i = 0; i < n; ++i) size *= V.m;
    if (size > budget) throw std::runtime_error(fmt::format("symmetrizer budget exceeded: {}^{} > {}", V.m, n, budget));
}

}  // namespace

Matrix quantum_symmetrizer(const BraidedSpace& V, int n, long budget) {
    check_budget(V, n, budget);
    const Field& F = V.F;
    const int N = static_cast<int>(ipow(V.m, n));
    Matrix M(N, N);
    for (int col = 0; col < N; ++col) {
        Vec w(N, 0);
        w[col] = 1;
        // apply T_n first, then T_{n-1} (x) id, ..., T_2 (x) id
        for (int k = n; k >= 2; --k) {
            // Horner: T_k = 1 + c_{k-1}(1 + c_{k-2}(... (1 + c_1)))
            Vec acc = w;
            for (int j = 1; j <= k - 1; ++j) acc = vadd(F, w, apply_ci(V, n, j, acc));
            w = std::move(acc);
        }
        M.set_column(col, w);
    }
    return M;
}

Matrix quantum_symmetrizer_explicit(const BraidedSpace& V, int n, long budget) {
    check_budget(V, n, budget);
    const Field& F = V.F;
    const int N = static_cast<int>(ipow(V.m, n));
    Matrix M(N, N);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        M = add(F, M, braid_lift(V, n, reduced_word(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return M;
}

int default_nmax(int m) { return m <= 2 ? 8 : 6; }

NicholsDims nichols_dims(const BraidedSpace& V, int n_max, long budget) {
    if (n_max <= 0) n_max = default_nmax(V.m);
    NicholsDims out;
    out.graded.push_back(1);
    out.total = 1;
    int first_zero = -1;
    for (int n = 1; n <= n_max; ++n) {
        int r = rank(V.F, quantum_symmetrizer(V, n, budget));
        out.graded.push_back(r);
        out.total += r;
        if (r == 0 && first_zero < 0) first_zero = n;
        if (r != 0) first_zero = -1;
    }
    out.closed = first_zero > 0;
    return out;
}

}  // namespace hb
