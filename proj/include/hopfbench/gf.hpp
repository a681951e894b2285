#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hb {

// Element of GF(p^k), encoded as the integer sum c_i p^i where c_i are the
// coefficients of the polynomial representative (little-endian digits).
using Elem = std::uint16_t;
using Vec = std::vector<Elem>;

class Field {
public:
    Field() = default;

    // p in {2,3,5}, 1 <= k <= 8, p^k <= 6561. Instances are cached.
    static Field make(int p, int k);

    int p() const;
    int k() const;
    int q() const;
    // monic modulus, low degree first (length k+1)
    const std::vector<int>& modulus() const;

    bool valid() const { return impl_ != nullptr; }
    bool contains(long long v) const { return v >= 0 && v < q(); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const;
    Elem from_int(long long n) const;

    // t, the class of x modulo the modulus (for k = 1 this is -modulus[0])
    Elem t() const;
    Elem primitive() const;

    std::vector<Elem> elements() const;
    std::vector<Elem> prime_subfield() const;

    std::string name() const;
    // polynomial in t, e.g. "t+1", "2t^2+1"; "0" for zero
    std::string format(Elem a) const;
    // accepts the format() output or the integer encoding
    Elem parse(const std::string& s) const;

    bool operator==(const Field& o) const { return impl_ == o.impl_; }
    bool operator!=(const Field& o) const { return impl_ != o.impl_; }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<size_t>(r) * c, 0) {}
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Elem& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Elem operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Elem* row(int r) { return a_.data() + static_cast<size_t>(r) * cols_; }
    const Elem* row(int r) const { return a_.data() + static_cast<size_t>(r) * cols_; }
    Vec column(int c) const;
    void set_column(int c, const Vec& v);
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

Matrix matmul(const Field& F, const Matrix& A, const Matrix& B);
Vec matvec(const Field& F, const Matrix& A, const Vec& v);
Matrix kron(const Field& F, const Matrix& A, const Matrix& B);
Matrix add(const Field& F, const Matrix& A, const Matrix& B);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(const Field& F, Matrix& M);

struct RankNullspace {
    int rank = 0;
    std::vector<Vec> nullspace;
};
RankNullspace rank_nullspace(const Field& F, Matrix M);
int rank(const Field& F, Matrix M);
std::optional<Vec> solve(const Field& F, const Matrix& A, const Vec& b);

// Incrementally maintained echelon basis of a subspace.
class Span {
public:
    Span(Field F, int n) : F_(std::move(F)), n_(n) {}
    // reduces v against the basis; returns true and keeps it if independent
    bool insert(Vec v);
    bool contains(Vec v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return n_; }
    const std::vector<Vec>& basis() const { return rows_; }

private:
    void reduce(Vec& v) const;
    Field F_;
    int n_;
    std::vector<Vec> rows_;
    std::vector<int> piv_;
};

// Roots of sum coeffs[i] x^i by exhaustive scan.
std::vector<Elem> roots_univariate(const Field& F, const std::vector<Elem>& coeffs);

bool is_zero(const Vec& v);
Vec vadd(const Field& F, const Vec& a, const Vec& b);
Vec vsub(const Field& F, const Vec& a, const Vec& b);
Vec vscale(const Field& F, Elem c, const Vec& a);
void axpy(const Field& F, Elem c, const Vec& x, Vec& y);

}  // namespace hb
