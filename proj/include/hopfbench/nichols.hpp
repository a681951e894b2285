#pragma once

#include <string>
#include <vector>

#include "hopfbench/gf.hpp"

namespace hb {

// c acts on V (x) V with basis e_a (x) e_b at index a*m+b; column a*m+b holds c(e_a (x) e_b).
struct BraidedSpace {
    Field F;
    int m = 0;
    Matrix c;
};

// YD module over an abelian group prod C_{orders[i]} with homogeneous basis.
// action[s] is the matrix of generator s; degree[v][s] the exponent of generator s in deg(e_v).
struct AbelianYD {
    Field F;
    int m = 0;
    std::vector<int> orders;
    std::vector<Matrix> action;
    std::vector<std::vector<int>> degree;

    // throws unless actions commute, have the right order and preserve degrees
    void validate() const;
};

struct CyclicBlock {
    int i = 0;  // degree g^i
    int r = 1;  // block size
};

// direct sum of M_{i,r} over C_n; g.v_1 = v_1, g.v_k = v_k + v_{k-1}
AbelianYD yd_cyclic(const Field& F, const std::vector<CyclicBlock>& blocks, int n);
// one-dimensional modules with trivial action over C_n, degrees g^{degs[j]}
AbelianYD yd_onedim(const Field& F, const std::vector<int>& degs, int n);
// indecomposable 2-dim module over C2 x C2: g.y = y + x, h.y = y + lambda x, degree g^k h^l
AbelianYD yd_bashev(const Field& F, int k, int l, Elem lambda);
AbelianYD yd_sum(const AbelianYD& a, const AbelianYD& b);

BraidedSpace from_yd(const AbelianYD& M);
BraidedSpace diagonal(const Field& F, const Matrix& q);
BraidedSpace trivial_braiding(const Field& F, int m);
BraidedSpace jordan(const Field& F, Elem s, int m);
// diagonal:q11,q12;q21,q22  jordan:s,m  trivial:m  yd-cyclic:i,r,n[;i,r,n...]  bashev:k,l,lambda
BraidedSpace parse_braided(const std::string& spec, const Field& F);

bool check_braid_equation(const BraidedSpace& V);

// c_i = id^(i-1) (x) c (x) id^(n-i-1) applied to a vector of V^(x)n, 1 <= i < n
Vec apply_ci(const BraidedSpace& V, int n, int i, const Vec& v);
Matrix braid_generator(const BraidedSpace& V, int n, int i);

std::vector<int> reduced_word(const std::vector<int>& perm);      // insertion sort on the Lehmer code
std::vector<int> reduced_word_alt(const std::vector<int>& perm);  // right-to-left bubble sort
Matrix braid_lift(const BraidedSpace& V, int n, const std::vector<int>& word);

// Omega_n = (Omega_{n-1} (x) id)(1 + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1)
Matrix quantum_symmetrizer(const BraidedSpace& V, int n, long budget = 10000);
// sum over all n! permutations of their lifts; for cross-checks
Matrix quantum_symmetrizer_explicit(const BraidedSpace& V, int n, long budget = 10000);

struct NicholsDims {
    std::vector<int> graded;  // graded[0] = 1
    long total = 0;           // exact if closed, otherwise a lower bound
    bool closed = false;
};

int default_nmax(int m);
NicholsDims nichols_dims(const BraidedSpace& V, int n_max = 0, long budget = 10000);

}  // namespace hb
