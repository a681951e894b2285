#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfbench/rewrite.hpp"

namespace hb {

using SparseVec = std::vector<std::pair<int, Elem>>;

class FinAlgebra {
public:
    FinAlgebra() = default;

    // Basis = irreducible words in deglex order; throws if the basis is infinite.
    static FinAlgebra from_confluent(const RewriteSystem& sys, size_t cap = 4096);
    // Structure constants given directly; unit is basis element `unit`.
    static FinAlgebra from_table(Field F, std::vector<std::string> labels, std::vector<SparseVec> table, Vec unit);

    const Field& field() const { return F_; }
    int dim() const { return dim_; }
    const std::vector<Word>& basis() const { return words_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    const SparseVec& product(int i, int j) const { return mult_[static_cast<size_t>(i) * dim_ + j]; }
    bool has_words() const { return sys_ != nullptr; }
    const RewriteSystem& system() const { return *sys_; }
    std::shared_ptr<const RewriteSystem> system_ptr() const { return sys_; }

    int index_of(const Word& w) const;
    Vec basis_vector(int i) const;
    // coordinates of an arbitrary polynomial over the generating alphabet
    Vec coords(const NcPoly& f) const;
    Vec generator(Letter l) const { return coords(NcPoly::monomial(Word{l})); }
    NcPoly to_poly(const Vec& v) const;
    std::string format(const Vec& v) const;

    Vec mul(const Vec& a, const Vec& b) const;
    Vec pow(const Vec& a, int n) const;
    Vec commutator(const Vec& a, const Vec& b) const;
    bool associative(std::string* witness = nullptr) const;

private:
    Field F_;
    int dim_ = 0;
    std::vector<Word> words_;
    std::vector<std::string> labels_;
    std::unordered_map<Word, int, WordHash> index_;
    std::vector<SparseVec> mult_;
    Vec unit_;
    std::shared_ptr<const RewriteSystem> sys_;
};

Vec mult_element(const Vec& a, const Vec& b, const FinAlgebra& A);
FinAlgebra tensor_square(const FinAlgebra& A);
int generated_subspace_dim(const std::vector<Vec>& gens, const FinAlgebra& A);

SparseVec to_sparse(const Vec& v);

}  // namespace hb
