#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfbench/gf.hpp"

namespace hb {

// Letters are precedence ranks: letter 0 is the smallest generator.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

struct DeglexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct WordHash {
    size_t operator()(const Word& w) const noexcept {
        size_t h = 1469598103934665603ull;
        for (Letter l : w) h = (h ^ l) * 1099511628211ull;
        return h ^ w.size();
    }
};

// -1, 0, 1
int compare_deglex(const Word& a, const Word& b);

class Alphabet {
public:
    Alphabet() = default;
    // `ascending` lists the names from smallest to largest; empty means the
    // declared order, so the last-declared generator is the largest.
    explicit Alphabet(std::vector<std::string> names, std::vector<std::string> ascending = {});

    int size() const { return static_cast<int>(declared_.size()); }
    const std::vector<std::string>& declared() const { return declared_; }
    const std::string& name(Letter l) const { return by_letter_[l]; }
    Letter letter(int declared_index) const { return letter_of_[declared_index]; }
    int declared_index(Letter l) const { return declared_of_[l]; }
    std::optional<Letter> find(const std::string& name) const;
    // longest generator name starting at s[pos]
    std::optional<std::pair<Letter, size_t>> match(const std::string& s, size_t pos) const;

    Word parse_word(const std::string& s) const;
    std::string format(const Word& w) const;
    // names in ascending precedence
    std::vector<std::string> ascending() const { return by_letter_; }

    int compare(const Word& a, const Word& b) const { return compare_deglex(a, b); }

private:
    std::vector<std::string> declared_;
    std::vector<std::string> by_letter_;
    std::vector<Letter> letter_of_;
    std::vector<int> declared_of_;
};

class NcPoly {
public:
    using Terms = std::map<Word, Elem, DeglexLess>;

    NcPoly() = default;
    static NcPoly constant(Elem c);
    static NcPoly monomial(Word w, Elem c = 1);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }
    size_t size() const { return t_.size(); }
    Elem coeff(const Word& w) const;
    // largest word; requires nonzero
    const Word& lead() const { return t_.rbegin()->first; }
    Elem lead_coeff() const { return t_.rbegin()->second; }
    int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size()); }

    void add_term(const Field& F, const Word& w, Elem c);
    bool operator==(const NcPoly& o) const { return t_ == o.t_; }
    bool operator!=(const NcPoly& o) const { return t_ != o.t_; }

private:
    Terms t_;
};

NcPoly add(const Field& F, const NcPoly& a, const NcPoly& b);
NcPoly sub(const Field& F, const NcPoly& a, const NcPoly& b);
NcPoly scale(const Field& F, Elem c, const NcPoly& a);
NcPoly mul(const Field& F, const NcPoly& a, const NcPoly& b);
NcPoly pow(const Field& F, const NcPoly& a, int n);
NcPoly commutator(const Field& F, const NcPoly& a, const NcPoly& b);
// u * a * v for words u, v
NcPoly sandwich(const Field& F, const Word& u, const NcPoly& a, const Word& v);

std::string format(const NcPoly& f, const Alphabet& A);

Word concat(const Word& a, const Word& b);
std::optional<size_t> find_subword(const Word& w, const Word& sub, size_t from = 0);

}  // namespace hb
