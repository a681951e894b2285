#include "hopfbench/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include <fmt/format.h>

namespace hb {

int compare_deglex(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<std::string> ascending)
    : declared_(std::move(names)) {
    if (declared_.size() > 64) throw std::invalid_argument("too many generators");
    std::set<std::string> seen;
    for (auto& n : declared_) {
        if (n.empty()) throw std::invalid_argument("empty generator name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator " + n);
    }
    if (ascending.empty()) ascending = declared_;
    if (ascending.size() != declared_.size() || std::set<std::string>(ascending.begin(), ascending.end()) != seen)
        throw std::invalid_argument("precedence must list every generator exactly once");
    by_letter_ = ascending;
    letter_of_.resize(declared_.size());
    declared_of_.resize(declared_.size());
    for (size_t i = 0; i < declared_.size(); ++i) {
        auto it = std::find(by_letter_.begin(), by_letter_.end(), declared_[i]);
        Letter l = static_cast<Letter>(it - by_letter_.begin());
        letter_of_[i] = l;
        declared_of_[l] = static_cast<int>(i);
    }
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
    for (size_t i = 0; i < by_letter_.size(); ++i)
        if (by_letter_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
}

std::optional<std::pair<Letter, size_t>> Alphabet::match(const std::string& s, size_t pos) const {
    std::optional<std::pair<Letter, size_t>> best;
    for (size_t i = 0; i < by_letter_.size(); ++i) {
        const auto& n = by_letter_[i];
        if (s.compare(pos, n.size(), n) == 0 && (!best || n.size() > best->second))
            best = std::make_pair(static_cast<Letter>(i), n.size());
    }
    return best;
}

Word Alphabet::parse_word(const std::string& s) const {
    Word w;
    size_t i = 0;
    if (s == "1") return w;
    while (i < s.size()) {
        auto m = match(s, i);
        if (!m) throw std::invalid_argument(fmt::format("bad word '{}' at {}", s, i));
        i += m->second;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
            size_t j = ++i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument(fmt::format("bad exponent in '{}'", s));
            e = std::stoi(s.substr(i, j - i));
            i = j;
        }
        for (int k = 0; k < e; ++k) w.push_back(m->first);
    }
    return w;
}

std::string Alphabet::format(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        out += by_letter_[w[i]];
        if (j - i > 1) out += fmt::format("^{}", j - i);
        i = j;
    }
    return out;
}

NcPoly NcPoly::constant(Elem c) {
    NcPoly p;
    if (c) p.t_[Word{}] = c;
    return p;
}

NcPoly NcPoly::monomial(Word w, Elem c) {
    NcPoly p;
    if (c) p.t_[std::move(w)] = c;
    return p;
}

Elem NcPoly::coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? 0 : it->second;
}

void NcPoly::add_term(const Field& F, const Word& w, Elem c) {
    if (!c) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (fresh) return;
    it->second = F.add(it->second, c);
    if (!it->second) t_.erase(it);
}

NcPoly add(const Field& F, const NcPoly& a, const NcPoly& b) {
    NcPoly r = a;
    for (auto& [w, c] : b.terms()) r.add_term(F, w, c);
    return r;
}

NcPoly sub(const Field& F, const NcPoly& a, const NcPoly& b) {
    NcPoly r = a;
    for (auto& [w, c] : b.terms()) r.add_term(F, w, F.neg(c));
    return r;
}

NcPoly scale(const Field& F, Elem c, const NcPoly& a) {
    NcPoly r;
    if (!c) return r;
    for (auto& [w, d] : a.terms()) r.add_term(F, w, F.mul(c, d));
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word w;
    w.reserve(a.size() + b.size());
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

NcPoly mul(const Field& F, const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (auto& [u, c] : a.terms())
        for (auto& [v, d] : b.terms()) r.add_term(F, concat(u, v), F.mul(c, d));
    return r;
}

NcPoly pow(const Field& F, const NcPoly& a, int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    NcPoly r = NcPoly::constant(1);
    for (int i = 0; i < n; ++i) r = mul(F, r, a);
    return r;
}

NcPoly commutator(const Field& F, const NcPoly& a, const NcPoly& b) {
    return sub(F, mul(F, a, b), mul(F, b, a));
}

NcPoly sandwich(const Field& F, const Word& u, const NcPoly& a, const Word& v) {
    NcPoly r;
    for (auto& [w, c] : a.terms()) r.add_term(F, concat(concat(u, w), v), c);
    return r;
}

std::string format(const NcPoly& f, const Alphabet& A) {
    if (f.is_zero()) return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (it->first.empty())
            out += fmt::format("{}", it->second);
        else if (it->second == 1)
            out += A.format(it->first);
        else
            out += fmt::format("{}*{}", it->second, A.format(it->first));
    }
    return out;
}

std::optional<size_t> find_subword(const Word& w, const Word& sub, size_t from) {
    if (sub.size() > w.size()) return std::nullopt;
    for (size_t i = from; i + sub.size() <= w.size(); ++i)
        if (std::equal(sub.begin(), sub.end(), w.begin() + i)) return i;
    return std::nullopt;
}

}  // namespace hb
