#include "hopfbench/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hb {

namespace {
constexpr size_t kMaxRules = 4000;
}

RewriteSystem RewriteSystem::from_relations(const Alphabet& A, const Field& F, const std::vector<NcPoly>& rels) {
    RewriteSystem s(A, F);
    for (auto& r : rels) {
        s.add_relation(r);
        if (s.inconsistent_) break;
    }
    return s;
}

int RewriteSystem::max_degree() const {
    int d = 0;
    for (auto& r : rules_) d = std::max(d, static_cast<int>(r.lead.size()));
    return d;
}

void RewriteSystem::index() {
    by_first_.assign(A_.size(), {});
    for (size_t i = 0; i < rules_.size(); ++i) by_first_[rules_[i].lead[0]].push_back(static_cast<int>(i));
}

std::pair<int, size_t> RewriteSystem::find_lead(const Word& w) const {
    if (rules_.empty()) return {-1, 0};
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (int r : by_first_[w[pos]]) {
            const Word& L = rules_[r].lead;
            if (pos + L.size() <= w.size() && std::equal(L.begin(), L.end(), w.begin() + pos)) return {r, pos};
        }
    }
    return {-1, 0};
}

NcPoly RewriteSystem::normal_form(const NcPoly& f) const {
    NcPoly result;
    NcPoly todo = f;
    while (!todo.is_zero()) {
        Word w = todo.lead();
        Elem c = todo.lead_coeff();
        todo.add_term(F_, w, F_.neg(c));
        auto [r, pos] = find_lead(w);
        if (r < 0) {
            result.add_term(F_, w, c);
            continue;
        }
        const Rule& R = rules_[r];
        Word u(w.begin(), w.begin() + pos), v(w.begin() + pos + R.lead.size(), w.end());
        for (auto& [t, d] : R.tail.terms()) todo.add_term(F_, concat(concat(u, t), v), F_.mul(c, d));
    }
    return result;
}

void RewriteSystem::interreduce_tails() {
    for (auto& r : rules_) r.tail = normal_form(r.tail);
}

bool RewriteSystem::add_relation(const NcPoly& f0) {
    if (inconsistent_) return false;
    std::deque<NcPoly> pending{f0};
    bool added = false;
    while (!pending.empty()) {
        NcPoly f = normal_form(pending.front());
        pending.pop_front();
        if (f.is_zero()) continue;
        if (f.is_constant()) {
            inconsistent_ = true;
            rules_.clear();
            index();
            return true;
        }
        Elem ic = F_.inv(f.lead_coeff());
        f = scale(F_, ic, f);
        Rule R{f.lead(), {}};
        R.tail = sub(F_, NcPoly::monomial(R.lead), f);
        // rules whose lead contains the new lead are re-queued
        std::vector<Rule> keep;
        for (auto& old : rules_) {
            if (find_subword(old.lead, R.lead))
                pending.push_back(sub(F_, NcPoly::monomial(old.lead), old.tail));
            else
                keep.push_back(std::move(old));
        }
        keep.push_back(std::move(R));
        rules_ = std::move(keep);
        index();
        interreduce_tails();
        added = true;
        if (rules_.size() > kMaxRules) throw std::runtime_error("rewrite system grew beyond rule budget");
    }
    return added;
}

const NcPoly& Reducer::word(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    const RewriteSystem& S = *sys_;
    const Field& F = S.field();
    NcPoly result, todo = NcPoly::monomial(w);
    while (!todo.is_zero()) {
        Word u = todo.lead();
        Elem c = todo.lead_coeff();
        todo.add_term(F, u, F.neg(c));
        if (u != w) {
            if (auto it = memo_.find(u); it != memo_.end()) {
                for (auto& [t, d] : it->second.terms()) result.add_term(F, t, F.mul(c, d));
                continue;
            }
        }
        auto [r, pos] = S.find_lead(u);
        if (r < 0) {
            result.add_term(F, u, c);
            continue;
        }
        const Rule& R = S.rules()[r];
        Word a(u.begin(), u.begin() + pos), b(u.begin() + pos + R.lead.size(), u.end());
        for (auto& [t, d] : R.tail.terms()) todo.add_term(F, concat(concat(a, t), b), F.mul(c, d));
    }
    return memo_.emplace(w, std::move(result)).first->second;
}

NcPoly Reducer::poly(const NcPoly& f) {
    const Field& F = sys_->field();
    NcPoly r;
    for (auto& [w, c] : f.terms())
        for (auto& [t, d] : word(w).terms()) r.add_term(F, t, F.mul(c, d));
    return r;
}

std::vector<Ambiguity> find_ambiguities(const RewriteSystem& sys) {
    std::vector<Ambiguity> out;
    const auto& R = sys.rules();
    for (size_t i = 0; i < R.size(); ++i) {
        const Word& a = R[i].lead;
        for (size_t j = 0; j < R.size(); ++j) {
            const Word& b = R[j].lead;
            size_t mx = std::min(a.size(), b.size());
            for (size_t k = 1; k < mx; ++k) {
                if (std::equal(a.end() - k, a.end(), b.begin()))
                    out.push_back({Ambiguity::Kind::overlap, static_cast<int>(i), static_cast<int>(j),
                                   concat(a, Word(b.begin() + k, b.end())), 0});
            }
            if (i != j && b.size() <= a.size()) {
                size_t from = 0;
                while (auto pos = find_subword(a, b, from)) {
                    out.push_back({Ambiguity::Kind::inclusion, static_cast<int>(i), static_cast<int>(j), a, *pos});
                    from = *pos + 1;
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Ambiguity& x, const Ambiguity& y) { return DeglexLess{}(x.superword, y.superword); });
    return out;
}

NcPoly resolve_ambiguity(const Ambiguity& amb, const RewriteSystem& sys) {
    const Field& F = sys.field();
    const Rule& A = sys.rules().at(amb.first);
    const Rule& B = sys.rules().at(amb.second);
    NcPoly one, two;
    if (amb.kind == Ambiguity::Kind::overlap) {
        Word c(amb.superword.begin() + A.lead.size(), amb.superword.end());
        Word a(amb.superword.begin(), amb.superword.end() - B.lead.size());
        one = sandwich(F, {}, A.tail, c);
        two = sandwich(F, a, B.tail, {});
    } else {
        Word u(A.lead.begin(), A.lead.begin() + amb.offset);
        Word v(A.lead.begin() + amb.offset + B.lead.size(), A.lead.end());
        one = A.tail;
        two = sandwich(F, u, B.tail, v);
    }
    return sys.normal_form(sub(F, one, two));
}

std::string to_string(CompletionStatus s) {
    switch (s) {
        case CompletionStatus::confluent: return "confluent";
        case CompletionStatus::cap_exceeded: return "cap_exceeded";
        case CompletionStatus::inconsistent: return "inconsistent";
    }
    return "?";
}

int default_degree_cap(const std::vector<NcPoly>& rels) {
    int d = 0;
    for (auto& r : rels) d = std::max(d, r.degree());
    return 2 + 2 * d;
}

CompletionResult complete(RewriteSystem sys, int degree_cap) {
    CompletionResult res;
    for (;;) {
        if (sys.inconsistent()) {
            res.status = CompletionStatus::inconsistent;
            break;
        }
        auto ambs = find_ambiguities(sys);
        bool changed = false;
        bool restart = false;
        for (const auto& a : ambs) {
            ++res.ambiguities_checked;
            NcPoly d = resolve_ambiguity(a, sys);
            if (d.is_zero()) continue;
            if (d.degree() > degree_cap) {
                res.status = CompletionStatus::cap_exceeded;
                res.system = std::move(sys);
                return res;
            }
            size_t before = sys.rules().size();
            std::vector<Word> leads;
            for (auto& r : sys.rules()) leads.push_back(r.lead);
            sys.add_relation(d);
            ++res.rules_added;
            changed = true;
            if (sys.inconsistent()) break;
            // indices in the remaining queue stay valid only if no rule was dropped
            bool same = sys.rules().size() >= before;
            for (size_t i = 0; same && i < before; ++i) same = sys.rules()[i].lead == leads[i];
            if (!same) {
                restart = true;
                break;
            }
        }
        if (sys.inconsistent()) continue;
        if (!changed && !restart) {
            res.status = CompletionStatus::confluent;
            break;
        }
    }
    res.system = std::move(sys);
    return res;
}

BasisResult enumerate_basis(const RewriteSystem& sys, size_t cap) {
    BasisResult out;
    if (sys.inconsistent()) {
        out.finite = true;
        return out;
    }
    const int n = sys.alphabet().size();
    std::vector<Word> level{Word{}};
    out.words.push_back({});
    auto suffix_reducible = [&](const Word& w) {
        for (auto& r : sys.rules()) {
            const Word& L = r.lead;
            if (L.size() <= w.size() && std::equal(L.begin(), L.end(), w.end() - L.size())) return true;
        }
        return false;
    };
    while (!level.empty()) {
        std::vector<Word> next;
        for (auto& w : level)
            for (int l = 0; l < n; ++l) {
                Word x = w;
                x.push_back(static_cast<Letter>(l));
                if (!suffix_reducible(x)) next.push_back(std::move(x));
            }
        for (auto& w : next) out.words.push_back(w);
        if (out.words.size() > cap) return out;
        level = std::move(next);
    }
    out.finite = true;
    return out;
}

}  // namespace hb
