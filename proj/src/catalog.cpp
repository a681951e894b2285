#include "hopfbench/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace hb {

extern const char kCatalogText[];

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

ParamSpec parse_domain(const std::string& name, const std::string& d) {
    ParamSpec s;
    s.name = name;
    if (d == "k") {
        s.kind = DomainKind::field;
    } else if (d == "fp") {
        s.kind = DomainKind::prime_field;
    } else if (d == "{1..p-1}") {
        s.kind = DomainKind::ints;
        s.up_to_p = true;
    } else if (d.size() >= 2 && d.front() == '{' && d.back() == '}') {
        s.kind = DomainKind::ints;
        for (auto& v : split(d.substr(1, d.size() - 2), ',')) s.ints.push_back(std::stoll(v));
    } else {
        throw std::invalid_argument(fmt::format("parameter {}: unknown domain '{}'", name, d));
    }
    return s;
}

std::string domain_text(const ParamSpec& s) {
    switch (s.kind) {
        case DomainKind::field: return "k";
        case DomainKind::prime_field: return "fp";
        case DomainKind::ints: break;
    }
    if (s.up_to_p) return "{1..p-1}";
    std::string out = "{";
    for (size_t i = 0; i < s.ints.size(); ++i) out += (i ? "," : "") + std::to_string(s.ints[i]);
    return out + "}";
}

int scope_rank(const std::string& scope) {
    if (scope == "T4.2") return 0;
    if (scope == "T3.7") return 1;
    return 2;
}

// ---------------------------------------------------------------- predicates

struct Value {
    bool is_int = true;
    long long i = 0;
    Elem e = 0;
};

Elem as_elem(const Value& v, const Field& F) { return v.is_int ? F.from_int(v.i) : v.e; }

struct Node;
using NodeP = std::unique_ptr<Node>;

struct Node {
    enum Kind { Or, And, Not, Exists, Eq, Ne, Num, Var, Add, Sub, Mul, Pow, Mod, Neg } kind;
    std::vector<NodeP> kids;
    long long num = 0;
    std::string name;
    std::vector<std::string> vars;  // exists
    std::string domain;             // exists: "ints", "Fp", "Fp*", "F", "F*"
    std::vector<long long> ints;
};

NodeP make(Node::Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

class PredParser {
public:
    explicit PredParser(const std::string& s) : s_(s) { tokenize(); }

    NodeP parse() {
        NodeP n = pred();
        if (pos_ != tok_.size()) fail("trailing input");
        return n;
    }

private:
    void tokenize() {
        size_t i = 0;
        while (i < s_.size()) {
            char c = s_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '$' || c == '_') {
                size_t j = i + 1;
                while (j < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_' || s_[j] == '.'))
                    ++j;
                tok_.push_back(s_.substr(i, j - i));
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
                tok_.push_back(s_.substr(i, j - i));
                i = j;
            } else if ((c == '=' || c == '!') && i + 1 < s_.size() && s_[i + 1] == '=') {
                tok_.push_back(s_.substr(i, 2));
                i += 2;
            } else if (std::string("+-*^%(){},:").find(c) != std::string::npos) {
                tok_.push_back(std::string(1, c));
                ++i;
            } else {
                throw std::invalid_argument(fmt::format("predicate '{}': unexpected '{}'", s_, c));
            }
        }
    }

    [[noreturn]] void fail(const std::string& what) const {
        std::string at = pos_ < tok_.size() ? tok_[pos_] : "end";
        throw std::invalid_argument(fmt::format("predicate '{}': {} at '{}'", s_, what, at));
    }
    bool peek(const std::string& t) const { return pos_ < tok_.size() && tok_[pos_] == t; }
    bool accept(const std::string& t) {
        if (!peek(t)) return false;
        ++pos_;
        return true;
    }
    void expect(const std::string& t) {
        if (!accept(t)) fail("expected '" + t + "'");
    }

    NodeP pred() {
        NodeP l = conj();
        while (accept("or")) {
            auto n = make(Node::Or);
            n->kids.push_back(std::move(l));
            n->kids.push_back(conj());
            l = std::move(n);
        }
        return l;
    }
    NodeP conj() {
        NodeP l = neg();
        while (accept("and")) {
            auto n = make(Node::And);
            n->kids.push_back(std::move(l));
            n->kids.push_back(neg());
            l = std::move(n);
        }
        return l;
    }
    NodeP neg() {
        if (accept("not")) {
            auto n = make(Node::Not);
            n->kids.push_back(neg());
            return n;
        }
        if (accept("exists")) return exists();
        if (peek("(")) {
            size_t save = pos_;
            try {
                ++pos_;
                NodeP inner = pred();
                expect(")");
                static const std::set<std::string> arith{"==", "!=", "+", "-", "*", "^", "%"};
                if (pos_ >= tok_.size() || !arith.count(tok_[pos_])) return inner;
            } catch (const std::invalid_argument&) {
            }
            pos_ = save;
        }
        NodeP l = sum();
        Node::Kind k;
        if (accept("=="))
            k = Node::Eq;
        else if (accept("!="))
            k = Node::Ne;
        else
            fail("expected comparison");
        auto n = make(k);
        n->kids.push_back(std::move(l));
        n->kids.push_back(sum());
        return n;
    }
    NodeP exists() {
        auto n = make(Node::Exists);
        do {
            if (pos_ >= tok_.size()) fail("expected variable");
            n->vars.push_back(tok_[pos_++]);
        } while (accept(","));
        expect("in");
        if (accept("{")) {
            n->domain = "ints";
            do {
                if (pos_ >= tok_.size()) fail("expected integer");
                n->ints.push_back(std::stoll(tok_[pos_++]));
            } while (accept(","));
            expect("}");
        } else if (peek("Fp") || peek("F")) {
            n->domain = tok_[pos_++];
            if (accept("*")) n->domain += "*";
        } else {
            fail("expected domain");
        }
        expect(":");
        n->kids.push_back(pred());
        return n;
    }
    NodeP sum() {
        NodeP l = product();
        for (;;) {
            Node::Kind k;
            if (accept("+"))
                k = Node::Add;
            else if (accept("-"))
                k = Node::Sub;
            else
                return l;
            auto n = make(k);
            n->kids.push_back(std::move(l));
            n->kids.push_back(product());
            l = std::move(n);
        }
    }
    NodeP product() {
        NodeP l = unary();
        for (;;) {
            Node::Kind k;
            if (accept("*"))
                k = Node::Mul;
            else if (accept("%"))
                k = Node::Mod;
            else
                return l;
            auto n = make(k);
            n->kids.push_back(std::move(l));
            n->kids.push_back(unary());
            l = std::move(n);
        }
    }
    NodeP unary() {
        if (accept("-")) {
            auto n = make(Node::Neg);
            n->kids.push_back(unary());
            return n;
        }
        NodeP b = atom();
        if (accept("^")) {
            auto n = make(Node::Pow);
            n->kids.push_back(std::move(b));
            n->kids.push_back(atom());
            return n;
        }
        return b;
    }
    NodeP atom() {
        if (accept("(")) {
            NodeP n = sum();
            expect(")");
            return n;
        }
        if (pos_ >= tok_.size()) fail("expected operand");
        const std::string& t = tok_[pos_++];
        if (std::isdigit(static_cast<unsigned char>(t[0]))) {
            auto n = make(Node::Num);
            n->num = std::stoll(t);
            return n;
        }
        static const std::set<std::string> reserved{"or", "and", "not", "exists", "in"};
        if (reserved.count(t)) fail("unexpected keyword");
        auto n = make(Node::Var);
        n->name = t[0] == '$' ? t.substr(1) : t;
        return n;
    }

    std::string s_;
    std::vector<std::string> tok_;
    size_t pos_ = 0;
};

class Evaluator {
public:
    Evaluator(const Field& F, std::map<std::string, Value> vars) : F_(F), vars_(std::move(vars)) {}

    bool truth(const Node& n) {
        switch (n.kind) {
            case Node::Or: return truth(*n.kids[0]) || truth(*n.kids[1]);
            case Node::And: return truth(*n.kids[0]) && truth(*n.kids[1]);
            case Node::Not: return !truth(*n.kids[0]);
            case Node::Eq: return equal(value(*n.kids[0]), value(*n.kids[1]));
            case Node::Ne: return !equal(value(*n.kids[0]), value(*n.kids[1]));
            case Node::Exists: return exists(n, 0);
            default: throw std::invalid_argument("predicate: arithmetic used as a condition");
        }
    }

private:
    bool equal(const Value& a, const Value& b) const {
        if (a.is_int && b.is_int) return a.i == b.i;
        return as_elem(a, F_) == as_elem(b, F_);
    }

    std::vector<Value> domain(const Node& n) const {
        std::vector<Value> out;
        if (n.domain == "ints") {
            for (long long v : n.ints) out.push_back({true, v, 0});
            return out;
        }
        auto els = n.domain.rfind("Fp", 0) == 0 ? F_.prime_subfield() : F_.elements();
        bool nonzero = n.domain.back() == '*';
        for (Elem e : els)
            if (!nonzero || e) out.push_back({false, 0, e});
        return out;
    }

    bool exists(const Node& n, size_t k) {
        if (k == n.vars.size()) return truth(*n.kids[0]);
        auto dom = domain(n);
        auto saved = vars_.find(n.vars[k]) != vars_.end() ? std::optional<Value>(vars_[n.vars[k]]) : std::nullopt;
        bool found = false;
        for (auto& v : dom) {
            vars_[n.vars[k]] = v;
            if (exists(n, k + 1)) {
                found = true;
                break;
            }
        }
        if (saved)
            vars_[n.vars[k]] = *saved;
        else
            vars_.erase(n.vars[k]);
        return found;
    }

    Value value(const Node& n) {
        switch (n.kind) {
            case Node::Num: return {true, n.num, 0};
            case Node::Var: {
                auto it = vars_.find(n.name);
                if (it == vars_.end()) throw std::invalid_argument("predicate: unknown name " + n.name);
                return it->second;
            }
            case Node::Neg: {
                Value a = value(*n.kids[0]);
                if (a.is_int) return {true, -a.i, 0};
                return {false, 0, F_.neg(a.e)};
            }
            case Node::Pow: {
                Value a = value(*n.kids[0]), b = value(*n.kids[1]);
                if (!b.is_int || b.i < 0) throw std::invalid_argument("predicate: exponent must be a nonnegative integer");
                if (a.is_int) {
                    long long r = 1;
                    for (long long i = 0; i < b.i; ++i) r *= a.i;
                    return {true, r, 0};
                }
                return {false, 0, F_.pow(a.e, b.i)};
            }
            case Node::Add:
            case Node::Sub:
            case Node::Mul:
            case Node::Mod: {
                Value a = value(*n.kids[0]), b = value(*n.kids[1]);
                if (a.is_int && b.is_int) {
                    switch (n.kind) {
                        case Node::Add: return {true, a.i + b.i, 0};
                        case Node::Sub: return {true, a.i - b.i, 0};
                        case Node::Mul: return {true, a.i * b.i, 0};
                        default:
                            if (b.i == 0) throw std::invalid_argument("predicate: modulo by zero");
                            return {true, ((a.i % b.i) + b.i) % b.i, 0};
                    }
                }
                Elem x = as_elem(a, F_), y = as_elem(b, F_);
                switch (n.kind) {
                    case Node::Add: return {false, 0, F_.add(x, y)};
                    case Node::Sub: return {false, 0, F_.sub(x, y)};
                    case Node::Mul: return {false, 0, F_.mul(x, y)};
                    default: throw std::invalid_argument("predicate: % needs integers");
                }
            }
            default: throw std::invalid_argument("predicate: condition used as a value");
        }
    }

    const Field& F_;
    std::map<std::string, Value> vars_;
};

Value to_value(const ParamValue& v) { return v.is_int ? Value{true, v.ival, 0} : Value{false, 0, v.fval}; }

void check_params(const FamilySpec& f, const Params& P, const Field& F) {
    if (f.characteristic && F.p() != f.characteristic)
        throw std::invalid_argument(fmt::format("{} needs characteristic {}, got {}", f.id, f.characteristic, F.name()));
    for (auto& [name, v] : P) {
        bool known = std::any_of(f.params.begin(), f.params.end(), [&](const ParamSpec& s) { return s.name == name; });
        if (!known) throw std::invalid_argument(fmt::format("{}: unknown parameter {}", f.id, name));
    }
    for (auto& s : f.params) {
        auto it = P.find(s.name);
        if (it == P.end()) throw std::invalid_argument(fmt::format("{}: missing parameter {}", f.id, s.name));
        const ParamValue& v = it->second;
        bool ok = false;
        switch (s.kind) {
            case DomainKind::field: ok = !v.is_int && F.contains(v.fval); break;
            case DomainKind::prime_field: ok = !v.is_int && v.fval < F.p(); break;
            case DomainKind::ints: {
                auto dom = domain_values(s, F);
                ok = v.is_int && std::any_of(dom.begin(), dom.end(), [&](const ParamValue& d) { return d.ival == v.ival; });
                break;
            }
        }
        if (!ok) throw std::invalid_argument(fmt::format("{}: parameter {} out of domain", f.id, s.name));
    }
}

// replaces $name by the integer value of a parameter (or p); used in exponents and tags
std::string substitute_ints(const std::string& s, const ParamEnv& env) {
    std::string out;
    for (size_t i = 0; i < s.size();) {
        if (s[i] != '$') {
            out += s[i++];
            continue;
        }
        size_t j = i + 1;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string name = s.substr(i + 1, j - i - 1);
        auto it = env.find(name);
        if (it == env.end() || !it->second.is_int)
            throw std::invalid_argument(fmt::format("'{}': ${} is not an integer parameter", s, name));
        out += std::to_string(it->second.ival);
        i = j;
    }
    return out;
}

// for display only: every parameter printed with its value
std::string substitute_display(const std::string& s, const ParamEnv& env, const Field& F) {
    std::string out;
    for (size_t i = 0; i < s.size();) {
        if (s[i] != '$') {
            out += s[i++];
            continue;
        }
        size_t j = i + 1;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string name = s.substr(i + 1, j - i - 1);
        auto it = env.find(name);
        if (it == env.end()) throw std::invalid_argument(fmt::format("'{}': unknown parameter ${}", s, name));
        if (it->second.is_int)
            out += std::to_string(it->second.ival);
        else
            out += "(" + F.format(it->second.fval) + ")";
        i = j;
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- records

std::string FamilySpec::scope() const {
    if (id.rfind("T4.2-", 0) == 0) return "T4.2";
    if (id.rfind("T3.7-", 0) == 0) return "T3.7";
    return "lemmas";
}

int FamilySpec::claimed_dim(int p) const {
    if (scope() == "T4.2") return 16;
    return p * p * p * p;
}

const ParamSpec& FamilySpec::param(const std::string& n) const {
    for (auto& s : params)
        if (s.name == n) return s;
    throw std::invalid_argument(fmt::format("{}: no parameter {}", id, n));
}

std::vector<FamilySpec> parse_catalog(const std::string& text) {
    std::vector<FamilySpec> out;
    std::set<std::string> ids;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool open = false;
    FamilySpec cur;
    auto err = [&](const std::string& what) {
        return std::invalid_argument(fmt::format("catalog line {}: {}", lineno, what));
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t sp = t.find(' ');
        std::string key = t.substr(0, sp);
        std::string rest = sp == std::string::npos ? std::string{} : trim(t.substr(sp + 1));
        if (key == "family") {
            if (open) throw err("family inside family");
            if (!ids.insert(rest).second) throw err("duplicate id " + rest);
            cur = FamilySpec{};
            cur.id = rest;
            if (cur.scope() == "T4.2") cur.characteristic = 2;
            open = true;
            continue;
        }
        if (!open) throw err("'" + key + "' outside a family");
        if (key == "end") {
            if (cur.group.empty()) throw err(cur.id + " has no group");
            out.push_back(std::move(cur));
            open = false;
        } else if (key == "item") {
            cur.item = std::stoi(rest);
        } else if (key == "name") {
            cur.name = rest;
        } else if (key == "group") {
            group_macro(rest);
            cur.group = rest;
        } else if (key == "char") {
            cur.characteristic = std::stoi(rest);
        } else if (key == "gen") {
            std::istringstream is(rest);
            GenSpec g;
            if (!(is >> g.name >> g.over)) throw err("gen needs a name and a grouplike word");
            cur.gens.push_back(g);
        } else if (key == "param") {
            std::istringstream is(rest);
            std::string name, dom;
            is >> name;
            std::getline(is, dom);
            cur.params.push_back(parse_domain(name, trim(dom)));
        } else if (key == "rel") {
            cur.relations.push_back(rest);
        } else if (key == "cond") {
            PredParser(rest).parse();
            cur.condition = rest;
        } else if (key == "condchar") {
            cur.condition_char = std::stoi(rest);
        } else if (key == "iso") {
            PredParser(rest).parse();
            cur.iso = rest;
        } else if (key == "note") {
            cur.notes.push_back(rest);
        } else {
            throw err("unknown key " + key);
        }
    }
    if (open) throw std::invalid_argument("catalog: unterminated family " + cur.id);
    std::stable_sort(out.begin(), out.end(), [](const FamilySpec& a, const FamilySpec& b) {
        int ra = scope_rank(a.scope()), rb = scope_rank(b.scope());
        if (ra != rb) return ra < rb;
        if (a.item != b.item) return a.item < b.item;
        return a.id < b.id;
    });
    return out;
}

const std::vector<FamilySpec>& catalog() {
    static const std::vector<FamilySpec> cat = parse_catalog(kCatalogText);
    return cat;
}

const FamilySpec& find_family(const std::string& id) {
    for (auto& f : catalog())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown family " + id);
}

std::vector<std::string> list_families(const std::string& scope) {
    if (scope != "all" && scope != "T4.2" && scope != "T3.7" && scope != "lemmas")
        throw std::invalid_argument("unknown scope " + scope);
    std::vector<std::string> out;
    for (auto& f : catalog())
        if (scope == "all" || f.scope() == scope) out.push_back(f.id);
    return out;
}

std::string format_record(const FamilySpec& f) {
    std::string out = "family " + f.id + "\n";
    out += fmt::format("  item {}\n", f.item);
    if (!f.name.empty()) out += "  name " + f.name + "\n";
    if (f.characteristic && f.scope() != "T4.2") out += fmt::format("  char {}\n", f.characteristic);
    out += "  group " + f.group + "\n";
    for (auto& s : f.params) out += "  param " + s.name + " " + domain_text(s) + "\n";
    for (auto& g : f.gens) out += "  gen " + g.name + " " + g.over + "\n";
    for (auto& r : f.relations) out += "  rel " + r + "\n";
    if (f.condition_char) out += fmt::format("  condchar {}\n", f.condition_char);
    if (!f.condition.empty()) out += "  cond " + f.condition + "\n";
    if (!f.iso.empty()) out += "  iso " + f.iso + "\n";
    for (auto& n : f.notes) out += "  note " + n + "\n";
    return out + "end\n";
}

GroupMacro group_macro(const std::string& name) {
    if (name == "D4") return {{"g", "h"}, {"g^4 - 1", "h^2 - 1", "h*g - g^3*h"}, false};
    if (name == "Q8") return {{"g", "h"}, {"g^4 - 1", "h*g - g^3*h", "g^2 - h^2"}, false};
    if (name == "C8") return {{"g"}, {"g^8 - 1"}, true};
    if (name == "C4xC2") return {{"g", "h"}, {"g^4 - 1", "h^2 - 1"}, true};
    if (name == "C2^3") return {{"g", "h", "k"}, {"g^2 - 1", "h^2 - 1", "k^2 - 1"}, true};
    if (name == "C4") return {{"g"}, {"g^4 - 1"}, true};
    if (name == "C2xC2") return {{"g", "h"}, {"g^2 - 1", "h^2 - 1"}, true};
    if (name == "C2") return {{"g"}, {"g^2 - 1"}, true};
    if (name == "Cp") return {{"g"}, {"g^$p - 1"}, true};
    if (name == "CpxCp") return {{"g", "h"}, {"g^$p - 1", "h^$p - 1"}, true};
    throw std::invalid_argument("unknown group " + name);
}

// ---------------------------------------------------------------- parameters

std::vector<ParamValue> domain_values(const ParamSpec& s, const Field& F) {
    std::vector<ParamValue> out;
    switch (s.kind) {
        case DomainKind::field:
            for (Elem e : F.elements()) out.push_back(ParamValue::element(e));
            break;
        case DomainKind::prime_field:
            for (Elem e : F.prime_subfield()) out.push_back(ParamValue::element(e));
            break;
        case DomainKind::ints:
            if (s.up_to_p) {
                for (int v = 1; v < F.p(); ++v) out.push_back(ParamValue::integer(v));
            } else {
                for (long long v : s.ints) out.push_back(ParamValue::integer(v));
            }
            break;
    }
    return out;
}

double parameter_space_size(const FamilySpec& f, const Field& F) {
    double n = 1;
    for (auto& s : f.params) n *= static_cast<double>(domain_values(s, F).size());
    return n;
}

std::vector<Params> parameter_sweep(const FamilySpec& f, const Field& F) {
    std::vector<std::vector<ParamValue>> doms;
    for (auto& s : f.params) doms.push_back(domain_values(s, F));
    std::vector<Params> out;
    std::vector<size_t> idx(doms.size(), 0);
    for (auto& d : doms)
        if (d.empty()) return out;
    for (;;) {
        Params P;
        for (size_t i = 0; i < doms.size(); ++i) P[f.params[i].name] = doms[i][idx[i]];
        out.push_back(std::move(P));
        int i = static_cast<int>(doms.size()) - 1;
        while (i >= 0 && ++idx[i] == doms[i].size()) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::vector<Params> parameter_sample(const FamilySpec& f, const Field& F, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<ParamValue>> doms;
    for (auto& s : f.params) doms.push_back(domain_values(s, F));
    std::vector<Params> out;
    for (int k = 0; k < n; ++k) {
        Params P;
        for (size_t i = 0; i < doms.size(); ++i) {
            std::uniform_int_distribution<size_t> pick(0, doms[i].size() - 1);
            P[f.params[i].name] = doms[i][pick(rng)];
        }
        out.push_back(std::move(P));
    }
    return out;
}

std::string format_params(const FamilySpec& f, const Params& P, const Field& F) {
    std::string out;
    for (auto& s : f.params) {
        auto it = P.find(s.name);
        if (it == P.end()) continue;
        if (!out.empty()) out += ',';
        out += s.name + "=" + (it->second.is_int ? std::to_string(it->second.ival) : F.format(it->second.fval));
    }
    return out.empty() ? "-" : out;
}

Params parse_params(const FamilySpec& f, const std::string& s, const Field& F) {
    Params P;
    if (trim(s).empty() || trim(s) == "-") return P;
    for (auto& kv : split(s, ',')) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected name=value in '" + kv + "'");
        std::string name = trim(kv.substr(0, eq)), val = trim(kv.substr(eq + 1));
        const ParamSpec& spec = f.param(name);
        P[name] = spec.kind == DomainKind::ints ? ParamValue::integer(std::stoll(val)) : ParamValue::element(F.parse(val));
    }
    return P;
}

// ---------------------------------------------------------------- instantiation

HopfPresentation instantiate(const FamilySpec& f, const Params& P, const Field& F) {
    check_params(f, P, F);
    ParamEnv env = P;
    env["p"] = ParamValue::integer(F.p());
    GroupMacro G = group_macro(f.group);

    std::vector<std::string> names = G.gens;
    for (auto& g : f.gens) names.push_back(g.name);
    HopfPresentation H;
    H.name = f.id + (f.params.empty() ? "" : " " + format_params(f, P, F));
    H.field = F;
    H.alphabet = Alphabet(names);
    for (size_t i = 0; i < G.gens.size(); ++i) H.tags.push_back({TagKind::grouplike, {}});
    for (auto& g : f.gens) H.tags.push_back({TagKind::skewprim, H.alphabet.parse_word(substitute_ints(g.over, env))});

    auto add = [&](const std::string& text) {
        H.relations.push_back(parse_poly(text, H.alphabet, F, env));
        H.relation_text.push_back(substitute_display(text, env, F));
    };
    for (auto& r : G.relations) add(r);
    for (auto& r : f.relations) add(r);

    const int n = H.alphabet.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!G.abelian && a < static_cast<int>(G.gens.size()) && b < static_cast<int>(G.gens.size())) continue;
            Letter la = H.alphabet.letter(a), lb = H.alphabet.letter(b);
            Word ab{la, lb}, ba{lb, la};
            bool covered = std::any_of(H.relations.begin(), H.relations.end(), [&](const NcPoly& r) {
                return r.coeff(ab) != 0 && r.coeff(ba) != 0;
            });
            if (covered) continue;
            H.relations.push_back(commutator(F, NcPoly::monomial({la}), NcPoly::monomial({lb})));
            H.relation_text.push_back(fmt::format("[{},{}]", names[a], names[b]));
        }
    }
    H.validate();
    return H;
}

HopfPresentation instantiate(const std::string& id, const Params& P, const Field& F) {
    return instantiate(find_family(id), P, F);
}

bool eval_predicate(const std::string& pred, const Field& F, const ParamEnv& vars) {
    NodeP root = PredParser(pred).parse();
    std::map<std::string, Value> v;
    for (auto& [k, x] : vars) v[k] = to_value(x);
    if (!v.count("p")) v["p"] = {true, F.p(), 0};
    return Evaluator(F, std::move(v)).truth(*root);
}

bool ambiguity_condition(const FamilySpec& f, const Params& P, const Field& F) {
    if (f.condition.empty()) throw std::invalid_argument(f.id + " has no ambiguity condition");
    if (f.condition_char && F.p() != f.condition_char)
        throw std::invalid_argument(fmt::format("{}: condition is stated for characteristic {}", f.id, f.condition_char));
    check_params(f, P, F);
    return eval_predicate(f.condition, F, P);
}

bool iso_predicate(const FamilySpec& f, const Params& a, const Params& b, const Field& F) {
    if (f.iso.empty()) throw std::invalid_argument(f.id + " has no isomorphism criterion");
    check_params(f, a, F);
    check_params(f, b, F);
    ParamEnv vars;
    for (auto& [k, v] : a) vars["A." + k] = v;
    for (auto& [k, v] : b) vars["B." + k] = v;
    return eval_predicate(f.iso, F, vars);
}

}  // namespace hb
