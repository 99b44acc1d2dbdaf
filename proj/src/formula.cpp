#include "ecumene/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecumene {

namespace {

const char* kind_tag(Kind k) {
    switch (k) {
    case Kind::AtomI: return "I";
    case Kind::AtomC: return "C";
    case Kind::Bottom: return "F";
    case Kind::Top: return "T";
    case Kind::And: return "&";
    case Kind::OrI: return "|";
    case Kind::OrC: return "/";
    case Kind::ImpI: return ">";
    case Kind::ImpC: return "}";
    case Kind::Neg: return "~";
    case Kind::ForAll: return "A";
    case Kind::ExistsI: return "E";
    case Kind::ExistsC: return "X";
    case Kind::Box: return "B";
    case Kind::DiaI: return "D";
    case Kind::DiaC: return "K";
    }
    return "?";
}

void term_key(const Term& t, const std::vector<std::string>& bound, std::string& out) {
    if (t.args.empty()) {
        for (std::size_t i = bound.size(); i-- > 0;) {
            if (bound[i] == t.name) {
                out += '#';
                out += std::to_string(bound.size() - 1 - i);
                return;
            }
        }
        out += t.name;
        return;
    }
    out += t.name;
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ',';
        term_key(t.args[i], bound, out);
    }
    out += ')';
}

void write_key(const Formula& f, std::vector<std::string>& bound, std::string& out) {
    Kind k = f.kind();
    out += kind_tag(k);
    switch (k) {
    case Kind::AtomI:
    case Kind::AtomC:
        out += f.name();
        out += '(';
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
            if (i) out += ',';
            term_key(f.terms()[i], bound, out);
        }
        out += ')';
        return;
    case Kind::Bottom:
    case Kind::Top:
        return;
    case Kind::ForAll:
    case Kind::ExistsI:
    case Kind::ExistsC:
        bound.push_back(f.name());
        out += '[';
        write_key(f.body(), bound, out);
        out += ']';
        bound.pop_back();
        return;
    case Kind::Neg:
    case Kind::Box:
    case Kind::DiaI:
    case Kind::DiaC:
        out += '[';
        write_key(f.body(), bound, out);
        out += ']';
        return;
    default:
        out += '[';
        write_key(f.lhs(), bound, out);
        out += ',';
        write_key(f.rhs(), bound, out);
        out += ']';
        return;
    }
}

Formula finish(Node n) {
    auto p = std::make_shared<Node>(std::move(n));
    Formula f(p);
    std::vector<std::string> bound;
    std::string key;
    write_key(f, bound, key);
    p->key = std::move(key);
    p->hash = std::hash<std::string>{}(p->key);
    return f;
}

}  // namespace

Kind Formula::kind() const { return p_->kind; }
const std::string& Formula::name() const { return p_->name; }
const std::vector<Term>& Formula::terms() const { return p_->terms; }
const Formula& Formula::lhs() const { return p_->a; }
const Formula& Formula::rhs() const { return p_->b; }
const std::string& Formula::key() const { return p_->key; }
std::size_t Formula::hash() const { return p_->hash; }

bool Formula::operator==(const Formula& o) const {
    if (p_ == o.p_) return true;
    if (!p_ || !o.p_) return false;
    return p_->hash == o.p_->hash && p_->key == o.p_->key;
}

bool is_atom(Kind k) { return k == Kind::AtomI || k == Kind::AtomC; }
bool is_binary(Kind k) {
    return k == Kind::And || k == Kind::OrI || k == Kind::OrC || k == Kind::ImpI || k == Kind::ImpC;
}
bool is_quantifier(Kind k) { return k == Kind::ForAll || k == Kind::ExistsI || k == Kind::ExistsC; }
bool is_modal(Kind k) { return k == Kind::Box || k == Kind::DiaI || k == Kind::DiaC; }

Formula atom_i(std::string name, std::vector<Term> terms) {
    return finish(Node{Kind::AtomI, std::move(name), std::move(terms), {}, {}, {}, 0});
}
Formula atom_c(std::string name, std::vector<Term> terms) {
    return finish(Node{Kind::AtomC, std::move(name), std::move(terms), {}, {}, {}, 0});
}
Formula bot() {
    static const Formula f = finish(Node{Kind::Bottom, {}, {}, {}, {}, {}, 0});
    return f;
}
Formula top() {
    static const Formula f = finish(Node{Kind::Top, {}, {}, {}, {}, {}, 0});
    return f;
}
Formula make_binary(Kind k, Formula a, Formula b) {
    if (!is_binary(k)) throw std::logic_error("make_binary: not a binary connective");
    return finish(Node{k, {}, {}, std::move(a), std::move(b), {}, 0});
}
Formula make_unary(Kind k, Formula a) {
    if (k != Kind::Neg && !is_modal(k)) throw std::logic_error("make_unary: not a unary connective");
    return finish(Node{k, {}, {}, std::move(a), {}, {}, 0});
}
Formula make_quant(Kind k, std::string x, Formula a) {
    if (!is_quantifier(k)) throw std::logic_error("make_quant: not a quantifier");
    return finish(Node{k, std::move(x), {}, std::move(a), {}, {}, 0});
}
Formula conj(Formula a, Formula b) { return make_binary(Kind::And, std::move(a), std::move(b)); }
Formula disj_i(Formula a, Formula b) { return make_binary(Kind::OrI, std::move(a), std::move(b)); }
Formula disj_c(Formula a, Formula b) { return make_binary(Kind::OrC, std::move(a), std::move(b)); }
Formula imp_i(Formula a, Formula b) { return make_binary(Kind::ImpI, std::move(a), std::move(b)); }
Formula imp_c(Formula a, Formula b) { return make_binary(Kind::ImpC, std::move(a), std::move(b)); }
Formula neg(Formula a) { return make_unary(Kind::Neg, std::move(a)); }
Formula forall(std::string x, Formula a) { return make_quant(Kind::ForAll, std::move(x), std::move(a)); }
Formula exists_i(std::string x, Formula a) { return make_quant(Kind::ExistsI, std::move(x), std::move(a)); }
Formula exists_c(std::string x, Formula a) { return make_quant(Kind::ExistsC, std::move(x), std::move(a)); }
Formula box(Formula a) { return make_unary(Kind::Box, std::move(a)); }
Formula dia_i(Formula a) { return make_unary(Kind::DiaI, std::move(a)); }
Formula dia_c(Formula a) { return make_unary(Kind::DiaC, std::move(a)); }

Polarity polarity(const Formula& f) {
    switch (f.kind()) {
    case Kind::AtomC:
    case Kind::Bottom:
    case Kind::OrC:
    case Kind::ImpC:
    case Kind::ExistsC:
    case Kind::DiaC:
    case Kind::Neg:
        return Polarity::Negative;
    default:
        return Polarity::Positive;
    }
}
bool is_positive(const Formula& f) { return polarity(f) == Polarity::Positive; }
bool is_negative(const Formula& f) { return polarity(f) == Polarity::Negative; }

bool is_externally_classical(const Formula& f) {
    switch (f.kind()) {
    case Kind::AtomC:
    case Kind::Bottom:
    case Kind::OrC:
    case Kind::ImpC:
    case Kind::ExistsC:
    case Kind::DiaC:
        return true;
    default:
        return false;
    }
}

bool is_eec(const Formula& f) {
    if (is_externally_classical(f)) return true;
    switch (f.kind()) {
    case Kind::And: return is_eec(f.lhs()) && is_eec(f.rhs());
    case Kind::ForAll:
    case Kind::Box: return is_eec(f.body());
    case Kind::ImpI: return is_eec(f.rhs());
    case Kind::Neg: return true;
    default: return false;
    }
}

unsigned ecumenical_weight(const Formula& f) {
    switch (f.kind()) {
    case Kind::AtomI:
    case Kind::Bottom:
    case Kind::Top:
        return 0;
    case Kind::AtomC:
        return 4;
    case Kind::And:
    case Kind::ImpI:
    case Kind::OrI:
        return ecumenical_weight(f.lhs()) + ecumenical_weight(f.rhs()) + 1;
    case Kind::ImpC:
    case Kind::OrC:
        return ecumenical_weight(f.lhs()) + ecumenical_weight(f.rhs()) + 4;
    case Kind::Neg:
    case Kind::ExistsI:
    case Kind::ForAll:
    case Kind::DiaI:
    case Kind::Box:
        return ecumenical_weight(f.body()) + 1;
    case Kind::ExistsC:
    case Kind::DiaC:
        return ecumenical_weight(f.body()) + 4;
    }
    return 0;
}

std::set<std::string> term_vars(const Term& t) {
    std::set<std::string> out;
    if (t.args.empty()) {
        if (t.is_var) out.insert(t.name);
        return out;
    }
    for (const Term& a : t.args) {
        auto s = term_vars(a);
        out.insert(s.begin(), s.end());
    }
    return out;
}

Term substitute_term(const Term& t, const std::string& x, const Term& s) {
    if (t.args.empty()) return (t.is_var && t.name == x) ? s : t;
    Term r = t;
    for (Term& a : r.args) a = substitute_term(a, x, s);
    return r;
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    Kind k = f.kind();
    if (is_atom(k)) {
        for (const Term& t : f.terms())
            for (const auto& v : term_vars(t))
                if (!bound.count(v)) out.insert(v);
        return;
    }
    if (k == Kind::Bottom || k == Kind::Top) return;
    if (is_quantifier(k)) {
        bool fresh = bound.insert(f.name()).second;
        collect_free(f.body(), bound, out);
        if (fresh) bound.erase(f.name());
        return;
    }
    collect_free(f.lhs(), bound, out);
    if (is_binary(k)) collect_free(f.rhs(), bound, out);
}

void collect_term_names(const Term& t, std::set<std::string>& out) {
    out.insert(t.name);
    for (const Term& a : t.args) collect_term_names(a, out);
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
    std::set<std::string> bound, out;
    collect_free(f, bound, out);
    return out;
}

std::set<std::string> all_names(const Formula& f) {
    std::set<std::string> out;
    std::function<void(const Formula&)> go = [&](const Formula& g) {
        Kind k = g.kind();
        if (is_atom(k)) {
            for (const Term& t : g.terms()) collect_term_names(t, out);
            return;
        }
        if (k == Kind::Bottom || k == Kind::Top) return;
        if (is_quantifier(k)) out.insert(g.name());
        go(g.lhs());
        if (is_binary(k)) go(g.rhs());
    };
    go(f);
    return out;
}

std::string fresh_var(const std::set<std::string>& avoid, const std::string& prefix) {
    for (std::size_t i = 0;; ++i) {
        std::string c = prefix + std::to_string(i);
        if (!avoid.count(c)) return c;
    }
}

Formula substitute(const Formula& f, const std::string& x, const Term& t) {
    Kind k = f.kind();
    switch (k) {
    case Kind::AtomI:
    case Kind::AtomC: {
        std::vector<Term> ts;
        ts.reserve(f.terms().size());
        bool changed = false;
        for (const Term& a : f.terms()) {
            ts.push_back(substitute_term(a, x, t));
            changed = changed || !(ts.back() == a) || ts.back().is_var != a.is_var;
        }
        if (!changed) return f;
        return k == Kind::AtomI ? atom_i(f.name(), std::move(ts)) : atom_c(f.name(), std::move(ts));
    }
    case Kind::Bottom:
    case Kind::Top:
        return f;
    case Kind::ForAll:
    case Kind::ExistsI:
    case Kind::ExistsC: {
        const std::string& y = f.name();
        if (y == x) return f;
        auto fv = free_vars(f.body());
        if (!fv.count(x)) return f;
        auto tv = term_vars(t);
        if (tv.count(y)) {
            std::set<std::string> avoid = all_names(f.body());
            avoid.insert(tv.begin(), tv.end());
            avoid.insert(x);
            std::string z = fresh_var(avoid, y);
            Formula renamed = substitute(f.body(), y, Term::var(z));
            return make_quant(k, z, substitute(renamed, x, t));
        }
        return make_quant(k, y, substitute(f.body(), x, t));
    }
    case Kind::Neg:
    case Kind::Box:
    case Kind::DiaI:
    case Kind::DiaC: {
        Formula b = substitute(f.body(), x, t);
        if (b.key() == f.body().key() && free_vars(b) == free_vars(f.body())) return f;
        return make_unary(k, b);
    }
    default:
        return make_binary(k, substitute(f.lhs(), x, t), substitute(f.rhs(), x, t));
    }
}

bool has_quantifier(const Formula& f) {
    Kind k = f.kind();
    if (is_quantifier(k)) return true;
    if (is_atom(k) || k == Kind::Bottom || k == Kind::Top) return false;
    if (is_binary(k)) return has_quantifier(f.lhs()) || has_quantifier(f.rhs());
    return has_quantifier(f.body());
}

bool has_modality(const Formula& f) {
    Kind k = f.kind();
    if (is_modal(k)) return true;
    if (is_atom(k) || k == Kind::Bottom || k == Kind::Top) return false;
    if (is_binary(k)) return has_modality(f.lhs()) || has_modality(f.rhs());
    return has_modality(f.body());
}

std::set<std::string> atom_names(const Formula& f) {
    std::set<std::string> out;
    std::function<void(const Formula&)> go = [&](const Formula& g) {
        Kind k = g.kind();
        if (is_atom(k)) {
            out.insert(g.name());
            return;
        }
        if (k == Kind::Bottom || k == Kind::Top) return;
        go(g.lhs());
        if (is_binary(k)) go(g.rhs());
    };
    go(f);
    return out;
}

std::vector<Term> ground_terms(const Formula& f) {
    std::vector<Term> out;
    std::function<void(const Term&, const std::set<std::string>&)> add_term =
        [&](const Term& t, const std::set<std::string>& bound) {
            bool closed = true;
            for (const auto& v : term_vars(t))
                if (bound.count(v)) closed = false;
            if (closed && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
            for (const Term& a : t.args) add_term(a, bound);
        };
    std::function<void(const Formula&, std::set<std::string>)> go = [&](const Formula& g,
                                                                       std::set<std::string> bound) {
        Kind k = g.kind();
        if (is_atom(k)) {
            for (const Term& t : g.terms()) add_term(t, bound);
            return;
        }
        if (k == Kind::Bottom || k == Kind::Top) return;
        if (is_quantifier(k)) bound.insert(g.name());
        go(g.lhs(), bound);
        if (is_binary(k)) go(g.rhs(), bound);
    };
    go(f, {});
    return out;
}

std::size_t formula_size(const Formula& f) {
    Kind k = f.kind();
    if (is_atom(k) || k == Kind::Bottom || k == Kind::Top) return 1;
    if (is_binary(k)) return 1 + formula_size(f.lhs()) + formula_size(f.rhs());
    return 1 + formula_size(f.body());
}

Formula alpha_normalize(const Formula& f) {
    std::set<std::string> avoid = free_vars(f);
    std::size_t counter = 0;
    std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
        Kind k = g.kind();
        if (is_atom(k) || k == Kind::Bottom || k == Kind::Top) return g;
        if (is_quantifier(k)) {
            std::string v;
            do v = "v" + std::to_string(counter++);
            while (avoid.count(v));
            Formula b = substitute(g.body(), g.name(), Term::var(v));
            return make_quant(k, v, go(b));
        }
        if (is_binary(k)) return make_binary(k, go(g.lhs()), go(g.rhs()));
        return make_unary(k, go(g.body()));
    };
    return go(f);
}

}  // namespace ecumene
