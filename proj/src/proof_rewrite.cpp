#include "proof_rewrite.hpp"

#include <functional>
#include <stdexcept>

#include "ecumene/parser.hpp"

namespace ecumene::detail {

namespace {

using FMap = std::function<Formula(const Formula&)>;
using TMap = std::function<Term(const Term&)>;

Sequent map_sequent(const Sequent& s, const FMap& f) {
    if (const auto* le = std::get_if<LESequent>(&s)) {
        LESequent out;
        for (const auto& g : le->gamma) add_unique(out.gamma, f(g));
        out.succ = f(le->succ);
        return out;
    }
    const auto& st = std::get<StoupSequent>(s);
    StoupSequent out;
    out.rel = st.rel;
    for (const auto& g : st.gamma) add_unique(out.gamma, Labeled{g.label, f(g.f)});
    for (const auto& d : st.delta) add_unique(out.delta, Labeled{d.label, f(d.f)});
    if (st.stoup) out.stoup = Labeled{st.stoup->label, f(st.stoup->f)};
    return out;
}

RuleInstance map_rule(RuleInstance r, const FMap& f, const TMap& t) {
    if (r.principal) r.principal = f(*r.principal);
    if (r.witness) r.witness = t(*r.witness);
    if (r.cut) r.cut = f(*r.cut);
    if (r.selector) r.selector = f(*r.selector);
    return r;
}

void names_of(const Sequent& s, std::set<std::string>& out) {
    auto add = [&](const Formula& f) {
        auto n = all_names(f);
        out.insert(n.begin(), n.end());
    };
    if (const auto* le = std::get_if<LESequent>(&s)) {
        for (const auto& g : le->gamma) add(g);
        add(le->succ);
        return;
    }
    const auto& st = std::get<StoupSequent>(s);
    for (const auto& g : st.gamma) add(g.f);
    for (const auto& d : st.delta) add(d.f);
    if (st.stoup) add(st.stoup->f);
}

void names_of(const ProofTree& t, std::set<std::string>& out) {
    names_of(t.conclusion, out);
    if (!t.rule.eigen.empty()) out.insert(t.rule.eigen);
    if (t.rule.witness) {
        auto v = term_vars(*t.rule.witness);
        out.insert(v.begin(), v.end());
    }
    for (const auto& f : {t.rule.principal, t.rule.cut, t.rule.selector})
        if (f) {
            auto n = all_names(*f);
            out.insert(n.begin(), n.end());
        }
    for (const auto& p : t.premises) names_of(p, out);
}

std::string describe(const Sequent& s) {
    if (const auto* le = std::get_if<LESequent>(&s)) return render(*le);
    return render(std::get<StoupSequent>(s));
}

bool removes_principal(const std::string& id, std::size_t premise) {
    if (id == "impiL" || id == "impcL") return premise == 1;
    return id == "andL" || id == "oriL" || id == "orcL" || id == "Lc" || id == "existsiL" || id == "existscL" ||
           id == "negR" || id == "orcR" || id == "impcR" || id == "Rc";
}
bool right_rule(const std::string& id) { return id == "negR" || id == "orcR" || id == "impcR" || id == "Rc"; }

// Rebuilds t over a larger target. Every formula a rule consumed on the way
// up leaves a pending inversion: while that formula is absent from the target,
// later uses of it in t are skipped in favour of the premise chosen before.
// While the negated formula is absent from the right context, dereliction on
// it becomes ¬L.
struct Rebuilder {
    Names& names;
    std::optional<Formula> dn;

    static bool pending(const Inversion& inv, const StoupSequent& s) {
        return !contains(inv.right ? s.delta : s.gamma, lab(inv.f));
    }

    ProofTree operator()(const ProofTree& t, const StoupSequent& s, std::vector<Inversion> invs) {
        RuleInstance r = t.rule;
        if (r.principal)
            for (const auto& inv : invs)
                if (r.id == inv.rule && *r.principal == inv.f && pending(inv, s)) {
                    ProofTree sub = t.premises.at(inv.premise);
                    if (!inv.eigen.empty() && r.eigen != inv.eigen) {
                        if (!free_vars(stoup_of(sub)).count(inv.eigen) && occurs(sub, inv.eigen))
                            sub = rename_var(sub, inv.eigen, names.fresh());
                        sub = rename_var(sub, r.eigen, inv.eigen);
                    }
                    return (*this)(sub, s, std::move(invs));
                }
        if (dn && r.id == "D" && r.principal && *r.principal == *dn && !contains(s.delta, lab(*dn))) {
            RuleInstance nl;
            nl.id = "negL";
            nl.principal = neg(*dn);
            auto ps = lce_premises(nl, s);
            return {s, nl, {(*this)(t.premises.at(0), ps.at(0), std::move(invs))}};
        }
        std::vector<ProofTree> subs = t.premises;
        if (!r.eigen.empty() && free_vars(s).count(r.eigen)) {
            std::string z = names.fresh();
            for (auto& p : subs) p = rename_var(p, r.eigen, z);
            r.eigen = z;
        }
        std::vector<StoupSequent> ps;
        try {
            ps = lce_premises(r, s);
        } catch (const RuleError& e) {
            throw std::logic_error(std::string("proof transformation broke ") + r.id + " at " + render(s) + ": " +
                                   e.what());
        }
        if (ps.size() != subs.size()) throw std::logic_error("proof transformation changed the arity of " + r.id);
        ProofTree out{s, r, {}};
        for (std::size_t i = 0; i < ps.size(); ++i) {
            std::vector<Inversion> next = invs;
            if (r.principal && removes_principal(r.id, i)) {
                Inversion inv;
                inv.rule = r.id;
                inv.f = *r.principal;
                inv.right = right_rule(r.id);
                inv.premise = i;
                inv.eigen = r.eigen;
                std::erase_if(next, [&](const Inversion& o) { return o.f == inv.f && o.right == inv.right; });
                next.push_back(inv);
            }
            out.premises.push_back((*this)(subs[i], ps[i], std::move(next)));
        }
        return out;
    }
};

}  // namespace

void Names::note(const ProofTree& t) { names_of(t, used_); }

std::string Names::fresh() {
    for (;;) {
        std::string v = "v" + std::to_string(next_++);
        if (used_.insert(v).second) return v;
    }
}

bool occurs(const ProofTree& t, const std::string& v) {
    std::set<std::string> n;
    names_of(t, n);
    return n.count(v) > 0;
}

ProofTree rename_var(const ProofTree& t, const std::string& a, const std::string& b) {
    Term tb = Term::var(b);
    FMap f = [&](const Formula& g) { return substitute(g, a, tb); };
    TMap tm = [&](const Term& u) { return substitute_term(u, a, tb); };
    std::function<ProofTree(const ProofTree&)> go = [&](const ProofTree& n) {
        ProofTree out{map_sequent(n.conclusion, f), map_rule(n.rule, f, tm), {}};
        if (out.rule.eigen == a) out.rule.eigen = b;
        for (const auto& p : n.premises) out.premises.push_back(go(p));
        return out;
    };
    return go(t);
}

ProofTree subst_var(const ProofTree& t, const std::string& y, const Term& u, Names& names) {
    std::set<std::string> uv = term_vars(u);
    FMap f = [&](const Formula& g) { return substitute(g, y, u); };
    TMap tm = [&](const Term& s) { return substitute_term(s, y, u); };
    std::function<ProofTree(const ProofTree&)> go = [&](const ProofTree& n) {
        // y rebound below this node: nothing free to replace
        if (n.rule.eigen == y) return n;
        ProofTree out{map_sequent(n.conclusion, f), map_rule(n.rule, f, tm), {}};
        std::vector<ProofTree> subs = n.premises;
        if (!out.rule.eigen.empty() && uv.count(out.rule.eigen)) {
            std::string z = names.fresh();
            for (auto& p : subs) p = rename_var(p, out.rule.eigen, z);
            out.rule.eigen = z;
        }
        for (const auto& p : subs) out.premises.push_back(go(p));
        return out;
    };
    return go(t);
}

const StoupSequent& stoup_of(const ProofTree& t) { return std::get<StoupSequent>(t.conclusion); }
const LESequent& le_of(const ProofTree& t) { return std::get<LESequent>(t.conclusion); }

ProofTree lce_node(const StoupSequent& s, RuleInstance r, std::vector<ProofTree> subs) {
    auto ps = lce_premises(r, s);
    if (ps.size() != subs.size()) throw std::logic_error("internal: arity mismatch building " + r.id);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (!sequent_equal(Sequent{ps[i]}, subs[i].conclusion))
            throw std::logic_error("internal: " + r.id + " expects " + render(ps[i]) + " but got " +
                                   describe(subs[i].conclusion));
    return {s, std::move(r), std::move(subs)};
}

ProofTree le_node(const LESequent& s, RuleInstance r, std::vector<ProofTree> subs) {
    auto ps = le_premises(r, s);
    if (ps.size() != subs.size()) throw std::logic_error("internal: arity mismatch building " + r.id);
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (!sequent_equal(Sequent{ps[i]}, subs[i].conclusion))
            throw std::logic_error("internal: " + r.id + " expects " + render(ps[i]) + " but got " +
                                   describe(subs[i].conclusion));
    return {s, std::move(r), std::move(subs)};
}

ProofTree weaken(const ProofTree& t, const StoupSequent& target, Names& names) {
    Rebuilder rb{names, std::nullopt};
    return rb(t, target, {});
}

ProofTree invert(const ProofTree& t, const Inversion& inv, const StoupSequent& target, Names& names) {
    Rebuilder rb{names, std::nullopt};
    return rb(t, target, {inv});
}

ProofTree dneg(const ProofTree& t, const Formula& q, Names& names) {
    StoupSequent s = stoup_of(t);
    remove_all(s.delta, lab(q));
    add_unique(s.gamma, lab(neg(q)));
    Rebuilder rb{names, q};
    return rb(t, s, {});
}

ProofTree unstore(const ProofTree& t, Names& names) {
    const StoupSequent& c = stoup_of(t);
    if (!c.stoup) return t;
    StoupSequent s = c;
    s.stoup.reset();
    add_unique(s.delta, *c.stoup);
    const RuleInstance& r = t.rule;
    if (r.id == "store") return weaken(t.premises.at(0), s, names);
    if (r.id == "W") return weaken(t.premises.at(0), s, names);
    if (r.id == "botL") return lce_node(s, r, {});
    if (r.id == "andL" || r.id == "oriL" || r.id == "existsiL" || r.id == "forallL" || r.id == "impiL") {
        RuleInstance ri = r;
        std::vector<ProofTree> subs = t.premises;
        if (!ri.eigen.empty() && free_vars(s).count(ri.eigen)) {
            std::string z = names.fresh();
            for (auto& p : subs) p = rename_var(p, ri.eigen, z);
            ri.eigen = z;
        }
        auto ps = lce_premises(ri, s);
        std::vector<ProofTree> out;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            bool carries = !(r.id == "impiL" && i == 0);
            out.push_back(carries ? unstore(subs[i], names) : weaken(subs[i], ps[i], names));
            if (carries && !sequent_equal(Sequent{ps[i]}, out.back().conclusion))
                out.back() = weaken(out.back(), ps[i], names);
        }
        return lce_node(s, ri, std::move(out));
    }
    throw std::logic_error("internal: cannot move the stoup formula out of a proof ending in " + r.id);
}

ProofTree le_weaken(const ProofTree& t, const LESequent& target, Names& names) {
    RuleInstance r = t.rule;
    std::vector<ProofTree> subs = t.premises;
    if (!r.eigen.empty() && free_vars(target).count(r.eigen)) {
        std::string z = names.fresh();
        for (auto& p : subs) p = rename_var(p, r.eigen, z);
        r.eigen = z;
    }
    auto ps = le_premises(r, target);
    if (ps.size() != subs.size()) throw std::logic_error("internal: weakening changed the arity of " + r.id);
    ProofTree out{target, r, {}};
    for (std::size_t i = 0; i < ps.size(); ++i) out.premises.push_back(le_weaken(subs[i], ps[i], names));
    return out;
}

Labeled lab(const Formula& f) { return Labeled{"", f}; }

std::vector<Formula> plain(const std::vector<Labeled>& v) {
    std::vector<Formula> out;
    for (const auto& l : v) out.push_back(l.f);
    return out;
}

}  // namespace ecumene::detail
