#include <stdexcept>

#include "ecumene/parser.hpp"
#include "proof_rewrite.hpp"

namespace ecumene {

namespace {

using namespace detail;
using Measure = std::pair<unsigned, std::size_t>;

std::size_t height(const ProofTree& t) {
    std::size_t h = 0;
    for (const auto& p : t.premises) h = std::max(h, height(p));
    return h + 1;
}

bool is_left_rule(const std::string& id) {
    return id == "andL" || id == "oriL" || id == "impiL" || id == "negL" || id == "orcL" || id == "impcL" ||
           id == "Lc" || id == "forallL" || id == "existsiL" || id == "existscL";
}
bool is_stoup_right_rule(const std::string& id) {
    return id == "andR" || id == "oriR" || id == "impiR" || id == "existsiR" || id == "forallR" || id == "topR";
}
bool is_delta_rule(const std::string& id) {
    return id == "negR" || id == "orcR" || id == "impcR" || id == "Rc" || id == "existscR";
}
bool principal_on(const ProofTree& t, const Formula& f) { return t.rule.principal && *t.rule.principal == f; }

StoupSequent with_stoup(StoupSequent s, std::optional<Formula> f) {
    s.stoup.reset();
    if (f) s.stoup = lab(*f);
    return s;
}
StoupSequent plus_gamma(StoupSequent s, const Formula& f) {
    add_unique(s.gamma, lab(f));
    return s;
}
StoupSequent plus_delta(StoupSequent s, const Formula& f) {
    add_unique(s.delta, lab(f));
    return s;
}
StoupSequent minus_delta(StoupSequent s, const Formula& f) {
    remove_all(s.delta, lab(f));
    return s;
}

bool subset(const std::vector<Labeled>& a, const std::vector<Labeled>& b) {
    for (const auto& x : a)
        if (!contains(b, x)) return false;
    return true;
}

RuleInstance rule(std::string id, std::optional<Formula> p = std::nullopt) {
    RuleInstance r;
    r.id = std::move(id);
    r.principal = std::move(p);
    return r;
}

class Eliminator {
public:
    explicit Eliminator(const ProofTree& t) : names_(t) {}

    CutElimResult result;

    ProofTree run(const ProofTree& t) {
        std::vector<ProofTree> subs;
        for (const auto& p : t.premises) subs.push_back(run(p));
        const StoupSequent& c = stoup_of(t);
        const RuleInstance& r = t.rule;
        if (r.id == "Pcut") return pcut(c, *r.cut, subs[0], subs[1], std::nullopt);
        if (r.id == "Ncut") {
            if (!r.selector) return ncut(c, *r.cut, subs[0], subs[1], std::nullopt);
            const Formula& p = *r.selector;
            if (!c.stoup) {
                StoupSequent cp = with_stoup(c, p);
                return lce_node(c, rule("D", p), {ncut_stoup(cp, *r.cut, subs[0], subs[1], std::nullopt)});
            }
            StoupSequent c1 = with_stoup(plus_delta(c, *r.cut), std::nullopt);
            ProofTree d = lce_node(c1, rule("D", p), {subs[0]});
            return ncut(c, *r.cut, d, subs[1], std::nullopt);
        }
        return {t.conclusion, r, std::move(subs)};
    }

private:
    Names names_;

    Measure open(const Formula& f, const ProofTree& a, const ProofTree& b, const std::optional<Measure>& parent) {
        Measure m{ecumenical_weight(f), height(a) + height(b)};
        if (parent) result.trace.push_back({*parent, m});
        ++result.reductions;
        return m;
    }

    // Matches p to the exact sequent a reduction needs.
    ProofTree fit(const ProofTree& p, const StoupSequent& target) {
        const StoupSequent& s = stoup_of(p);
        if (sequent_equal(Sequent{s}, Sequent{target})) return p;
        bool same_stoup = s.stoup.has_value() == target.stoup.has_value() && (!s.stoup || *s.stoup == *target.stoup);
        if (!same_stoup || !subset(s.gamma, target.gamma) || !subset(s.delta, target.delta))
            throw std::logic_error("internal: cannot fit " + render(s) + " into " + render(target));
        return weaken(p, target, names_);
    }

    // Reshapes p (whose conclusion shares the context of the conclusion of the
    // rule r) into the context of premise i of r.
    ProofTree adapt(const ProofTree& p, const StoupSequent& target, const RuleInstance& r, std::size_t i) {
        const StoupSequent& s = stoup_of(p);
        std::vector<Formula> gone_g, gone_d;
        for (const auto& l : s.gamma)
            if (!contains(target.gamma, l)) gone_g.push_back(l.f);
        for (const auto& l : s.delta)
            if (!contains(target.delta, l)) gone_d.push_back(l.f);
        if (gone_g.empty() && gone_d.empty()) return fit(p, target);
        if (gone_g.size() + gone_d.size() != 1 || !r.principal)
            throw std::logic_error("internal: no inversion takes " + render(s) + " to " + render(target));
        Inversion inv;
        inv.rule = r.id;
        inv.right = gone_g.empty();
        inv.f = inv.right ? gone_d[0] : gone_g[0];
        if (!(inv.f == *r.principal)) throw std::logic_error("internal: inversion on a non-principal formula");
        inv.premise = i;
        inv.eigen = r.eigen;
        return invert(p, inv, target, names_);
    }

    // Rule r of proof t, renamed if its eigenvariable clashes with c.
    RuleInstance fresh_rule(const ProofTree& t, const StoupSequent& c, std::vector<ProofTree>& subs) {
        RuleInstance r = t.rule;
        subs = t.premises;
        if (!r.eigen.empty() && free_vars(c).count(r.eigen)) {
            std::string z = names_.fresh();
            for (auto& p : subs) p = rename_var(p, r.eigen, z);
            r.eigen = z;
        }
        return r;
    }

    ProofTree axiom_copy(const StoupSequent& c, const RuleInstance& r) { return lce_node(c, r, {}); }

    // Γ ⊢ Δ ; Π from Γ ⊢ Δ ; F and Γ, F ⊢ Δ ; Π
    ProofTree cut_any(const StoupSequent& c, const Formula& f, const ProofTree& l, const ProofTree& r,
                      const Measure& parent) {
        if (is_positive(f)) return pcut(c, f, l, r, parent);
        return ncut(c, f, unstore(l, names_), r, parent);
    }

    // Γ ⊢ Δ ; · from Γ ⊢ Δ, F ; · and Γ, F ⊢ Δ ; ·
    ProofTree dcut(const StoupSequent& c, const Formula& f, const ProofTree& l, const ProofTree& r,
                   const Measure& parent) {
        if (is_negative(f)) return ncut(c, f, l, r, parent);
        if (contains(c.gamma, lab(f))) return fit(r, c);
        if (contains(c.delta, lab(f))) return fit(l, c);
        Formula nf = neg(f);
        if (contains(c.delta, lab(nf))) {
            Inversion inv;
            inv.rule = "negR";
            inv.f = nf;
            inv.right = true;
            StoupSequent t = plus_gamma(minus_delta(c, nf), f);
            return lce_node(c, rule("negR", nf), {invert(r, inv, t, names_)});
        }
        StoupSequent cr = plus_delta(c, nf);
        ProofTree left = lce_node(cr, rule("negR", nf), {fit(r, plus_gamma(c, f))});
        ProofTree right = fit(dneg(l, f, names_), plus_gamma(c, nf));
        return ncut(c, nf, left, right, parent);
    }

    // Γ ⊢ Δ ; Π from Γ ⊢ Δ ; P and Γ, P ⊢ Δ ; Π
    ProofTree pcut(const StoupSequent& c, const Formula& pf, ProofTree p1, ProofTree p2,
                   const std::optional<Measure>& parent) {
        p1 = fit(p1, with_stoup(c, pf));
        p2 = fit(p2, plus_gamma(c, pf));
        if (contains(c.gamma, lab(pf))) return p2;
        Measure m = open(pf, p1, p2, parent);
        const std::string& id1 = p1.rule.id;

        if (!is_stoup_right_rule(id1)) {  // stoup rules always act on the stoup
            if (id1 == "botL") return axiom_copy(c, p1.rule);
            if (id1 == "W") {
                const ProofTree& sub = p1.premises[0];
                if (!c.stoup) return fit(sub, c);
                return lce_node(c, rule("W"), {fit(sub, with_stoup(c, std::nullopt))});
            }
            if (!is_left_rule(id1)) throw std::logic_error("internal: unexpected " + id1 + " above a P-cut");
            std::vector<ProofTree> subs;
            RuleInstance r = fresh_rule(p1, c, subs);
            auto ps = lce_premises(r, with_stoup(c, pf));
            auto cs = lce_premises(r, c);
            std::vector<ProofTree> out;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                ProofTree sub = fit(subs[i], ps[i]);
                if (r.id == "impiL" && i == 0) {
                    out.push_back(sub);
                    continue;
                }
                out.push_back(pcut(cs[i], pf, sub, adapt(p2, plus_gamma(cs[i], pf), r, i), m));
            }
            return lce_node(c, r, std::move(out));
        }

        if (!(is_left_rule(p2.rule.id) && principal_on(p2, pf))) {
            if (p2.rule.id == "init" || p2.rule.id == "botL" || p2.rule.id == "topR") return axiom_copy(c, p2.rule);
            std::vector<ProofTree> subs;
            RuleInstance r = fresh_rule(p2, plus_gamma(c, pf), subs);
            auto cs = lce_premises(r, c);
            std::vector<ProofTree> out;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                ProofTree left = adapt(p1, with_stoup(cs[i], pf), r, i);
                out.push_back(pcut(cs[i], pf, left, subs[i], m));
            }
            return lce_node(c, r, std::move(out));
        }

        switch (pf.kind()) {
        case Kind::And: {
            const Formula &a = pf.lhs(), &b = pf.rhs();
            ProofTree inner =
                cut_any(plus_gamma(c, a), b, fit(p1.premises[1], with_stoup(plus_gamma(c, a), b)), p2.premises[0], m);
            return cut_any(c, a, p1.premises[0], inner, m);
        }
        case Kind::OrI: {
            int j = p1.rule.disjunct;
            const Formula& a = j == 1 ? pf.lhs() : pf.rhs();
            return cut_any(c, a, p1.premises[0], p2.premises[j - 1], m);
        }
        case Kind::ImpI: {
            const Formula &a = pf.lhs(), &b = pf.rhs();
            ProofTree x = pcut(with_stoup(c, a), pf, p1, p2.premises[0], m);
            ProofTree y = cut_any(with_stoup(c, b), a, x, p1.premises[0], m);
            return cut_any(c, b, y, p2.premises[1], m);
        }
        case Kind::ExistsI: {
            const Term& t = *p1.rule.witness;
            Formula at = substitute(pf.body(), pf.name(), t);
            ProofTree rho = subst_var(p2.premises[0], p2.rule.eigen, t, names_);
            return cut_any(c, at, p1.premises[0], rho, m);
        }
        case Kind::ForAll: {
            const Term& t = *p2.rule.witness;
            Formula at = substitute(pf.body(), pf.name(), t);
            StoupSequent ca = plus_gamma(c, at);
            ProofTree x = pcut(ca, pf, fit(p1, with_stoup(ca, pf)), p2.premises[0], m);
            ProofTree sigma = subst_var(p1.premises[0], p1.rule.eigen, t, names_);
            return cut_any(c, at, sigma, x, m);
        }
        default: throw std::logic_error("internal: no principal P-cut reduction for this formula");
        }
    }

    // Γ ⊢ Δ ; Π from Γ ⊢ Δ, N ; · and Γ, N ⊢ Δ ; Π
    ProofTree ncut(const StoupSequent& c, const Formula& nf, ProofTree p1, ProofTree p2,
                   const std::optional<Measure>& parent) {
        p1 = fit(p1, with_stoup(plus_delta(c, nf), std::nullopt));
        p2 = fit(p2, plus_gamma(c, nf));
        if (contains(c.gamma, lab(nf))) return p2;
        if (!c.stoup && contains(c.delta, lab(nf))) return p1;
        Measure m = open(nf, p1, p2, parent);

        if (p2.rule.id == "botL") {
            if (contains(c.gamma, lab(bot()))) return axiom_copy(c, p2.rule);
            Inversion inv;
            inv.f = bot();
            inv.right = true;
            StoupSequent e = with_stoup(c, std::nullopt);
            ProofTree out = invert(p1, inv, e, names_);
            return c.stoup ? lce_node(c, rule("W"), {out}) : out;
        }

        if (!(is_left_rule(p2.rule.id) && principal_on(p2, nf))) {
            if (p2.rule.id == "init" || p2.rule.id == "topR") return axiom_copy(c, p2.rule);
            std::vector<ProofTree> subs;
            RuleInstance r = fresh_rule(p2, plus_gamma(c, nf), subs);
            auto cs = lce_premises(r, c);
            std::vector<ProofTree> out;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                StoupSequent target = with_stoup(plus_delta(cs[i], nf), std::nullopt);
                out.push_back(ncut(cs[i], nf, adapt(p1, target, r, i), subs[i], m));
            }
            return lce_node(c, r, std::move(out));
        }

        // p2 is a left rule on N, so the stoup is empty from here on
        if (!(is_delta_rule(p1.rule.id) && principal_on(p1, nf))) {
            if (p1.rule.id == "botL") return axiom_copy(c, p1.rule);
            std::vector<ProofTree> subs;
            RuleInstance r = fresh_rule(p1, plus_delta(c, nf), subs);
            auto cs = lce_premises(r, c);
            std::vector<ProofTree> out;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                ProofTree right = adapt(p2, plus_gamma(with_stoup(cs[i], std::nullopt), nf), r, i);
                if (cs[i].stoup) out.push_back(ncut_stoup(cs[i], nf, subs[i], right, m));
                else out.push_back(ncut(cs[i], nf, subs[i], right, m));
            }
            return lce_node(c, r, std::move(out));
        }

        switch (nf.kind()) {
        case Kind::Neg: {
            const Formula& a = nf.body();
            ProofTree x = ncut(with_stoup(c, a), nf, p1, p2.premises[0], m);
            return cut_any(c, a, x, p1.premises[0], m);
        }
        case Kind::OrC: {
            const Formula &a = nf.lhs(), &b = nf.rhs();
            StoupSequent ca = plus_delta(c, a);
            ProofTree y = dcut(ca, b, p1.premises[0], fit(p2.premises[1], plus_gamma(ca, b)), m);
            return dcut(c, a, y, p2.premises[0], m);
        }
        case Kind::ImpC: {
            const Formula &a = nf.lhs(), &b = nf.rhs();
            ProofTree x = ncut(with_stoup(c, a), nf, p1, p2.premises[0], m);
            StoupSequent cb = plus_delta(c, b);
            ProofTree y = cut_any(cb, a, fit(x, with_stoup(cb, a)), p1.premises[0], m);
            return dcut(c, b, y, p2.premises[1], m);
        }
        case Kind::AtomC: return dcut(c, atom_i(nf.name(), nf.terms()), p1.premises[0], p2.premises[0], m);
        case Kind::ExistsC: {
            const Term& t = *p1.rule.witness;
            Formula at = substitute(nf.body(), nf.name(), t);
            StoupSequent ca = plus_delta(c, at);
            ProofTree y = ncut(ca, nf, p1.premises[0], fit(p2, plus_gamma(ca, nf)), m);
            ProofTree rho = subst_var(p2.premises[0], p2.rule.eigen, t, names_);
            return dcut(c, at, y, rho, m);
        }
        default: throw std::logic_error("internal: no principal N-cut reduction for this formula");
        }
    }

    // Γ ⊢ Δ ; Q from Γ ⊢ Δ, N ; Q and Γ, N ⊢ Δ ; ·  (dereliction absorbed)
    ProofTree ncut_stoup(const StoupSequent& c, const Formula& nf, ProofTree p1, ProofTree p2,
                         const std::optional<Measure>& parent) {
        StoupSequent bare = with_stoup(c, std::nullopt);
        p1 = fit(p1, plus_delta(c, nf));
        p2 = fit(p2, plus_gamma(bare, nf));
        if (contains(c.gamma, lab(nf))) return lce_node(c, rule("W"), {p2});
        if (contains(c.delta, lab(nf))) return p1;
        Measure m = open(nf, p1, p2, parent);
        const std::string& id = p1.rule.id;
        if (id == "init" || id == "botL" || id == "topR") return axiom_copy(c, p1.rule);
        if (id == "W") return lce_node(c, rule("W"), {ncut(bare, nf, p1.premises[0], p2, m)});
        if (id == "store") {
            StoupSequent cq = plus_delta(bare, c.stoup->f);
            return lce_node(c, rule("store"), {ncut(cq, nf, p1.premises[0], fit(p2, plus_gamma(cq, nf)), m)});
        }
        std::vector<ProofTree> subs;
        RuleInstance r = fresh_rule(p1, plus_delta(c, nf), subs);
        auto cs = lce_premises(r, c);
        std::vector<ProofTree> out;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            ProofTree right = adapt(p2, plus_gamma(with_stoup(cs[i], std::nullopt), nf), r, i);
            out.push_back(ncut_stoup(cs[i], nf, subs[i], right, m));
        }
        return lce_node(c, r, std::move(out));
    }
};

bool cut_free(const ProofTree& t) {
    if (t.rule.id == "Pcut" || t.rule.id == "Ncut") return false;
    for (const auto& p : t.premises)
        if (!cut_free(p)) return false;
    return true;
}

}  // namespace

CutElimResult eliminate_cuts_traced(const ProofTree& t) {
    if (!std::holds_alternative<StoupSequent>(t.conclusion)) throw std::invalid_argument("cut elimination needs an LCE proof");
    if (cut_free(t)) return {t, {}, 0};
    ProofTree e = expand_macros(t);
    Eliminator el(e);
    el.result.proof = el.run(e);
    return std::move(el.result);
}

ProofTree eliminate_cuts(const ProofTree& t) { return eliminate_cuts_traced(t).proof; }

}  // namespace ecumene
