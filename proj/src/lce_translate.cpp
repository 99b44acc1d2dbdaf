#include <stdexcept>

#include "ecumene/parser.hpp"
#include "proof_rewrite.hpp"

namespace ecumene {

namespace {

using namespace detail;

RuleInstance rule(std::string id, std::optional<Formula> p = std::nullopt) {
    RuleInstance r;
    r.id = std::move(id);
    r.principal = std::move(p);
    return r;
}

std::string classical_right(const Formula& f) {
    switch (f.kind()) {
    case Kind::Neg: return "negR";
    case Kind::OrC: return "orcR";
    case Kind::ImpC: return "impcR";
    case Kind::AtomC: return "Rc";
    case Kind::ExistsC: return "existscR";
    default: throw std::logic_error("internal: no classical right rule for " + render(f));
    }
}

bool is_left_rule(const std::string& id) {
    return id == "andL" || id == "oriL" || id == "impiL" || id == "negL" || id == "orcL" || id == "impcL" ||
           id == "Lc" || id == "forallL" || id == "existsiL" || id == "existscL" || id == "botL" || id == "init";
}
bool is_positive_right(const std::string& id) {
    return id == "andR" || id == "oriR" || id == "impiR" || id == "existsiR" || id == "forallR" || id == "topR";
}

class LEBuilder {
public:
    explicit LEBuilder(Names& n) : names_(n) {}

    ProofTree fit(const ProofTree& p, const LESequent& target) {
        const LESequent& s = le_of(p);
        if (sequent_equal(Sequent{s}, Sequent{target})) return p;
        bool sub = s.succ == target.succ;
        for (const auto& f : s.gamma) sub = sub && contains(target.gamma, f);
        if (!sub) throw std::logic_error("internal: cannot fit " + render(s) + " into " + render(target));
        return le_weaken(p, target, names_);
    }

    // X ⊢ F for F ∈ X
    ProofTree id(const LESequent& s) {
        const Formula& f = s.succ;
        auto first = [&](const RuleInstance& r, const LESequent& q) { return le_premises(r, q).at(0); };
        switch (f.kind()) {
        case Kind::AtomI: return le_node(s, rule("init"), {});
        case Kind::Bottom: return le_node(s, rule("botL", f), {});
        case Kind::Top: return le_node(s, rule("topR", f), {});
        case Kind::And: {
            RuleInstance l = rule("andL", f), r = rule("andR");
            LESequent q = first(l, s);
            auto ps = le_premises(r, q);
            return le_node(s, l, {le_node(q, r, {id(ps[0]), id(ps[1])})});
        }
        case Kind::OrI: {
            RuleInstance l = rule("oriL", f);
            auto qs = le_premises(l, s);
            std::vector<ProofTree> out;
            for (int j : {1, 2}) {
                RuleInstance r = rule("oriR");
                r.disjunct = j;
                out.push_back(le_node(qs[j - 1], r, {id(first(r, qs[j - 1]))}));
            }
            return le_node(s, l, std::move(out));
        }
        case Kind::ImpI: {
            RuleInstance r = rule("impiR"), l = rule("impiL", f);
            LESequent q = first(r, s);
            auto ps = le_premises(l, q);
            return le_node(s, r, {le_node(q, l, {id(ps[0]), id(ps[1])})});
        }
        case Kind::ForAll: {
            RuleInstance r = rule("forallR"), l = rule("forallL", f);
            r.eigen = fresh(s);
            l.witness = Term::var(r.eigen);
            LESequent q = first(r, s);
            return le_node(s, r, {le_node(q, l, {id(first(l, q))})});
        }
        case Kind::ExistsI: {
            RuleInstance l = rule("existsiL", f), r = rule("existsiR");
            l.eigen = fresh(s);
            r.witness = Term::var(l.eigen);
            LESequent q = first(l, s);
            return le_node(s, l, {le_node(q, r, {id(first(r, q))})});
        }
        default:
            if (is_negative(f)) {
                RuleInstance r = rule(classical_right(f));
                return le_node(s, r, {classical_body(first(r, s), f)});
            }
            throw std::invalid_argument("no identity derivation for " + render(f));
        }
    }

    // Y, ¬¬N ⊢ N for negative N
    ProofTree dn(const LESequent& s) {
        const Formula& n = s.succ;
        RuleInstance l = rule("negL", neg(neg(n))), nr = rule("negR");
        if (n.kind() == Kind::Bottom) {
            LESequent q = le_premises(l, s)[0];
            LESequent u = le_premises(nr, q)[0];
            return le_node(s, l, {le_node(q, nr, {le_node(u, rule("botL", bot()), {})})});
        }
        RuleInstance r = rule(classical_right(n));
        LESequent q = le_premises(r, s)[0];
        LESequent u = le_premises(l, q)[0];
        LESequent v = le_premises(nr, u)[0];
        return le_node(s, r, {le_node(q, l, {le_node(u, nr, {classical_body(v, n)})})});
    }

    // X, ¬B ⊢ ⊥ with B ∈ X
    ProofTree refute(const LESequent& s, const Formula& b) {
        RuleInstance l = rule("negL", neg(b));
        return le_node(s, l, {id(le_premises(l, s)[0])});
    }

private:
    Names& names_;

    std::string fresh(const LESequent& s) {
        std::string v = names_.fresh();
        while (free_vars(s).count(v)) v = names_.fresh();
        return v;
    }

    // the premise of the right rule of negative f, closed with f on the left
    ProofTree classical_body(const LESequent& s, const Formula& f) {
        switch (f.kind()) {
        case Kind::Neg: {
            RuleInstance l = rule("negL", f);
            return le_node(s, l, {id(le_premises(l, s)[0])});
        }
        case Kind::OrC: {
            RuleInstance l = rule("orcL", f);
            auto qs = le_premises(l, s);
            return le_node(s, l, {refute(qs[0], f.lhs()), refute(qs[1], f.rhs())});
        }
        case Kind::ImpC: {
            RuleInstance l = rule("impcL", f);
            auto qs = le_premises(l, s);
            return le_node(s, l, {id(qs[0]), refute(qs[1], f.rhs())});
        }
        case Kind::AtomC: {
            RuleInstance l = rule("Lc", f);
            LESequent q = le_premises(l, s)[0];
            return le_node(s, l, {refute(q, atom_i(f.name(), f.terms()))});
        }
        case Kind::ExistsC: {
            RuleInstance l = rule("existscL", f);
            l.eigen = fresh(s);
            Term y = Term::var(l.eigen);
            LESequent q = le_premises(l, s)[0];
            RuleInstance a = rule("forallL", forall(f.name(), neg(f.body())));
            a.witness = y;
            LESequent u = le_premises(a, q)[0];
            return le_node(s, l, {le_node(q, a, {refute(u, substitute(f.body(), f.name(), y))})});
        }
        default: throw std::logic_error("internal: classical_body on a positive formula");
        }
    }
};

// ---- LCE → LE ----

class ToLE {
public:
    explicit ToLE(Names& n) : names_(n), b_(n) {}

    ProofTree tr(const ProofTree& n) {
        const StoupSequent& s = stoup_of(n);
        LESequent t = lce_to_le_sequent(s);
        const RuleInstance& r = n.rule;
        const std::string& id = r.id;
        auto sub = [&](std::size_t i, const LESequent& target) { return b_.fit(tr(n.premises.at(i)), target); };

        if (is_left_rule(id) || is_positive_right(id)) {
            auto ps = le_premises(r, t);
            std::vector<ProofTree> out;
            for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(sub(i, ps[i]));
            return le_node(t, r, std::move(out));
        }
        if (id == "negR" || id == "orcR" || id == "impcR" || id == "Rc" || id == "existscR") {
            const Formula& nf = *r.principal;
            RuleInstance nl = rule("negL", neg(nf));
            LESequent q = le_premises(nl, t)[0];
            RuleInstance rr = rule(id);
            LESequent w = le_premises(rr, q)[0];
            ProofTree body;
            if (id == "existscR") {
                RuleInstance a = rule("forallL", forall(nf.name(), neg(nf.body())));
                a.witness = r.witness;
                LESequent w2 = le_premises(a, w)[0];
                body = le_node(w, a, {sub(0, w2)});
            } else {
                body = sub(0, w);
            }
            return le_node(t, nl, {le_node(q, rr, {body})});
        }
        if (id == "D") {
            RuleInstance nl = rule("negL", neg(*r.principal));
            return le_node(t, nl, {sub(0, le_premises(nl, t)[0])});
        }
        if (id == "store") {
            const Formula& nf = s.stoup->f;
            RuleInstance c = rule("cut");
            c.cut = neg(neg(nf));
            auto ps = le_premises(c, t);
            RuleInstance nr = rule("negR");
            ProofTree left = le_node(ps[0], nr, {sub(0, le_premises(nr, ps[0])[0])});
            return le_node(t, c, {left, b_.dn(ps[1])});
        }
        if (id == "W") {
            if (t.succ.kind() == Kind::Bottom) return sub(0, t);
            RuleInstance w = rule("W");
            return le_node(t, w, {sub(0, le_premises(w, t)[0])});
        }
        if (id == "Pcut") {
            RuleInstance c = rule("cut");
            c.cut = r.cut;
            auto ps = le_premises(c, t);
            return le_node(t, c, {sub(0, ps[0]), sub(1, ps[1])});
        }
        if (id == "Ncut") {
            const Formula& nf = *r.cut;
            RuleInstance c = rule("cut");
            c.cut = neg(neg(nf));
            auto ps = le_premises(c, t);
            RuleInstance nr = rule("negR");
            LESequent a = le_premises(nr, ps[0])[0];
            ProofTree refuted;
            if (!r.selector) {
                refuted = sub(0, a);
            } else {
                RuleInstance pc = rule("cut");
                pc.cut = r.selector;
                auto qs = le_premises(pc, a);
                refuted = le_node(a, pc, {sub(0, qs[0]), b_.refute(qs[1], *r.selector)});
            }
            ProofTree left = le_node(ps[0], nr, {refuted});
            RuleInstance nc = rule("cut");
            nc.cut = nf;
            auto us = le_premises(nc, ps[1]);
            ProofTree right = le_node(ps[1], nc, {b_.dn(us[0]), sub(1, us[1])});
            return le_node(t, c, {left, right});
        }
        throw std::invalid_argument("rule " + id + " has no LE translation");
    }

private:
    Names& names_;
    LEBuilder b_;
};

// ---- LE → LCE ----

StoupSequent inner(const LESequent& s) {
    StoupSequent out;
    for (const auto& f : s.gamma) add_unique(out.gamma, lab(f));
    if (s.succ.kind() == Kind::Bottom) return out;
    if (is_positive(s.succ)) out.stoup = lab(s.succ);
    else out.delta.push_back(lab(s.succ));
    return out;
}

class ToLCE {
public:
    explicit ToLCE(Names& n) : names_(n) {}

    // Γ ⊢ · ; C, or Γ ⊢ · ; · for C = ⊥
    ProofTree stoup_form(const ProofTree& n) {
        const LESequent& s = le_of(n);
        ProofTree p = tr(n);
        if (s.succ.kind() == Kind::Bottom || is_positive(s.succ)) return p;
        StoupSequent c;
        for (const auto& f : s.gamma) add_unique(c.gamma, lab(f));
        c.stoup = lab(s.succ);
        return lce_node(c, rule("store"), {p});
    }

private:
    Names& names_;

    ProofTree fit(const ProofTree& p, const StoupSequent& target) {
        if (sequent_equal(p.conclusion, Sequent{target})) return p;
        return weaken(p, target, names_);
    }

    // Γ ⊢ Δ ; · from a proof of Γ, ¬X ⊢ Δ \ X ; ·, for X ∈ Δ
    ProofTree unneg(const ProofTree& p, const Formula& x, const StoupSequent& target) {
        RuleInstance c = rule("Ncut");
        c.cut = neg(x);
        auto ps = lce_premises(c, target);
        RuleInstance nr = rule("negR", neg(x));
        StoupSequent q = lce_premises(nr, ps[0])[0];
        ProofTree left = lce_node(ps[0], nr, {expand_gcinit(q, x)});
        return lce_node(target, c, {left, fit(p, ps[1])});
    }

    ProofTree tr(const ProofTree& n) {
        const LESequent& s = le_of(n);
        StoupSequent t = inner(s);
        RuleInstance r = n.rule;
        const std::string& id = r.id;
        auto ind = [&](std::size_t i, const StoupSequent& target) { return fit(tr(n.premises.at(i)), target); };
        auto stf = [&](std::size_t i, const StoupSequent& target) {
            if (target.stoup && target.stoup->f.kind() == Kind::Bottom) {
                StoupSequent e = target;
                e.stoup.reset();
                return lce_node(target, rule("W"), {fit(stoup_form(n.premises.at(i)), e)});
            }
            return fit(stoup_form(n.premises.at(i)), target);
        };

        if (is_left_rule(id)) {
            if (id == "init") r.principal = s.succ;
            auto ps = lce_premises(r, t);
            std::vector<ProofTree> out;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                bool side = id == "negL" || ((id == "impiL" || id == "impcL") && i == 0);
                out.push_back(side ? stf(i, ps[i]) : ind(i, ps[i]));
            }
            return lce_node(t, r, std::move(out));
        }
        if (is_positive_right(id)) {
            auto ps = lce_premises(r, t);
            std::vector<ProofTree> out;
            for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(stf(i, ps[i]));
            return lce_node(t, r, std::move(out));
        }
        if (id == "negR") {
            r.principal = s.succ;
            return lce_node(t, r, {ind(0, lce_premises(r, t)[0])});
        }
        if (id == "orcR" || id == "impcR" || id == "Rc") {
            r.principal = s.succ;
            StoupSequent q = lce_premises(r, t)[0];
            ProofTree p = tr(n.premises.at(0));
            if (id == "orcR") {
                const Formula &a = s.succ.lhs(), &b = s.succ.rhs();
                if (a == b) {
                    p = unneg(fit(p, with_neg(q, a)), a, q);
                } else {
                    StoupSequent mid = with_neg(q, b);
                    p = unneg(fit(p, with_neg(mid, a)), a, mid);
                    p = unneg(fit(p, mid), b, q);
                }
            } else {
                const Formula& x = id == "Rc" ? atom_i(s.succ.name(), s.succ.terms()) : s.succ.rhs();
                p = unneg(fit(p, with_neg(q, x)), x, q);
            }
            return lce_node(t, r, {fit(p, q)});
        }
        if (id == "existscR") {
            const Formula& e = s.succ;
            Formula all = forall(e.name(), neg(e.body()));
            RuleInstance c = rule("Pcut");
            c.cut = all;
            auto ps = lce_premises(c, t);
            RuleInstance fr = rule("forallR", all);
            fr.eigen = names_.fresh();
            while (free_vars(ps[0]).count(fr.eigen)) fr.eigen = names_.fresh();
            Term y = Term::var(fr.eigen);
            Formula ay = substitute(e.body(), e.name(), y);
            StoupSequent a = lce_premises(fr, ps[0])[0];
            StoupSequent b = lce_premises(rule("store"), a)[0];
            RuleInstance nr = rule("negR", neg(ay));
            StoupSequent d = lce_premises(nr, b)[0];
            RuleInstance er = rule("existscR", e);
            er.witness = y;
            StoupSequent g = lce_premises(er, d)[0];
            ProofTree left = lce_node(
                ps[0], fr,
                {lce_node(a, rule("store"), {lce_node(b, nr, {lce_node(d, er, {expand_gcinit(g, ay)})})})});
            return lce_node(t, c, {left, ind(0, ps[1])});
        }
        if (id == "W") {
            if (t.stoup) return lce_node(t, rule("W"), {ind(0, lce_premises(rule("W"), t)[0])});
            return ind(0, t);
        }
        if (id == "cut") {
            const Formula& a = *r.cut;
            if (a.kind() == Kind::Bottom) {
                StoupSequent e = t;
                e.stoup.reset();
                ProofTree p = ind(0, e);
                return t.stoup ? lce_node(t, rule("W"), {p}) : p;
            }
            RuleInstance c = rule(is_positive(a) ? "Pcut" : "Ncut");
            c.cut = a;
            auto ps = lce_premises(c, t);
            ProofTree left = is_positive(a) ? stf(0, ps[0]) : ind(0, ps[0]);
            return lce_node(t, c, {left, ind(1, ps[1])});
        }
        throw std::invalid_argument("rule " + id + " has no LCE translation");
    }

    static StoupSequent with_neg(StoupSequent s, const Formula& x) {
        remove_all(s.delta, lab(x));
        add_unique(s.gamma, lab(neg(x)));
        return s;
    }
};

}  // namespace

LESequent lce_to_le_sequent(const StoupSequent& s) {
    if (!s.rel.empty()) throw std::invalid_argument("relational atoms have no LE counterpart");
    LESequent out;
    for (const auto& l : s.gamma) add_unique(out.gamma, l.f);
    for (const auto& l : s.delta) add_unique(out.gamma, neg(l.f));
    out.succ = s.stoup ? s.stoup->f : bot();
    return out;
}

ProofTree lce_to_le_proof(const ProofTree& t) {
    if (!std::holds_alternative<StoupSequent>(t.conclusion)) throw std::invalid_argument("expected an LCE proof");
    ProofTree e = expand_macros(t);
    Names names(e);
    ToLE tl(names);
    return tl.tr(e);
}

ProofTree le_to_lce_proof(const ProofTree& t) {
    if (!std::holds_alternative<LESequent>(t.conclusion)) throw std::invalid_argument("expected an LE proof");
    Names names(t);
    ToLCE tl(names);
    return tl.stoup_form(t);
}

}  // namespace ecumene
