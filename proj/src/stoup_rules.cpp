#include "ecumene/lce.hpp"
#include "ecumene/labek.hpp"

namespace ecumene {

namespace {

[[noreturn]] void fail(const std::string& why) { throw RuleError(why); }

struct Ctx {
    const RuleInstance& r;
    const StoupSequent& s;
    bool labeled;

    Labeled principal() const {
        if (!r.principal) fail(r.id + " needs a principal formula");
        return {labeled ? r.label : std::string(), *r.principal};
    }
    Labeled in_gamma(Kind k) const {
        Labeled p = principal();
        if (p.f.kind() != k) fail(r.id + ": wrong principal connective");
        if (!contains(s.gamma, p)) fail(r.id + ": principal formula not in the antecedent");
        return p;
    }
    Labeled in_delta(Kind k) const {
        Labeled p = principal();
        if (p.f.kind() != k) fail(r.id + ": wrong principal connective");
        if (!contains(s.delta, p)) fail(r.id + ": principal formula not in the right context");
        need_empty_stoup();
        return p;
    }
    Labeled in_stoup(Kind k) const {
        if (!s.stoup) fail(r.id + " needs a formula in the stoup");
        if (s.stoup->f.kind() != k) fail(r.id + ": wrong principal connective");
        if (r.principal && (!(*r.principal == s.stoup->f) || (labeled && r.label != s.stoup->label)))
            fail(r.id + ": principal formula is not the stoup formula");
        return *s.stoup;
    }
    void need_empty_stoup() const {
        if (s.stoup) fail(r.id + " requires an empty stoup");
    }
    Labeled lab(const std::string& l, Formula f) const { return {labeled ? l : std::string(), std::move(f)}; }

    void fresh_eigen_var() const {
        if (r.eigen.empty()) fail(r.id + " needs an eigenvariable");
        if (free_vars(s).count(r.eigen)) fail(r.id + ": eigenvariable " + r.eigen + " is not fresh");
    }
    void fresh_label() const {
        if (r.eigen.empty()) fail(r.id + " needs a fresh label");
        if (labels_of(s).count(r.eigen)) fail(r.id + ": label " + r.eigen + " is not fresh");
    }
    void related(const std::string& x) const {
        if (r.target_label.empty()) fail(r.id + " needs an accessible label");
        if (!contains(s.rel, RelAtom{x, r.target_label}))
            fail(r.id + ": R(" + x + "," + r.target_label + ") is not in the sequent");
    }
    const Term& witness() const {
        if (!r.witness) fail(r.id + " needs a witness term");
        return *r.witness;
    }
};

StoupSequent without_gamma(const StoupSequent& s, const Labeled& p) {
    StoupSequent t = s;
    remove_all(t.gamma, p);
    return t;
}
StoupSequent without_delta(const StoupSequent& s, const Labeled& p) {
    StoupSequent t = s;
    remove_all(t.delta, p);
    return t;
}
StoupSequent with_stoup(StoupSequent s, std::optional<Labeled> st) {
    s.stoup = std::move(st);
    return s;
}
StoupSequent add_g(StoupSequent s, const Labeled& l) {
    add_unique(s.gamma, l);
    return s;
}
StoupSequent add_d(StoupSequent s, const Labeled& l) {
    add_unique(s.delta, l);
    return s;
}

void check_language(const StoupSequent& s, bool labeled) {
    auto one = [&](const Labeled& l) {
        if (labeled) {
            if (l.label.empty()) fail("unlabeled formula in labeled sequent");
            if (has_quantifier(l.f)) fail("quantifier in a modal sequent");
        } else {
            if (!l.label.empty()) fail("labeled formula in LCE sequent");
            if (has_modality(l.f)) fail("modality in an LCE sequent");
        }
    };
    for (const auto& l : s.gamma) one(l);
    for (const auto& l : s.delta) one(l);
    if (s.stoup) one(*s.stoup);
    if (!labeled && !s.rel.empty()) fail("relational atom in LCE sequent");
}

}  // namespace

std::vector<StoupSequent> stoup_premises(const RuleInstance& r, const StoupSequent& s, bool labeled) {
    check_language(s, labeled);
    Ctx c{r, s, labeled};
    const std::string& id = r.id;

    // antecedent rules
    if (id == "andL") {
        Labeled p = c.in_gamma(Kind::And);
        StoupSequent t = without_gamma(s, p);
        add_unique(t.gamma, c.lab(p.label, p.f.lhs()));
        add_unique(t.gamma, c.lab(p.label, p.f.rhs()));
        return {t};
    }
    if (id == "oriL") {
        Labeled p = c.in_gamma(Kind::OrI);
        StoupSequent t = without_gamma(s, p);
        return {add_g(t, c.lab(p.label, p.f.lhs())), add_g(t, c.lab(p.label, p.f.rhs()))};
    }
    if (id == "impiL") {
        Labeled p = c.in_gamma(Kind::ImpI);
        return {with_stoup(s, c.lab(p.label, p.f.lhs())), add_g(without_gamma(s, p), c.lab(p.label, p.f.rhs()))};
    }
    if (id == "negL") {
        Labeled p = c.in_gamma(Kind::Neg);
        c.need_empty_stoup();
        return {with_stoup(s, c.lab(p.label, p.f.body()))};
    }
    if (id == "orcL") {
        Labeled p = c.in_gamma(Kind::OrC);
        c.need_empty_stoup();
        StoupSequent t = without_gamma(s, p);
        return {add_g(t, c.lab(p.label, p.f.lhs())), add_g(t, c.lab(p.label, p.f.rhs()))};
    }
    if (id == "impcL") {
        Labeled p = c.in_gamma(Kind::ImpC);
        c.need_empty_stoup();
        return {with_stoup(s, c.lab(p.label, p.f.lhs())), add_g(without_gamma(s, p), c.lab(p.label, p.f.rhs()))};
    }
    if (id == "Lc") {
        Labeled p = c.in_gamma(Kind::AtomC);
        c.need_empty_stoup();
        return {add_g(without_gamma(s, p), c.lab(p.label, atom_i(p.f.name(), p.f.terms())))};
    }
    if (id == "botL") {
        c.in_gamma(Kind::Bottom);
        return {};
    }
    if (id == "topR") {
        c.in_stoup(Kind::Top);
        return {};
    }
    if (!labeled) {
        if (id == "forallL") {
            Labeled p = c.in_gamma(Kind::ForAll);
            return {add_g(s, {"", substitute(p.f.body(), p.f.name(), c.witness())})};
        }
        if (id == "existsiL" || id == "existscL") {
            Labeled p = c.in_gamma(id == "existsiL" ? Kind::ExistsI : Kind::ExistsC);
            if (id == "existscL") c.need_empty_stoup();
            c.fresh_eigen_var();
            return {add_g(without_gamma(s, p), {"", substitute(p.f.body(), p.f.name(), Term::var(r.eigen))})};
        }
    } else {
        if (id == "boxL") {
            Labeled p = c.in_gamma(Kind::Box);
            c.related(p.label);
            return {add_g(s, {r.target_label, p.f.body()})};
        }
        if (id == "idiaL" || id == "cdiaL") {
            Labeled p = c.in_gamma(id == "idiaL" ? Kind::DiaI : Kind::DiaC);
            if (id == "cdiaL") c.need_empty_stoup();
            c.fresh_label();
            StoupSequent t = add_g(without_gamma(s, p), {r.eigen, p.f.body()});
            t.rel.push_back({p.label, r.eigen});
            return {t};
        }
    }

    // stoup rules
    if (id == "andR") {
        Labeled p = c.in_stoup(Kind::And);
        return {with_stoup(s, c.lab(p.label, p.f.lhs())), with_stoup(s, c.lab(p.label, p.f.rhs()))};
    }
    if (id == "oriR") {
        Labeled p = c.in_stoup(Kind::OrI);
        if (r.disjunct != 1 && r.disjunct != 2) fail("oriR needs disjunct 1 or 2");
        return {with_stoup(s, c.lab(p.label, r.disjunct == 1 ? p.f.lhs() : p.f.rhs()))};
    }
    if (id == "impiR") {
        Labeled p = c.in_stoup(Kind::ImpI);
        return {with_stoup(add_g(s, c.lab(p.label, p.f.lhs())), c.lab(p.label, p.f.rhs()))};
    }
    if (!labeled) {
        if (id == "existsiR") {
            Labeled p = c.in_stoup(Kind::ExistsI);
            return {with_stoup(s, Labeled{"", substitute(p.f.body(), p.f.name(), c.witness())})};
        }
        if (id == "forallR") {
            Labeled p = c.in_stoup(Kind::ForAll);
            c.fresh_eigen_var();
            return {with_stoup(s, Labeled{"", substitute(p.f.body(), p.f.name(), Term::var(r.eigen))})};
        }
    } else {
        if (id == "boxR") {
            Labeled p = c.in_stoup(Kind::Box);
            c.fresh_label();
            StoupSequent t = with_stoup(s, Labeled{r.eigen, p.f.body()});
            t.rel.push_back({p.label, r.eigen});
            return {t};
        }
        if (id == "idiaR") {
            Labeled p = c.in_stoup(Kind::DiaI);
            c.related(p.label);
            return {with_stoup(s, Labeled{r.target_label, p.f.body()})};
        }
    }

    // classical right rules
    if (id == "negR") {
        Labeled p = c.in_delta(Kind::Neg);
        return {add_g(without_delta(s, p), c.lab(p.label, p.f.body()))};
    }
    if (id == "orcR") {
        Labeled p = c.in_delta(Kind::OrC);
        return {add_d(add_d(without_delta(s, p), c.lab(p.label, p.f.lhs())), c.lab(p.label, p.f.rhs()))};
    }
    if (id == "impcR") {
        Labeled p = c.in_delta(Kind::ImpC);
        return {add_d(add_g(without_delta(s, p), c.lab(p.label, p.f.lhs())), c.lab(p.label, p.f.rhs()))};
    }
    if (id == "Rc") {
        Labeled p = c.in_delta(Kind::AtomC);
        return {add_d(without_delta(s, p), c.lab(p.label, atom_i(p.f.name(), p.f.terms())))};
    }
    if (!labeled && id == "existscR") {
        Labeled p = c.in_delta(Kind::ExistsC);
        return {add_d(s, {"", substitute(p.f.body(), p.f.name(), c.witness())})};
    }
    if (labeled && id == "cdiaR") {
        Labeled p = c.in_delta(Kind::DiaC);
        c.related(p.label);
        return {add_d(s, {r.target_label, p.f.body()})};
    }

    // axioms
    if (id == "init") {
        if (labeled) fail("labEK uses init_i and init_c");
        if (!s.stoup || s.stoup->f.kind() != Kind::AtomI) fail("init needs an intuitionistic atom in the stoup");
        if (!contains(s.gamma, *s.stoup)) fail("init: stoup atom not in the antecedent");
        return {};
    }
    if (id == "ginit" || id == "init_i") {
        if ((id == "init_i") != labeled) fail(id + " does not belong to this calculus");
        if (!s.stoup) fail(id + " needs a stoup formula");
        if (!contains(s.gamma, *s.stoup)) fail(id + ": stoup formula not in the antecedent");
        return {};
    }
    if (id == "gcinit" || id == "init_c") {
        if ((id == "init_c") != labeled) fail(id + " does not belong to this calculus");
        Labeled p = c.principal();
        if (!contains(s.gamma, p) || !contains(s.delta, p)) fail(id + ": formula must occur on both sides");
        return {};
    }

    // structural
    if (id == "D") {
        Labeled p = c.principal();
        if (!contains(s.delta, p)) fail("D: principal formula not in the right context");
        if (!is_positive(p.f)) fail("D requires a positive formula");
        c.need_empty_stoup();
        return {with_stoup(s, p)};
    }
    if (id == "store") {
        if (!s.stoup) fail("store needs a stoup formula");
        if (!is_negative(s.stoup->f)) fail("store requires a negative formula");
        return {with_stoup(add_d(s, *s.stoup), std::nullopt)};
    }
    if (id == "W") {
        if (!s.stoup) fail("W needs a stoup formula");
        return {with_stoup(s, std::nullopt)};
    }
    if (id == "Pcut") {
        if (!r.cut) fail("Pcut needs a cut formula");
        if (!is_positive(*r.cut)) fail("P-cut requires a positive cut formula");
        Labeled a = c.lab(r.cut_label, *r.cut);
        return {with_stoup(s, a), add_g(s, a)};
    }
    if (id == "Ncut") {
        if (!r.cut) fail("Ncut needs a cut formula");
        if (!is_negative(*r.cut)) fail("N-cut requires a negative cut formula");
        Labeled a = c.lab(r.cut_label, *r.cut);
        std::optional<Labeled> sel;
        if (r.selector) {
            sel = c.lab(r.selector_label, *r.selector);
            if (!is_positive(sel->f)) fail("N-cut selector must be positive");
            if (!contains(s.delta, *sel)) fail("N-cut selector must occur in the right context");
        }
        return {with_stoup(add_d(s, a), sel), add_g(s, a)};
    }
    fail("unknown rule " + id);
}

std::vector<StoupSequent> lce_premises(const RuleInstance& r, const StoupSequent& s) {
    return stoup_premises(r, s, false);
}

std::vector<StoupSequent> labek_premises(const RuleInstance& r, const LabeledSequent& s) {
    return stoup_premises(r, s, true);
}

}  // namespace ecumene
