#include "ecumene/lce.hpp"

namespace ecumene {

namespace {

[[noreturn]] void fail(const std::string& why) { throw RuleError(why); }

LESequent seq(std::vector<Formula> g, Formula c) { return LESequent{std::move(g), std::move(c)}; }

std::vector<Formula> minus(std::vector<Formula> g, const Formula& p) {
    remove_all(g, p);
    return g;
}
std::vector<Formula> plus(std::vector<Formula> g, const Formula& a) {
    add_unique(g, a);
    return g;
}

}  // namespace

std::vector<LESequent> le_premises(const RuleInstance& r, const LESequent& s) {
    for (const auto& f : s.gamma)
        if (has_modality(f)) fail("modality in an LE sequent");
    if (has_modality(s.succ)) fail("modality in an LE sequent");
    const std::string& id = r.id;
    auto left = [&](Kind k) -> Formula {
        if (!r.principal) fail(id + " needs a principal formula");
        if (r.principal->kind() != k) fail(id + ": wrong principal connective");
        if (!contains(s.gamma, *r.principal)) fail(id + ": principal formula not in the antecedent");
        return *r.principal;
    };
    auto right = [&](Kind k) -> Formula {
        if (s.succ.kind() != k) fail(id + ": wrong principal connective");
        return s.succ;
    };
    auto need_bot = [&]() {
        if (s.succ.kind() != Kind::Bottom) fail(id + " requires succedent bot");
    };
    auto fresh = [&]() {
        if (r.eigen.empty()) fail(id + " needs an eigenvariable");
        if (free_vars(s).count(r.eigen)) fail(id + ": eigenvariable " + r.eigen + " is not fresh");
    };
    auto witness = [&]() -> const Term& {
        if (!r.witness) fail(id + " needs a witness term");
        return *r.witness;
    };

    if (id == "andL") {
        Formula p = left(Kind::And);
        return {seq(plus(plus(minus(s.gamma, p), p.lhs()), p.rhs()), s.succ)};
    }
    if (id == "oriL") {
        Formula p = left(Kind::OrI);
        return {seq(plus(minus(s.gamma, p), p.lhs()), s.succ), seq(plus(minus(s.gamma, p), p.rhs()), s.succ)};
    }
    if (id == "impiL") {
        Formula p = left(Kind::ImpI);
        return {seq(s.gamma, p.lhs()), seq(plus(minus(s.gamma, p), p.rhs()), s.succ)};
    }
    if (id == "forallL") {
        Formula p = left(Kind::ForAll);
        return {seq(plus(s.gamma, substitute(p.body(), p.name(), witness())), s.succ)};
    }
    if (id == "existsiL") {
        Formula p = left(Kind::ExistsI);
        fresh();
        return {seq(plus(minus(s.gamma, p), substitute(p.body(), p.name(), Term::var(r.eigen))), s.succ)};
    }
    if (id == "negL") {
        Formula p = left(Kind::Neg);
        need_bot();
        return {seq(s.gamma, p.body())};
    }
    if (id == "orcL") {
        Formula p = left(Kind::OrC);
        need_bot();
        return {seq(plus(minus(s.gamma, p), p.lhs()), s.succ), seq(plus(minus(s.gamma, p), p.rhs()), s.succ)};
    }
    if (id == "impcL") {
        Formula p = left(Kind::ImpC);
        need_bot();
        return {seq(s.gamma, p.lhs()), seq(plus(minus(s.gamma, p), p.rhs()), s.succ)};
    }
    if (id == "Lc") {
        Formula p = left(Kind::AtomC);
        need_bot();
        return {seq(plus(minus(s.gamma, p), atom_i(p.name(), p.terms())), s.succ)};
    }
    if (id == "existscL") {
        Formula p = left(Kind::ExistsC);
        need_bot();
        fresh();
        return {seq(plus(minus(s.gamma, p), substitute(p.body(), p.name(), Term::var(r.eigen))), s.succ)};
    }
    if (id == "botL") {
        left(Kind::Bottom);
        return {};
    }
    if (id == "topR") {
        right(Kind::Top);
        return {};
    }
    if (id == "andR") {
        Formula p = right(Kind::And);
        return {seq(s.gamma, p.lhs()), seq(s.gamma, p.rhs())};
    }
    if (id == "oriR") {
        Formula p = right(Kind::OrI);
        if (r.disjunct != 1 && r.disjunct != 2) fail("oriR needs disjunct 1 or 2");
        return {seq(s.gamma, r.disjunct == 1 ? p.lhs() : p.rhs())};
    }
    if (id == "impiR") {
        Formula p = right(Kind::ImpI);
        return {seq(plus(s.gamma, p.lhs()), p.rhs())};
    }
    if (id == "existsiR") {
        Formula p = right(Kind::ExistsI);
        return {seq(s.gamma, substitute(p.body(), p.name(), witness()))};
    }
    if (id == "forallR") {
        Formula p = right(Kind::ForAll);
        fresh();
        return {seq(s.gamma, substitute(p.body(), p.name(), Term::var(r.eigen)))};
    }
    if (id == "negR") {
        Formula p = right(Kind::Neg);
        return {seq(plus(s.gamma, p.body()), bot())};
    }
    if (id == "orcR") {
        Formula p = right(Kind::OrC);
        return {seq(plus(plus(s.gamma, neg(p.lhs())), neg(p.rhs())), bot())};
    }
    if (id == "impcR") {
        Formula p = right(Kind::ImpC);
        return {seq(plus(plus(s.gamma, p.lhs()), neg(p.rhs())), bot())};
    }
    if (id == "Rc") {
        Formula p = right(Kind::AtomC);
        return {seq(plus(s.gamma, neg(atom_i(p.name(), p.terms()))), bot())};
    }
    if (id == "existscR") {
        Formula p = right(Kind::ExistsC);
        return {seq(plus(s.gamma, forall(p.name(), neg(p.body()))), bot())};
    }
    if (id == "init") {
        if (s.succ.kind() != Kind::AtomI) fail("init needs an intuitionistic atom succedent");
        if (!contains(s.gamma, s.succ)) fail("init: succedent atom not in the antecedent");
        return {};
    }
    if (id == "W") {
        if (s.succ.kind() == Kind::Bottom) fail("W: succedent already bot");
        return {seq(s.gamma, bot())};
    }
    if (id == "cut") {
        if (!r.cut) fail("cut needs a cut formula");
        return {seq(s.gamma, *r.cut), seq(plus(s.gamma, *r.cut), s.succ)};
    }
    fail("unknown rule " + id);
}

}  // namespace ecumene
