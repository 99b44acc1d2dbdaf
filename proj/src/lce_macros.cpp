#include <functional>

#include "ecumene/lce.hpp"

namespace ecumene {

namespace {

using Sub = std::function<ProofTree(const StoupSequent&)>;

ProofTree apply(const StoupSequent& s, RuleInstance r, const std::vector<Sub>& subs) {
    std::vector<StoupSequent> ps = lce_premises(r, s);
    if (ps.size() != subs.size()) throw RuleError("internal: expansion arity mismatch for " + r.id);
    ProofTree t{Sequent{s}, std::move(r), {}};
    for (std::size_t i = 0; i < ps.size(); ++i) t.premises.push_back(subs[i](ps[i]));
    return t;
}

RuleInstance rule(std::string id, std::optional<Formula> p = std::nullopt) {
    RuleInstance r;
    r.id = std::move(id);
    r.principal = std::move(p);
    return r;
}

std::string fresh_for(const StoupSequent& s) { return fresh_var(free_vars(s)); }

ProofTree ginit(const StoupSequent& s, const Formula& a);
ProofTree gcinit(const StoupSequent& s, const Formula& a);

Sub gi(Formula a) {
    return [a](const StoupSequent& q) { return ginit(q, a); };
}
Sub gc(Formula a) {
    return [a](const StoupSequent& q) { return gcinit(q, a); };
}

ProofTree ginit(const StoupSequent& s, const Formula& a) {
    switch (a.kind()) {
    case Kind::AtomI: return apply(s, rule("init", a), {});
    case Kind::And: return apply(s, rule("andL", a), {[&](const StoupSequent& q) {
                                     return apply(q, rule("andR", a), {gi(a.lhs()), gi(a.rhs())});
                                 }});
    case Kind::OrI:
        return apply(s, rule("oriL", a),
                     {[&](const StoupSequent& q) {
                          RuleInstance r = rule("oriR", a);
                          r.disjunct = 1;
                          return apply(q, r, {gi(a.lhs())});
                      },
                      [&](const StoupSequent& q) {
                          RuleInstance r = rule("oriR", a);
                          r.disjunct = 2;
                          return apply(q, r, {gi(a.rhs())});
                      }});
    case Kind::ImpI:
        return apply(s, rule("impiR", a), {[&](const StoupSequent& q) {
                         return apply(q, rule("impiL", a), {gi(a.lhs()), gi(a.rhs())});
                     }});
    case Kind::ForAll: {
        RuleInstance r = rule("forallR", a);
        r.eigen = fresh_for(s);
        Formula inst = substitute(a.body(), a.name(), Term::var(r.eigen));
        return apply(s, r, {[&](const StoupSequent& q) {
                         RuleInstance l = rule("forallL", a);
                         l.witness = Term::var(r.eigen);
                         return apply(q, l, {gi(inst)});
                     }});
    }
    case Kind::ExistsI: {
        RuleInstance r = rule("existsiL", a);
        r.eigen = fresh_for(s);
        Formula inst = substitute(a.body(), a.name(), Term::var(r.eigen));
        return apply(s, r, {[&](const StoupSequent& q) {
                         RuleInstance l = rule("existsiR", a);
                         l.witness = Term::var(r.eigen);
                         return apply(q, l, {gi(inst)});
                     }});
    }
    default:
        if (a.kind() == Kind::Bottom) return apply(s, rule("botL", a), {});
        if (a.kind() == Kind::Top) return apply(s, rule("topR", a), {});
        if (is_negative(a)) return apply(s, rule("store"), {gc(a)});
        throw RuleError("no general axiom expansion for " + std::string(a ? "this formula" : "empty"));
    }
}

ProofTree gcinit(const StoupSequent& s, const Formula& a) {
    if (s.stoup) return apply(s, rule("W"), {gc(a)});
    if (is_positive(a)) return apply(s, rule("D", a), {gi(a)});
    switch (a.kind()) {
    case Kind::Bottom: return apply(s, rule("botL", a), {});
    case Kind::AtomC: {
        Formula p = atom_i(a.name(), a.terms());
        return apply(s, rule("Rc", a), {[&](const StoupSequent& q) {
                         return apply(q, rule("Lc", a), {[&](const StoupSequent& u) {
                                          return apply(u, rule("D", p), {gi(p)});
                                      }});
                     }});
    }
    case Kind::Neg:
        return apply(s, rule("negR", a), {[&](const StoupSequent& q) {
                         return apply(q, rule("negL", a), {gi(a.body())});
                     }});
    case Kind::OrC:
        return apply(s, rule("orcR", a), {[&](const StoupSequent& q) {
                         return apply(q, rule("orcL", a), {gc(a.lhs()), gc(a.rhs())});
                     }});
    case Kind::ImpC:
        return apply(s, rule("impcR", a), {[&](const StoupSequent& q) {
                         return apply(q, rule("impcL", a), {gi(a.lhs()), gc(a.rhs())});
                     }});
    case Kind::ExistsC: {
        RuleInstance r = rule("existscL", a);
        r.eigen = fresh_for(s);
        Formula inst = substitute(a.body(), a.name(), Term::var(r.eigen));
        return apply(s, r, {[&](const StoupSequent& q) {
                         RuleInstance l = rule("existscR", a);
                         l.witness = Term::var(r.eigen);
                         return apply(q, l, {gc(inst)});
                     }});
    }
    default: throw RuleError("no general axiom expansion for this formula");
    }
}

}  // namespace

ProofTree expand_ginit(const StoupSequent& s, const Formula& a) { return ginit(s, a); }

ProofTree expand_gcinit(const StoupSequent& s, const Formula& a) { return gcinit(s, a); }

ProofTree expand_macros(const ProofTree& t) {
    if (t.rule.id == "ginit" || t.rule.id == "gcinit") {
        const auto& s = std::get<StoupSequent>(t.conclusion);
        return t.rule.id == "ginit" ? ginit(s, s.stoup->f) : gcinit(s, *t.rule.principal);
    }
    ProofTree out{t.conclusion, t.rule, {}};
    for (const auto& p : t.premises) out.premises.push_back(expand_macros(p));
    return out;
}

}  // namespace ecumene
