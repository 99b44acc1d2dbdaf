#include <algorithm>

#include "ecumene/lce.hpp"
#include "coverage.hpp"
#include "search_engine.hpp"

namespace ecumene {

namespace {

using detail::Expansion;

RuleInstance on(std::string id, std::optional<Formula> p = std::nullopt) {
    RuleInstance r;
    r.id = std::move(id);
    r.principal = std::move(p);
    return r;
}

std::vector<Term> known_terms(const LESequent& s, int max_terms) {
    std::vector<Term> out;
    auto add = [&](const Formula& f) {
        for (auto& t : ground_terms(f))
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    };
    for (const auto& f : s.gamma) add(f);
    add(s.succ);
    if (out.empty() && max_terms > 0) out.push_back(Term::var(fresh_var(free_vars(s), "c")));
    return out;
}

// Invertible rules are applied eagerly: right rules of the neutral and
// classical connectives, the left rules of ∧, ∨i, ∃i, and the classical left
// rules once the succedent is ⊥.
Expansion le_expand(const LESequent& s, int max_terms) {
    Expansion ex;
    auto one = [&](RuleInstance r) {
        ex.moves = {std::move(r)};
        ex.deterministic = true;
        return ex;
    };
    auto eigen = [&](RuleInstance r) {
        r.eigen = fresh_var(free_vars(s));
        return r;
    };
    bool bot_succ = s.succ.kind() == Kind::Bottom;
    if (contains(s.gamma, bot())) {
        ex.axiom = on("botL", bot());
        return ex;
    }
    if (s.succ.kind() == Kind::Top) {
        ex.axiom = on("topR", s.succ);
        return ex;
    }
    if (s.succ.kind() == Kind::AtomI && contains(s.gamma, s.succ)) {
        ex.axiom = on("init");
        return ex;
    }
    switch (s.succ.kind()) {
    case Kind::And: return one(on("andR"));
    case Kind::ImpI: return one(on("impiR"));
    case Kind::ForAll: return one(eigen(on("forallR")));
    case Kind::Neg: return one(on("negR"));
    case Kind::OrC: return one(on("orcR"));
    case Kind::ImpC: return one(on("impcR"));
    case Kind::AtomC: return one(on("Rc"));
    case Kind::ExistsC: return one(on("existscR"));
    default: break;
    }
    for (const auto& f : s.gamma) {
        Kind k = f.kind();
        if (k == Kind::And) return one(on("andL", f));
        if (k == Kind::OrI) return one(on("oriL", f));
        if (k == Kind::ExistsI) return one(eigen(on("existsiL", f)));
        if (!bot_succ) continue;
        if (k == Kind::OrC) return one(on("orcL", f));
        if (k == Kind::AtomC) return one(on("Lc", f));
        if (k == Kind::ExistsC) return one(eigen(on("existscL", f)));
    }
    std::vector<Term> terms = known_terms(s, max_terms);
    for (const auto& f : s.gamma)
        if (f.kind() == Kind::ForAll)
            for (const auto& t : terms)
                if (!detail::covered_left(
                        substitute(f.body(), f.name(), t),
                        [&](const Formula& g) { return contains(s.gamma, g); }, [](const Formula&) { return false; })) {
                    RuleInstance r = on("forallL", f);
                    r.witness = t;
                    return one(r);
                }

    if (s.succ.kind() == Kind::OrI) {
        for (int j : {1, 2}) {
            RuleInstance r = on("oriR");
            r.disjunct = j;
            ex.moves.push_back(r);
        }
    } else if (s.succ.kind() == Kind::ExistsI) {
        for (const auto& t : terms) {
            RuleInstance r = on("existsiR");
            r.witness = t;
            ex.moves.push_back(r);
        }
    }
    if (bot_succ) {
        for (const auto& f : s.gamma)
            if (f.kind() == Kind::Neg) ex.moves.push_back(on("negL", f));
        for (const auto& f : s.gamma)
            if (f.kind() == Kind::ImpC) ex.moves.push_back(on("impcL", f));
    }
    for (const auto& f : s.gamma)
        if (f.kind() == Kind::ImpI) ex.moves.push_back(on("impiL", f));
    if (!bot_succ) ex.moves.push_back(on("W"));
    return ex;
}

}  // namespace

SearchResult le_prove(const LESequent& s, const SearchBudget& b) {
    bool prop = !has_quantifier(s.succ);
    for (const auto& f : s.gamma) prop = prop && !has_quantifier(f);
    detail::Engine<LESequent> eng(
        [&b](const LESequent& q) { return le_expand(q, b.max_terms); }, le_premises,
        [](const LESequent& q) { return canonical_key(q); }, b);
    return eng.run(s, prop);
}

}  // namespace ecumene
