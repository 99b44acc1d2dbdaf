#include <algorithm>

#include "ecumene/labek.hpp"
#include "ecumene/lce.hpp"
#include "coverage.hpp"
#include "search_engine.hpp"

namespace ecumene {

namespace {

using detail::Expansion;

RuleInstance ri(std::string id) {
    RuleInstance r;
    r.id = std::move(id);
    return r;
}
RuleInstance on(std::string id, const Labeled& p) {
    RuleInstance r = ri(std::move(id));
    r.principal = p.f;
    r.label = p.label;
    return r;
}

std::vector<Term> known_terms(const StoupSequent& s, int max_terms) {
    std::vector<Term> out;
    auto add = [&](const Formula& f) {
        for (auto& t : ground_terms(f))
            if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    };
    for (const auto& l : s.gamma) add(l.f);
    for (const auto& l : s.delta) add(l.f);
    if (s.stoup) add(s.stoup->f);
    if (out.empty() && max_terms > 0) out.push_back(Term::var(fresh_var(free_vars(s), "c")));
    return out;
}

std::string fresh_label(const StoupSequent& s) {
    std::set<std::string> used = labels_of(s);
    for (int i = 0;; ++i) {
        std::string l = "w" + std::to_string(i);
        if (!used.count(l)) return l;
    }
}

std::vector<std::string> successors(const StoupSequent& s, const std::string& x) {
    std::vector<std::string> out;
    for (const auto& r : s.rel)
        if (r.x == x) out.push_back(r.y);
    return out;
}

struct StoupStrategy {
    bool labeled;
    std::size_t label_limit;
    int max_terms;

    bool may_add_label(const StoupSequent& s) const { return labels_of(s).size() < label_limit; }

    Expansion operator()(const StoupSequent& s) const {
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
        bool empty = !s.stoup;

        // axioms
        for (const auto& l : s.gamma)
            if (l.f.kind() == Kind::Bottom) {
                ex.axiom = on("botL", l);
                return ex;
            }
        if (s.stoup && s.stoup->f.kind() == Kind::Top) {
            ex.axiom = on("topR", *s.stoup);
            return ex;
        }
        if (s.stoup && contains(s.gamma, *s.stoup)) {
            if (labeled) ex.axiom = on("init_i", *s.stoup);
            else if (s.stoup->f.kind() == Kind::AtomI) ex.axiom = on("init", *s.stoup);
            else ex.axiom = on("ginit", *s.stoup);
            return ex;
        }
        for (const auto& l : s.delta)
            if (contains(s.gamma, l)) {
                ex.axiom = on(labeled ? "init_c" : "gcinit", l);
                return ex;
            }

        // stoup decomposition
        if (s.stoup) {
            const Labeled& p = *s.stoup;
            Kind k = p.f.kind();
            if (is_negative(p.f)) return one(ri("store"));
            if (k == Kind::And) return one(on("andR", p));
            if (k == Kind::ImpI) return one(on("impiR", p));
            if (k == Kind::ForAll) return one(eigen(on("forallR", p)));
            if (k == Kind::Box) {
                if (!may_add_label(s)) {
                    ex.blocked = true;
                } else {
                    RuleInstance r = on("boxR", p);
                    r.eigen = fresh_label(s);
                    return one(r);
                }
            }
        }

        // invertible left rules
        for (const auto& l : s.gamma) {
            Kind k = l.f.kind();
            if (k == Kind::And) return one(on("andL", l));
            if (k == Kind::OrI) return one(on("oriL", l));
            if (k == Kind::ExistsI) return one(eigen(on("existsiL", l)));
            if (k == Kind::DiaI || (empty && k == Kind::DiaC)) {
                if (!may_add_label(s)) {
                    ex.blocked = true;
                    continue;
                }
                RuleInstance r = on(k == Kind::DiaI ? "idiaL" : "cdiaL", l);
                r.eigen = fresh_label(s);
                return one(r);
            }
            if (!empty) continue;
            if (k == Kind::OrC) return one(on("orcL", l));
            if (k == Kind::AtomC) return one(on("Lc", l));
            if (k == Kind::ExistsC) return one(eigen(on("existscL", l)));
        }
        if (empty) {
            for (const auto& l : s.delta) {
                Kind k = l.f.kind();
                if (k == Kind::Neg) return one(on("negR", l));
                if (k == Kind::OrC) return one(on("orcR", l));
                if (k == Kind::ImpC) return one(on("impcR", l));
                if (k == Kind::AtomC) return one(on("Rc", l));
            }
        }

        // copy rules that add something new
        auto has_l = [&](const std::string& x) {
            return detail::Has([&s, x](const Formula& f) { return contains(s.gamma, Labeled{x, f}); });
        };
        auto has_r = [&](const std::string& x) {
            return detail::Has([&s, x](const Formula& f) { return contains(s.delta, Labeled{x, f}); });
        };
        auto new_left = [&](const std::string& x, const Formula& f) {
            return !detail::covered_left(f, has_l(x), has_r(x));
        };
        auto new_right = [&](const std::string& x, const Formula& f) {
            return !detail::covered_right(f, has_l(x), has_r(x));
        };
        std::vector<Term> terms;
        if (!labeled) terms = known_terms(s, max_terms);
        for (const auto& l : s.gamma) {
            if (l.f.kind() == Kind::ForAll) {
                for (const auto& t : terms)
                    if (new_left("", substitute(l.f.body(), l.f.name(), t))) {
                        RuleInstance r = on("forallL", l);
                        r.witness = t;
                        return one(r);
                    }
            } else if (l.f.kind() == Kind::Box) {
                for (const auto& y : successors(s, l.label))
                    if (new_left(y, l.f.body())) {
                        RuleInstance r = on("boxL", l);
                        r.target_label = y;
                        return one(r);
                    }
            }
        }
        if (empty) {
            for (const auto& l : s.delta) {
                if (l.f.kind() == Kind::ExistsC) {
                    for (const auto& t : terms)
                        if (new_right("", substitute(l.f.body(), l.f.name(), t))) {
                            RuleInstance r = on("existscR", l);
                            r.witness = t;
                            return one(r);
                        }
                } else if (l.f.kind() == Kind::DiaC) {
                    for (const auto& y : successors(s, l.label))
                        if (new_right(y, l.f.body())) {
                            RuleInstance r = on("cdiaR", l);
                            r.target_label = y;
                            return one(r);
                        }
                }
            }
        }

        // choices
        if (s.stoup) {
            const Labeled& p = *s.stoup;
            switch (p.f.kind()) {
            case Kind::OrI:
                for (int j : {1, 2}) {
                    RuleInstance r = on("oriR", p);
                    r.disjunct = j;
                    ex.moves.push_back(r);
                }
                break;
            case Kind::ExistsI:
                for (const auto& t : terms) {
                    RuleInstance r = on("existsiR", p);
                    r.witness = t;
                    ex.moves.push_back(r);
                }
                break;
            case Kind::DiaI:
                for (const auto& y : successors(s, p.label)) {
                    RuleInstance r = on("idiaR", p);
                    r.target_label = y;
                    ex.moves.push_back(r);
                }
                break;
            default: break;
            }
            for (const auto& l : s.gamma)
                if (l.f.kind() == Kind::ImpI) ex.moves.push_back(on("impiL", l));
            ex.moves.push_back(ri("W"));
        } else {
            for (const auto& l : s.delta)
                if (is_positive(l.f)) ex.moves.push_back(on("D", l));
            for (const auto& l : s.gamma)
                if (l.f.kind() == Kind::Neg) ex.moves.push_back(on("negL", l));
            for (const auto& l : s.gamma)
                if (l.f.kind() == Kind::ImpC) ex.moves.push_back(on("impcL", l));
            for (const auto& l : s.gamma)
                if (l.f.kind() == Kind::ImpI) ex.moves.push_back(on("impiL", l));
        }
        return ex;
    }
};

bool propositional(const StoupSequent& s) {
    for (const auto& l : s.gamma)
        if (has_quantifier(l.f)) return false;
    for (const auto& l : s.delta)
        if (has_quantifier(l.f)) return false;
    return !(s.stoup && has_quantifier(s.stoup->f));
}

SearchResult stoup_prove(const StoupSequent& s, const SearchBudget& b, bool labeled) {
    StoupStrategy strat{labeled, labels_of(s).size() + static_cast<std::size_t>(std::max(0, b.max_labels)), b.max_terms};
    detail::Engine<StoupSequent> eng(
        strat, [labeled](const RuleInstance& r, const StoupSequent& q) { return stoup_premises(r, q, labeled); },
        [](const StoupSequent& q) { return canonical_key(q); }, b);
    return eng.run(s, propositional(s));
}

}  // namespace

SearchResult lce_prove(const StoupSequent& s, const SearchBudget& b) { return stoup_prove(s, b, false); }

SearchResult labek_prove(const LabeledSequent& s, const SearchBudget& b) { return stoup_prove(s, b, true); }

}  // namespace ecumene
