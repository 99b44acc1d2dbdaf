#include <functional>

#include "ecumene/nek.hpp"
#include "coverage.hpp"
#include "search_engine.hpp"

namespace ecumene {

namespace {

using detail::Expansion;

struct Site {
    NodePath path;
    const NestedNode* node;
};

void collect(const NestedNode& n, NodePath& p, std::vector<Site>& out) {
    out.push_back({p, &n});
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
        p.push_back(static_cast<int>(i));
        collect(n.kids[i], p, out);
        p.pop_back();
    }
}

std::size_t node_count(const NestedNode& n) {
    std::size_t c = 1;
    for (const auto& k : n.kids) c += node_count(k);
    return c;
}

RuleInstance at(std::string id, const NodePath& p, std::optional<Formula> f = std::nullopt) {
    RuleInstance r;
    r.id = std::move(id);
    r.path = p;
    r.principal = std::move(f);
    return r;
}

NodePath child(const NodePath& p, std::size_t i) {
    NodePath c = p;
    c.push_back(static_cast<int>(i));
    return c;
}

bool new_left(const NestedNode& n, const Formula& f) {
    return !detail::covered_left(
        f, [&](const Formula& g) { return contains(n.left, g); }, [&](const Formula& g) { return contains(n.right, g); });
}
bool new_right(const NestedNode& n, const Formula& f) {
    return !detail::covered_right(
        f, [&](const Formula& g) { return contains(n.left, g); }, [&](const Formula& g) { return contains(n.right, g); });
}

struct NestedStrategy {
    Extensions ext;
    Fragment frag;
    std::size_t node_limit;

    Expansion operator()(const NestedSequent& s) const {
        Expansion ex;
        std::vector<Site> sites;
        NodePath tmp;
        collect(s, tmp, sites);
        NodePath op = *output_path(s);
        const NestedNode& on = *node_at(s, op);
        Formula out = *on.out;
        bool bot_out = out.kind() == Kind::Bottom;
        bool full = frag == Fragment::Full;
        bool cls = frag == Fragment::Classical;
        bool room = node_count(s) < node_limit;

        auto one = [&](RuleInstance r) {
            ex.moves = {std::move(r)};
            ex.deterministic = true;
            return ex;
        };
        auto targeted = [](RuleInstance r, NodePath t) {
            r.target = std::move(t);
            return r;
        };

        // axioms
        for (const auto& st : sites)
            for (const auto& f : st.node->left)
                if (f.kind() == Kind::Bottom) {
                    ex.axiom = at("botL", st.path, f);
                    return ex;
                }
        if (out.kind() == Kind::Top) {
            ex.axiom = at("topR", op, out);
            return ex;
        }
        if (frag == Fragment::Intuitionistic) {
            if (out.kind() == Kind::AtomI && contains(on.left, out)) {
                ex.axiom = at("init", op, out);
                return ex;
            }
        } else if (cls) {
            for (const auto& st : sites)
                for (const auto& f : st.node->left)
                    if (f.kind() == Kind::AtomC && contains(st.node->right, f)) {
                        ex.axiom = at("init", st.path, f);
                        return ex;
                    }
        } else {
            if (contains(on.left, out)) {
                ex.axiom = at("ginit", op, out);
                return ex;
            }
            if (bot_out)
                for (const auto& st : sites)
                    for (const auto& f : st.node->left)
                        if (contains(st.node->right, f)) {
                            ex.axiom = at("gcinit", st.path, f);
                            return ex;
                        }
        }

        // output decomposition; store only where the fragment has it
        switch (out.kind()) {
        case Kind::And: return one(at("andR", op, out));
        case Kind::ImpI: return one(at("impiR", op, out));
        case Kind::Box:
            if (room) return one(at("boxR", op, out));
            ex.blocked = true;
            break;
        default:
            if (!bot_out && is_negative(out) && frag != Fragment::Intuitionistic) return one(at("store", op));
            break;
        }

        for (const auto& st : sites)
            for (const auto& f : st.node->left) {
                Kind k = f.kind();
                if (k == Kind::And) return one(at("andL", st.path, f));
                if (k == Kind::OrI) return one(at("oriL", st.path, f));
                if (k == Kind::DiaI || (bot_out && k == Kind::DiaC)) {
                    if (room) return one(at(k == Kind::DiaI ? "idiaL" : "cdiaL", st.path, f));
                    ex.blocked = true;
                }
            }
        // box propagation
        for (const auto& st : sites)
            for (const auto& f : st.node->left) {
                if (f.kind() != Kind::Box) continue;
                for (std::size_t i = 0; i < st.node->kids.size(); ++i)
                    if (new_left(st.node->kids[i], f.body()))
                        return one(targeted(at("boxL", st.path, f), child(st.path, i)));
            }

        if (bot_out) {
            for (const auto& st : sites)
                for (const auto& f : st.node->right) {
                    Kind k = f.kind();
                    if (k == Kind::Neg && full) return one(at("negR", st.path, f));
                    if (k == Kind::OrC) return one(at("orcR", st.path, f));
                    if (k == Kind::ImpC) return one(at("impcR", st.path, f));
                    if (k == Kind::AtomC && full) return one(at("Rc", st.path, f));
                }
            for (const auto& st : sites)
                for (const auto& f : st.node->left) {
                    if (f.kind() == Kind::OrC) return one(at("orcL", st.path, f));
                    if (f.kind() == Kind::AtomC && full) return one(at("Lc", st.path, f));
                }
            for (const auto& st : sites)
                for (const auto& f : st.node->right) {
                    if (f.kind() != Kind::DiaC) continue;
                    for (std::size_t i = 0; i < st.node->kids.size(); ++i)
                        if (new_right(st.node->kids[i], f.body()))
                            return one(targeted(at("cdiaR", st.path, f), child(st.path, i)));
                }
        }

        // extension copy rules for boxed inputs
        if (full && ext.any()) {
            for (const auto& st : sites) {
                const NestedNode* parent = st.path.empty() ? nullptr : node_at(s, NodePath(st.path.begin(), st.path.end() - 1));
                for (const auto& f : st.node->left) {
                    if (f.kind() != Kind::Box) continue;
                    if (ext.t && new_left(*st.node, f.body())) return one(at("t_left", st.path, f));
                    if (ext.b && parent && new_left(*parent, f.body())) return one(at("b_left", st.path, f));
                    if (ext.four)
                        for (std::size_t i = 0; i < st.node->kids.size(); ++i)
                            if (new_left(st.node->kids[i], f))
                                return one(targeted(at("4_left", st.path, f), child(st.path, i)));
                    if (ext.five && parent)
                        for (const auto& o : sites)
                            if (o.path != st.path && new_left(*o.node, f))
                                return one(targeted(at("5_left", st.path, f), o.path));
                }
            }
        }

        // choices
        auto others = [&](const NodePath& p) {
            std::vector<NodePath> out;
            if (p.empty()) return out;
            for (const auto& o : sites)
                if (o.path != p) out.push_back(o.path);
            return out;
        };
        if (out.kind() == Kind::OrI) {
            for (int j : {1, 2}) {
                RuleInstance r = at("oriR", op, out);
                r.disjunct = j;
                ex.moves.push_back(r);
            }
        } else if (out.kind() == Kind::DiaI) {
            for (std::size_t i = 0; i < on.kids.size(); ++i)
                ex.moves.push_back(targeted(at("idiaR", op, out), child(op, i)));
            if (full && ext.t) ex.moves.push_back(at("t_right", op, out));
            if (full && ext.b && !op.empty()) ex.moves.push_back(at("b_right", op, out));
            if (full && ext.four)
                for (std::size_t i = 0; i < on.kids.size(); ++i)
                    ex.moves.push_back(targeted(at("4_right", op, out), child(op, i)));
            if (full && ext.five)
                for (const auto& q : others(op)) ex.moves.push_back(targeted(at("5_right", op, out), q));
        }
        if (bot_out) {
            if (frag != Fragment::Intuitionistic)
                for (const auto& st : sites)
                    for (const auto& f : st.node->right)
                        if (is_positive(f)) ex.moves.push_back(at("D", st.path, f));
            for (const auto& st : sites)
                for (const auto& f : st.node->left) {
                    if (f.kind() == Kind::Neg && full) ex.moves.push_back(at("negL", st.path, f));
                    if (f.kind() == Kind::ImpC) ex.moves.push_back(at("impcL", st.path, f));
                }
            if (full && ext.any())
                for (const auto& st : sites)
                    for (const auto& f : st.node->right) {
                        if (f.kind() != Kind::DiaC) continue;
                        if (ext.t) ex.moves.push_back(at("t_class", st.path, f));
                        if (ext.b && !st.path.empty()) ex.moves.push_back(at("b_class", st.path, f));
                        if (ext.four)
                            for (std::size_t i = 0; i < st.node->kids.size(); ++i)
                                ex.moves.push_back(targeted(at("4_class", st.path, f), child(st.path, i)));
                        if (ext.five)
                            for (const auto& q : others(st.path))
                                ex.moves.push_back(targeted(at("5_class", st.path, f), q));
                    }
        }
        for (const auto& st : sites)
            for (const auto& f : st.node->left)
                if (f.kind() == Kind::ImpI) ex.moves.push_back(at("impiL", st.path, f));
        if (full && !bot_out) ex.moves.push_back(at("W", op));
        return ex;
    }
};

}  // namespace

SearchResult nek_prove(const NestedSequent& s0, const Extensions& ext, Fragment frag, const SearchBudget& b) {
    NestedSequent s = s0;
    if (count_outputs(s) == 0) s.out = bot();
    if (count_outputs(s) != 1) throw RuleError("nEK search needs at most one output formula");
    if (!in_fragment_language(s, frag)) throw RuleError("sequent lies outside the fragment language");
    Extensions e = frag == Fragment::Full ? ext : Extensions{};
    NestedStrategy strat{e, frag, node_count(s) + static_cast<std::size_t>(std::max(0, b.max_labels))};
    detail::Engine<NestedSequent> eng(
        strat,
        [e, frag](const RuleInstance& r, const NestedSequent& q) { return nek_premises(r, q, e, frag, false); },
        [](const NestedSequent& q) { return canonical_key(q, true); }, b);
    return eng.run(s, true);
}

}  // namespace ecumene
