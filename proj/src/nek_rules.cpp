#include "ecumene/nek.hpp"

namespace ecumene {

namespace {

[[noreturn]] void fail(const std::string& why) { throw RuleError(why); }

struct Step {
    const RuleInstance& r;
    const NestedSequent& s;
    const Extensions& ext;
    Fragment frag;
    bool printed_ok;

    NestedSequent copy() const { return s; }

    const NestedNode& at(const NodePath& p) const {
        const NestedNode* n = node_at(s, p);
        if (!n) fail(r.id + ": no node at the given path");
        return *n;
    }
    Formula principal() const {
        if (!r.principal) fail(r.id + " needs a principal formula");
        return *r.principal;
    }
    Formula left(Kind k) const {
        Formula p = principal();
        if (p.kind() != k) fail(r.id + ": wrong principal connective");
        if (!contains(at(r.path).left, p)) fail(r.id + ": principal formula not a left input at the node");
        return p;
    }
    Formula right(Kind k) const {
        Formula p = principal();
        if (p.kind() != k) fail(r.id + ": wrong principal connective");
        if (!contains(at(r.path).right, p)) fail(r.id + ": principal formula not a right input at the node");
        return p;
    }
    Formula output(Kind k) const {
        const NestedNode& n = at(r.path);
        if (!n.out) fail(r.id + ": no output at the node");
        if (n.out->kind() != k) fail(r.id + ": wrong principal connective");
        return *n.out;
    }
    void need_bot_output() const {
        auto p = output_path(s);
        if (!p || node_at(s, *p)->out->kind() != Kind::Bottom) fail(r.id + " requires the output to be bot");
    }
    NodePath child_target() const {
        if (!r.target) fail(r.id + " needs a target child");
        const NodePath& t = *r.target;
        if (t.size() != r.path.size() + 1 || !std::equal(r.path.begin(), r.path.end(), t.begin()))
            fail(r.id + ": target is not a child of the principal's node");
        at(t);
        return t;
    }
    // the 5 rules act between a bracket and any other node of the tree
    NodePath other_target() const {
        if (r.path.empty()) fail(r.id + ": principal must sit in a bracket");
        if (!r.target) fail(r.id + " needs a target node");
        if (*r.target == r.path) fail(r.id + ": target must differ from the principal's node");
        at(*r.target);
        return *r.target;
    }
};

NestedNode& nd(NestedSequent& s, const NodePath& p) { return *node_at(s, p); }

NestedSequent set_output(NestedSequent s, const NodePath& p, Formula f) {
    erase_output(s);
    nd(s, p).out = std::move(f);
    return s;
}

void bot_in_place(NestedSequent& s) {
    auto p = output_path(s);
    if (p) nd(s, *p).out = bot();
}

bool allowed_in_fragment(const std::string& id, Fragment f) {
    static const std::set<std::string> intu = {"init", "botL", "andL", "andR", "oriL", "oriR", "impiL",
                                               "impiR", "boxL", "boxR", "idiaL", "idiaR"};
    static const std::set<std::string> cls = {"init", "botL", "andL", "andR", "orcL", "orcR", "impcL",
                                              "impcR", "boxL", "boxR", "cdiaL", "cdiaR", "D", "store"};
    if (f == Fragment::Intuitionistic) return intu.count(id) > 0;
    if (f == Fragment::Classical) return cls.count(id) > 0;
    return id != "init";
}

bool ext_allowed(const std::string& id, const Extensions& e) {
    if (id.rfind("t_", 0) == 0) return e.t;
    if (id.rfind("b_", 0) == 0) return e.b;
    if (id.rfind("4_", 0) == 0) return e.four;
    if (id.rfind("5_", 0) == 0) return e.five;
    return true;
}

}  // namespace

bool in_fragment_language(const Formula& f, Fragment frag) {
    if (frag == Fragment::Full) return !has_quantifier(f);
    Kind k = f.kind();
    switch (k) {
    case Kind::Bottom: return true;
    case Kind::AtomI: return frag == Fragment::Intuitionistic && f.terms().empty();
    case Kind::AtomC: return frag == Fragment::Classical && f.terms().empty();
    case Kind::And: return in_fragment_language(f.lhs(), frag) && in_fragment_language(f.rhs(), frag);
    case Kind::Box: return in_fragment_language(f.body(), frag);
    case Kind::OrI:
    case Kind::ImpI:
        return frag == Fragment::Intuitionistic && in_fragment_language(f.lhs(), frag) &&
               in_fragment_language(f.rhs(), frag);
    case Kind::DiaI: return frag == Fragment::Intuitionistic && in_fragment_language(f.body(), frag);
    case Kind::OrC:
    case Kind::ImpC:
        return frag == Fragment::Classical && in_fragment_language(f.lhs(), frag) &&
               in_fragment_language(f.rhs(), frag);
    case Kind::DiaC: return frag == Fragment::Classical && in_fragment_language(f.body(), frag);
    default: return false;
    }
}

bool in_fragment_language(const NestedSequent& s, Fragment frag) {
    for (const auto& f : s.left)
        if (!in_fragment_language(f, frag)) return false;
    for (const auto& f : s.right)
        if (!in_fragment_language(f, frag)) return false;
    if (s.out && !in_fragment_language(*s.out, frag)) return false;
    for (const auto& k : s.kids)
        if (!in_fragment_language(k, frag)) return false;
    return true;
}

std::vector<NestedSequent> nek_premises(const RuleInstance& r, const NestedSequent& s, const Extensions& ext,
                                        Fragment frag, bool printed_variants) {
    const std::string& id = r.id;
    if (!allowed_in_fragment(id, frag) && !(frag == Fragment::Full && (id == "icut" || id == "ccut")))
        fail(id + " is not a rule of this fragment");
    if (frag != Fragment::Full && (id == "icut" || id == "ccut")) fail(id + " is not a rule of this fragment");
    if (!ext_allowed(id, ext)) fail(id + " needs its extension to be enabled");
    if (count_outputs(s) != 1) fail("nEK rules apply to full sequents with exactly one output");
    Step st{r, s, ext, frag, printed_variants};
    const NodePath& p = r.path;
    st.at(p);
    std::vector<NestedSequent> out;

    if (id == "andL") {
        Formula a = st.left(Kind::And);
        NestedSequent t = s;
        remove_all(nd(t, p).left, a);
        add_unique(nd(t, p).left, a.lhs());
        add_unique(nd(t, p).left, a.rhs());
        out = {t};
    } else if (id == "andR") {
        Formula a = st.output(Kind::And);
        NestedSequent t1 = s, t2 = s;
        nd(t1, p).out = a.lhs();
        nd(t2, p).out = a.rhs();
        out = {t1, t2};
    } else if (id == "oriL" || id == "orcL") {
        bool cls = id == "orcL";
        Formula a = st.left(cls ? Kind::OrC : Kind::OrI);
        if (cls) st.need_bot_output();
        NestedSequent t1 = s, t2 = s;
        remove_all(nd(t1, p).left, a);
        remove_all(nd(t2, p).left, a);
        add_unique(nd(t1, p).left, a.lhs());
        add_unique(nd(t2, p).left, a.rhs());
        out = {t1, t2};
    } else if (id == "oriR") {
        Formula a = st.output(Kind::OrI);
        if (r.disjunct != 1 && r.disjunct != 2) fail("oriR needs disjunct 1 or 2");
        NestedSequent t = s;
        nd(t, p).out = r.disjunct == 1 ? a.lhs() : a.rhs();
        out = {t};
    } else if (id == "botL") {
        st.left(Kind::Bottom);
    } else if (id == "topR") {
        st.output(Kind::Top);
    } else if (id == "impiL") {
        Formula a = st.left(Kind::ImpI);
        NestedSequent t1 = set_output(s, p, a.lhs());
        NestedSequent t2 = s;
        remove_all(nd(t2, p).left, a);
        add_unique(nd(t2, p).left, a.rhs());
        out = {t1, t2};
    } else if (id == "impiR") {
        Formula a = st.output(Kind::ImpI);
        NestedSequent t = s;
        add_unique(nd(t, p).left, a.lhs());
        nd(t, p).out = a.rhs();
        out = {t};
    } else if (id == "negL") {
        Formula a = st.left(Kind::Neg);
        st.need_bot_output();
        out = {set_output(s, p, a.body())};
    } else if (id == "negR") {
        Formula a = st.right(Kind::Neg);
        st.need_bot_output();
        NestedSequent t = s;
        remove_all(nd(t, p).right, a);
        add_unique(nd(t, p).left, a.body());
        out = {t};
    } else if (id == "impcL") {
        Formula a = st.left(Kind::ImpC);
        st.need_bot_output();
        NestedSequent t1 = set_output(s, p, a.lhs());
        if (frag == Fragment::Classical) remove_all(nd(t1, p).left, a);
        NestedSequent t2 = s;
        remove_all(nd(t2, p).left, a);
        add_unique(nd(t2, p).left, a.rhs());
        out = {t1, t2};
    } else if (id == "impcR") {
        Formula a = st.right(Kind::ImpC);
        st.need_bot_output();
        NestedSequent t = s;
        remove_all(nd(t, p).right, a);
        add_unique(nd(t, p).left, a.lhs());
        add_unique(nd(t, p).right, a.rhs());
        out = {t};
    } else if (id == "orcR") {
        Formula a = st.right(Kind::OrC);
        st.need_bot_output();
        NestedSequent t = s;
        remove_all(nd(t, p).right, a);
        add_unique(nd(t, p).right, a.lhs());
        add_unique(nd(t, p).right, a.rhs());
        out = {t};
    } else if (id == "Lc") {
        Formula a = st.left(Kind::AtomC);
        st.need_bot_output();
        NestedSequent t = s;
        remove_all(nd(t, p).left, a);
        add_unique(nd(t, p).left, atom_i(a.name(), a.terms()));
        out = {t};
    } else if (id == "Rc") {
        Formula a = st.right(Kind::AtomC);
        st.need_bot_output();
        NestedSequent t = s;
        remove_all(nd(t, p).right, a);
        add_unique(nd(t, p).right, atom_i(a.name(), a.terms()));
        out = {t};
    } else if (id == "boxL") {
        Formula a = st.left(Kind::Box);
        NodePath c = st.child_target();
        NestedSequent t = s;
        add_unique(nd(t, c).left, a.body());
        out = {t};
    } else if (id == "boxR") {
        Formula a = st.output(Kind::Box);
        NestedSequent t = s;
        nd(t, p).out.reset();
        NestedNode k;
        k.out = a.body();
        nd(t, p).kids.push_back(std::move(k));
        out = {t};
    } else if (id == "idiaL" || id == "cdiaL") {
        bool cls = id == "cdiaL";
        Formula a = st.left(cls ? Kind::DiaC : Kind::DiaI);
        if (cls) st.need_bot_output();
        NestedSequent t = s;
        remove_all(nd(t, p).left, a);
        NestedNode k;
        k.left.push_back(a.body());
        nd(t, p).kids.push_back(std::move(k));
        out = {t};
    } else if (id == "idiaR") {
        Formula a = st.output(Kind::DiaI);
        NodePath c = st.child_target();
        out = {set_output(s, c, a.body())};
    } else if (id == "cdiaR") {
        Formula a = st.right(Kind::DiaC);
        st.need_bot_output();
        NodePath c = st.child_target();
        NestedSequent t = s;
        add_unique(nd(t, c).right, a.body());
        out = {t};
    } else if (id == "ginit") {
        Formula a = st.principal();
        const NestedNode& n = st.at(p);
        if (!contains(n.left, a) || !n.out || !(*n.out == a)) fail("ginit needs +A and !A at the same node");
    } else if (id == "gcinit") {
        Formula a = st.principal();
        st.need_bot_output();
        const NestedNode& n = st.at(p);
        if (!contains(n.left, a) || !contains(n.right, a)) fail("gcinit needs +A and -A at the same node");
    } else if (id == "init") {
        Formula a = st.principal();
        const NestedNode& n = st.at(p);
        if (frag == Fragment::Intuitionistic) {
            if (a.kind() != Kind::AtomI || !contains(n.left, a) || !n.out || !(*n.out == a))
                fail("init needs +p_i and !p_i at the same node");
        } else {
            if (a.kind() != Kind::AtomC || !contains(n.left, a) || !contains(n.right, a))
                fail("init needs +p_c and -p_c at the same node");
        }
    } else if (id == "D") {
        Formula a = st.principal();
        if (!contains(st.at(p).right, a)) fail("D: principal formula not a right input at the node");
        if (!is_positive(a)) fail("D requires a positive formula");
        st.need_bot_output();
        out = {set_output(s, p, a)};
    } else if (id == "store") {
        const NestedNode& n = st.at(p);
        if (!n.out) fail("store: no output at the node");
        if (!is_negative(*n.out)) fail("store requires a negative formula");
        if (n.out->kind() == Kind::Bottom) fail("store: output already bot");
        NestedSequent t = s;
        add_unique(nd(t, p).right, *n.out);
        nd(t, p).out = bot();
        out = {t};
    } else if (id == "W") {
        auto op = output_path(s);
        if (node_at(s, *op)->out->kind() == Kind::Bottom) fail("W: output already bot");
        NestedSequent t = s;
        bot_in_place(t);
        out = {t};
    } else if (id == "icut") {
        if (!r.cut) fail("icut needs a cut formula");
        if (!is_positive(*r.cut)) fail("icut requires a positive cut formula");
        NestedSequent t2 = s;
        add_unique(nd(t2, p).left, *r.cut);
        out = {set_output(s, p, *r.cut), t2};
    } else if (id == "ccut") {
        if (!r.cut) fail("ccut needs a cut formula");
        if (!is_negative(*r.cut)) fail("ccut requires a negative cut formula");
        NestedSequent t1 = s;
        if (r.selector) {
            if (!r.target) fail("ccut selector needs its node");
            const NestedNode* q = node_at(s, *r.target);
            if (!q || !contains(q->right, *r.selector)) fail("ccut selector must be a right input");
            if (!is_positive(*r.selector)) fail("ccut selector must be positive");
            t1 = set_output(s, *r.target, *r.selector);
        } else {
            bot_in_place(t1);
        }
        add_unique(nd(t1, p).right, *r.cut);
        NestedSequent t2 = s;
        add_unique(nd(t2, p).left, *r.cut);
        out = {t1, t2};
    } else if (id == "t_left") {
        Formula a = st.left(Kind::Box);
        NestedSequent t = s;
        add_unique(nd(t, p).left, a.body());
        out = {t};
    } else if (id == "t_right") {
        Formula a = st.output(Kind::DiaI);
        NestedSequent t = s;
        nd(t, p).out = a.body();
        out = {t};
    } else if (id == "t_class") {
        Formula a = st.right(Kind::DiaC);
        st.need_bot_output();
        NestedSequent t = s;
        remove_all(nd(t, p).right, a);
        add_unique(nd(t, p).right, a.body());
        out = {t};
    } else if (id == "b_left" || id == "b_right" || id == "b_class") {
        if (p.empty()) fail(id + ": principal must sit in a child");
        NodePath parent(p.begin(), p.end() - 1);
        NestedSequent t = s;
        if (id == "b_left") {
            Formula a = st.left(Kind::Box);
            add_unique(nd(t, parent).left, a.body());
        } else if (id == "b_right") {
            Formula a = st.output(Kind::DiaI);
            t = set_output(s, parent, a.body());
        } else {
            Formula a = st.right(Kind::DiaC);
            st.need_bot_output();
            remove_all(nd(t, p).right, a);
            add_unique(nd(t, parent).right, a.body());
        }
        out = {t};
    } else if (id == "4_left" || id == "4_right" || id == "4_class") {
        NodePath c = st.child_target();
        NestedSequent t = s;
        if (id == "4_left") {
            Formula a = st.left(Kind::Box);
            add_unique(nd(t, c).left, a);
        } else if (id == "4_right") {
            Formula a = st.output(Kind::DiaI);
            t = set_output(s, c, a);
        } else {
            Formula a = st.right(Kind::DiaC);
            st.need_bot_output();
            if (r.printed) {
                if (!printed_variants) fail("printed 4_class variant is disabled");
                t = set_output(s, c, dia_i(a.body()));
                remove_all(nd(t, p).right, a);
            } else {
                remove_all(nd(t, p).right, a);
                add_unique(nd(t, c).right, a);
            }
        }
        out = {t};
    } else if (id == "5_left" || id == "5_right" || id == "5_class") {
        NodePath sib = st.other_target();
        NestedSequent t = s;
        if (id == "5_left") {
            Formula a = st.left(Kind::Box);
            add_unique(nd(t, sib).left, a);
        } else if (id == "5_right") {
            Formula a = st.output(Kind::DiaI);
            t = set_output(s, sib, a);
        } else {
            Formula a = st.right(Kind::DiaC);
            st.need_bot_output();
            remove_all(nd(t, p).right, a);
            add_unique(nd(t, sib).right, a);
        }
        out = {t};
    } else {
        fail("unknown rule " + id);
    }
    for (const auto& q : out)
        if (count_outputs(q) != 1) fail("internal: premise lost output uniqueness");
    return out;
}

}  // namespace ecumene
