#include <stdexcept>

#include "ecumene/nek.hpp"

namespace ecumene {

namespace {

bool holds_output(const NestedNode& n) { return count_outputs(n) > 0; }

// A ∧ fm(Λ) with A ∧ ⊤ simplified to A
Formula and_top(const Formula& a, const Formula& rest) { return rest.kind() == Kind::Top ? a : conj(a, rest); }
Formula top_imp(const Formula& ante, const Formula& c) { return ante.kind() == Kind::Top ? c : imp_i(ante, c); }

Formula fm_node(const NestedNode& n) {
    std::vector<Formula> items;
    const NestedNode* full_kid = nullptr;
    for (const auto& f : n.left) items.push_back(f);
    for (const auto& f : n.right) items.push_back(neg(f));
    for (const auto& k : n.kids) {
        if (holds_output(k)) full_kid = &k;
        else items.push_back(dia_i(fm_node(k)));
    }
    Formula ante = top();
    for (auto it = items.rbegin(); it != items.rend(); ++it) ante = and_top(*it, ante);
    if (n.out) return top_imp(ante, *n.out);
    if (full_kid) return top_imp(ante, box(fm_node(*full_kid)));
    return ante;
}

void to_labeled(const NestedNode& n, const std::string& x, int& counter, LabeledSequent& out) {
    for (const auto& f : n.left) add_unique(out.gamma, Labeled{x, f});
    for (const auto& f : n.right) add_unique(out.delta, Labeled{x, f});
    if (n.out && n.out->kind() != Kind::Bottom) out.stoup = Labeled{x, *n.out};
    for (const auto& k : n.kids) {
        std::string y = counter == 0 ? "y" : "y" + std::to_string(counter);
        ++counter;
        add_unique(out.rel, RelAtom{x, y});
        to_labeled(k, y, counter, out);
    }
}

void absorb(NestedNode& into, const NestedNode& from) {
    for (const auto& f : from.left) add_unique(into.left, f);
    for (const auto& f : from.right) add_unique(into.right, f);
    if (from.out) {
        if (into.out) throw std::invalid_argument("merge would create two output formulas");
        into.out = from.out;
    }
}

NestedNode merge_at(const NestedNode& a, const NodePath& pa, std::size_t da, const NestedNode& b, const NodePath& pb,
                    std::size_t db) {
    NestedNode r;
    absorb(r, a);
    absorb(r, b);
    if (da == pa.size()) {
        for (const auto& k : a.kids) r.kids.push_back(k);
        for (const auto& k : b.kids) r.kids.push_back(k);
        return r;
    }
    int ia = pa[da], ib = pb[db];
    r.kids.push_back(merge_at(a.kids.at(ia), pa, da + 1, b.kids.at(ib), pb, db + 1));
    for (int i = 0; i < static_cast<int>(a.kids.size()); ++i)
        if (i != ia) r.kids.push_back(a.kids[i]);
    for (int i = 0; i < static_cast<int>(b.kids.size()); ++i)
        if (i != ib) r.kids.push_back(b.kids[i]);
    return r;
}

}  // namespace

Formula fm(const NestedSequent& s) { return fm_node(s); }

LabeledSequent nested_to_labeled(const NestedSequent& s, const std::string& root) {
    LabeledSequent out;
    int counter = 0;
    to_labeled(s, root, counter, out);
    return out;
}

NestedContext merge(const NestedContext& a, const NestedContext& b) {
    if (a.hole.size() != b.hole.size()) throw std::invalid_argument("merge needs holes at the same depth");
    if (!node_at(a.tree, a.hole) || !node_at(b.tree, b.hole)) throw std::invalid_argument("hole path out of range");
    NestedContext r;
    r.tree = merge_at(a.tree, a.hole, 0, b.tree, b.hole, 0);
    r.hole.assign(a.hole.size(), 0);
    return r;
}

NestedSequent plug(const NestedContext& c, const NestedNode& filler) {
    NestedSequent s = c.tree;
    NestedNode* h = node_at(s, c.hole);
    if (!h) throw std::invalid_argument("hole path out of range");
    absorb(*h, filler);
    for (const auto& k : filler.kids) h->kids.push_back(k);
    return s;
}

}  // namespace ecumene
