#include "ecumene/sequent.hpp"

#include <algorithm>

namespace ecumene {

Polarity polarity(const RelAtom&) { return Polarity::Unpolarized; }

bool contains(const std::vector<Formula>& v, const Formula& f) {
    return std::find(v.begin(), v.end(), f) != v.end();
}
bool contains(const std::vector<Labeled>& v, const Labeled& f) {
    return std::find(v.begin(), v.end(), f) != v.end();
}
bool contains(const std::vector<RelAtom>& v, const RelAtom& r) {
    return std::find(v.begin(), v.end(), r) != v.end();
}
void add_unique(std::vector<Formula>& v, const Formula& f) {
    if (!contains(v, f)) v.push_back(f);
}
void add_unique(std::vector<Labeled>& v, const Labeled& f) {
    if (!contains(v, f)) v.push_back(f);
}
void add_unique(std::vector<RelAtom>& v, const RelAtom& r) {
    if (!contains(v, r)) v.push_back(r);
}
bool remove_all(std::vector<Formula>& v, const Formula& f) {
    auto it = std::remove(v.begin(), v.end(), f);
    bool found = it != v.end();
    v.erase(it, v.end());
    return found;
}
bool remove_all(std::vector<Labeled>& v, const Labeled& f) {
    auto it = std::remove(v.begin(), v.end(), f);
    bool found = it != v.end();
    v.erase(it, v.end());
    return found;
}

namespace {

template <class T>
bool subset(const std::vector<T>& a, const std::vector<T>& b) {
    for (const auto& x : a)
        if (!contains(b, x)) return false;
    return true;
}

std::string lab_key(const Labeled& l) { return l.label + ":" + l.f.key(); }

std::string set_key(const std::vector<Labeled>& v) {
    std::vector<std::string> ks;
    for (const auto& l : v) ks.push_back(lab_key(l));
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::string out;
    for (const auto& k : ks) out += k + ";";
    return out;
}

std::string set_key(const std::vector<Formula>& v) {
    std::vector<std::string> ks;
    for (const auto& f : v) ks.push_back(f.key());
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::string out;
    for (const auto& k : ks) out += k + ";";
    return out;
}

}  // namespace

bool same_set(const std::vector<Formula>& a, const std::vector<Formula>& b) {
    return subset(a, b) && subset(b, a);
}
bool same_set(const std::vector<Labeled>& a, const std::vector<Labeled>& b) {
    return subset(a, b) && subset(b, a);
}
bool same_set(const std::vector<RelAtom>& a, const std::vector<RelAtom>& b) {
    return subset(a, b) && subset(b, a);
}

bool sequent_equal(const LESequent& a, const LESequent& b) {
    return a.succ == b.succ && same_set(a.gamma, b.gamma);
}

bool sequent_equal(const StoupSequent& a, const StoupSequent& b) {
    if (a.stoup.has_value() != b.stoup.has_value()) return false;
    if (a.stoup && !(*a.stoup == *b.stoup)) return false;
    return same_set(a.rel, b.rel) && same_set(a.gamma, b.gamma) && same_set(a.delta, b.delta);
}

bool sequent_equal(const NestedSequent& a, const NestedSequent& b) {
    return canonical_key(a) == canonical_key(b);
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            return sequent_equal(x, std::get<T>(b));
        },
        a);
}

std::string canonical_key(const LESequent& s) { return set_key(s.gamma) + "|-" + s.succ.key(); }

std::string canonical_key(const StoupSequent& s) {
    std::vector<RelAtom> r = s.rel;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    std::string out = "R";
    for (const auto& a : r) out += a.x + "," + a.y + ";";
    out += "G" + set_key(s.gamma) + "D" + set_key(s.delta) + "S";
    if (s.stoup) out += lab_key(*s.stoup);
    return out;
}

std::string canonical_key(const NestedSequent& s, bool dedupe_children) {
    std::string out = "{" + set_key(s.left) + "|" + set_key(s.right) + "|";
    if (s.out) out += s.out->key();
    out += "|";
    std::vector<std::string> ks;
    for (const auto& k : s.kids) ks.push_back(canonical_key(k, dedupe_children));
    std::sort(ks.begin(), ks.end());
    if (dedupe_children) ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (const auto& k : ks) out += k;
    return out + "}";
}

std::set<std::string> free_vars(const LESequent& s) {
    std::set<std::string> out;
    for (const auto& f : s.gamma) {
        auto v = free_vars(f);
        out.insert(v.begin(), v.end());
    }
    auto v = free_vars(s.succ);
    out.insert(v.begin(), v.end());
    return out;
}

std::set<std::string> free_vars(const StoupSequent& s) {
    std::set<std::string> out;
    auto add = [&](const Labeled& l) {
        auto v = free_vars(l.f);
        out.insert(v.begin(), v.end());
    };
    for (const auto& l : s.gamma) add(l);
    for (const auto& l : s.delta) add(l);
    if (s.stoup) add(*s.stoup);
    return out;
}

std::set<std::string> labels_of(const StoupSequent& s) {
    std::set<std::string> out;
    for (const auto& r : s.rel) {
        out.insert(r.x);
        out.insert(r.y);
    }
    for (const auto& l : s.gamma) out.insert(l.label);
    for (const auto& l : s.delta) out.insert(l.label);
    if (s.stoup) out.insert(s.stoup->label);
    out.erase("");
    return out;
}

NestedNode* node_at(NestedNode& root, const NodePath& p) {
    NestedNode* n = &root;
    for (int i : p) {
        if (i < 0 || i >= static_cast<int>(n->kids.size())) return nullptr;
        n = &n->kids[i];
    }
    return n;
}

const NestedNode* node_at(const NestedNode& root, const NodePath& p) {
    const NestedNode* n = &root;
    for (int i : p) {
        if (i < 0 || i >= static_cast<int>(n->kids.size())) return nullptr;
        n = &n->kids[i];
    }
    return n;
}

int count_outputs(const NestedNode& n) {
    int c = n.out ? 1 : 0;
    for (const auto& k : n.kids) c += count_outputs(k);
    return c;
}

std::optional<NodePath> output_path(const NestedNode& n) {
    if (n.out) return NodePath{};
    for (int i = 0; i < static_cast<int>(n.kids.size()); ++i) {
        if (auto p = output_path(n.kids[i])) {
            p->insert(p->begin(), i);
            return p;
        }
    }
    return std::nullopt;
}

void erase_output(NestedNode& n) {
    n.out.reset();
    for (auto& k : n.kids) erase_output(k);
}

bool is_full(const NestedNode& n) { return count_outputs(n) == 1; }

}  // namespace ecumene
