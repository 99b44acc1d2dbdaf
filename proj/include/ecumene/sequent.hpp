#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ecumene/formula.hpp"

namespace ecumene {

// Γ ⊢ C with a single succedent; ⊥ stands for the empty one.
struct LESequent {
    std::vector<Formula> gamma;
    Formula succ;
};

struct Labeled {
    std::string label;
    Formula f;
    bool operator==(const Labeled& o) const { return label == o.label && f == o.f; }
};

struct RelAtom {
    std::string x, y;
    bool operator==(const RelAtom& o) const { return x == o.x && y == o.y; }
    bool operator<(const RelAtom& o) const { return x != o.x ? x < o.x : y < o.y; }
};

Polarity polarity(const RelAtom&);

// Γ ⊢ Δ ; Π. LCE uses empty labels and no relational atoms.
struct StoupSequent {
    std::vector<RelAtom> rel;
    std::vector<Labeled> gamma, delta;
    std::optional<Labeled> stoup;
};
using LabeledSequent = StoupSequent;

struct NestedNode {
    std::vector<Formula> left;   // •
    std::vector<Formula> right;  // ▲
    std::optional<Formula> out;  // ◦
    std::vector<NestedNode> kids;
};
using NestedSequent = NestedNode;
using NodePath = std::vector<int>;

using Sequent = std::variant<LESequent, StoupSequent, NestedSequent>;

// Set-image comparison helpers.
bool contains(const std::vector<Formula>& v, const Formula& f);
bool contains(const std::vector<Labeled>& v, const Labeled& f);
bool contains(const std::vector<RelAtom>& v, const RelAtom& r);
void add_unique(std::vector<Formula>& v, const Formula& f);
void add_unique(std::vector<Labeled>& v, const Labeled& f);
void add_unique(std::vector<RelAtom>& v, const RelAtom& r);
// removes every occurrence; returns whether one was present
bool remove_all(std::vector<Formula>& v, const Formula& f);
bool remove_all(std::vector<Labeled>& v, const Labeled& f);
bool same_set(const std::vector<Formula>& a, const std::vector<Formula>& b);
bool same_set(const std::vector<Labeled>& a, const std::vector<Labeled>& b);
bool same_set(const std::vector<RelAtom>& a, const std::vector<RelAtom>& b);

bool sequent_equal(const LESequent& a, const LESequent& b);
bool sequent_equal(const StoupSequent& a, const StoupSequent& b);
bool sequent_equal(const NestedSequent& a, const NestedSequent& b);
bool sequent_equal(const Sequent& a, const Sequent& b);

// Canonical strings over the set images; nested children stay a multiset
// unless dedupe_children is set (used by loop checks).
std::string canonical_key(const LESequent& s);
std::string canonical_key(const StoupSequent& s);
std::string canonical_key(const NestedSequent& s, bool dedupe_children = false);

std::set<std::string> free_vars(const LESequent& s);
std::set<std::string> free_vars(const StoupSequent& s);
std::set<std::string> labels_of(const StoupSequent& s);

// nested helpers
NestedNode* node_at(NestedNode& root, const NodePath& p);
const NestedNode* node_at(const NestedNode& root, const NodePath& p);
int count_outputs(const NestedNode& n);
std::optional<NodePath> output_path(const NestedNode& n);
void erase_output(NestedNode& n);
bool is_full(const NestedNode& n);

}  // namespace ecumene
