#pragma once

#include <string>
#include <vector>

#include "ecumene/proof.hpp"
#include "ecumene/search.hpp"

namespace ecumene {

bool in_fragment_language(const Formula& f, Fragment frag);
bool in_fragment_language(const NestedSequent& s, Fragment frag);

std::vector<NestedSequent> nek_premises(const RuleInstance& r, const NestedSequent& s, const Extensions& ext,
                                        Fragment frag = Fragment::Full, bool printed_variants = false);

// Input sequents are proved as if their root carried the output bot.
SearchResult nek_prove(const NestedSequent& s, const Extensions& ext = {}, Fragment frag = Fragment::Full,
                       const SearchBudget& b = {});

// A context is a nested sequent with one hole somewhere along its spine.
struct NestedContext {
    NestedNode tree;
    NodePath hole;
};

// Zips two contexts along the path to the hole; throws on depth mismatch.
NestedContext merge(const NestedContext& a, const NestedContext& b);
NestedSequent plug(const NestedContext& c, const NestedNode& filler);

Formula fm(const NestedSequent& s);
LabeledSequent nested_to_labeled(const NestedSequent& s, const std::string& root = "x");

}  // namespace ecumene
