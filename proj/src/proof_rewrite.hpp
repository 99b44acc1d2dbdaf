#pragma once

#include <set>
#include <string>

#include "ecumene/lce.hpp"

namespace ecumene::detail {

// Fresh variable supply that avoids every name of the proofs it was shown.
class Names {
public:
    Names() = default;
    explicit Names(const ProofTree& t) { note(t); }
    void note(const ProofTree& t);
    void note(const std::string& v) { used_.insert(v); }
    std::string fresh();

private:
    std::set<std::string> used_;
    std::size_t next_ = 0;
};

bool occurs(const ProofTree& t, const std::string& v);
// Replaces every occurrence of variable a (free or as an eigenvariable) by b;
// b must not occur in t.
ProofTree rename_var(const ProofTree& t, const std::string& a, const std::string& b);
// Substitutes u for the free variable y, renaming eigenvariables that would capture.
ProofTree subst_var(const ProofTree& t, const std::string& y, const Term& u, Names& names);

// Node constructors that re-derive the premises and insist they match.
ProofTree lce_node(const StoupSequent& s, RuleInstance r, std::vector<ProofTree> subs);
ProofTree le_node(const LESequent& s, RuleInstance r, std::vector<ProofTree> subs);

const StoupSequent& stoup_of(const ProofTree& t);
const LESequent& le_of(const ProofTree& t);

// Admissible transformations of cut-free LCE proofs.
struct Inversion {
    std::string rule;
    Formula f;
    bool right = false;
    std::size_t premise = 0;
    std::string eigen;
};
// target ⊇ conclusion on both sides, same stoup
ProofTree weaken(const ProofTree& t, const StoupSequent& target, Names& names);
// target ⊇ conclusion without inv.f plus what premise inv.premise of inv.rule adds
ProofTree invert(const ProofTree& t, const Inversion& inv, const StoupSequent& target, Names& names);
// Γ ⊢ Δ ; N  ↦  Γ ⊢ Δ, N ; ·
ProofTree unstore(const ProofTree& t, Names& names);
// Γ ⊢ Δ, Q ; ·  ↦  Γ, ¬Q ⊢ Δ ; ·  for positive Q, dereliction on Q becoming ¬L
ProofTree dneg(const ProofTree& t, const Formula& q, Names& names);

ProofTree le_weaken(const ProofTree& t, const LESequent& target, Names& names);

Labeled lab(const Formula& f);
std::vector<Formula> plain(const std::vector<Labeled>& v);

}  // namespace ecumene::detail
