#pragma once

#include <utility>
#include <vector>

#include "ecumene/proof.hpp"
#include "ecumene/search.hpp"

namespace ecumene {

std::vector<LESequent> le_premises(const RuleInstance& r, const LESequent& s);
std::vector<StoupSequent> lce_premises(const RuleInstance& r, const StoupSequent& s);
// shared LCE/labEK engine; labeled selects the labEK rule set
std::vector<StoupSequent> stoup_premises(const RuleInstance& r, const StoupSequent& s, bool labeled);

SearchResult lce_prove(const StoupSequent& s, const SearchBudget& b = {});
SearchResult le_prove(const LESequent& s, const SearchBudget& b = {});

LESequent lce_to_le_sequent(const StoupSequent& s);
ProofTree lce_to_le_proof(const ProofTree& t);
ProofTree le_to_lce_proof(const ProofTree& t);

// Cut-free derivations of the admissible general axioms.
ProofTree expand_ginit(const StoupSequent& s, const Formula& a);
ProofTree expand_gcinit(const StoupSequent& s, const Formula& a);
// Replaces every ginit/gcinit leaf by its expansion.
ProofTree expand_macros(const ProofTree& t);

// One entry per reduction step: the (ew, cut-height) of the reduced cut and
// of each cut it spawned.
struct MeasureEdge {
    std::pair<unsigned, std::size_t> parent, child;
};

struct CutElimResult {
    ProofTree proof;
    std::vector<MeasureEdge> trace;
    std::size_t reductions = 0;
};

CutElimResult eliminate_cuts_traced(const ProofTree& t);
ProofTree eliminate_cuts(const ProofTree& t);

}  // namespace ecumene
