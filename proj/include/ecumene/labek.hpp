#pragma once

#include <string>
#include <vector>

#include "ecumene/proof.hpp"
#include "ecumene/search.hpp"

namespace ecumene {

std::vector<StoupSequent> labek_premises(const RuleInstance& r, const LabeledSequent& s);

SearchResult labek_prove(const LabeledSequent& s, const SearchBudget& b = {});

// Standard translation with accessibility encoded as rel_i(x,y).
Formula modal_to_fo(const Formula& f, const std::string& x);

}  // namespace ecumene
