#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ecumene/proof.hpp"

namespace ecumene {

struct SearchBudget {
    int max_depth = 200;
    int max_terms = 2;
    int max_labels = 6;
    bool loop_check = true;
    std::size_t max_nodes = 2000000;
};

enum class Outcome { Proved, Refuted, BudgetExceeded };

struct SearchResult {
    Outcome outcome = Outcome::BudgetExceeded;
    std::optional<ProofTree> proof;
    std::size_t nodes = 0;

    bool proved() const { return outcome == Outcome::Proved; }
};

std::string outcome_name(Outcome o);

}  // namespace ecumene
