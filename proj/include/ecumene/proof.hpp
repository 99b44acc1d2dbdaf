#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecumene/formula.hpp"
#include "ecumene/sequent.hpp"

namespace ecumene {

enum class Calculus { LE, LCE, LabEK, NEK };

struct Extensions {
    bool t = false, b = false, four = false, five = false;
    bool any() const { return t || b || four || five; }
};

enum class Fragment { Full, Intuitionistic, Classical };

struct RuleInstance {
    std::string id;
    // principal formula (with its label in labEK)
    std::optional<Formula> principal;
    std::string label;
    // nEK: node holding the principal, and the node receiving the result
    NodePath path;
    std::optional<NodePath> target;
    std::optional<Term> witness;
    // eigenvariable (first-order) or fresh label (labEK)
    std::string eigen;
    // existing accessible label for □L, ◇iR, ◇cR
    std::string target_label;
    int disjunct = 0;
    std::optional<Formula> cut;
    std::string cut_label;
    // Π* of N-cut / Γ^P of ccut; absent means the empty choice
    std::optional<Formula> selector;
    std::string selector_label;
    // printed variant of the classical 4 rule
    bool printed = false;
};

struct ProofTree {
    Sequent conclusion;
    RuleInstance rule;
    std::vector<ProofTree> premises;
};

struct CheckOptions {
    bool allow_cuts = false;
    Extensions ext;
    Fragment fragment = Fragment::Full;
    bool printed_variants = false;
};

struct CheckResult {
    bool valid = true;
    std::vector<int> path;
    std::string reason;
};

class RuleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string calculus_name(Calculus c);
std::optional<Calculus> calculus_from_name(const std::string& s);

bool is_cut_rule(const std::string& id);

// Throws RuleError when the instance does not apply.
std::vector<Sequent> premises_of(Calculus c, const RuleInstance& r, const Sequent& s,
                                 const CheckOptions& opts = {});

CheckResult check(Calculus c, const ProofTree& t, const CheckOptions& opts = {});

std::size_t proof_height(const ProofTree& t);
std::size_t proof_size(const ProofTree& t);
bool uses_rule(const ProofTree& t, const std::string& id);
void collect_rules(const ProofTree& t, std::set<std::string>& out);

// (rule-id {meta} "conclusion" premise*)
std::string serialize_proof(const ProofTree& t);
ProofTree parse_proof(Calculus c, const std::string& text);

}  // namespace ecumene
