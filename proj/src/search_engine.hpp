#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ecumene/proof.hpp"
#include "ecumene/search.hpp"

namespace ecumene::detail {

// What the strategy offers at one sequent: a closing axiom, or one
// invertible step, or a list of alternatives tried in order.
struct Expansion {
    std::optional<RuleInstance> axiom;
    std::vector<RuleInstance> moves;
    bool deterministic = false;
    // some move was withheld because a budget (terms, labels) ran out
    bool blocked = false;
};

template <class Seq>
class Engine {
public:
    using Expand = std::function<Expansion(const Seq&)>;
    using Premises = std::function<std::vector<Seq>(const RuleInstance&, const Seq&)>;
    using Key = std::function<std::string(const Seq&)>;

    Engine(Expand e, Premises p, Key k, const SearchBudget& b)
        : expand_(std::move(e)), premises_(std::move(p)), key_(std::move(k)), b_(b) {}

    // Without refutation (first-order search) the depth bound is raised
    // step by step so that short proofs are found first.
    SearchResult run(const Seq& s, bool may_refute) {
        SearchResult res;
        Step st;
        if (may_refute) {
            limit_ = b_.max_depth;
            st = go(s, 0);
        } else {
            for (limit_ = std::min(8, b_.max_depth);; limit_ = std::min(2 * limit_, b_.max_depth)) {
                budget_hit_ = false;
                st = go(s, 0);
                if (st.proof || !budget_hit_ || limit_ >= b_.max_depth || nodes_ > b_.max_nodes) break;
            }
        }
        res.nodes = nodes_;
        if (st.proof) {
            res.outcome = Outcome::Proved;
            res.proof = std::move(st.proof);
        } else {
            res.outcome = (!budget_hit_ && may_refute) ? Outcome::Refuted : Outcome::BudgetExceeded;
        }
        return res;
    }

    bool budget_hit() const { return budget_hit_; }

private:
    struct Step {
        std::optional<ProofTree> proof;
        // failure depends on the branch history or on a budget
        bool dependent = false;
    };

    Step go(const Seq& s, int depth) {
        ++nodes_;
        std::string k = key_(s);
        if (auto it = proved_.find(k); it != proved_.end()) return {it->second, false};
        if (failed_.count(k)) return {};
        if (b_.loop_check && on_path_.count(k)) return {std::nullopt, true};
        if (depth >= limit_ || nodes_ > b_.max_nodes) {
            budget_hit_ = true;
            return {std::nullopt, true};
        }
        Expansion ex = expand_(s);
        if (ex.blocked) budget_hit_ = true;
        if (ex.axiom) {
            ProofTree t{Sequent{s}, *ex.axiom, {}};
            proved_.emplace(k, t);
            return {std::move(t), false};
        }
        on_path_.insert(k);
        bool dependent = ex.blocked;
        std::optional<ProofTree> found;
        for (const auto& m : ex.moves) {
            std::vector<Seq> ps;
            try {
                ps = premises_(m, s);
            } catch (const RuleError&) {
                continue;
            }
            ProofTree t{Sequent{s}, m, {}};
            bool ok = true;
            for (const auto& p : ps) {
                Step sub = go(p, depth + 1);
                if (!sub.proof) {
                    dependent = dependent || sub.dependent;
                    ok = false;
                    break;
                }
                t.premises.push_back(std::move(*sub.proof));
            }
            if (ok) {
                found = std::move(t);
                break;
            }
            if (ex.deterministic) break;
        }
        on_path_.erase(k);
        if (found) {
            proved_.emplace(k, *found);
            return {std::move(found), false};
        }
        if (!dependent) failed_.insert(k);
        return {std::nullopt, dependent};
    }

    Expand expand_;
    Premises premises_;
    Key key_;
    SearchBudget b_;
    std::size_t nodes_ = 0;
    int limit_ = 0;
    bool budget_hit_ = false;
    std::unordered_map<std::string, ProofTree> proved_;
    std::unordered_set<std::string> failed_;
    std::unordered_set<std::string> on_path_;
};

}  // namespace ecumene::detail
