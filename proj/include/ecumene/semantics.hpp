#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ecumene/formula.hpp"

namespace ecumene {

struct Model {
    int n = 0;
    // le[i][j]: i ≤ j ; rel[i][j]: i R j
    std::vector<std::vector<bool>> le, rel;
    std::vector<std::set<std::string>> val;

    static Model empty(int n);
};

struct FrameCondition {
    bool reflexive = false, symmetric = false, transitive = false, euclidean = false;
    bool any() const { return reflexive || symmetric || transitive || euclidean; }
};

std::vector<std::string> validate_model(const Model& m);
bool satisfies_frame(const Model& m, const FrameCondition& c);

// Throws std::invalid_argument on quantified input.
bool eval(const Model& m, int w, const Formula& f);
bool is_valid_in_model(const Model& m, const Formula& f);

std::optional<Model> countermodel_search(const Formula& f, int max_worlds = 3, const FrameCondition& c = {});
// Calls visit on every canonical model up to max_worlds over the given atoms;
// stops early when visit returns false.
void enumerate_models(int max_worlds, const std::vector<std::string>& atoms, const FrameCondition& c,
                      const std::function<bool(const Model&)>& visit);

Model random_model(std::uint64_t seed, int n_worlds, const FrameCondition& c = {},
                   const std::vector<std::string>& atoms = {"a", "b", "p", "q"});

std::string render_model(const Model& m);
Model parse_model(const std::string& text);

}  // namespace ecumene
