#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cbi/formula.hpp"
#include "cbi/model.hpp"
#include "cbi/semantics.hpp"

namespace cbi {

// Every CBI-model on {0}, {0,1}, ... {0..max_size-1} with unit 0, in a fixed
// order.  With up_to_iso, only the lexicographically least member of each
// isomorphism class (under permutations fixing 0) is kept.
std::vector<ResourceModel> enumerate_cbi_models(unsigned max_size, bool up_to_iso);

struct CountermodelBudget {
    unsigned max_enumerated_size = 3;
    unsigned max_zmod = 6;
    unsigned max_bitvec = 3;
    unsigned max_powerset = 3;
    unsigned max_actions = 2;
    bool products = true;
    bool unions = true;
    std::size_t carrier_cap = 64;
    TruthBudget truth;
    // Family names to try, in order; empty means all of them.
    std::vector<std::string> families;
};

struct CountermodelResult {
    bool found = false;
    ResourceModel model;
    Environment env;
    Elem point = 0;
    std::string family;
    std::uint64_t models_checked = 0;
    std::uint64_t indeterminate = 0;  // models whose environment space exceeded the budget
};

std::vector<std::string> countermodel_families();
CountermodelResult countermodel_search(const Formula& f, const CountermodelBudget& budget = {});

}  // namespace cbi
