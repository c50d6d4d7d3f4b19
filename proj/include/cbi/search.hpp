#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbi/model.hpp"
#include "cbi/proof.hpp"

namespace cbi {

struct SearchConfig {
    // Maximum number of logical and structural rule nodes along a branch.
    // DisplayEq nodes are free: they only re-present the same consecution.
    int depth = 20;
    // Longest postulate trace a single DisplayEq node may carry.
    std::size_t postulate_budget = 256;
    // Backward rule families in priority order; see default_rule_order().
    std::vector<std::string> rule_order;
    // Loop-check on canonical_form keys (otherwise on the literal consecution).
    bool canonicalize = true;
    // Drop goals refuted by one of the pruning models.  Sound because every
    // rule preserves validity.
    bool semantic_pruning = true;
    std::vector<ResourceModel> pruning_models;  // empty: small built-in set
    std::uint64_t node_budget = 5'000'000;
    // Goals with more structure nodes than this (or than the root, if larger)
    // are abandoned; contraction is the only rule that grows them.
    std::size_t max_goal_size = 24;
};

std::vector<std::string> default_rule_order();

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t pruned_semantic = 0;
    std::uint64_t pruned_loop = 0;
    std::uint64_t pruned_formula_free = 0;
    int depth_completed = 0;  // deepest iteration fully explored
    bool budget_exhausted = false;
    double millis = 0;
};

struct SearchOutcome {
    bool proved = false;
    std::optional<Proof> proof;  // set iff proved
    SearchStats stats;
};

// Identifies ##X with X (likewise %%), flattens and sorts ; and , chains.
// Only used as a visited-set key.
Consecution canonical_form(const Consecution& c);

SearchOutcome prove(const Consecution& c, const SearchConfig& cfg = {});

}  // namespace cbi
