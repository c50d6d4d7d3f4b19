#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cbi/rules.hpp"

namespace cbi {

struct Proof {
    Consecution conclusion;
    Rule rule = Rule::Id;
    std::optional<Direction> direction;  // bidirectional structural rules only
    Trace trace;                          // DisplayEq only
    std::vector<Proof> premises;

    std::size_t node_count() const;
};

struct NodeError {
    std::string node;  // "root", "root.0.1", ...
    std::string message;
};

struct ProofReport {
    bool ok = true;
    bool cut_free = true;
    // Only meaningful for cut-free proofs; false otherwise.
    bool subformula_ok = true;
    std::vector<NodeError> errors;
};

ProofReport check_proof(const Proof& p);

// A cut-free proof of (f |- f).
Proof identity_proof(const Formula& f);

// Builders used by identity_proof, search and fixture tooling.
Trace invert(const Trace& t);
Proof axiom(Rule r, const Consecution& c);
Proof infer(Rule r, const Consecution& c, std::vector<Proof> premises, std::optional<Direction> dir = std::nullopt);
// DisplayEq node whose premise is `sub`; `forward` rewrites sub's conclusion into the new one.
Proof display_down(Proof sub, const Trace& forward);

// Every (conclusion, premises) pair in the tree with its rule and aux data.
struct RuleInstance {
    Rule rule;
    Consecution conclusion;
    std::vector<Consecution> premises;
};
std::vector<RuleInstance> rule_instances(const Proof& p);

using json = nlohmann::json;
json structure_to_json(const Structure& s);
Structure structure_from_json(const json& j);
json consecution_to_json(const Consecution& c);
// Accepts the tagged object form or an ASCII string "lhs |- rhs".
Consecution consecution_from_json(const json& j);
json proof_to_json(const Proof& p);
// Throws std::invalid_argument with a JSON-pointer-like location.
Proof proof_from_json(const json& j);

}  // namespace cbi
