#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cbi/display.hpp"
#include "cbi/structure.hpp"

namespace cbi {

enum class Rule {
    Id, Cut, DisplayEq,
    TopL, TopR, BotL, BotR, NotL, NotR, AndL, AndR, OrL, OrR, ImpL, ImpR,
    MTopL, MTopR, MBotL, MBotR, MNotL, MNotR, StarL, StarR, ParL, ParR, WandL, WandR,
    AAL, AAR, MAL, MAR, AEL, AER, MEL, MER, WkL, WkR, CtrL, CtrR,
};

struct RuleSchema {
    std::string name;  // ASCII name used in proof files
    std::string symbol;  // conventional symbolic name
    std::vector<Consecution> premises;
    Consecution conclusion;
    bool bidirectional = false;
};

const std::vector<Rule>& all_rules();
std::string to_string(Rule r);
std::string symbol(Rule r);
std::optional<Rule> rule_from_string(const std::string& s);  // ASCII or symbolic
bool is_bidirectional(Rule r);
// Null for DisplayEq, whose instances are governed by a postulate trace.
const RuleSchema* schema(Rule r);

struct RuleAux {
    std::optional<Direction> direction;  // bidirectional rules; default forward
    Trace trace;                          // DisplayEq
};

struct InstanceCheck {
    bool ok = true;
    std::string error;
};

InstanceCheck check_rule_instance(Rule r, const Consecution& conclusion, const std::vector<Consecution>& premises,
                                  const RuleAux& aux = {});

// Belnap-style audit of schemata.  Cut is exempt from C1 as usual.
struct AuditEntry {
    std::string rule;
    std::string direction;  // "fwd", "bwd" or ""
    std::string condition;  // C1, C3, C4, C5
    std::string detail;
};

struct AuditReport {
    std::vector<AuditEntry> violations;
    std::vector<std::string> checked;  // rule/direction labels examined
    bool passes(const std::string& condition) const;
    bool ok() const { return violations.empty(); }
};

// The full rule table plus the display postulates as single-premise rules.
std::vector<RuleSchema> audit_table();
AuditReport audit_belnap_conditions();
AuditReport audit_belnap_conditions(const std::vector<RuleSchema>& table);

}  // namespace cbi
