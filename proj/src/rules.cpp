#include "cbi/rules.hpp"

#include <functional>
#include <map>
#include <set>

#include "cbi/pattern.hpp"

namespace cbi {

namespace {

struct RuleDef {
    Rule rule;
    const char* name;
    const char* symbol;
    std::vector<const char*> premises;
    const char* conclusion;
    bool bidirectional;
};

const std::vector<RuleDef>& defs() {
    static const std::vector<RuleDef> d = {
        {Rule::Id, "Id", "Id", {}, "P |- P", false},
        {Rule::Cut, "Cut", "Cut", {"X |- F", "F |- Y"}, "X |- Y", false},
        {Rule::DisplayEq, "DisplayEq", "≡D", {}, "", false},
        {Rule::TopL, "TopL", "⊤L", {"AE |- X"}, "top |- X", false},
        {Rule::TopR, "TopR", "⊤R", {}, "AE |- top", false},
        {Rule::BotL, "BotL", "⊥L", {}, "bot |- AE", false},
        {Rule::BotR, "BotR", "⊥R", {"X |- AE"}, "X |- bot", false},
        {Rule::NotL, "NotL", "¬L", {"#F |- X"}, "!F |- X", false},
        {Rule::NotR, "NotR", "¬R", {"X |- #F"}, "X |- !F", false},
        {Rule::AndL, "AndL", "∧L", {"F ; G |- X"}, "F & G |- X", false},
        {Rule::AndR, "AndR", "∧R", {"X |- F", "Y |- G"}, "X ; Y |- F & G", false},
        {Rule::OrL, "OrL", "∨L", {"F |- X", "G |- Y"}, "F | G |- X ; Y", false},
        {Rule::OrR, "OrR", "∨R", {"X |- F ; G"}, "X |- F | G", false},
        {Rule::ImpL, "ImpL", "→L", {"X |- F", "G |- Y"}, "F -> G |- #X ; Y", false},
        {Rule::ImpR, "ImpR", "→R", {"X ; F |- G"}, "X |- F -> G", false},
        {Rule::MTopL, "MTopL", "⊤*L", {"ME |- X"}, "emp |- X", false},
        {Rule::MTopR, "MTopR", "⊤*R", {}, "ME |- emp", false},
        {Rule::MBotL, "MBotL", "⊥*L", {}, "coemp |- ME", false},
        {Rule::MBotR, "MBotR", "⊥*R", {"X |- ME"}, "X |- coemp", false},
        {Rule::MNotL, "MNotL", "∼L", {"%F |- X"}, "~F |- X", false},
        {Rule::MNotR, "MNotR", "∼R", {"X |- %F"}, "X |- ~F", false},
        {Rule::StarL, "StarL", "∗L", {"F , G |- X"}, "F * G |- X", false},
        {Rule::StarR, "StarR", "∗R", {"X |- F", "Y |- G"}, "X , Y |- F * G", false},
        {Rule::ParL, "ParL", "⅋L", {"F |- X", "G |- Y"}, "F |* G |- X , Y", false},
        {Rule::ParR, "ParR", "⅋R", {"X |- F , G"}, "X |- F |* G", false},
        {Rule::WandL, "WandL", "—∗L", {"X |- F", "G |- Y"}, "F -* G |- %X , Y", false},
        {Rule::WandR, "WandR", "—∗R", {"X , F |- G"}, "X |- F -* G", false},
        {Rule::AAL, "AAL", "AAL", {"W ; (X ; Y) |- Z"}, "(W ; X) ; Y |- Z", true},
        {Rule::AAR, "AAR", "AAR", {"W |- (X ; Y) ; Z"}, "W |- X ; (Y ; Z)", true},
        {Rule::MAL, "MAL", "MAL", {"W , (X , Y) |- Z"}, "(W , X) , Y |- Z", true},
        {Rule::MAR, "MAR", "MAR", {"W |- (X , Y) , Z"}, "W |- X , (Y , Z)", true},
        {Rule::AEL, "AEL", "∅L", {"AE ; X |- Y"}, "X |- Y", true},
        {Rule::AER, "AER", "∅R", {"X |- Y ; AE"}, "X |- Y", true},
        {Rule::MEL, "MEL", "⊘L", {"ME , X |- Y"}, "X |- Y", true},
        {Rule::MER, "MER", "⊘R", {"X |- Y , ME"}, "X |- Y", true},
        {Rule::WkL, "WkL", "WkL", {"X |- Z"}, "X ; Y |- Z", false},
        {Rule::WkR, "WkR", "WkR", {"X |- Z"}, "X |- Y ; Z", false},
        {Rule::CtrL, "CtrL", "CtrL", {"X ; X |- Z"}, "X |- Z", false},
        {Rule::CtrR, "CtrR", "CtrR", {"X |- Z ; Z"}, "X |- Z", false},
    };
    return d;
}

const std::map<Rule, RuleSchema>& schemas() {
    static const std::map<Rule, RuleSchema> m = [] {
        std::map<Rule, RuleSchema> out;
        for (const auto& d : defs()) {
            if (d.rule == Rule::DisplayEq) continue;
            std::vector<Consecution> prem;
            for (const char* p : d.premises) prem.push_back(parse_consecution(p));
            out.emplace(d.rule, RuleSchema{d.name, d.symbol, std::move(prem), parse_consecution(d.conclusion),
                                           d.bidirectional});
        }
        return out;
    }();
    return m;
}

const RuleDef& def(Rule r) {
    for (const auto& d : defs())
        if (d.rule == r) return d;
    throw std::logic_error("unknown rule");
}

}  // namespace

const std::vector<Rule>& all_rules() {
    static const std::vector<Rule> v = [] {
        std::vector<Rule> out;
        for (const auto& d : defs()) out.push_back(d.rule);
        return out;
    }();
    return v;
}

std::string to_string(Rule r) { return def(r).name; }
std::string symbol(Rule r) { return def(r).symbol; }
bool is_bidirectional(Rule r) { return def(r).bidirectional; }

std::optional<Rule> rule_from_string(const std::string& s) {
    for (const auto& d : defs())
        if (s == d.name || s == d.symbol) return d.rule;
    return std::nullopt;
}

const RuleSchema* schema(Rule r) {
    auto it = schemas().find(r);
    return it == schemas().end() ? nullptr : &it->second;
}

InstanceCheck check_rule_instance(Rule r, const Consecution& conclusion, const std::vector<Consecution>& premises,
                                  const RuleAux& aux) {
    InstanceCheck res;
    auto fail = [&](std::string msg) {
        res.ok = false;
        res.error = std::move(msg);
        return res;
    };
    if (r == Rule::DisplayEq) {
        if (premises.size() != 1) return fail("DisplayEq takes exactly one premise");
        Consecution cur = conclusion;
        for (std::size_t i = 0; i < aux.trace.size(); ++i) {
            auto n = try_postulate(cur, aux.trace[i]);
            if (!n)
                return fail("postulate step " + std::to_string(i) + " (" + to_string(aux.trace[i]) +
                            ") does not apply to " + render(cur));
            cur = *n;
        }
        if (cur != premises[0])
            return fail("trace replay reaches " + render(cur) + ", not the premise " + render(premises[0]));
        return res;
    }
    const RuleSchema* s = schema(r);
    if (!s->bidirectional && aux.direction == Direction::Backward)
        return fail(s->name + " is not bidirectional");
    bool backward = s->bidirectional && aux.direction == Direction::Backward;
    const Consecution& concl_pat = backward ? s->premises[0] : s->conclusion;
    std::vector<Consecution> prem_pats = backward ? std::vector<Consecution>{s->conclusion} : s->premises;
    if (premises.size() != prem_pats.size())
        return fail(s->name + " takes " + std::to_string(prem_pats.size()) + " premise(s), got " +
                    std::to_string(premises.size()));
    Bindings b;
    std::string where;
    if (!match(concl_pat, conclusion, b, &where, "conclusion."))
        return fail(s->name + ": conclusion does not match " + render(concl_pat) + " at " + where);
    for (std::size_t i = 0; i < premises.size(); ++i)
        if (!match(prem_pats[i], premises[i], b, &where, "premise" + std::to_string(i) + "."))
            return fail(s->name + ": premise " + std::to_string(i) + " does not match " + render(prem_pats[i]) +
                        " at " + where);
    return res;
}

bool AuditReport::passes(const std::string& condition) const {
    for (const auto& v : violations)
        if (v.condition == condition) return false;
    return true;
}

std::vector<RuleSchema> audit_table() {
    std::vector<RuleSchema> out;
    for (Rule r : all_rules())
        if (const RuleSchema* s = schema(r)) out.push_back(*s);
    for (Postulate p : all_postulates()) {
        out.push_back(RuleSchema{to_string(p), to_string(p), {postulate_source(p)}, postulate_target(p), true});
    }
    return out;
}

namespace {

struct Occurrence {
    std::string var;
    Part part;
};

// Structure-variable occurrences with their part classification.
void structure_vars(const Consecution& c, std::vector<Occurrence>& out) {
    for (const Path& p : all_paths(c)) {
        const Structure& s = at(c, p);
        if (s.kind() == SKind::Leaf && s.formula().op() == Op::Var && is_structure_var(s.formula().name()))
            out.push_back({s.formula().name(), classify_part(c, p)});
    }
}

std::set<std::string> all_vars(const Consecution& c) {
    std::set<std::string> out;
    for (const Formula& f : leaf_formulas(c))
        for (const auto& v : vars(f)) out.insert(v);
    return out;
}

bool is_variable_leaf(const Structure& s) {
    return s.kind() == SKind::Leaf && s.formula().op() == Op::Var &&
           (is_structure_var(s.formula().name()) || is_formula_var(s.formula().name()));
}

void audit_direction(const std::string& name, const std::string& dir, const std::vector<Consecution>& premises,
                     const Consecution& conclusion, AuditReport& rep) {
    rep.checked.push_back(name + (dir.empty() ? "" : " " + dir));
    auto flag = [&](const std::string& cond, const std::string& detail) {
        rep.violations.push_back({name, dir, cond, detail});
    };
    // C1: whatever occurs in a premise occurs in the conclusion
    std::set<std::string> concl_vars = all_vars(conclusion);
    if (name != "Cut") {
        for (const auto& p : premises)
            for (const auto& v : all_vars(p))
                if (!concl_vars.count(v)) flag("C1", v + " occurs in a premise but not in the conclusion");
    }
    // C3: each structure variable occurs exactly once in the conclusion
    std::vector<Occurrence> concl_occ;
    structure_vars(conclusion, concl_occ);
    std::map<std::string, int> count;
    for (const auto& o : concl_occ) ++count[o.var];
    for (const auto& [v, k] : count)
        if (k != 1) flag("C3", v + " occurs " + std::to_string(k) + " times in the conclusion");
    // C4: a structure variable is always antecedent or always consequent
    std::vector<Occurrence> occ = concl_occ;
    for (const auto& p : premises) structure_vars(p, occ);
    std::map<std::string, std::set<Part>> parts;
    for (const auto& o : occ) parts[o.var].insert(o.part);
    for (const auto& [v, ps] : parts)
        if (ps.size() > 1) flag("C4", v + " occurs both as antecedent and as consequent part");
    // C5: a principal (non-variable) formula in the conclusion is a whole side
    for (const Path& p : all_paths(conclusion)) {
        const Structure& s = at(conclusion, p);
        if (s.kind() != SKind::Leaf || is_variable_leaf(s)) continue;
        if (!p.steps.empty())
            flag("C5", "principal formula " + render(s.formula()) + " is not displayed (" + render(p) + ")");
    }
}

}  // namespace

AuditReport audit_belnap_conditions(const std::vector<RuleSchema>& table) {
    AuditReport rep;
    for (const auto& s : table) {
        if (s.bidirectional) {
            audit_direction(s.name, "fwd", s.premises, s.conclusion, rep);
            audit_direction(s.name, "bwd", {s.conclusion}, s.premises.at(0), rep);
        } else {
            audit_direction(s.name, "", s.premises, s.conclusion, rep);
        }
    }
    return rep;
}

AuditReport audit_belnap_conditions() { return audit_belnap_conditions(audit_table()); }

}  // namespace cbi
