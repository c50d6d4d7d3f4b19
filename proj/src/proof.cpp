#include "cbi/proof.hpp"

#include <set>
#include <stdexcept>

namespace cbi {

std::size_t Proof::node_count() const {
    std::size_t n = 1;
    for (const auto& p : premises) n += p.node_count();
    return n;
}

namespace {

void check_node(const Proof& p, const std::string& where, ProofReport& rep) {
    if (p.rule == Rule::Cut) rep.cut_free = false;
    if (p.rule != Rule::DisplayEq && !p.trace.empty()) {
        rep.ok = false;
        rep.errors.push_back({where, "only DisplayEq nodes carry a postulate trace"});
    }
    if (p.direction && !is_bidirectional(p.rule)) {
        rep.ok = false;
        rep.errors.push_back({where, to_string(p.rule) + " is not bidirectional; no direction expected"});
    }
    std::vector<Consecution> prem;
    for (const auto& s : p.premises) prem.push_back(s.conclusion);
    auto res = check_rule_instance(p.rule, p.conclusion, prem, RuleAux{p.direction, p.trace});
    if (!res.ok) {
        rep.ok = false;
        rep.errors.push_back({where, res.error});
    }
    for (std::size_t i = 0; i < p.premises.size(); ++i)
        check_node(p.premises[i], where + "." + std::to_string(i), rep);
}

void collect_formulas(const Proof& p, std::set<Formula>& out) {
    for (const Formula& f : leaf_formulas(p.conclusion)) out.insert(f);
    for (const auto& s : p.premises) collect_formulas(s, out);
}

void collect_instances(const Proof& p, std::vector<RuleInstance>& out) {
    RuleInstance ri{p.rule, p.conclusion, {}};
    for (const auto& s : p.premises) ri.premises.push_back(s.conclusion);
    out.push_back(std::move(ri));
    for (const auto& s : p.premises) collect_instances(s, out);
}

}  // namespace

ProofReport check_proof(const Proof& p) {
    ProofReport rep;
    check_node(p, "root", rep);
    if (!rep.cut_free) {
        rep.subformula_ok = false;
        return rep;
    }
    std::set<Formula> allowed;
    for (const Formula& f : leaf_formulas(p.conclusion))
        for (const Formula& g : subformulas(f)) allowed.insert(g);
    std::set<Formula> used;
    collect_formulas(p, used);
    for (const Formula& f : used)
        if (!allowed.count(f)) {
            rep.subformula_ok = false;
            break;
        }
    return rep;
}

std::vector<RuleInstance> rule_instances(const Proof& p) {
    std::vector<RuleInstance> out;
    collect_instances(p, out);
    return out;
}

Trace invert(const Trace& t) {
    Trace out;
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        out.push_back({it->name, it->dir == Direction::Forward ? Direction::Backward : Direction::Forward});
    return out;
}

Proof axiom(Rule r, const Consecution& c) { return Proof{c, r, std::nullopt, {}, {}}; }

Proof infer(Rule r, const Consecution& c, std::vector<Proof> premises, std::optional<Direction> dir) {
    return Proof{c, r, dir, {}, std::move(premises)};
}

Proof display_down(Proof sub, const Trace& forward) {
    if (forward.empty()) return sub;
    Consecution c = replay(sub.conclusion, forward);
    Trace t = invert(forward);
    return Proof{c, Rule::DisplayEq, std::nullopt, std::move(t), {std::move(sub)}};
}

Proof identity_proof(const Formula& f) {
    using S = Structure;
    const auto F = Direction::Forward, B = Direction::Backward;
    auto L = [](const Formula& g) { return S::leaf(g); };
    auto seq = [](S a, S b) { return Consecution{std::move(a), std::move(b)}; };
    S self = L(f);
    switch (f.op()) {
    case Op::Var: return axiom(Rule::Id, seq(self, self));
    case Op::Top: return infer(Rule::TopL, seq(self, self), {axiom(Rule::TopR, seq(S::aempty(), self))});
    case Op::Bot: return infer(Rule::BotR, seq(self, self), {axiom(Rule::BotL, seq(self, S::aempty()))});
    case Op::MTop: return infer(Rule::MTopL, seq(self, self), {axiom(Rule::MTopR, seq(S::mempty(), self))});
    case Op::MBot: return infer(Rule::MBotR, seq(self, self), {axiom(Rule::MBotL, seq(self, S::mempty()))});
    case Op::Not:
    case Op::MNot: {
        bool add = f.op() == Op::Not;
        S neg = add ? S::sharp(L(f.child())) : S::flat(L(f.child()));
        Proof d = display_down(identity_proof(f.child()), {{add ? Postulate::AD3a : Postulate::MD3a, F}});
        Proof l = infer(add ? Rule::NotL : Rule::MNotL, seq(self, neg), {std::move(d)});
        return infer(add ? Rule::NotR : Rule::MNotR, seq(self, self), {std::move(l)});
    }
    case Op::And: {
        S a = L(f.left()), b = L(f.right());
        Proof left = infer(Rule::AndL, seq(self, a),
                           {infer(Rule::WkL, seq(S::semi(a, b), a), {identity_proof(f.left())})});
        Proof wk = infer(Rule::WkL, seq(S::semi(b, a), b), {identity_proof(f.right())});
        Proof right = infer(Rule::AndL, seq(self, b),
                            {display_down(std::move(wk), {{Postulate::AD1a, F}, {Postulate::AD1b, F}})});
        Proof both = infer(Rule::AndR, seq(S::semi(self, self), self), {std::move(left), std::move(right)});
        return infer(Rule::CtrL, seq(self, self), {std::move(both)});
    }
    case Op::Or: {
        S a = L(f.left()), b = L(f.right());
        Proof wk = infer(Rule::WkR, seq(a, S::semi(b, a)), {identity_proof(f.left())});
        Proof left = infer(Rule::OrR, seq(a, self),
                           {display_down(std::move(wk), {{Postulate::AD2a, F}, {Postulate::AD2b, F}})});
        Proof right = infer(Rule::OrR, seq(b, self),
                            {infer(Rule::WkR, seq(b, S::semi(a, b)), {identity_proof(f.right())})});
        Proof both = infer(Rule::OrL, seq(self, S::semi(self, self)), {std::move(left), std::move(right)});
        return infer(Rule::CtrR, seq(self, self), {std::move(both)});
    }
    case Op::Imp:
    case Op::Wand: {
        bool add = f.op() == Op::Imp;
        S a = L(f.left()), b = L(f.right());
        S rhs = add ? S::semi(S::sharp(a), b) : S::comma(S::flat(a), b);
        Proof l = infer(add ? Rule::ImpL : Rule::WandL, seq(self, rhs),
                        {identity_proof(f.left()), identity_proof(f.right())});
        Proof d = display_down(std::move(l), {{add ? Postulate::AD1a : Postulate::MD1a, B}});
        return infer(add ? Rule::ImpR : Rule::WandR, seq(self, self), {std::move(d)});
    }
    case Op::Star: {
        S a = L(f.left()), b = L(f.right());
        Proof r = infer(Rule::StarR, seq(S::comma(a, b), self), {identity_proof(f.left()), identity_proof(f.right())});
        return infer(Rule::StarL, seq(self, self), {std::move(r)});
    }
    case Op::Par: {
        S a = L(f.left()), b = L(f.right());
        Proof l = infer(Rule::ParL, seq(self, S::comma(a, b)), {identity_proof(f.left()), identity_proof(f.right())});
        return infer(Rule::ParR, seq(self, self), {std::move(l)});
    }
    }
    throw std::logic_error("identity_proof: unknown connective");
}

// ---------------------------------------------------------------- JSON

json structure_to_json(const Structure& s) {
    switch (s.kind()) {
    case SKind::Leaf: return json{{"f", render(s.formula())}};
    case SKind::AEmpty: return json{{"ae", nullptr}};
    case SKind::MEmpty: return json{{"me", nullptr}};
    case SKind::Sharp: return json{{"sharp", structure_to_json(s.child())}};
    case SKind::Flat: return json{{"flat", structure_to_json(s.child())}};
    case SKind::Semi: return json{{"semi", json::array({structure_to_json(s.left()), structure_to_json(s.right())})}};
    case SKind::Comma:
        return json{{"comma", json::array({structure_to_json(s.left()), structure_to_json(s.right())})}};
    }
    return nullptr;
}

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
    throw std::invalid_argument(where + ": " + msg);
}

Structure structure_at(const json& j, const std::string& where) {
    if (!j.is_object() || j.size() != 1) bad(where, "expected a structure object with exactly one tag");
    const auto& [tag, v] = *j.items().begin();
    auto pair = [&](const char* t) {
        if (!v.is_array() || v.size() != 2) bad(where + "/" + t, "expected a two-element array");
        return std::make_pair(structure_at(v[0], where + "/" + t + "/0"), structure_at(v[1], where + "/" + t + "/1"));
    };
    if (tag == "f") {
        if (!v.is_string()) bad(where + "/f", "expected a formula string");
        try {
            return Structure::leaf(parse_formula(v.get<std::string>()));
        } catch (const std::exception& e) {
            bad(where + "/f", e.what());
        }
    }
    if (tag == "ae") return Structure::aempty();
    if (tag == "me") return Structure::mempty();
    if (tag == "sharp") return Structure::sharp(structure_at(v, where + "/sharp"));
    if (tag == "flat") return Structure::flat(structure_at(v, where + "/flat"));
    if (tag == "semi") {
        auto [a, b] = pair("semi");
        return Structure::semi(a, b);
    }
    if (tag == "comma") {
        auto [a, b] = pair("comma");
        return Structure::comma(a, b);
    }
    bad(where, "unknown structure tag '" + tag + "'");
}

Consecution consecution_at(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return parse_consecution(j.get<std::string>());
        } catch (const std::exception& e) {
            bad(where, e.what());
        }
    }
    if (!j.is_object() || !j.contains("lhs") || !j.contains("rhs")) bad(where, "expected {\"lhs\":…, \"rhs\":…}");
    return {structure_at(j["lhs"], where + "/lhs"), structure_at(j["rhs"], where + "/rhs")};
}

Proof proof_at(const json& j, const std::string& where) {
    if (!j.is_object()) bad(where, "expected a proof object");
    if (!j.contains("conclusion")) bad(where, "missing conclusion");
    if (!j.contains("rule") || !j["rule"].is_string()) bad(where, "missing rule name");
    Proof p;
    p.conclusion = consecution_at(j["conclusion"], where + "/conclusion");
    auto r = rule_from_string(j["rule"].get<std::string>());
    if (!r) bad(where + "/rule", "unknown rule '" + j["rule"].get<std::string>() + "'");
    p.rule = *r;
    if (j.contains("direction") && !j["direction"].is_null()) {
        auto d = j["direction"].is_string() ? direction_from_string(j["direction"].get<std::string>()) : std::nullopt;
        if (!d) bad(where + "/direction", "expected \"fwd\" or \"bwd\"");
        p.direction = d;
    }
    if (j.contains("trace")) {
        const json& t = j["trace"];
        if (!t.is_array()) bad(where + "/trace", "expected an array");
        for (std::size_t i = 0; i < t.size(); ++i) {
            std::string w = where + "/trace/" + std::to_string(i);
            std::string name, dir = "fwd";
            if (t[i].is_string()) {
                // "AD1a" or "AD1a bwd"
                std::string s = t[i].get<std::string>();
                auto sp = s.find(' ');
                name = s.substr(0, sp);
                if (sp != std::string::npos) dir = s.substr(sp + 1);
            } else if (t[i].is_object() && t[i].contains("name")) {
                name = t[i]["name"].get<std::string>();
                if (t[i].contains("direction")) dir = t[i]["direction"].get<std::string>();
            } else {
                bad(w, "expected a postulate step");
            }
            auto pn = postulate_from_string(name);
            auto pd = direction_from_string(dir);
            if (!pn) bad(w, "unknown postulate '" + name + "'");
            if (!pd) bad(w, "unknown direction '" + dir + "'");
            p.trace.push_back({*pn, *pd});
        }
    }
    if (j.contains("premises")) {
        const json& ps = j["premises"];
        if (!ps.is_array()) bad(where + "/premises", "expected an array");
        for (std::size_t i = 0; i < ps.size(); ++i)
            p.premises.push_back(proof_at(ps[i], where + "/premises/" + std::to_string(i)));
    }
    return p;
}

}  // namespace

Structure structure_from_json(const json& j) { return structure_at(j, ""); }

json consecution_to_json(const Consecution& c) {
    return json{{"lhs", structure_to_json(c.lhs)}, {"rhs", structure_to_json(c.rhs)}};
}

Consecution consecution_from_json(const json& j) { return consecution_at(j, ""); }

json proof_to_json(const Proof& p) {
    json j;
    j["conclusion"] = consecution_to_json(p.conclusion);
    j["rule"] = to_string(p.rule);
    if (p.direction) j["direction"] = to_string(*p.direction);
    if (p.rule == Rule::DisplayEq) {
        j["trace"] = json::array();
        for (const auto& s : p.trace) j["trace"].push_back({{"name", to_string(s.name)}, {"direction", to_string(s.dir)}});
    }
    j["premises"] = json::array();
    for (const auto& s : p.premises) j["premises"].push_back(proof_to_json(s));
    return j;
}

Proof proof_from_json(const json& j) { return proof_at(j, ""); }

}  // namespace cbi
