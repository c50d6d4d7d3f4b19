#include "cbi/search.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "cbi/builders.hpp"
#include "cbi/search_models.hpp"

namespace cbi {

std::vector<std::string> default_rule_order() {
    return {"axiom", "invertible", "logical-right", "logical-left", "unit", "weakening", "contraction"};
}

// ------------------------------------------------------------ canonical form

namespace {

void chain_operands(const Structure& s, SKind k, std::vector<Structure>& out) {
    if (s.kind() == k) {
        chain_operands(s.left(), k, out);
        chain_operands(s.right(), k, out);
    } else {
        out.push_back(s);
    }
}

Structure canon(const Structure& s) {
    switch (s.kind()) {
    case SKind::Leaf:
    case SKind::AEmpty:
    case SKind::MEmpty: return s;
    case SKind::Sharp:
    case SKind::Flat: {
        Structure c = canon(s.child());
        if (c.kind() == s.kind()) return c.child();
        return s.kind() == SKind::Sharp ? Structure::sharp(c) : Structure::flat(c);
    }
    case SKind::Semi:
    case SKind::Comma: {
        std::vector<Structure> ops;
        chain_operands(canon(s.left()), s.kind(), ops);
        chain_operands(canon(s.right()), s.kind(), ops);
        std::sort(ops.begin(), ops.end());
        Structure acc = ops.back();
        for (std::size_t i = ops.size() - 1; i-- > 0;)
            acc = s.kind() == SKind::Semi ? Structure::semi(ops[i], acc) : Structure::comma(ops[i], acc);
        return acc;
    }
    }
    return s;
}

}  // namespace

Consecution canonical_form(const Consecution& c) { return {canon(c.lhs), canon(c.rhs)}; }

// ------------------------------------------------------------ search

namespace {

using S = Structure;
constexpr auto F = Direction::Forward;
constexpr auto B = Direction::Backward;
using P = Postulate;

struct BudgetExceeded {};

bool contains(const Structure& s, SKind k) {
    if (s.kind() == k) return true;
    for (const auto& c : s.kids())
        if (contains(c, k)) return true;
    return false;
}

bool contains(const Consecution& c, SKind k) { return contains(c.lhs, k) || contains(c.rhs, k); }

bool has_formula(const Structure& s) {
    if (s.kind() == SKind::Leaf) return true;
    for (const auto& k : s.kids())
        if (has_formula(k)) return true;
    return false;
}

// A goal as reached after some postulate steps from the node's conclusion.
struct View {
    Consecution c;
    Trace trace;

    void step(Postulate p, Direction d) {
        c = apply_postulate(c, {p, d});
        trace.push_back({p, d});
    }
    void steps(std::initializer_list<PostulateStep> ss) {
        for (const auto& s : ss) step(s.name, s.dir);
    }
};

View display(const Consecution& g, const Path& p) {
    Displayed d = display_at(g, p);
    return {d.result, d.trace};
}

// (A;B |- Z) -> (B;A |- Z), and the multiplicative / consequent analogues.
void commute_lhs(View& v) {
    if (v.c.lhs.kind() == SKind::Semi) v.steps({{P::AD1a, F}, {P::AD1b, F}});
    else v.steps({{P::MD1a, F}, {P::MD1b, F}});
}
void commute_rhs(View& v) {
    if (v.c.rhs.kind() == SKind::Semi) v.steps({{P::AD2a, F}, {P::AD2b, F}});
    else v.steps({{P::MD2a, F}, {P::MD2b, F}});
}

// Removes ## and %% stacks from the top of the antecedent.
void strip_lhs(View& v) {
    for (;;) {
        const S& l = v.c.lhs;
        if (l.kind() == SKind::Sharp && l.child().kind() == SKind::Sharp) v.steps({{P::AD3b, B}, {P::AD3a, B}});
        else if (l.kind() == SKind::Flat && l.child().kind() == SKind::Flat) v.steps({{P::MD3b, B}, {P::MD3a, B}});
        else return;
    }
}

// Removes ## and %% stacks from the top of the consequent.
void strip_rhs(View& v) {
    for (;;) {
        const S& r = v.c.rhs;
        if (r.kind() == SKind::Sharp && r.child().kind() == SKind::Sharp) v.step(P::AD3a, F);
        else if (r.kind() == SKind::Flat && r.child().kind() == SKind::Flat) v.step(P::MD3a, F);
        else return;
        // X |- aaW  ~>  aaaW |- aX  ~>  aW |- aX  ~>  aaX |- W  ~>  X |- W
        bool sharp = v.c.lhs.kind() == SKind::Sharp;
        v.steps({{sharp ? P::AD3b : P::MD3b, B}, {sharp ? P::AD3a : P::MD3a, B}});
        v.step(sharp ? P::AD3b : P::MD3b, F);
        v.steps({{sharp ? P::AD3b : P::MD3b, B}, {sharp ? P::AD3a : P::MD3a, B}});
    }
}

bool is_line(const S& s) {
    if (s.is_binary()) return false;
    if (s.is_unary()) return is_line(s.child());
    return s.kind() == SKind::Leaf;
}

// On a consecution built from two leaves and unary connectives only, cancels
// adjacent equal negations until none remain.
void reduce_line(View& v) {
    for (int guard = 0; guard < 64; ++guard) {
        std::optional<Path> pair;
        for (const Path& p : all_paths(v.c)) {
            const S& x = at(v.c, p);
            if (x.is_unary() && x.child().kind() == x.kind()) {
                pair = p;
                break;
            }
        }
        if (pair) {
            bool ant = classify_part(v.c, *pair) == Part::Antecedent;
            Displayed d = display_at(v.c, *pair);
            v.c = d.result;
            v.trace.insert(v.trace.end(), d.trace.begin(), d.trace.end());
            if (ant) strip_lhs(v);
            else strip_rhs(v);
            continue;
        }
        const S& l = v.c.lhs;
        const S& r = v.c.rhs;
        if (l.is_unary() && l.kind() == r.kind()) {
            v.step(l.kind() == SKind::Sharp ? P::AD3b : P::MD3b, F);
            strip_lhs(v);
            continue;
        }
        return;
    }
}

// One backward alternative: premises to prove, and how to assemble the proof.
struct Alternative {
    std::vector<Consecution> goals;
    std::function<Proof(std::vector<Proof>)> build;
    int cost = 1;
    std::string contracted;  // canonical key of a contracted structure, if any
};

Proof wrap(const Consecution& conclusion, const Trace& trace, Proof inner) {
    if (trace.empty()) return inner;
    return Proof{conclusion, Rule::DisplayEq, std::nullopt, trace, {std::move(inner)}};
}

// Builds an alternative whose single rule node sits on view v.
Alternative single(const Consecution& goal, const View& v, Rule r, std::vector<Consecution> prem,
                   std::optional<Direction> dir = std::nullopt) {
    Alternative a;
    a.goals = prem;
    Consecution at_rule = v.c;
    Trace tr = v.trace;
    a.build = [goal, at_rule, tr, r, dir](std::vector<Proof> ps) {
        return wrap(goal, tr, Proof{at_rule, r, dir, {}, std::move(ps)});
    };
    return a;
}

// Two rule nodes: r1 on view `outer`, whose premise `mid` is rewritten by
// `inner` (a view starting at mid) before r2 applies.
Alternative twostep(const Consecution& goal, const View& outer, Rule r1, std::optional<Direction> d1,
                    const Consecution& mid, const View& inner, Rule r2, std::vector<Consecution> prem) {
    Alternative a;
    a.goals = std::move(prem);
    a.cost = 2;
    Consecution c1 = outer.c, c2 = inner.c;
    Trace t1 = outer.trace, t2 = inner.trace;
    a.build = [goal, c1, c2, mid, t1, t2, r1, d1, r2](std::vector<Proof> ps) {
        Proof second = wrap(mid, t2, Proof{c2, r2, std::nullopt, {}, std::move(ps)});
        return wrap(goal, t1, Proof{c1, r1, d1, {}, {std::move(second)}});
    };
    return a;
}

class Searcher {
public:
    Searcher(const SearchConfig& cfg, SearchStats& st) : cfg_(cfg), st_(st) {
        models_ = cfg.pruning_models;
        if (cfg.semantic_pruning && models_.empty()) {
            for (auto& m : enumerate_cbi_models(3, true)) models_.push_back(m);
            models_.push_back(non_functional_cbi_model());
            models_.push_back(z_mod(4, 1));
            models_.push_back(powerset_model({"1", "2"}));
        }
    }

    std::optional<Proof> run(const Consecution& c, int bound) {
        max_size_ = std::max(cfg_.max_goal_size, c.lhs.size() + c.rhs.size());
        fail_memo_.clear();
        ancestors_.clear();
        contracted_.clear();
        return solve(c, bound);
    }

private:
    const SearchConfig& cfg_;
    SearchStats& st_;
    std::vector<ResourceModel> models_;
    std::map<Consecution, bool> valid_cache_;
    std::map<Consecution, int> fail_memo_;
    std::set<Consecution> ancestors_;
    std::multiset<std::string> contracted_;
    std::size_t max_size_ = 0;
    std::map<Consecution, std::optional<Proof>> closure_cache_;
    static constexpr const char* kMark = "@";

    Consecution key(const Consecution& c) const { return cfg_.canonicalize ? canonical_form(c) : c; }

    bool refuted(const Consecution& c) {
        Consecution k = canonical_form(c);
        auto it = valid_cache_.find(k);
        if (it != valid_cache_.end()) return !it->second;
        bool valid = true;
        TruthBudget tb{1u << 12};
        for (const auto& m : models_) {
            TruthResult r = consecution_truth(m, k, tb);
            if (r.verdict == Verdict::False) {
                valid = false;
                break;
            }
        }
        valid_cache_.emplace(k, valid);
        return !valid;
    }

    std::optional<Proof> solve(const Consecution& g, int budget) {
        if (++st_.nodes > cfg_.node_budget) throw BudgetExceeded{};
        if (budget <= 0) return std::nullopt;
        if (!has_formula(g.lhs) && !has_formula(g.rhs)) {
            ++st_.pruned_formula_free;
            return std::nullopt;
        }
        if (auto ax = close(g)) return ax;
        if (auto wc = weaken_close(g)) return wc;
        if (g.lhs.size() + g.rhs.size() > max_size_) return std::nullopt;
        Consecution k = key(g);
        if (ancestors_.count(k)) {
            ++st_.pruned_loop;
            return std::nullopt;
        }
        if (cfg_.semantic_pruning && refuted(g)) {
            ++st_.pruned_semantic;
            return std::nullopt;
        }
        auto memo = fail_memo_.find(k);
        if (memo != fail_memo_.end() && memo->second >= budget) return std::nullopt;

        ancestors_.insert(k);
        std::optional<Proof> found;
        if (auto inv = invertible(g)) {
            found = attempt(*inv, budget);
        } else {
            for (auto& alt : alternatives(g)) {
                if (!alt.contracted.empty()) {
                    if (contracted_.count(alt.contracted)) continue;
                    contracted_.insert(alt.contracted);
                }
                found = attempt(alt, budget);
                if (!alt.contracted.empty()) contracted_.erase(contracted_.find(alt.contracted));
                if (found) break;
            }
        }
        ancestors_.erase(k);
        if (!found) {
            int& m = fail_memo_[k];
            m = std::max(m, budget);
        }
        return found;
    }

    std::optional<Proof> attempt(const Alternative& alt, int budget) {
        std::vector<Proof> ps;
        for (const auto& sub : alt.goals) {
            auto p = solve(sub, budget - alt.cost);
            if (!p) return std::nullopt;
            ps.push_back(std::move(*p));
        }
        Proof out = alt.build(std::move(ps));
        return out;
    }

    // Axioms, modulo display and ##/%% stacks on the antecedent.
    std::optional<Proof> close(const Consecution& g) {
        for (const Path& p : all_paths(g)) {
            const S& s = at(g, p);
            if (s.is_binary() || s.is_unary()) continue;
            if (classify_part(g, p) != Part::Consequent) continue;
            View v = display(g, p);
            strip_lhs(v);
            if (v.trace.size() > cfg_.postulate_budget) continue;
            const S& l = v.c.lhs;
            const S& r = v.c.rhs;
            std::optional<Rule> rule;
            auto leaf_op = [](const S& x, Op op) { return x.kind() == SKind::Leaf && x.formula().op() == op; };
            if (leaf_op(r, Op::Var) && l == r) rule = Rule::Id;
            else if (leaf_op(r, Op::Top) && l.kind() == SKind::AEmpty) rule = Rule::TopR;
            else if (r.kind() == SKind::AEmpty && leaf_op(l, Op::Bot)) rule = Rule::BotL;
            else if (leaf_op(r, Op::MTop) && l.kind() == SKind::MEmpty) rule = Rule::MTopR;
            else if (r.kind() == SKind::MEmpty && leaf_op(l, Op::MBot)) rule = Rule::MBotL;
            if (rule) return wrap(g, v.trace, axiom(*rule, v.c));
        }
        return std::nullopt;
    }

    // Id after weakening: pick an antecedent and a consequent occurrence of the
    // same atom, mark both, and greedily delete every bunch that holds neither
    // mark.  Deterministic and size-decreasing, so it does not branch the search.
    std::optional<Proof> weaken_close(const Consecution& g) {
        auto hit = closure_cache_.find(g);
        if (hit != closure_cache_.end()) return hit->second;
        std::optional<Proof> found;
        std::vector<Path> paths = all_paths(g);
        for (const Path& pc : paths) {
            const S& c = at(g, pc);
            if (c.kind() != SKind::Leaf || !c.formula().is_atom()) continue;
            if (classify_part(g, pc) != Part::Consequent) continue;
            for (const Path& pa : paths) {
                const S& a = at(g, pa);
                if (a != c || classify_part(g, pa) != Part::Antecedent) continue;
                S mark = S::leaf(Formula::var(kMark));
                Consecution m = replace_at(replace_at(g, pa, mark), pc, mark);
                if (auto pr = prune_to_marks(m)) {
                    found = unmark(*pr, c);
                    break;
                }
            }
            if (found) break;
        }
        closure_cache_.emplace(g, found);
        return found;
    }

    std::optional<Proof> prune_to_marks(const Consecution& m) {
        if (auto ax = close(m)) return ax;
        if (is_line(m.lhs) && is_line(m.rhs)) {
            View v{m, {}};
            reduce_line(v);
            if (!v.c.lhs.is_unary() && !v.c.rhs.is_unary() && v.c.lhs == v.c.rhs &&
                v.trace.size() <= cfg_.postulate_budget)
                return wrap(m, v.trace, axiom(Rule::Id, v.c));
            return std::nullopt;
        }
        std::vector<Path> paths = all_paths(m);
        std::vector<Alternative> dels;
        weakenings(m, paths, dels);
        unit_deletions(m, paths, dels);
        for (auto& alt : dels) {
            if (marks(alt.goals[0]) != 2) continue;
            auto sub = prune_to_marks(alt.goals[0]);
            if (!sub) return std::nullopt;
            return alt.build({std::move(*sub)});
        }
        return std::nullopt;
    }

    static int marks(const S& s) {
        if (s.kind() == SKind::Leaf) return s.formula().op() == Op::Var && s.formula().name() == kMark;
        int n = 0;
        for (const auto& k : s.kids()) n += marks(k);
        return n;
    }
    static int marks(const Consecution& c) { return marks(c.lhs) + marks(c.rhs); }

    static S unmark(const S& s, const S& atom) {
        switch (s.kind()) {
        case SKind::Leaf: return marks(s) ? atom : s;
        case SKind::AEmpty:
        case SKind::MEmpty: return s;
        case SKind::Sharp: return S::sharp(unmark(s.child(), atom));
        case SKind::Flat: return S::flat(unmark(s.child(), atom));
        case SKind::Semi: return S::semi(unmark(s.left(), atom), unmark(s.right(), atom));
        case SKind::Comma: return S::comma(unmark(s.left(), atom), unmark(s.right(), atom));
        }
        return s;
    }
    static Proof unmark(Proof p, const S& atom) {
        p.conclusion = {unmark(p.conclusion.lhs, atom), unmark(p.conclusion.rhs, atom)};
        for (auto& q : p.premises) q = unmark(std::move(q), atom);
        return p;
    }

    // The first formula, in path order, whose rule for its part is invertible.
    std::optional<Alternative> invertible(const Consecution& g) {
        for (const Path& p : all_paths(g)) {
            const S& s = at(g, p);
            if (s.kind() != SKind::Leaf) continue;
            const Formula& f = s.formula();
            bool ant = classify_part(g, p) == Part::Antecedent;
            std::optional<Rule> r;
            if (ant) {
                switch (f.op()) {
                case Op::Not: r = Rule::NotL; break;
                case Op::MNot: r = Rule::MNotL; break;
                case Op::And: r = Rule::AndL; break;
                case Op::Star: r = Rule::StarL; break;
                case Op::Top: r = Rule::TopL; break;
                case Op::MTop: r = Rule::MTopL; break;
                default: break;
                }
            } else {
                switch (f.op()) {
                case Op::Not: r = Rule::NotR; break;
                case Op::MNot: r = Rule::MNotR; break;
                case Op::Or: r = Rule::OrR; break;
                case Op::Par: r = Rule::ParR; break;
                case Op::Imp: r = Rule::ImpR; break;
                case Op::Wand: r = Rule::WandR; break;
                case Op::Bot: r = Rule::BotR; break;
                case Op::MBot: r = Rule::MBotR; break;
                default: break;
                }
            }
            if (!r) continue;
            // Constants that already close an axiom are left alone.
            if ((f.op() == Op::Top || f.op() == Op::MTop) && ant == false) continue;
            View v = display(g, p);
            const S& other = ant ? v.c.rhs : v.c.lhs;
            Consecution prem = v.c;
            switch (*r) {
            case Rule::NotL: prem = {S::sharp(S::leaf(f.child())), other}; break;
            case Rule::MNotL: prem = {S::flat(S::leaf(f.child())), other}; break;
            case Rule::AndL: prem = {S::semi(S::leaf(f.left()), S::leaf(f.right())), other}; break;
            case Rule::StarL: prem = {S::comma(S::leaf(f.left()), S::leaf(f.right())), other}; break;
            case Rule::TopL: prem = {S::aempty(), other}; break;
            case Rule::MTopL: prem = {S::mempty(), other}; break;
            case Rule::NotR: prem = {other, S::sharp(S::leaf(f.child()))}; break;
            case Rule::MNotR: prem = {other, S::flat(S::leaf(f.child()))}; break;
            case Rule::OrR: prem = {other, S::semi(S::leaf(f.left()), S::leaf(f.right()))}; break;
            case Rule::ParR: prem = {other, S::comma(S::leaf(f.left()), S::leaf(f.right()))}; break;
            case Rule::ImpR: prem = {S::semi(other, S::leaf(f.left())), S::leaf(f.right())}; break;
            case Rule::WandR: prem = {S::comma(other, S::leaf(f.left())), S::leaf(f.right())}; break;
            case Rule::BotR: prem = {other, S::aempty()}; break;
            case Rule::MBotR: prem = {other, S::mempty()}; break;
            default: break;
            }
            return single(g, v, *r, {prem});
        }
        return std::nullopt;
    }

    std::vector<Alternative> alternatives(const Consecution& g) {
        std::vector<Alternative> out;
        std::vector<Path> paths = all_paths(g);
        // logical right, then logical left
        for (bool want_ant : {false, true})
            for (const Path& p : paths) {
                const S& s = at(g, p);
                if (s.kind() != SKind::Leaf) continue;
                bool ant = classify_part(g, p) == Part::Antecedent;
                if (ant != want_ant) continue;
                logical(g, p, s.formula(), ant, out);
            }
        units(g, paths, out);
        weakenings(g, paths, out);
        contractions(g, paths, out);
        return out;
    }

    void logical(const Consecution& g, const Path& p, const Formula& f, bool ant, std::vector<Alternative>& out) {
        auto L = [](const Formula& x) { return S::leaf(x); };
        Op op = f.op();
        if (!ant && (op == Op::And || op == Op::Star)) {
            bool add = op == Op::And;
            Rule r = add ? Rule::AndR : Rule::StarR;
            SKind k = add ? SKind::Semi : SKind::Comma;
            View v = display(g, p);
            const S& x = v.c.lhs;
            if (x.kind() == k) {
                out.push_back(single(g, v, r, {{x.left(), L(f.left())}, {x.right(), L(f.right())}}));
                View w = v;
                commute_lhs(w);
                out.push_back(single(g, w, r, {{w.c.lhs.left(), L(f.left())}, {w.c.lhs.right(), L(f.right())}}));
            }
            if (add) {
                // contract the context, then split it
                Consecution doubled{S::semi(x, x), v.c.rhs};
                out.push_back(twostep(g, v, Rule::CtrL, std::nullopt, doubled, View{doubled, {}}, r,
                                      {{x, L(f.left())}, {x, L(f.right())}}));
            } else {
                // pad with the multiplicative unit
                Consecution padded{S::comma(S::mempty(), x), v.c.rhs};
                View w{padded, {}};
                out.push_back(twostep(g, v, Rule::MEL, F, padded, w, r, {{S::mempty(), L(f.left())}, {x, L(f.right())}}));
                commute_lhs(w);
                out.push_back(twostep(g, v, Rule::MEL, F, padded, w, r, {{x, L(f.left())}, {S::mempty(), L(f.right())}}));
            }
            return;
        }
        if (ant && (op == Op::Or || op == Op::Par)) {
            bool add = op == Op::Or;
            Rule r = add ? Rule::OrL : Rule::ParL;
            SKind k = add ? SKind::Semi : SKind::Comma;
            View v = display(g, p);
            const S& y = v.c.rhs;
            if (y.kind() == k) {
                out.push_back(single(g, v, r, {{L(f.left()), y.left()}, {L(f.right()), y.right()}}));
                View w = v;
                commute_rhs(w);
                out.push_back(single(g, w, r, {{L(f.left()), w.c.rhs.left()}, {L(f.right()), w.c.rhs.right()}}));
            }
            if (add) {
                Consecution doubled{v.c.lhs, S::semi(y, y)};
                out.push_back(twostep(g, v, Rule::CtrR, std::nullopt, doubled, View{doubled, {}}, r,
                                      {{L(f.left()), y}, {L(f.right()), y}}));
            } else {
                Consecution padded{v.c.lhs, S::comma(y, S::mempty())};
                View w{padded, {}};
                out.push_back(twostep(g, v, Rule::MER, F, padded, w, r, {{L(f.left()), y}, {L(f.right()), S::mempty()}}));
                commute_rhs(w);
                out.push_back(twostep(g, v, Rule::MER, F, padded, w, r, {{L(f.left()), S::mempty()}, {L(f.right()), y}}));
            }
            return;
        }
        if (ant && (op == Op::Imp || op == Op::Wand)) {
            bool add = op == Op::Imp;
            Rule r = add ? Rule::ImpL : Rule::WandL;
            SKind k = add ? SKind::Semi : SKind::Comma;
            SKind neg = add ? SKind::Sharp : SKind::Flat;
            View v = display(g, p);
            const S& y = v.c.rhs;
            if (y.kind() == k) {
                if (y.left().kind() == neg)
                    out.push_back(single(g, v, r, {{y.left().child(), L(f.left())}, {L(f.right()), y.right()}}));
                if (y.right().kind() == neg) {
                    View w = v;
                    commute_rhs(w);
                    const S& z = w.c.rhs;
                    out.push_back(single(g, w, r, {{z.left().child(), L(f.left())}, {L(f.right()), z.right()}}));
                }
            }
            // pad the antecedent with a unit and use it as the context
            S unit = add ? S::aempty() : S::mempty();
            Consecution padded{add ? S::semi(unit, v.c.lhs) : S::comma(unit, v.c.lhs), y};
            View w{padded, {}};
            if (add) w.steps({{P::AD1a, F}, {P::AD1b, F}, {P::AD1a, F}});
            else w.steps({{P::MD1a, F}, {P::MD1b, F}, {P::MD1a, F}});
            out.push_back(twostep(g, v, add ? Rule::AEL : Rule::MEL, F, padded, w, r, {{unit, L(f.left())}, {L(f.right()), y}}));
        }
    }

    void units(const Consecution& g, const std::vector<Path>& paths, std::vector<Alternative>& out) {
        unit_deletions(g, paths, out);
        unit_insertions(g, out);
    }

    void unit_deletions(const Consecution& g, const std::vector<Path>& paths, std::vector<Alternative>& out) {
        for (const Path& p : paths) {
            if (p.steps.empty()) continue;
            const S& s = at(g, p);
            bool ae = s.kind() == SKind::AEmpty, me = s.kind() == SKind::MEmpty;
            if (!ae && !me) continue;
            Path parent{p.side, {p.steps.begin(), p.steps.end() - 1}};
            const S& par = at(g, parent);
            if (par.kind() != (ae ? SKind::Semi : SKind::Comma)) continue;
            bool is_left = p.steps.back() == Step::Left;
            View v = display(g, parent);
            bool ant = classify_part(g, parent) == Part::Antecedent;
            if (ant) {
                if (!is_left) commute_lhs(v);  // unit goes to the left
                out.push_back(single(g, v, ae ? Rule::AEL : Rule::MEL, {{v.c.lhs.right(), v.c.rhs}}, B));
            } else {
                if (is_left) commute_rhs(v);  // unit goes to the right
                out.push_back(single(g, v, ae ? Rule::AER : Rule::MER, {{v.c.lhs, v.c.rhs.left()}}, B));
            }
        }
    }

    void unit_insertions(const Consecution& g, std::vector<Alternative>& out) {
        // insert a unit at the top of either side, unless one is already present
        View v{g, {}};
        if (!contains(g, SKind::AEmpty)) {
            out.push_back(single(g, v, Rule::AER, {{g.lhs, S::semi(g.rhs, S::aempty())}}, F));
            out.push_back(single(g, v, Rule::AEL, {{S::semi(S::aempty(), g.lhs), g.rhs}}, F));
        }
        if (!contains(g, SKind::MEmpty)) {
            out.push_back(single(g, v, Rule::MER, {{g.lhs, S::comma(g.rhs, S::mempty())}}, F));
            out.push_back(single(g, v, Rule::MEL, {{S::comma(S::mempty(), g.lhs), g.rhs}}, F));
        }
    }

    void weakenings(const Consecution& g, const std::vector<Path>& paths, std::vector<Alternative>& out) {
        for (const Path& p : paths) {
            if (p.steps.empty()) continue;
            Path parent{p.side, {p.steps.begin(), p.steps.end() - 1}};
            if (at(g, parent).kind() != SKind::Semi) continue;
            bool is_left = p.steps.back() == Step::Left;
            View v = display(g, parent);
            if (classify_part(g, parent) == Part::Antecedent) {
                if (is_left) commute_lhs(v);  // WkL drops the right component
                out.push_back(single(g, v, Rule::WkL, {{v.c.lhs.left(), v.c.rhs}}));
            } else {
                if (!is_left) commute_rhs(v);  // WkR drops the left component
                out.push_back(single(g, v, Rule::WkR, {{v.c.lhs, v.c.rhs.right()}}));
            }
        }
    }

    void contractions(const Consecution& g, const std::vector<Path>& paths, std::vector<Alternative>& out) {
        std::set<Consecution> seen;
        auto add = [&](const Consecution& at_goal, View v) {
            // contract both sides of v in turn
            for (bool left : {true, false}) {
                const S& z = left ? v.c.lhs : v.c.rhs;
                Consecution prem = left ? Consecution{S::semi(z, z), v.c.rhs} : Consecution{v.c.lhs, S::semi(z, z)};
                if (!seen.insert(canonical_form(prem)).second) continue;
                Alternative a = single(at_goal, v, left ? Rule::CtrL : Rule::CtrR, {prem});
                a.contracted = render(canon(z)) + (left ? " |-" : " -|");
                out.push_back(std::move(a));
            }
        };
        for (const Path& p : paths) {
            // displaying leaves and units already exposes every side that
            // display-equivalence can produce around them
            if (at(g, p).is_unary() || at(g, p).is_binary()) continue;
            View v = display(g, p);
            add(g, v);
            View m = v;
            m.step(P::MD3a, F);
            add(g, m);
            View a = v;
            a.step(P::AD3a, F);
            add(g, a);
        }
    }
};

}  // namespace

SearchOutcome prove(const Consecution& c, const SearchConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    SearchOutcome out;
    Searcher s(cfg, out.stats);
    try {
        for (int d = 1; d <= cfg.depth; ++d) {
            if (auto p = s.run(c, d)) {
                out.proved = true;
                out.proof = std::move(p);
                break;
            }
            out.stats.depth_completed = d;
        }
    } catch (const BudgetExceeded&) {
        out.stats.budget_exhausted = true;
    }
    out.stats.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace cbi
