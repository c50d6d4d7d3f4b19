#include "cbi/structure.hpp"

#include <functional>

#include "cbi/syntax.hpp"

namespace cbi {

Structure Structure::leaf(Formula f) {
    return Structure(std::make_shared<const Node>(Node{SKind::Leaf, std::move(f), {}, 1}));
}
Structure::Structure() : Structure(aempty()) {}

Structure Structure::aempty() {
    static const auto n = std::make_shared<const Node>(Node{SKind::AEmpty, Formula(), {}, 1});
    return Structure(n);
}
Structure Structure::mempty() {
    static const auto n = std::make_shared<const Node>(Node{SKind::MEmpty, Formula(), {}, 1});
    return Structure(n);
}
Structure Structure::sharp(Structure a) {
    std::size_t s = a.size() + 1;
    return Structure(std::make_shared<const Node>(Node{SKind::Sharp, Formula(), {std::move(a)}, s}));
}
Structure Structure::flat(Structure a) {
    std::size_t s = a.size() + 1;
    return Structure(std::make_shared<const Node>(Node{SKind::Flat, Formula(), {std::move(a)}, s}));
}
Structure Structure::semi(Structure a, Structure b) {
    std::size_t s = a.size() + b.size() + 1;
    return Structure(
        std::make_shared<const Node>(Node{SKind::Semi, Formula(), {std::move(a), std::move(b)}, s}));
}
Structure Structure::comma(Structure a, Structure b) {
    std::size_t s = a.size() + b.size() + 1;
    return Structure(
        std::make_shared<const Node>(Node{SKind::Comma, Formula(), {std::move(a), std::move(b)}, s}));
}

bool operator==(const Structure& a, const Structure& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    if (a.kind() == SKind::Leaf) return a.formula() == b.formula();
    for (std::size_t i = 0; i < a.kids().size(); ++i)
        if (a.kids()[i] != b.kids()[i]) return false;
    return true;
}

bool operator<(const Structure& a, const Structure& b) {
    if (a.node_ == b.node_) return false;
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.kind() == SKind::Leaf) return a.formula() < b.formula();
    for (std::size_t i = 0; i < a.kids().size(); ++i) {
        if (a.kids()[i] < b.kids()[i]) return true;
        if (b.kids()[i] < a.kids()[i]) return false;
    }
    return false;
}

namespace {

using syntax::Tok;
using syntax::TreePtr;

Formula tree_formula(const TreePtr& t);

Structure tree_structure(const TreePtr& t) {
    switch (t->kind) {
    case Tok::Ident:
        if (t->name == "<leaf>") return Structure::leaf(tree_formula(t->kids[0]));
        break;
    case Tok::AEmpty: return Structure::aempty();
    case Tok::MEmpty: return Structure::mempty();
    case Tok::Sharp: return Structure::sharp(tree_structure(t->kids[0]));
    case Tok::Flat: return Structure::flat(tree_structure(t->kids[0]));
    case Tok::Semi: return Structure::semi(tree_structure(t->kids[0]), tree_structure(t->kids[1]));
    case Tok::Comma: return Structure::comma(tree_structure(t->kids[0]), tree_structure(t->kids[1]));
    default: break;
    }
    throw ParseError(t->offset, {}, "malformed structure");
}

Formula tree_formula(const TreePtr& t) {
    switch (t->kind) {
    case Tok::Ident: return Var(t->name);
    case Tok::Top: return Formula::top();
    case Tok::Bot: return Formula::bot();
    case Tok::Emp: return Formula::mtop();
    case Tok::Coemp: return Formula::mbot();
    case Tok::Not: return Not(tree_formula(t->kids[0]));
    case Tok::MNot: return MNot(tree_formula(t->kids[0]));
    default: break;
    }
    Formula a = tree_formula(t->kids[0]), b = tree_formula(t->kids[1]);
    switch (t->kind) {
    case Tok::And: return And(a, b);
    case Tok::Or: return Or(a, b);
    case Tok::Imp: return Imp(a, b);
    case Tok::Iff: return Iff(a, b);
    case Tok::Star: return Star(a, b);
    case Tok::Par: return Par(a, b);
    case Tok::Wand: return Wand(a, b);
    default: throw ParseError(t->offset, {}, "unsupported operator in structure leaf");
    }
}

void emit(const Structure& s, Style style, std::string& out) {
    const bool u = style == Style::Unicode;
    auto sub = [&](const Structure& k, bool paren) {
        if (paren) out += "(";
        emit(k, style, out);
        if (paren) out += ")";
    };
    switch (s.kind()) {
    case SKind::Leaf:
        if (arity(s.formula().op()) == 2) {
            out += "(" + render(s.formula(), style) + ")";
        } else {
            out += render(s.formula(), style);
        }
        return;
    case SKind::AEmpty: out += u ? "∅" : "AE"; return;
    case SKind::MEmpty: out += u ? "⊘" : "ME"; return;
    case SKind::Sharp:
    case SKind::Flat:
        out += s.kind() == SKind::Sharp ? (u ? "♯" : "#") : (u ? "♭" : "%");
        sub(s.child(), s.child().is_binary());
        return;
    case SKind::Semi:
        sub(s.left(), false);
        out += " ; ";
        sub(s.right(), s.right().kind() == SKind::Semi);
        return;
    case SKind::Comma:
        sub(s.left(), s.left().kind() == SKind::Semi);
        out += " , ";
        sub(s.right(), s.right().is_binary());
        return;
    }
}

}  // namespace

Consecution parse_consecution(const std::string& text) {
    syntax::Reader rd(syntax::tokenize(text, syntax::Dialect::Structure), syntax::Dialect::Structure);
    TreePtr t = rd.consecution();
    rd.expect_end();
    return {tree_structure(t->kids[0]), tree_structure(t->kids[1])};
}

Structure parse_structure(const std::string& text) {
    // reuse the consecution reader through a dummy right-hand side
    auto toks = syntax::tokenize(text + " |- AE", syntax::Dialect::Structure);
    syntax::Reader r2(toks, syntax::Dialect::Structure);
    TreePtr t = r2.consecution();
    r2.expect_end();
    return tree_structure(t->kids[0]);
}

std::string render(const Structure& s, Style style) {
    std::string out;
    emit(s, style, out);
    return out;
}

std::string render(const Consecution& c, Style style) {
    return render(c.lhs, style) + (style == Style::Unicode ? " ⊢ " : " |- ") + render(c.rhs, style);
}

std::string render(const Path& p) {
    std::string s = p.side == Side::Lhs ? "lhs" : "rhs";
    for (Step st : p.steps) {
        switch (st) {
        case Step::IntoSharp: s += ".sharp"; break;
        case Step::IntoFlat: s += ".flat"; break;
        case Step::Left: s += ".left"; break;
        case Step::Right: s += ".right"; break;
        }
    }
    return s;
}

Formula ant_formula(const Structure& x) {
    switch (x.kind()) {
    case SKind::Leaf: return x.formula();
    case SKind::AEmpty: return Formula::top();
    case SKind::MEmpty: return Formula::mtop();
    case SKind::Sharp: return Not(con_formula(x.child()));
    case SKind::Flat: return MNot(con_formula(x.child()));
    case SKind::Semi: return And(ant_formula(x.left()), ant_formula(x.right()));
    case SKind::Comma: return Star(ant_formula(x.left()), ant_formula(x.right()));
    }
    return Formula::top();
}

Formula con_formula(const Structure& x) {
    switch (x.kind()) {
    case SKind::Leaf: return x.formula();
    case SKind::AEmpty: return Formula::bot();
    case SKind::MEmpty: return Formula::mbot();
    case SKind::Sharp: return Not(ant_formula(x.child()));
    case SKind::Flat: return MNot(ant_formula(x.child()));
    case SKind::Semi: return Or(con_formula(x.left()), con_formula(x.right()));
    case SKind::Comma: return Par(con_formula(x.left()), con_formula(x.right()));
    }
    return Formula::bot();
}

Formula consecution_formula(const Consecution& c) { return Imp(ant_formula(c.lhs), con_formula(c.rhs)); }

TruthResult consecution_truth(const ResourceModel& m, const Consecution& c, TruthBudget budget) {
    return truth(m, consecution_formula(c), budget);
}

bool consecution_valid_on(const ResourceModel& m, const Consecution& c, TruthBudget budget) {
    TruthResult r = consecution_truth(m, c, budget);
    if (r.verdict == Verdict::Indeterminate)
        throw std::runtime_error("environment budget exhausted while checking " + render(c));
    return r.verdict == Verdict::True;
}

namespace {

const Structure& descend(const Structure& s, Step st, const Path& p) {
    switch (st) {
    case Step::IntoSharp:
        if (s.kind() == SKind::Sharp) return s.child();
        break;
    case Step::IntoFlat:
        if (s.kind() == SKind::Flat) return s.child();
        break;
    case Step::Left:
    case Step::Right:
        if (s.is_binary()) return st == Step::Left ? s.left() : s.right();
        break;
    }
    throw DanglingPath("path " + render(p) + " does not resolve");
}

Structure rebuild(const Structure& s, const std::vector<Step>& steps, std::size_t i, const Structure& repl,
                  const Path& p) {
    if (i == steps.size()) return repl;
    const Structure& k = descend(s, steps[i], p);
    Structure nk = rebuild(k, steps, i + 1, repl, p);
    switch (s.kind()) {
    case SKind::Sharp: return Structure::sharp(nk);
    case SKind::Flat: return Structure::flat(nk);
    case SKind::Semi:
        return steps[i] == Step::Left ? Structure::semi(nk, s.right()) : Structure::semi(s.left(), nk);
    case SKind::Comma:
        return steps[i] == Step::Left ? Structure::comma(nk, s.right()) : Structure::comma(s.left(), nk);
    default: throw DanglingPath("path " + render(p) + " does not resolve");
    }
}

}  // namespace

const Structure& at(const Consecution& c, const Path& p) {
    const Structure* s = p.side == Side::Lhs ? &c.lhs : &c.rhs;
    for (Step st : p.steps) s = &descend(*s, st, p);
    return *s;
}

Consecution replace_at(const Consecution& c, const Path& p, const Structure& s) {
    if (p.side == Side::Lhs) return {rebuild(c.lhs, p.steps, 0, s, p), c.rhs};
    return {c.lhs, rebuild(c.rhs, p.steps, 0, s, p)};
}

Part classify_part(const Consecution& c, const Path& p) {
    at(c, p);
    std::size_t negs = 0;
    for (Step st : p.steps)
        if (st == Step::IntoSharp || st == Step::IntoFlat) ++negs;
    bool positive = negs % 2 == 0;
    bool lhs = p.side == Side::Lhs;
    return positive == lhs ? Part::Antecedent : Part::Consequent;
}

std::vector<Path> all_paths(const Consecution& c) {
    std::vector<Path> out;
    std::function<void(const Structure&, Path&)> go = [&](const Structure& s, Path& p) {
        out.push_back(p);
        switch (s.kind()) {
        case SKind::Sharp:
        case SKind::Flat:
            p.steps.push_back(s.kind() == SKind::Sharp ? Step::IntoSharp : Step::IntoFlat);
            go(s.child(), p);
            p.steps.pop_back();
            break;
        case SKind::Semi:
        case SKind::Comma:
            p.steps.push_back(Step::Left);
            go(s.left(), p);
            p.steps.back() = Step::Right;
            go(s.right(), p);
            p.steps.pop_back();
            break;
        default: break;
        }
    };
    Path l{Side::Lhs, {}}, r{Side::Rhs, {}};
    go(c.lhs, l);
    go(c.rhs, r);
    return out;
}

std::vector<Formula> leaf_formulas(const Consecution& c) {
    std::vector<Formula> out;
    std::function<void(const Structure&)> go = [&](const Structure& s) {
        if (s.kind() == SKind::Leaf) out.push_back(s.formula());
        for (const auto& k : s.kids()) go(k);
    };
    go(c.lhs);
    go(c.rhs);
    return out;
}

}  // namespace cbi
